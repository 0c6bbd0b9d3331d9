import numpy as np

import services.core

N_MAX = 1_000_000
P_LO, P_HI = 2.0, 16.0
P_POOL_SIZE = 8

# A values and n values swept by the weighted tail diagnostic
DIAGNOSTIC_A = (2.0, 4.0, 16.0, 64.0)
DIAGNOSTIC_N = (100, 1_000, 10_000, 100_000, 1_000_000)


def p_pool(rng: np.random.Generator, size: int = P_POOL_SIZE) -> np.ndarray:
    """p values for series lemmas, each one needs its own term tables, p = 2 always included"""
    return np.concatenate([[2.0], np.sort(rng.uniform(P_LO, P_HI, size))])


def log_uniform_int(rng: np.random.Generator, count: int, lo: int, hi: int) -> np.ndarray:
    values = np.floor(np.exp(rng.uniform(np.log(lo), np.log(hi + 1.0), count)))

    return np.clip(values, lo, hi).astype(np.int64)


def ordered_pair(rng: np.random.Generator, count: int, lo: int, hi: int = N_MAX) -> tuple[np.ndarray, np.ndarray]:
    first = log_uniform_int(rng, count, lo, hi)
    second = log_uniform_int(rng, count, lo, hi)

    return np.minimum(first, second), np.maximum(first, second)


def draw_continuous(id: str, rng: np.random.Generator, count: int) -> dict[str, np.ndarray]:
    if id == "L2_1":
        return {"x": rng.uniform(0.0, 1.0, count), "alpha": rng.uniform(0.0, 32.0, count)}

    if id == "L2_2":
        return {"x": rng.uniform(-1.0, 64.0, count), "alpha": rng.uniform(0.0, 1.0, count)}

    if id == "L2_3":
        x = rng.uniform(0.0, 64.0, count)
        # alpha x stays strictly below 1
        alpha = rng.uniform(0.0, 1.0, count) * (1.0 - 1e-12) / np.maximum(x, np.finfo(float).tiny)
        return {"x": x, "alpha": alpha}

    if id == "L2_4":
        p = np.exp(rng.uniform(np.log(P_LO), np.log(200.0), count))
        L = np.exp(rng.uniform(np.log(1e-3), np.log(200.0), count))
        return {"p": p, "L": L, "u": rng.uniform(0.0, 1.0, count) * L}

    if id == "L2_5":
        p = rng.uniform(P_LO, P_HI, count)
        eps = rng.uniform(0.1, 1.0, count)
        threshold = np.array([services.core.threshold_log(pi, ei) for pi, ei in zip(p, eps)])
        # b ranges over [1.01 b0, (1.01 b0)^2]
        L = (threshold + np.log(1.01)) * (1.0 + rng.uniform(0.0, 1.0, count))
        return {"p": p, "eps": eps, "L": L, "u": rng.uniform(0.0, 1.0, count) * L}

    raise ValueError(f"no continuous sampler for {id}")


def draw_series(id: str, rng: np.random.Generator, count: int) -> dict[str, np.ndarray]:
    """integer variables of a series lemma, p is assigned separately from the pool"""
    if id in ("L2_6", "L2_7", "L2_8", "L2_9"):
        i, n = ordered_pair(rng, count, 1)
        return {"i": i, "n": n}

    if id == "L2_12":
        i, n = ordered_pair(rng, count, 2)
        return {"i": i, "n": n}

    if id == "L2_10":
        return {"i": log_uniform_int(rng, count, 2, N_MAX)}

    if id in ("L2_11", "L2_13", "L2_14"):
        return {"n": log_uniform_int(rng, count, 1, N_MAX)}

    raise ValueError(f"no series sampler for {id}")


def draw_diagnostic(rng: np.random.Generator, count: int, pool: np.ndarray) -> dict[str, np.ndarray]:
    n = rng.choice(np.array(DIAGNOSTIC_N), count)

    return {
        "p": rng.choice(pool, count),
        "A": rng.choice(np.array(DIAGNOSTIC_A), count),
        "n": n,
        "i": np.minimum(log_uniform_int(rng, count, 1, N_MAX), n),
    }
