#!/usr/bin/env python

import dataclasses
import os
import sys
import typing

import dot_init  # noqa: F401

sys.path.insert(1, os.path.join(sys.path[0], ".."))

import pydantic  # noqa: E402
import typer  # noqa: E402

import context  # noqa: E402
import log  # noqa: E402
import models  # noqa: E402
import services.continuous  # noqa: E402
import services.discrete  # noqa: E402
import services.errors  # noqa: E402
import services.fit  # noqa: E402
import services.lemmas  # noqa: E402
import services.roots  # noqa: E402
import services.sweep  # noqa: E402

logger = log.init("cli")

app = typer.Typer()

ALPHA_COLUMNS = ["p", "L", "alpha", "bracket_lo", "bracket_hi", "residual", "iterations"]
CONTINUOUS_COLUMNS = ["p", "a", "b", "L", "lower", "upper", "exact_p2", "maximal", "B_lower", "B_upper", "budgets"]
LEMMA_COLUMNS = ["id", "strictness", "samples", "failures", "min_margin", "calibrated", "worst_sample", "seconds"]

EXIT_FAILURE = 1
EXIT_USAGE = 2


def _usage_error(message: str) -> typing.NoReturn:
    typer.echo(message, err=True)
    raise typer.Exit(code=EXIT_USAGE)


def _split(value: str | None, cast) -> list | None:
    if value is None:
        return None

    return [cast(item) for item in value.split(",") if item.strip()]


def _n_grid(value: str | None) -> list[int] | None:
    """comma separated integers, or lo:hi:points for a geometric grid"""
    if value is None:
        return None

    try:
        if ":" in value:
            lo, hi, points = value.split(":")
            return services.sweep.geometric_grid(int(float(lo)), int(float(hi)), int(points))

        return _split(value, lambda item: int(float(item)))
    except ValueError:
        _usage_error(f"invalid n grid {value}, expected n1,n2,... or lo:hi:points")


def _config(command: str, config_file: str | None, **overrides) -> models.RunConfig:
    """RunConfig from cli values over an optional toml file, any invalid value is a usage error"""
    try:
        if config_file:
            return models.RunConfig.from_toml(config_file, command, overrides)

        return models.RunConfig(command=command, **{key: value for key, value in overrides.items() if value is not None})
    except pydantic.ValidationError as e:
        _usage_error("; ".join(error["msg"].removeprefix("Value error, ") for error in e.errors()))
    except (ValueError, OSError) as e:
        _usage_error(str(e))


def _exponent(config: models.RunConfig) -> models.Exponent:
    exp = models.Exponent.from_p(config.p)

    if not exp.supported:
        logger.warning(f"{context.rid_get()} p {config.p} is below 2, results are outside the proved range")

    return exp


def _interval(config: models.RunConfig) -> models.Interval:
    try:
        if config.L is not None:
            return models.Interval.from_log_length(config.L)

        return models.Interval.from_endpoints(config.a, config.b)  # type: ignore
    except services.errors.DomainError as e:
        _usage_error(str(e))


def _emit(text: str, config: models.RunConfig):
    services.sweep.write(text, config.output_path, sys.stdout)


@app.command("alpha")
def alpha(
    L: float = typer.Option(None, "--L"),
    a: float = typer.Option(None, "--a"),
    b: float = typer.Option(None, "--b"),
    p: float = typer.Option(None, "--p", "-p"),
    output_format: str = typer.Option(None, "--format", "-f"),
    output_path: str = typer.Option(None, "--output", "-o"),
    config_file: str = typer.Option(None, "--config", "-c"),
):
    """frequency alpha of the extremal function, the root of tan(alpha L) + alpha q = 0"""
    context.rid_new()

    config = _config("alpha", config_file, L=L, a=a, b=b, p=p, output_format=output_format, output_path=output_path)
    exp = _exponent(config)
    interval = _interval(config)

    root = services.roots.solve_alpha_extremal(interval.L, exp.q)

    row = {
        "p": exp.p,
        "L": interval.L,
        "alpha": root.alpha,
        "bracket_lo": root.bracket_lo,
        "bracket_hi": root.bracket_hi,
        "residual": root.residual,
        "iterations": root.iterations,
    }

    _emit(services.sweep.render(ALPHA_COLUMNS, [row], config.output_format, single=True), config)


@app.command("continuous")
def continuous(
    L: float = typer.Option(None, "--L"),
    a: float = typer.Option(None, "--a"),
    b: float = typer.Option(None, "--b"),
    p: float = typer.Option(None, "--p", "-p"),
    tol: float = typer.Option(None, "--tol", "-t"),
    output_format: str = typer.Option(None, "--format", "-f"),
    output_path: str = typer.Option(None, "--output", "-o"),
    config_file: str = typer.Option(None, "--config", "-c"),
):
    """lower and upper certificates of the constant on (a, b), plus the exact value at p = 2"""
    context.rid_new()

    config = _config("continuous", config_file, L=L, a=a, b=b, p=p, tol=tol, output_format=output_format, output_path=output_path)
    exp = _exponent(config)
    interval = _interval(config)

    struct = services.continuous.Report(interval, exp, config.continuous_tol()).call()

    if struct.report:
        _emit(services.sweep.render(CONTINUOUS_COLUMNS, [struct.report], config.output_format, single=True), config)

    if struct.code != 0:
        logger.error(f"{context.rid_get()} continuous code {struct.code} errors {struct.errors}")
        raise typer.Exit(code=EXIT_FAILURE)


@app.command("discrete")
def discrete(
    n: int = typer.Option(None, "--n", "-n"),
    p: float = typer.Option(None, "--p", "-p"),
    tol: float = typer.Option(None, "--tol", "-t"),
    max_iter: int = typer.Option(None, "--max-iter"),
    A_grid: str = typer.Option(None, "--A-grid"),
    seed: int = typer.Option(None, "--seed"),
    timing: bool = typer.Option(False, "--timing"),
    output_format: str = typer.Option(None, "--format", "-f"),
    output_path: str = typer.Option(None, "--output", "-o"),
    config_file: str = typer.Option(None, "--config", "-c"),
):
    """d_n by power iteration, bracketed by its lower and upper certificates"""
    context.rid_new()

    config = _config(
        "discrete",
        config_file,
        n=n,
        p=p,
        tol=tol,
        max_iter=max_iter,
        A_grid=_split(A_grid, float),
        seed=seed,
        timing=timing or None,
        output_format=output_format,
        output_path=output_path,
    )
    exp = _exponent(config)

    struct = services.discrete.DnBoundsReport(
        n=config.n,  # type: ignore
        exp=exp,
        tol=config.discrete_tol(),
        max_iter=config.max_iter,
        A_grid=config.A_grid,
        seed=config.seed,
        timing=config.timing,
    ).call()

    if struct.record is None:
        logger.error(f"{context.rid_get()} discrete errors {struct.errors}")
        raise typer.Exit(code=EXIT_FAILURE)

    _emit(services.sweep.render_records([struct.record], config.output_format, single=True), config)

    if struct.code != 0 or not _record_passes(struct.record):
        logger.error(f"{context.rid_get()} discrete n {struct.record.n} failed code {struct.code} errors {struct.errors}")
        raise typer.Exit(code=EXIT_FAILURE)


def _record_passes(record: models.SweepRecord) -> bool:
    return record.ordered() and record.sandwich_lo_pass is not False and record.sandwich_hi_pass is not False


@app.command("rate")
def rate(
    p: float = typer.Option(None, "--p", "-p"),
    n_grid: str = typer.Option(None, "--n-grid"),
    model: str = typer.Option(None, "--model", "-m"),
    tol: float = typer.Option(None, "--tol", "-t"),
    max_iter: int = typer.Option(None, "--max-iter"),
    A_grid: str = typer.Option(None, "--A-grid"),
    seed: int = typer.Option(None, "--seed"),
    threads: int = typer.Option(None, "--threads"),
    timing: bool = typer.Option(False, "--timing"),
    records_path: str = typer.Option(None, "--records", "-r"),
    cache_path: str = typer.Option(None, "--cache"),
    output_format: str = typer.Option(None, "--format", "-f"),
    output_path: str = typer.Option(None, "--output", "-o"),
    config_file: str = typer.Option(None, "--config", "-c"),
):
    """fit the deficit q^p - d_n against 1/ln^2(n + 1) over an n grid"""
    context.rid_new()

    config = _config(
        "rate",
        config_file,
        p=p,
        n_grid=_n_grid(n_grid),
        model=model,
        tol=tol,
        max_iter=max_iter,
        A_grid=_split(A_grid, float),
        seed=seed,
        threads=threads,
        timing=timing or None,
        cache_path=cache_path,
        output_format=output_format,
        output_path=output_path,
    )
    exp = _exponent(config)

    path = services.sweep.cache_path(config.cache_path)

    struct_sweep = services.sweep.Sweep(
        n_grid=config.n_grid,
        exp=exp,
        tol=config.discrete_tol(),
        max_iter=config.max_iter,
        A_grid=config.A_grid,
        seed=config.seed,
        threads=config.threads,
        timing=config.timing,
        result_cache=services.sweep.ResultCache(path) if path else None,
    ).call()

    if struct_sweep.code != 0:
        logger.error(f"{context.rid_get()} rate sweep errors {struct_sweep.errors}")
        raise typer.Exit(code=EXIT_FAILURE)

    if records_path:
        services.sweep.write(services.sweep.render_records(struct_sweep.records, services.sweep.emit.FORMAT_CSV), records_path, sys.stdout)

    try:
        struct_fit = services.fit.FitRate(struct_sweep.records, exp.p, config.model).call()
    except services.errors.DomainError as e:
        _usage_error(str(e))

    fit = struct_fit.fit
    names = services.fit.coefficient_names(config.model)
    row = {"model": fit.model, "p": fit.p, **fit.coefficients, "residual_norm": fit.residual_norm, "n_min": fit.n_min, "n_max": fit.n_max, "points": fit.points, "reference": fit.reference, "excluded": ";".join(str(n) for n in fit.excluded)}

    _emit(services.sweep.render(["model", "p", *names, "residual_norm", "n_min", "n_max", "points", "reference", "excluded"], [row], config.output_format, single=True), config)

    bad = [record.n for record in struct_sweep.records if not _record_passes(record)]

    if struct_fit.code != 0 or bad:
        logger.error(f"{context.rid_get()} rate failed code {struct_fit.code} rows out of order {bad}")
        raise typer.Exit(code=EXIT_FAILURE)


@app.command("lemmas")
def lemmas(
    ids: str = typer.Option(None, "--ids"),
    samples: int = typer.Option(None, "--samples", "-s"),
    seed: int = typer.Option(None, "--seed"),
    threads: int = typer.Option(None, "--threads"),
    timing: bool = typer.Option(False, "--timing"),
    output_format: str = typer.Option(None, "--format", "-f"),
    output_path: str = typer.Option(None, "--output", "-o"),
    config_file: str = typer.Option(None, "--config", "-c"),
):
    """counterexample hunts over the auxiliary inequalities"""
    context.rid_new()

    config = _config(
        "lemmas",
        config_file,
        ids=_split(ids, str.strip),
        samples=samples,
        seed=seed,
        threads=threads,
        timing=timing or None,
        output_format=output_format,
        output_path=output_path,
    )

    rows = []
    failed = []

    for id in config.ids:
        struct = services.lemmas.Hunt(id, config.samples, config.seed, config.threads).call()

        if struct.summary is None:
            failed.append(id)
            continue

        row = dataclasses.asdict(struct.summary)
        row["seconds"] = struct.summary.seconds if config.timing else None
        rows.append(row)

        if struct.code != 0:
            failed.append(id)

    _emit(services.sweep.render(LEMMA_COLUMNS, rows, config.output_format), config)

    if failed:
        logger.error(f"{context.rid_get()} lemmas failed {failed}")
        raise typer.Exit(code=EXIT_FAILURE)


if __name__ == "__main__":
    app()
