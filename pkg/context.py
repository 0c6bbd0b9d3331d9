import contextvars

import ulid

# run id, stamped on every log line of a cli invocation
run_id: contextvars.ContextVar = contextvars.ContextVar("run_id", default=ulid.new().str)


def rid_set(id: str) -> int:
    run_id.set(id)
    return 0


def rid_get() -> str:
    return run_id.get()


def rid_new() -> str:
    id = ulid.new().str
    run_id.set(id)
    return id
