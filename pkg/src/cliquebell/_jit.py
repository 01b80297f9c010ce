"""Optional numba acceleration.

Set ``CLIQUEBELL_DISABLE_JIT=1`` to run every kernel as plain Python/numpy.
The kernels are written in the numba-compatible subset so both paths execute
the same source.
"""
from __future__ import annotations

import os

_FLAG = os.environ.get("CLIQUEBELL_DISABLE_JIT", "").strip().lower()

try:
    import numba as _nb
except ImportError:  # pragma: no cover - numba is a declared dependency
    _nb = None

JIT_ENABLED = _nb is not None and _FLAG not in ("1", "true", "yes", "on")


def njit(*args, **kwargs):
    if not JIT_ENABLED:
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda func: func
    kwargs.setdefault("cache", True)
    return _nb.njit(*args, **kwargs)


def python_impl(func):
    """Return the uncompiled function behind a kernel (itself when JIT is off)."""
    return getattr(func, "py_func", func)
