"""Backend selection for the numeric kernels.

Kernels are written in the subset of Python that numba compiles. When numba
is importable and ``SRCOUNT_DISABLE_NUMBA`` is unset (or ``0``), they are
compiled with ``numba.njit``; otherwise the very same functions run as plain
Python over numpy arrays.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    numba = None

_DISABLED = os.environ.get("SRCOUNT_DISABLE_NUMBA", "").strip() not in ("", "0")

USE_NUMBA = numba is not None and not _DISABLED
BACKEND = "numba" if USE_NUMBA else "numpy"


def njit(func):
    """Compile ``func`` with numba when enabled, else return it unchanged."""
    if USE_NUMBA:
        return numba.njit(cache=True, nogil=True)(func)
    return func
