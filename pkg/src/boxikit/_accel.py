"""Optional numba acceleration.

Kernels are written in the nopython subset and decorated with :func:`jit`.
Setting ``BOXIKIT_DISABLE_NUMBA=1`` (or running without numba installed)
leaves them as plain Python/numpy functions.  The undecorated function is
always reachable as ``kernel.py_func`` so tests can compare both paths.
"""

import os

_DISABLED = os.environ.get("BOXIKIT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit as _njit

    NUMBA_ENABLED = True
except ImportError:
    _njit = None
    NUMBA_ENABLED = False


def jit(func):
    if NUMBA_ENABLED:
        return _njit(cache=True, nogil=True)(func)
    func.py_func = func
    return func
