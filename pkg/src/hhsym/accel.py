"""Optional numba acceleration for the enumeration kernels.

The hot loops in :mod:`hhsym.kernels` enumerate partitions and accumulate
int64 statistics, which is exactly the workload ``numba.njit`` is good at.
Everything there is also valid plain Python over numpy arrays, so the same
source runs unjitted when numba is unavailable or when the environment
variable ``HHSYM_DISABLE_JIT`` is set to a non-empty value other than
``"0"``.  Results are identical either way; only the speed changes.
"""

import os

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAS_NUMBA = False


def _jit_disabled_by_env():
    value = os.environ.get("HHSYM_DISABLE_JIT", "")
    return value not in ("", "0")


JIT_ENABLED = HAS_NUMBA and not _jit_disabled_by_env()


def njit(*args, **kwargs):
    """``numba.njit`` when acceleration is on, identity decorator otherwise."""
    if JIT_ENABLED:
        return numba.njit(*args, **kwargs)
    if args and callable(args[0]):
        return args[0]

    def decorate(func):
        return func

    return decorate
