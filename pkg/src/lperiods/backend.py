"""Kernel backend selection.

Hot numeric kernels are JIT-compiled with numba by default.  Setting the
environment variable ``LPERIODS_NO_NUMBA=1`` (before import) selects the
pure numpy/Python fallback path instead; the same happens automatically
when numba is not installed.  ``benchmarks/bench_kernels.py`` compares the
two paths.
"""

import os

_DISABLED = os.environ.get("LPERIODS_NO_NUMBA", "").strip().lower() not in ("", "0", "false")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency, but stay importable
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _DISABLED

_NUMBA_OPTS = {"cache": True, "fastmath": False}


def maybe_njit(func):
    """Apply ``numba.njit`` when the numba backend is active, else no-op."""
    if USE_NUMBA:
        return numba.njit(**_NUMBA_OPTS)(func)
    return func


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
