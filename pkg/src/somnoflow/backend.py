"""Kernel backend selection.

Hot numeric kernels (optical flow, image warping, forest growth) exist in
two functionally equivalent lanes: numba ``@njit`` loops and vectorized
pure numpy.  The environment variable ``SOMNOFLOW_BACKEND`` picks the lane
at import time:

  auto   numba when importable, numpy otherwise (default)
  numba  require numba, fail if missing
  numpy  force the pure-numpy fallback

``benchmarks/bench_backends.py`` compares the two lanes.
"""

from __future__ import annotations

import os

_ENV_VAR = "SOMNOFLOW_BACKEND"
_backend: str | None = None


def numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def backend_name() -> str:
    """Resolved backend, one of 'numba' or 'numpy'."""
    global _backend
    if _backend is None:
        choice = os.environ.get(_ENV_VAR, "auto").strip().lower()
        if choice not in ("auto", "numba", "numpy"):
            raise ValueError(
                f"{_ENV_VAR} must be 'auto', 'numba' or 'numpy', got {choice!r}"
            )
        if choice == "numpy":
            _backend = "numpy"
        elif choice == "numba":
            if not numba_available():
                raise ImportError(f"{_ENV_VAR}=numba but numba is not installed")
            _backend = "numba"
        else:
            _backend = "numba" if numba_available() else "numpy"
    return _backend
