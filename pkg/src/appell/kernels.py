"""Backend selection for the integer polynomial kernels.

The Cython extension is used when it was built; otherwise the pure-Python
module is used. Setting ``APPELL_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("APPELL_PURE_PYTHON") != "1":
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

convolve = _impl.convolve
taylor_shift = _impl.taylor_shift
horner = _impl.horner
binomial_row = _impl.binomial_row

__all__ = ["BACKEND", "convolve", "taylor_shift", "horner", "binomial_row"]
