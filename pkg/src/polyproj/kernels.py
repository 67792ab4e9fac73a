"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the pure-Python module is used.  Setting ``POLYPROJ_PURE_PYTHON=1`` forces
the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("POLYPROJ_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

pivot = _impl.pivot
ratio_test = _impl.ratio_test
entering = _impl.entering

__all__ = ["BACKEND", "pivot", "ratio_test", "entering"]
