"""Kernel backend selection.

The compiled extension is preferred when importable.  Set
BPSKIT_BACKEND=python to force the pure-Python kernels, or
BPSKIT_BACKEND=ext to fail loudly if the extension is missing.
"""

import os

_choice = os.environ.get("BPSKIT_BACKEND", "auto").strip().lower()
if _choice not in {"auto", "ext", "python"}:
    raise ImportError(f"BPSKIT_BACKEND must be auto, ext or python, not {_choice!r}")

if _choice == "python":
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "ext"
    except ImportError:
        if _choice == "ext":
            raise
        from . import _kernels_py as _impl

        BACKEND = "python"

mul_trunc = _impl.mul_trunc
inverse_unit = _impl.inverse_unit
mul_sparse_unit_inplace = _impl.mul_sparse_unit_inplace
axpy_shift = _impl.axpy_shift
