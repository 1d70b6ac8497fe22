"""Backend selection for the eigensolver kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``NADOSC_PURE_PYTHON`` is set to a non-empty value
other than ``0``, the NumPy fallback is used.
"""

import os

from . import _kernels_py


def _want_pure():
    return os.environ.get("NADOSC_PURE_PYTHON", "") not in ("", "0")


if _want_pure():
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

tridiagonalize = _impl.tridiagonalize
tridiag_eigen = _impl.tridiag_eigen
jacobi_eigen = _impl.jacobi_eigen


def backend_module(name):
    """Return the kernel module for ``name`` ('compiled' or 'python')."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _kernels
        return _kernels
    raise ValueError(f"unknown backend {name!r}")
