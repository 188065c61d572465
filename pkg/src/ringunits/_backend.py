"""Kernel backend selection.

Prefers the compiled extension when it was built; otherwise falls back to
the pure-Python kernels.  Both expose the same functions and produce
identical values, so the choice only affects speed.
"""

try:
    from . import _kernels as kernels

    BACKEND = "cython"
except ImportError:  # extension not built on this install
    from . import _kernels_py as kernels

    BACKEND = "python"


def backend_name() -> str:
    """Name of the kernel backend in use: 'cython' or 'python'."""
    return BACKEND
