"""Exact sparse linear algebra.

The row-reduction kernel exists twice: a Cython build (``_kernel_c``) and a
pure-Python fallback (``_kernel_py``). The compiled one is used when it
imports; set ``ANREST_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("ANREST_PURE_PYTHON") == "1":
    kernel = _kernel_py
else:
    try:
        from . import _kernel_c as kernel
    except ImportError:  # extension not built
        kernel = _kernel_py

BACKEND = "cython" if kernel is not _kernel_py else "python"


def use_backend(name: str) -> None:
    """Switch kernels at runtime (``"cython"`` or ``"python"``); used by the benchmark."""
    global kernel, BACKEND
    if name == "python":
        kernel = _kernel_py
    elif name == "cython":
        from . import _kernel_c

        kernel = _kernel_c
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name


from .sparse import SparseMatrix, Subspace, integral, to_rational  # noqa: E402

__all__ = ["BACKEND", "SparseMatrix", "Subspace", "integral", "kernel", "to_rational", "use_backend"]
