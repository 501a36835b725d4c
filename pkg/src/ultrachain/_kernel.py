"""Selects the scan kernel: compiled extension if built, else pure Python.

The compiled kernel (``_fastkernel``, built from Cython) evaluates blocks
over C int64 arrays and is used only when the explorer has proven that
every intermediate value fits in 64 bits; everything else goes through
``_purekernel`` on arbitrary-precision ints.  Set ``ULTRACHAIN_PURE_KERNEL``
to any nonempty value to force the fallback (used by the parity tests and
the benchmark).
"""

from __future__ import annotations

import os

from . import _purekernel

try:
    from . import _fastkernel
except ImportError:  # extension not built; the pure kernel covers everything
    _fastkernel = None


def _force_pure() -> bool:
    return bool(os.environ.get("ULTRACHAIN_PURE_KERNEL"))


def have_fast() -> bool:
    """True when the compiled kernel is importable and not disabled."""
    return _fastkernel is not None and not _force_pure()


def active_kernel() -> str:
    """'fast' or 'pure': which implementation eligible blocks will use."""
    return "fast" if have_fast() else "pure"


def eval_block_pure(*args):
    return _purekernel.eval_block(*args)


def eval_block_fast(*args):
    if _fastkernel is None:
        raise RuntimeError("compiled kernel is not available")
    return _fastkernel.eval_block(*args)
