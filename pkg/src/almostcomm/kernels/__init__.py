"""Elimination kernels with a compiled core and a pure-Python fallback.

The compiled module is used when it was built and importable; setting
``ALMOSTCOMM_PURE=1`` in the environment forces the fallback.  Both expose

``echelon_int(rows, ncols) -> (reduced_rows, pivots)``
    exact fraction-free Gauss-Jordan reduction over Z;
``rank_mod_p(rows, ncols, p=DEFAULT_PRIME) -> int``
    rank of the reduction modulo a word-sized prime.
"""
import os

from . import _pykernels

BACKEND = "python"
if os.environ.get("ALMOSTCOMM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

echelon_int = _impl.echelon_int
rank_mod_p = _impl.rank_mod_p
DEFAULT_PRIME = _pykernels.DEFAULT_PRIME

__all__ = ["BACKEND", "DEFAULT_PRIME", "echelon_int", "rank_mod_p", "exact_rank_int"]


def exact_rank_int(rows, ncols):
    """Exact rank over Q of an integer matrix.

    The modular rank is a lower bound; when it already equals the largest
    possible rank it is returned, otherwise exact elimination decides.
    """
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    r = rank_mod_p(rows, ncols)
    if r == min(len(rows), ncols):
        return r
    return len(echelon_int(rows, ncols)[1])
