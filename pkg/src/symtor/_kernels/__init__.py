"""Hot loops: exact ranks, reduced homology of bitmask complexes, and the
Koszul lower complex.

The compiled ``_ext`` module is used when it imports; otherwise the
pure-Python ``_py`` module is.  Set ``SYMTOR_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _py

if os.environ.get("SYMTOR_PURE_PYTHON", "") not in ("", "0"):
    _impl = _py
else:
    try:
        from . import _ext as _impl
    except ImportError:
        _impl = _py

BACKEND = "compiled" if _impl is not _py else "python"

rank_mod_p = _impl.rank_mod_p
rank_integer = _impl.rank_integer
reduced_homology = _impl.reduced_homology
lower_complex_masks = _impl.lower_complex_masks

__all__ = [
    "BACKEND",
    "rank_mod_p",
    "rank_integer",
    "reduced_homology",
    "lower_complex_masks",
]
