"""Equivariant Betti numbers of S_n-invariant monomial ideals."""

from ._kernels import BACKEND
from .core import (
    INF,
    PlainIdeal,
    SymIdeal,
    contains,
    new_sym_ideal,
    part_of,
    unsymmetrize,
)
from .duality import (
    dual_generators,
    extremal_report,
    maximal_dual_generators,
    projective_dimension,
    regularity,
)
from .equivariant import (
    BettiTable,
    EquivariantTor,
    equivariant_tor,
    graded_betti,
    invariant_betti,
    quotient_betti,
    tor_orbit,
)
from .homology import GF2, QQ, FieldSpec, SimplicialComplex
from .stability import base_gamma_table, propagate

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "INF",
    "PlainIdeal",
    "SymIdeal",
    "contains",
    "new_sym_ideal",
    "part_of",
    "unsymmetrize",
    "dual_generators",
    "extremal_report",
    "maximal_dual_generators",
    "projective_dimension",
    "regularity",
    "BettiTable",
    "EquivariantTor",
    "equivariant_tor",
    "graded_betti",
    "invariant_betti",
    "quotient_betti",
    "tor_orbit",
    "GF2",
    "QQ",
    "FieldSpec",
    "SimplicialComplex",
    "base_gamma_table",
    "propagate",
]
