"""Simplicial complexes, the complexes attached to a symmetric ideal, and
exact reduced homology over Q or GF(p).

Faces are stored as bitmasks: vertex ``v`` (1-based) is bit ``v - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import _kernels
from .core import (
    PlainIdeal,
    SymIdeal,
    contains,
    p_vector,
    remove_columns,
)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field, identified by its characteristic (0 means Q)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if isinstance(c, bool) or not isinstance(c, int) or (c != 0 and not _is_prime(c)):
            raise ValueError("characteristic must be 0 or prime")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def semisimple_for(self, n: int) -> bool:
        """True when S_n representations over this field are semisimple."""
        return self.characteristic == 0 or self.characteristic > n


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


def _mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        if v < 1:
            raise ValueError(f"vertices are 1-based, got {v}")
        m |= 1 << (v - 1)
    return m


def _vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of subsets of ``{1, ..., vertex_count}``.

    ``faces`` holds bitmasks.  The void complex (no faces) and ``{∅}`` are
    different values.
    """

    vertex_count: int
    faces: frozenset[int]

    def __post_init__(self):
        for f in self.faces:
            if f >> self.vertex_count:
                raise ValueError(f"face {_vertices(f)} outside [{self.vertex_count}]")
            bit = 1
            while bit <= f:
                if f & bit and f ^ bit not in self.faces:
                    raise ValueError(f"not downward closed: {_vertices(f)}")
                bit <<= 1

    @classmethod
    def from_faces(cls, vertex_count: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(vertex_count, frozenset(_mask(f) for f in faces))

    @classmethod
    def generated_by(cls, vertex_count: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """The smallest complex containing the given faces."""
        faces: set[int] = set()
        for f in facets:
            top = _mask(f)
            sub = top
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & top
        return cls(vertex_count, frozenset(faces))

    @classmethod
    def void(cls, vertex_count: int) -> "SimplicialComplex":
        return cls(vertex_count, frozenset())

    @classmethod
    def simplex(cls, vertex_count: int) -> "SimplicialComplex":
        return cls(vertex_count, frozenset(range(1 << vertex_count)))

    def __contains__(self, face) -> bool:
        return _mask(face) in self.faces

    def __len__(self):
        return len(self.faces)

    @property
    def is_void(self) -> bool:
        return not self.faces

    def face_list(self) -> list[tuple[int, ...]]:
        """Faces as sorted vertex tuples, by size then lexicographically."""
        return sorted((_vertices(f) for f in self.faces), key=lambda t: (len(t), t))

    def faces_of_size(self, k: int) -> list[tuple[int, ...]]:
        return sorted(_vertices(f) for f in self.faces if bin(f).count("1") == k)

    def facets(self) -> list[tuple[int, ...]]:
        out = [
            f for f in self.faces
            if not any(f | (1 << v) in self.faces for v in range(self.vertex_count) if not f >> v & 1)
        ]
        return sorted((_vertices(f) for f in out), key=lambda t: (len(t), t))

    def is_cone(self, apex: int) -> bool:
        bit = 1 << (apex - 1)
        return bool(self.faces) and all(f | bit in self.faces for f in self.faces)

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic: sum over faces of ``(-1)^(|F|-1)``."""
        return sum(-1 if bin(f).count("1") % 2 == 0 else 1 for f in self.faces)

    def __str__(self):
        if not self.faces:
            return "void"
        return "{" + ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.face_list()) + "}"


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology dimensions, shifted so that entry ``i`` is ``dim H~_{i-1}``.

    This is the indexing of the multiplicities ``gamma_i``.  Only non-zero
    entries are stored; missing keys read as zero.
    """

    dims: Mapping[int, int] = field(default_factory=dict)

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def reduced(self, j: int) -> int:
        """``dim H~_j``."""
        return self.dims.get(j + 1, 0)

    def items(self):
        return sorted(self.dims.items())

    def __bool__(self):
        return bool(self.dims)

    def __eq__(self, other):
        if isinstance(other, HomologyProfile):
            return dict(self.dims) == dict(other.dims)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.items()))


@lru_cache(maxsize=65536)
def _homology_cached(faces: frozenset[int], characteristic: int) -> tuple[tuple[int, int], ...]:
    dims = _kernels.reduced_homology(sorted(faces), characteristic)
    return tuple((i, d) for i, d in enumerate(dims) if d)


def reduced_homology_dims(delta: SimplicialComplex, k: FieldSpec = QQ) -> HomologyProfile:
    """Exact reduced Betti numbers of ``delta`` over ``k``.

    ``dim H~_i = f_i - rank d_i - rank d_{i+1}`` with ranks from fraction-free
    integer elimination (char 0) or modular elimination (char p).
    """
    return HomologyProfile(dict(_homology_cached(delta.faces, k.characteristic)))


def boundary_matrix(delta: SimplicialComplex, k: int) -> list[list[int]]:
    """Matrix of ``d: C_k -> C_{k-1}``; columns are the faces of size ``k+1``.

    Rows and columns follow the lexicographic order of sorted vertex lists.
    The sign of removing ``v`` from ``F`` is ``(-1)^#{u in F : u <= v}``.
    """
    cols = delta.faces_of_size(k + 1)
    rows = delta.faces_of_size(k)
    index = {f: i for i, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for pos, v in enumerate(face):
            mat[index[face[:pos] + face[pos + 1:]]][j] = (-1) ** (pos + 1)
    return mat


def matrix_rank(mat: Sequence[Sequence[int]], k: FieldSpec = QQ) -> int:
    if k.characteristic == 0:
        return _kernels.rank_integer(mat)
    return _kernels.rank_mod_p(mat, k.characteristic)


def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    """Faces ``F`` whose complement in the vertex set is not a face of ``delta``."""
    full = (1 << delta.vertex_count) - 1
    return SimplicialComplex(
        delta.vertex_count,
        frozenset(f for f in range(full + 1) if full ^ f not in delta.faces),
    )


def _check_c(mu, c) -> tuple[int, ...]:
    c = tuple(c)
    bound = p_vector(mu)
    if len(c) != len(bound) or any(not 0 <= x <= b for x, b in zip(c, bound)):
        raise ValueError(f"c={c} out of range 0 <= c <= {bound} for mu={tuple(mu)}")
    return c


def delta_complex(ideal: SymIdeal, mu: Sequence[int], c: Sequence[int]) -> SimplicialComplex:
    """Complex on ``[s(mu)]`` whose faces ``F`` have ``mu \\ (c + e_F)`` in the ideal."""
    mu = tuple(mu)
    c = _check_c(mu, c)
    s = len(c)
    faces = set()
    for mask in range(1 << s):
        shifted = [ck + (mask >> k & 1) for k, ck in enumerate(c)]
        if contains(ideal, remove_columns(mu, shifted)):
            faces.add(mask)
    return SimplicialComplex(s, frozenset(faces))


def gamma_complex(ideal: SymIdeal, mu: Sequence[int], c: Sequence[int]) -> SimplicialComplex:
    """Alexander dual of :func:`delta_complex`: faces ``F`` with
    ``mu \\ (c + e_{[s] - F})`` outside the ideal."""
    return alexander_dual(delta_complex(ideal, mu, c))


def gamma(ideal: SymIdeal, mu: Sequence[int], c: Sequence[int], k: FieldSpec = QQ) -> HomologyProfile:
    """Multiplicities ``gamma_i = dim H~_{i-1}(delta_complex(ideal, mu, c))``."""
    return reduced_homology_dims(delta_complex(ideal, mu, c), k)


def koszul_lower_complex(ideal: PlainIdeal, a: Sequence[int]) -> SimplicialComplex:
    """``{F subset [n] : a - e_F >= 0 and x^(a - e_F) in ideal}``."""
    a = tuple(a)
    if len(a) != ideal.n:
        raise ValueError(f"length mismatch: {len(a)} != {ideal.n}")
    if any(x < 0 for x in a):
        raise ValueError(f"negative multidegree {a}")
    return SimplicialComplex(ideal.n, frozenset(_kernels.lower_complex_masks(a, ideal.gens)))


def admissible_cs(mu: Sequence[int]):
    """All vectors ``0 <= c <= p_vector(mu)``."""
    bound = p_vector(tuple(mu))

    def rec(prefix):
        if len(prefix) == len(bound):
            yield tuple(prefix)
            return
        for x in range(bound[len(prefix)] + 1):
            yield from rec(prefix + [x])

    yield from rec([])


__all__ = [
    "FieldSpec",
    "QQ",
    "GF2",
    "SimplicialComplex",
    "HomologyProfile",
    "reduced_homology_dims",
    "boundary_matrix",
    "matrix_rank",
    "alexander_dual",
    "delta_complex",
    "gamma_complex",
    "gamma",
    "koszul_lower_complex",
    "admissible_cs",
]
