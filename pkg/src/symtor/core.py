"""Partitions, extended partitions and symmetric monomial ideals.

A partition of length ``n`` is stored as a plain tuple of ints in weakly
decreasing order, zero padded to ``n``.  Extended partitions may also hold
the :data:`INF` marker, which compares greater than every integer.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering
from itertools import groupby
from typing import Iterable, Sequence, Union

Partition = tuple[int, ...]
Multidegree = tuple[int, ...]


@total_ordering
class _Infinity:
    """The symbol ``inf`` used in extended partitions."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("symtor.INF")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Entry = Union[int, _Infinity]
ExtendedPartition = tuple[Entry, ...]


def _check_lengths(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def part_of(a: Iterable[int]) -> Partition:
    """Weakly decreasing rearrangement of a multidegree."""
    return tuple(sorted(a, reverse=True))


def pad(parts: Sequence[int], m: int) -> Partition:
    """Append zeros so that the partition has length ``m``."""
    if m < len(parts):
        raise ValueError(f"cannot pad length {len(parts)} down to {m}")
    return tuple(parts) + (0,) * (m - len(parts))


def dominates(a: Sequence, b: Sequence) -> bool:
    """True iff ``a[i] >= b[i]`` for every i."""
    _check_lengths(a, b)
    return all(x >= y for x, y in zip(a, b))


@dataclass(frozen=True)
class ShapeData:
    """Run-length data of a partition: ``(d_1^p_1, ..., d_s^p_s, 0^zero_count)``."""

    distinct_parts: tuple[int, ...]
    multiplicities: tuple[int, ...]
    zero_count: int

    @property
    def s(self) -> int:
        return len(self.distinct_parts)

    @property
    def n(self) -> int:
        return sum(self.multiplicities) + self.zero_count


def shape_data(mu: Partition) -> ShapeData:
    distinct, mults = [], []
    for value, run in groupby(p for p in mu if p > 0):
        distinct.append(value)
        mults.append(sum(1 for _ in run))
    zeros = sum(1 for p in mu if p == 0)
    return ShapeData(tuple(distinct), tuple(mults), zeros)


def s_of(mu: Partition) -> int:
    return len({p for p in mu if p > 0})


def p_vector(mu: Partition) -> tuple[int, ...]:
    """``(p_1 - 1, ..., p_s - 1)``: the upper bound for the vectors ``c``."""
    return tuple(p - 1 for p in shape_data(mu).multiplicities)


def remove_columns(mu: Partition, c: Sequence[int]) -> Partition:
    """Lower the last ``c[k]`` copies of the k-th distinct part by one.

    ``c[k]`` may go up to the full multiplicity ``p_k`` (not ``p_k - 1``),
    since callers pass ``c + e_F``.
    """
    shape = shape_data(mu)
    if len(c) != shape.s:
        raise ValueError(f"c has length {len(c)}, expected s={shape.s}")
    out: list[int] = []
    for d, p, ck in zip(shape.distinct_parts, shape.multiplicities, c):
        if not 0 <= ck <= p:
            raise ValueError(f"c={tuple(c)} out of range for {mu}")
        out.extend([d] * (p - ck))
        out.extend([d - 1] * ck)
    out.extend([0] * shape.zero_count)
    # d_k - 1 >= d_{k+1}, so the concatenation is already sorted
    return tuple(out)


def rearrangement_count(mu: Sequence[int]) -> int:
    """Number of distinct multidegrees ``a`` with ``part_of(a) == mu``."""
    count = math.factorial(len(mu))
    for mult in Counter(mu).values():
        count //= math.factorial(mult)
    return count


def multiset_permutations(mu: Sequence[int]) -> Iterable[Multidegree]:
    """All distinct rearrangements of ``mu`` in lexicographic order."""
    items = sorted(mu)
    n = len(items)
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1 :] = reversed(items[i + 1 :])


def partitions_below(bound: Sequence[int]) -> Iterable[Partition]:
    """Every partition ``mu`` of length ``len(bound)`` with ``mu <= bound``."""
    n = len(bound)

    def rec(prefix: list[int], cap: int):
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        for v in range(min(cap, bound[k]), -1, -1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    if n == 0:
        yield ()
        return
    yield from rec([], bound[0])


# -- extended partitions ---------------------------------------------------


def _finite(rho: ExtendedPartition) -> list[int]:
    finite = [x for x in rho if x is not INF]
    if not finite:
        raise ValueError(f"{rho} has no finite entry")
    return finite


def ell(rho: ExtendedPartition) -> int:
    """Number of ``INF`` entries."""
    return sum(1 for x in rho if x is INF)


def plus(rho: ExtendedPartition) -> Partition:
    """Replace every ``INF`` by one more than the largest finite entry."""
    top = _finite(rho)[0] + 1
    return tuple(top if x is INF else x for x in rho)


def tilde(rho: ExtendedPartition) -> Partition:
    """``plus(rho)`` with one added to every originally finite entry."""
    top = _finite(rho)[0] + 1
    return tuple(top if x is INF else x + 1 for x in rho)


def cap(rho: ExtendedPartition, bound: int) -> Partition:
    if bound < 1:
        raise ValueError("cap value must be >= 1")
    return tuple(bound if x is INF else min(x, bound) for x in rho)


def parse_entry(token) -> Entry:
    if isinstance(token, str) and token.lower() in ("inf", "infinity", "∞"):
        return INF
    if isinstance(token, bool) or not isinstance(token, int) or token < 0:
        raise ValueError(f"bad extended partition entry {token!r}")
    return token


def format_extended(rho: ExtendedPartition) -> list:
    """JSON-ready form, with ``"inf"`` tokens."""
    return ["inf" if x is INF else x for x in rho]


# -- ideals ------------------------------------------------------------------


def _minimalize(n: int, gens: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    unique = set()
    for g in gens:
        g = tuple(int(x) for x in g)
        if len(g) != n:
            raise ValueError(f"length mismatch: generator {g} in {n} variables")
        if any(x < 0 for x in g):
            raise ValueError(f"negative exponent in {g}")
        unique.add(g)
    minimal = [
        g for g in unique if not any(h != g and dominates(g, h) for h in unique)
    ]
    return tuple(sorted(minimal, key=lambda g: (sum(g), tuple(-x for x in g))))


@dataclass(frozen=True)
class SymIdeal:
    """An S_n-invariant monomial ideal, kept as its minimal generating partitions."""

    n: int
    min_gens: tuple[Partition, ...]

    def __post_init__(self):
        for g in self.min_gens:
            if len(g) != self.n:
                raise ValueError(f"length mismatch: generator {g} in {self.n} variables")

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[Sequence[int]]) -> "SymIdeal":
        return new_sym_ideal(n, gens)

    @property
    def is_zero(self) -> bool:
        return not self.min_gens

    @property
    def is_unit(self) -> bool:
        return self.min_gens == ((0,) * self.n,)

    @property
    def max_entry(self) -> int:
        return max((max(g, default=0) for g in self.min_gens), default=0)

    def __contains__(self, lam) -> bool:
        return contains(self, lam)

    def extend(self, m: int) -> "SymIdeal":
        """The ideal generated by the same partitions in ``m >= n`` variables."""
        return new_sym_ideal(m, [pad(g, m) for g in self.min_gens])

    def __str__(self):
        gens = ", ".join(str(g) for g in self.min_gens)
        return f"<{gens}>_S{self.n}"


def new_sym_ideal(n: int, gens: Iterable[Sequence[int]]) -> SymIdeal:
    gens = list(gens)
    for g in gens:
        if len(g) == n and not is_partition(g):
            raise ValueError(f"generator {tuple(g)} is not weakly decreasing")
    return SymIdeal(n, _minimalize(n, gens))


def contains(ideal: SymIdeal, lam: Sequence[int]) -> bool:
    """Whether ``x^lam`` lies in the ideal (``lam`` a partition)."""
    if len(lam) != ideal.n:
        raise ValueError(f"length mismatch: {len(lam)} != {ideal.n}")
    return any(all(x >= y for x, y in zip(lam, g)) for g in ideal.min_gens)


def contains_multidegree(ideal: SymIdeal, a: Sequence[int]) -> bool:
    if len(a) != ideal.n:
        raise ValueError(f"length mismatch: {len(a)} != {ideal.n}")
    return contains(ideal, part_of(a))


@dataclass(frozen=True)
class PlainIdeal:
    """A monomial ideal given by exponent vectors, no symmetry assumed."""

    n: int
    gens: tuple[Multidegree, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens


def plain_ideal(n: int, gens: Iterable[Sequence[int]]) -> PlainIdeal:
    return PlainIdeal(n, _minimalize(n, gens))


def unsymmetrize(gens: Iterable[Sequence[int]], n: int | None = None) -> PlainIdeal:
    """Plain ideal generated by one monomial ``x^lam`` per given partition."""
    gens = [tuple(g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("n is required for an empty generator list")
        n = len(gens[0])
    return plain_ideal(n, gens)


def plain_contains(ideal: PlainIdeal, a: Sequence[int]) -> bool:
    if len(a) != ideal.n:
        raise ValueError(f"length mismatch: {len(a)} != {ideal.n}")
    return any(all(x >= y for x, y in zip(a, g)) for g in ideal.gens)
