"""Dual generators (the irredundant decomposition into ideals ``Q_mu``),
maximal dual generators, extremal Betti numbers, regularity and projective
dimension.

Search for dual generators
--------------------------
Let ``D = 1 + (largest entry of a generator)``.  For an extended partition
``mu`` with finite entries below ``D`` write ``O_mu = {lam : lam <= mu}``.
Then ``O_mu`` misses the ideal iff ``cap(mu, D)`` is not in it: ``cap(mu, D)``
lies in ``O_mu``, and conversely if ``lam <= mu`` dominates a generator ``g``
then so does ``min(lam, D) <= cap(mu, D)`` because every entry of ``g`` is
below ``D``.  The dual generators are the maximal ``mu`` with this property;
entries ``>= D`` can always be raised to ``INF`` without changing the cap, so
the bounded search is exhaustive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import (
    INF,
    ExtendedPartition,
    SymIdeal,
    cap,
    contains,
    ell,
    new_sym_ideal,
    plus,
    tilde,
)


@dataclass(frozen=True)
class DualGeneratorSet:
    all: frozenset[ExtendedPartition]
    maximal: frozenset[ExtendedPartition]
    cap_value: int

    def sorted_all(self) -> list[ExtendedPartition]:
        return sorted(self.all, key=_sort_key)

    def sorted_maximal(self) -> list[ExtendedPartition]:
        return sorted(self.maximal, key=_sort_key)


def _sort_key(rho: ExtendedPartition):
    return tuple(-1 if x is INF else x for x in rho)


def _rank(x, bound: int) -> int:
    return bound if x is INF else x


def _extended_below(n: int, bound: int):
    """Extended partitions of length n with entries in ``{0..bound-1, INF}``,
    at least one entry finite."""
    levels = list(range(bound)) + [INF]

    def rec(prefix: list, top: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for r in range(top, -1, -1):
            prefix.append(levels[r])
            yield from rec(prefix, r)
            prefix.pop()

    for rho in rec([], bound):
        if rho[-1] is not INF:
            yield rho


def _require_nonzero(ideal: SymIdeal) -> None:
    if ideal.is_zero:
        raise ValueError(
            "the zero ideal has no dual generators (it would need the all-INF element)"
        )


def dual_generators(ideal: SymIdeal, bound: int | None = None) -> DualGeneratorSet:
    _require_nonzero(ideal)
    D = ideal.max_entry + 1 if bound is None else bound
    if D < ideal.max_entry + 1:
        raise ValueError(f"cap value {D} below 1 + max generator entry")
    n = ideal.n
    outside = {rho for rho in _extended_below(n, D) if not contains(ideal, cap(rho, D))}

    def is_maximal(rho) -> bool:
        # the set is downward closed, so it suffices to try single-step raises
        for k in range(n):
            if rho[k] is INF:
                continue
            up = INF if rho[k] == D - 1 else rho[k] + 1
            if k > 0 and _rank(rho[k - 1], D) < _rank(up, D):
                continue
            raised = rho[:k] + (up,) + rho[k + 1:]
            if raised in outside:
                return False
        return True

    found = frozenset(rho for rho in outside if is_maximal(rho))
    return DualGeneratorSet(found, _maximal_under_preceq(found), D)


def preceq(mu: ExtendedPartition, rho: ExtendedPartition) -> bool:
    """``tilde(mu) <= tilde(rho)`` and ``|mu^+| <= |rho^+|``."""
    tm, tr = tilde(mu), tilde(rho)
    return all(x <= y for x, y in zip(tm, tr)) and ell(mu) - ell(rho) <= sum(tr) - sum(tm)


def _maximal_under_preceq(gens) -> frozenset[ExtendedPartition]:
    return frozenset(
        rho for rho in gens if not any(o != rho and preceq(rho, o) for o in gens)
    )


def maximal_dual_generators(ideal: SymIdeal) -> list[ExtendedPartition]:
    return dual_generators(ideal).sorted_maximal()


@dataclass(frozen=True)
class ExtremalPair:
    index: int
    degree: tuple[int, ...]
    value: int
    source: ExtendedPartition


def extremal_report(ideal: SymIdeal) -> list[ExtremalPair]:
    """Extremal pairs of the Betti table of ``R/I`` (homological index of R/I).

    Each maximal ``rho = (INF^p0, d_1^p1, ...)`` gives the pair
    ``(n - ell(rho), tilde(rho))`` with value ``C(p0 + p1 - 1, p0)``.
    """
    out = []
    for rho in maximal_dual_generators(ideal):
        p0 = ell(rho)
        first = rho[p0]
        p1 = sum(1 for x in rho if x == first)
        out.append(ExtremalPair(ideal.n - p0, tilde(rho), math.comb(p0 + p1 - 1, p0), rho))
    return sorted(out, key=lambda e: (e.index, e.degree))


def _require_proper(ideal: SymIdeal) -> None:
    _require_nonzero(ideal)
    if ideal.is_unit:
        raise ValueError("R/I = 0 for the unit ideal; reg and pdim are undefined")


def regularity(ideal: SymIdeal) -> int:
    """``reg(R/I) = max |mu^+|`` over the dual generators."""
    _require_proper(ideal)
    return max(sum(plus(mu)) for mu in dual_generators(ideal).all)


def projective_dimension(ideal: SymIdeal) -> int:
    """``pdim(R/I) = max (n - ell(mu))`` over the dual generators."""
    _require_proper(ideal)
    return max(ideal.n - ell(mu) for mu in dual_generators(ideal).all)


def q_ideal(mu: ExtendedPartition) -> SymIdeal:
    """The symmetric ideal ``Q_mu`` generated by rectangles.

    For ``mu = (INF^p0, d_1^p1, ..., d_m^pm)`` the generators are
    ``((d_k + 1)^(p0 + p1 + ... + p_{k-1} + 1))`` padded with zeros.
    """
    n = len(mu)
    if ell(mu) == n:
        raise ValueError("Q_mu needs a finite entry")
    gens = []
    seen = ell(mu)
    k = seen
    while k < n:
        d = mu[k]
        run = sum(1 for x in mu if x == d)
        gens.append((d + 1,) * (seen + 1) + (0,) * (n - seen - 1))
        seen += run
        k += run
    return new_sym_ideal(n, gens)


def intersection_contains(mus: Sequence[ExtendedPartition], lam: Sequence[int]) -> bool:
    """Membership of ``x^lam`` in the intersection of the ``Q_mu``."""
    return all(contains(q_ideal(mu), tuple(lam)) for mu in mus)
