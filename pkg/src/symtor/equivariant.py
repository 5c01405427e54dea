"""Equivariant Tor of a symmetric monomial ideal, assembled block by block.

For each orbit degree ``mu`` and each ``0 <= c <= p_vector(mu)`` the block
``block_for(mu, c)`` occurs in ``Tor_i(I)<mu>`` with multiplicity
``gamma_{i-|c|}(I, mu, c)``.  Everything here is indexed by the homological
degree of ``I`` itself; :func:`quotient_betti` shifts to ``R/I``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .core import (
    SymIdeal,
    part_of,
    partitions_below,
    rearrangement_count,
    tilde,
)
from .homology import QQ, FieldSpec, admissible_cs, gamma
from .specht import BlockSignature, block_dim, block_for, trivial_multiplicity

ASSOCIATED_GRADED = "associated graded only: characteristic {p} <= n = {n}"

# below this many candidate degrees a process pool costs more than it saves
_PARALLEL_THRESHOLD = 64


class TorBlock(NamedTuple):
    signature: BlockSignature
    multiplicity: int
    c: tuple[int, ...]


def _require_nonzero(ideal: SymIdeal) -> None:
    if ideal.is_zero:
        raise ValueError("the zero ideal has no generators; Tor is undefined here")


def candidate_partitions(ideal: SymIdeal) -> list[tuple[int, ...]]:
    """Every ``mu`` below ``tilde(rho)`` for some maximal dual generator ``rho``.

    Nonvanishing ``Tor_i(I)<mu>`` forces ``mu <= tilde(rho)`` for such a
    ``rho``, so this is a superset of the support.  Sorted by degree.
    """
    from .duality import maximal_dual_generators

    _require_nonzero(ideal)
    if ideal.is_unit:
        return [(0,) * ideal.n]
    found: set[tuple[int, ...]] = set()
    for rho in maximal_dual_generators(ideal):
        found.update(partitions_below(tilde(rho)))
    return sorted(found, key=lambda mu: (sum(mu), mu))


def candidate_frontier(candidates: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Partitions one box above a candidate that are not candidates themselves.

    Used to widen brute-force sweeps one step past the candidate bound.
    """
    cands = {tuple(mu) for mu in candidates}
    out = set()
    for mu in cands:
        for j in range(len(mu)):
            up = mu[:j] + (mu[j] + 1,) + mu[j + 1:]
            if (j == 0 or up[j - 1] >= up[j]) and up not in cands:
                out.add(up)
    return sorted(out, key=lambda mu: (sum(mu), mu))


def _gammas_at(args) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, int], ...]]]:
    ideal, mus, k = args
    out = []
    for mu in mus:
        for c in admissible_cs(mu):
            prof = gamma(ideal, mu, c, k)
            if prof:
                out.append((mu, c, tuple(prof.items())))
    return out


def gamma_records(
    ideal: SymIdeal,
    k: FieldSpec = QQ,
    mus: Iterable[Sequence[int]] | None = None,
    workers: int = 1,
) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, int], ...]]]:
    """Non-zero ``(mu, c, ((i, gamma_i), ...))`` over the candidate degrees."""
    mus = candidate_partitions(ideal) if mus is None else [tuple(m) for m in mus]
    if workers > 1 and len(mus) >= _PARALLEL_THRESHOLD:
        chunk = max(1, len(mus) // (4 * workers))
        jobs = [(ideal, mus[i:i + chunk], k) for i in range(0, len(mus), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return [rec for part in pool.map(_gammas_at, jobs) for rec in part]
    return _gammas_at((ideal, mus, k))


def tor_orbit(ideal: SymIdeal, i: int, mu: Sequence[int], k: FieldSpec = QQ) -> list[TorBlock]:
    """Blocks of ``Tor_i(I)<mu>`` with their multiplicities."""
    mu = tuple(mu)
    out = []
    for c in admissible_cs(mu):
        j = i - sum(c)
        if j < 0:
            continue
        mult = gamma(ideal, mu, c, k)[j]
        if mult:
            out.append(TorBlock(block_for(mu, c), mult, c))
    return out


@dataclass(frozen=True)
class EquivariantTor:
    """``(i, mu) -> blocks`` for every non-zero orbit component of ``Tor_i(I)``."""

    n: int
    field: FieldSpec
    entries: Mapping[tuple[int, tuple[int, ...]], tuple[TorBlock, ...]]

    @property
    def associated_graded(self) -> bool:
        """True when the block list is only the associated graded module."""
        return not self.field.semisimple_for(self.n)

    @property
    def warnings(self) -> list[str]:
        if self.associated_graded:
            return [ASSOCIATED_GRADED.format(p=self.field.characteristic, n=self.n)]
        return []

    def keys(self) -> list[tuple[int, tuple[int, ...]]]:
        return sorted(self.entries, key=lambda key: (key[0], sum(key[1]), key[1]))

    def orbit_dim(self, i: int, mu: Sequence[int]) -> int:
        return sum(
            block_dim(b.signature) * b.multiplicity
            for b in self.entries.get((i, tuple(mu)), ())
        )

    def max_index(self) -> int:
        return max((i for i, _ in self.entries), default=-1)


def equivariant_tor(ideal: SymIdeal, k: FieldSpec = QQ, workers: int = 1) -> EquivariantTor:
    _require_nonzero(ideal)
    entries: dict[tuple[int, tuple[int, ...]], list[TorBlock]] = {}
    for mu, c, prof in gamma_records(ideal, k, workers=workers):
        sig = block_for(mu, c)
        for j, mult in prof:
            entries.setdefault((j + sum(c), mu), []).append(TorBlock(sig, mult, c))
    frozen = {key: tuple(sorted(v, key=lambda b: b.c)) for key, v in entries.items()}
    return EquivariantTor(ideal.n, k, frozen)


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``(i, j) -> beta_{i,j}`` (non-zero entries only)."""

    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def columns(self) -> list[int]:
        if not self.entries:
            return []
        return list(range(min(i for i, _ in self.entries), max(i for i, _ in self.entries) + 1))

    def totals(self) -> list[int]:
        return [sum(v for (i, _), v in self.entries.items() if i == col) for col in self.columns()]

    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def render(self) -> str:
        """Text table in the Macaulay2 layout: row ``d``, column ``i`` holds
        ``beta_{i, i+d}``."""
        if not self.entries:
            return "0"
        cols = self.columns()
        shifts = [j - i for i, j in self.entries]
        rows = list(range(min(shifts), max(shifts) + 1))
        header = [""] + [str(c) for c in cols]
        body = [["total:"] + [str(t) for t in self.totals()]]
        for d in rows:
            body.append([f"{d}:"] + [str(self[(c, c + d)] or ".") for c in cols])
        table = [header] + body
        widths = [max(len(r[k]) for r in table) for k in range(len(header))]
        return "\n".join(
            " ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() for r in table
        )

    def to_json(self) -> list[dict]:
        return [{"i": i, "j": j, "value": v} for (i, j), v in sorted(self.entries.items())]

    @classmethod
    def from_json(cls, records: Iterable[Mapping]) -> "BettiTable":
        return cls({(int(r["i"]), int(r["j"])): int(r["value"]) for r in records})


def graded_betti(tor: EquivariantTor) -> BettiTable:
    out: dict[tuple[int, int], int] = {}
    for (i, mu) in tor.entries:
        dim = tor.orbit_dim(i, mu)
        if dim:
            key = (i, sum(mu))
            out[key] = out.get(key, 0) + dim
    return BettiTable(out)


def quotient_betti(table: BettiTable) -> BettiTable:
    """Betti table of ``R/I`` from that of ``I``: ``Tor_{i+1}(R/I) = Tor_i(I)``."""
    out = {(i + 1, j): v for (i, j), v in table.entries.items() if v}
    out[(0, 0)] = 1
    return BettiTable(out)


def quotient_support(tor: EquivariantTor) -> dict[tuple[int, tuple[int, ...]], int]:
    """``(i, mu) -> dim Tor_i(R/I)<mu>`` for ``i >= 1``."""
    return {(i + 1, mu): tor.orbit_dim(i, mu) for (i, mu) in tor.entries if tor.orbit_dim(i, mu)}


def multigraded_betti(tor: EquivariantTor, i: int, a: Sequence[int]) -> int:
    """``dim Tor_i(I)_a``; the orbit is split evenly over its multidegrees."""
    mu = part_of(a)
    total = tor.orbit_dim(i, mu)
    size = rearrangement_count(mu)
    if total % size:
        raise ArithmeticError(f"orbit dimension {total} not divisible by {size} at {mu}")
    return total // size


def extremal_pairs_from_tor(tor: EquivariantTor) -> dict[tuple[int, tuple[int, ...]], int]:
    """Extremal pairs ``(i, lam)`` of the ``R/I`` table, read off directly.

    ``(i, lam)`` is extremal when ``Tor_i(R/I)<lam> != 0`` and no
    ``Tor_j(R/I)<mu>`` with ``j >= i``, ``mu > lam`` and
    ``|mu| - j >= |lam| - i`` is non-zero.  Values are single-multidegree
    dimensions.
    """
    support = quotient_support(tor)
    out = {}
    for (i, lam), dim in support.items():
        blocked = any(
            j >= i and mu != lam and all(x >= y for x, y in zip(mu, lam))
            and sum(mu) - j >= sum(lam) - i
            for (j, mu) in support
        )
        if not blocked:
            out[(i, lam)] = dim // rearrangement_count(lam)
    return out


@dataclass(frozen=True)
class InvariantBetti:
    """``(i, mu) -> dim Tor_i(I)^{S_n}<mu>``, i.e. ``gamma_i(I, mu, 0)``."""

    values: Mapping[tuple[int, tuple[int, ...]], int]
    field: FieldSpec
    warning: str | None = None


def invariant_betti(ideal: SymIdeal, k: FieldSpec = QQ, workers: int = 1) -> InvariantBetti:
    """Invariant part of Tor; needs char 0 or char > n to equal the fixed points."""
    _require_nonzero(ideal)
    tor = equivariant_tor(ideal, k, workers=workers)
    values = {}
    for key in tor.keys():
        total = sum(
            trivial_multiplicity(b.signature) * b.multiplicity
            for b in tor.entries[key]
            if not any(b.c)
        )
        if total:
            values[key] = total
    warning = None
    if not k.semisimple_for(ideal.n):
        warning = (
            f"characteristic {k.characteristic} <= n = {ideal.n}: values are "
            "gamma(I, mu, 0), not necessarily the S_n-fixed part"
        )
    return InvariantBetti(values, k, warning)


def default_workers() -> int:
    return os.cpu_count() or 1
