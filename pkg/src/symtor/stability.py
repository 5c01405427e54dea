"""Propagating gamma tables from ``n`` variables to ``m > n``.

Going from ``n`` to ``n + 1`` variables, a non-zero ``gamma_i(mu, c)`` at
level ``n`` produces exactly two entries at level ``n + 1``:

* ``(mu + (0,), c)``, always;
* ``(mu + (mu_n,), c + e_s)`` when ``mu`` has no zero part.

Every other ``gamma`` at level ``n + 1`` vanishes (its complex is a cone).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import SymIdeal
from .equivariant import gamma_records
from .homology import QQ, FieldSpec
from .specht import block_dim, block_for

Key = tuple[tuple[int, ...], tuple[int, ...], int]


@dataclass(frozen=True)
class GammaTable:
    n: int
    field: FieldSpec
    entries: Mapping[Key, int]

    def records(self) -> list[dict]:
        return [
            {"mu": list(mu), "c": list(c), "i": i, "gamma": g}
            for (mu, c, i), g in sorted(self.entries.items(), key=lambda kv: _order(kv[0]))
        ]

    def tor_support(self) -> dict[tuple[int, tuple[int, ...]], int]:
        """``(i, mu) -> dim Tor_i(I_n)<mu>`` assembled from the table."""
        out: dict[tuple[int, tuple[int, ...]], int] = {}
        for (mu, c, j), g in self.entries.items():
            key = (j + sum(c), mu)
            out[key] = out.get(key, 0) + g * block_dim(block_for(mu, c))
        return out

    def betti_entries(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, mu), dim in self.tor_support().items():
            out[(i, sum(mu))] = out.get((i, sum(mu)), 0) + dim
        return out


def _order(key: Key):
    mu, c, i = key
    return (i + sum(c), sum(mu), mu, c)


def base_gamma_table(ideal: SymIdeal, k: FieldSpec = QQ, workers: int = 1) -> GammaTable:
    entries = {}
    for mu, c, prof in gamma_records(ideal, k, workers=workers):
        for i, g in prof:
            entries[(mu, c, i)] = g
    return GammaTable(ideal.n, k, entries)


def _step(entries: Mapping[Key, int]) -> dict[Key, int]:
    out: dict[Key, int] = {}
    for (mu, c, i), g in entries.items():
        out[(mu + (0,), c, i)] = g
        if mu and mu[-1] > 0:
            out[(mu + (mu[-1],), c[:-1] + (c[-1] + 1,), i)] = g
    return out


def propagate(table: GammaTable, m: int) -> GammaTable:
    if m < table.n:
        raise ValueError(f"cannot propagate from {table.n} down to {m} variables")
    entries = dict(table.entries)
    for _ in range(m - table.n):
        entries = _step(entries)
    return GammaTable(m, table.field, entries)


def lookup_gamma(table: GammaTable, mu: tuple[int, ...], c: tuple[int, ...], i: int) -> int:
    """Backward form of the rule: ``gamma_i(mu, c)`` at level ``n + 1`` read
    from ``table`` at level ``n``."""
    if len(mu) != table.n + 1:
        raise ValueError("mu must have length n + 1")
    head = mu[:-1]
    if mu[-1] == 0:
        return table.entries.get((head, c, i), 0)
    if c[-1] == 0:
        return 0
    return table.entries.get((head, c[:-1] + (c[-1] - 1,), i), 0)


def nonvanishing_check(lower: GammaTable, upper: GammaTable) -> bool:
    """Check the three (non-)vanishing clauses relating ``Tor(I_n)`` and
    ``Tor(I_{n+1})`` on the supports of two consecutive tables."""
    if upper.n != lower.n + 1:
        raise ValueError("tables must be at consecutive levels")
    low = {key for key, d in lower.tor_support().items() if d}
    up = {key for key, d in upper.tor_support().items() if d}
    for i, mu in up:
        head, last = mu[:-1], mu[-1]
        if last == 0:
            if (i, head) not in low:
                return False
        elif last < head[-1]:
            return False
        elif (i - 1, head) not in low:
            return False
    for i, head in low:
        if (i, head + (0,)) not in up:
            return False
        if head[-1] > 0 and (i + 1, head + (head[-1],)) not in up:
            return False
    return True
