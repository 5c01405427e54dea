"""Brute-force Tor of monomial ideals, one multidegree at a time.

``dim Tor_i(J)_a = dim H~_{i-1}`` of the lower Koszul complex
``{F : x^(a - e_F) in J}``.  Nothing here goes through the block formula or
sorted-partition membership; symmetric ideals are expanded to the full list
of permuted generators first.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import factorial
from typing import Mapping, Sequence

from .core import PlainIdeal, SymIdeal, multiset_permutations, plain_ideal
from .homology import QQ, FieldSpec, koszul_lower_complex, reduced_homology_dims

MAX_ORBIT_N = 8


def tor_profile_multidegree(ideal: PlainIdeal, a: Sequence[int], k: FieldSpec = QQ) -> dict[int, int]:
    """``i -> dim Tor_i(J)_a`` (non-zero entries)."""
    return dict(reduced_homology_dims(koszul_lower_complex(ideal, a), k).dims)


def tor_dims_multidegree(ideal: PlainIdeal, i: int, a: Sequence[int], k: FieldSpec = QQ) -> int:
    return tor_profile_multidegree(ideal, a, k).get(i, 0)


def _lcm(vectors) -> tuple[int, ...]:
    return tuple(max(col) for col in zip(*vectors))


def lcm_lattice(ideal: PlainIdeal) -> set[tuple[int, ...]]:
    """Componentwise maxima of all non-empty subsets of the generators."""
    out: set[tuple[int, ...]] = set()
    gens = list(ideal.gens)
    for r in range(1, len(gens) + 1):
        for subset in combinations(gens, r):
            out.add(_lcm(subset))
    return out


def tor_dims_plain(ideal: PlainIdeal, k: FieldSpec = QQ) -> dict[tuple[int, tuple[int, ...]], int]:
    """``(i, a) -> dim Tor_i(J)_a`` over the lcm lattice (Taylor support)."""
    out = {}
    for a in sorted(lcm_lattice(ideal)):
        for i, d in tor_profile_multidegree(ideal, a, k).items():
            out[(i, a)] = d
    return out


def orbit_ideal(ideal: SymIdeal) -> PlainIdeal:
    """The plain ideal generated by every permutation of every generator."""
    if ideal.n > MAX_ORBIT_N:
        raise ValueError(f"orbit expansion limited to n <= {MAX_ORBIT_N} ({factorial(ideal.n)} permutations)")
    gens = {tuple(g[j] for j in perm) for g in ideal.min_gens for perm in permutations(range(ideal.n))}
    return plain_ideal(ideal.n, gens)


def orbit_profile(
    ideal: SymIdeal, mu: Sequence[int], k: FieldSpec = QQ, plain: PlainIdeal | None = None
) -> dict[int, int]:
    """``i -> dim Tor_i(I)<mu>``, summed over every rearrangement of ``mu``."""
    plain = orbit_ideal(ideal) if plain is None else plain
    total: dict[int, int] = {}
    for a in multiset_permutations(mu):
        for i, d in tor_profile_multidegree(plain, a, k).items():
            total[i] = total.get(i, 0) + d
    return total


def tor_dims_orbit_bruteforce(ideal: SymIdeal, i: int, mu: Sequence[int], k: FieldSpec = QQ) -> int:
    return orbit_profile(ideal, mu, k).get(i, 0)


def oracle_records(result: Mapping[tuple[int, tuple[int, ...]], int]) -> list[dict]:
    return [{"i": i, "a": list(a), "dim": d} for (i, a), d in sorted(result.items())]
