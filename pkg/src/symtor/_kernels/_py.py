"""Pure-Python kernels.  Same surface as the compiled ``_ext`` module."""

from __future__ import annotations

from typing import Sequence

__all__ = [
    "rank_mod_p",
    "rank_integer",
    "reduced_homology",
    "lower_complex_masks",
]


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) by Gaussian elimination."""
    m = [[x % p for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][col], -1, p)
        pivot_row = m[r]
        for i in range(r + 1, nrows):
            f = m[i][col]
            if f:
                f = f * inv % p
                row = m[i]
                for j in range(col, ncols):
                    row[j] = (row[j] - f * pivot_row[j]) % p
        r += 1
        if r == nrows:
            break
    return r


def rank_integer(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on Python ints."""
    m = [[int(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        top = m[r]
        a = top[col]
        for i in range(r + 1, nrows):
            row = m[i]
            b = row[col]
            for j in range(col + 1, ncols):
                row[j] = (a * row[j] - b * top[j]) // prev
            row[col] = 0
        prev = a
        r += 1
        if r == nrows:
            break
    return r


def _boundary_rows(domain: list[int], codomain: list[int]) -> list[list[int]]:
    index = {mask: i for i, mask in enumerate(codomain)}
    rows = [[0] * len(domain) for _ in codomain]
    for j, face in enumerate(domain):
        below = 0
        bit = 1
        while bit <= face:
            if face & bit:
                below += 1
                rows[index[face ^ bit]][j] = -1 if below & 1 else 1
            bit <<= 1
    return rows


def reduced_homology(masks: Sequence[int], characteristic: int) -> list[int]:
    """Reduced Betti numbers of the complex with the given face bitmasks.

    Entry ``j + 1`` of the result is ``dim H~_j`` for ``j >= -1``.  An empty
    mask list (the void complex) yields ``[]``.
    """
    if not masks:
        return []
    by_size: dict[int, list[int]] = {}
    for mask in masks:
        by_size.setdefault(bin(mask).count("1"), []).append(mask)
    top = max(by_size)
    levels = [sorted(by_size.get(k, [])) for k in range(top + 1)]
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        if not levels[k] or not levels[k - 1]:
            continue
        rows = _boundary_rows(levels[k], levels[k - 1])
        if characteristic == 0:
            ranks[k] = rank_integer(rows)
        else:
            ranks[k] = rank_mod_p(rows, characteristic)
    return [len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def lower_complex_masks(a: Sequence[int], gens: Sequence[Sequence[int]]) -> list[int]:
    """Faces ``F`` of ``{F : a - e_F >= g for some generator g}`` as bitmasks.

    For a fixed ``g <= a`` the admissible ``F`` are exactly the subsets of
    ``{i : a_i > g_i}``, so the complex is the union of those simplices.
    """
    faces: set[int] = set()
    for g in gens:
        slack = 0
        ok = True
        for i, (ai, gi) in enumerate(zip(a, g)):
            if ai < gi:
                ok = False
                break
            if ai > gi:
                slack |= 1 << i
        if not ok or slack in faces:
            continue
        sub = slack
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & slack
    return sorted(faces)
