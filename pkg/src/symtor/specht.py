"""Dimensions of hook Specht modules and of the induced blocks built from them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import shape_data


@dataclass(frozen=True, order=True)
class Hook:
    """The hook partition ``(arm, 1^leg)``."""

    arm: int
    leg: int = 0

    def __post_init__(self):
        if self.arm < 1 or self.leg < 0:
            raise ValueError(f"invalid hook ({self.arm}, 1^{self.leg})")

    @property
    def size(self) -> int:
        return self.arm + self.leg

    def partition(self) -> tuple[int, ...]:
        return (self.arm,) + (1,) * self.leg

    def __str__(self):
        return "(" + ",".join(map(str, self.partition())) + ")"


def hook_dim(h: Hook) -> int:
    """Number of standard tableaux of shape ``(p, 1^q)``: ``C(p+q-1, q)``."""
    return math.comb(h.arm + h.leg - 1, h.leg)


@dataclass(frozen=True)
class BlockSignature:
    """Induced module ``Ind(S^{h_1} x ... x S^{h_r} x S^{(t)})`` to ``S_n``.

    ``trailing_row`` is the trivial factor for the zero parts; it is zero
    (and then omitted from rendering) when the partition has no zeros.
    """

    hooks: tuple[Hook, ...]
    trailing_row: int
    n: int

    def __post_init__(self):
        if self.trailing_row < 0:
            raise ValueError("trailing row must be >= 0")
        if sum(h.size for h in self.hooks) + self.trailing_row != self.n:
            raise ValueError("hook sizes do not add up to n")

    def factors(self) -> tuple[Hook, ...]:
        """All tensor factors, trailing row included as a one-row hook."""
        if self.trailing_row:
            return self.hooks + (Hook(self.trailing_row, 0),)
        return self.hooks

    def to_json(self) -> list[list[int]]:
        return [[h.arm, h.leg] for h in self.factors()]

    @classmethod
    def from_json(cls, pairs: Sequence[Sequence[int]]) -> "BlockSignature":
        hooks = tuple(Hook(int(p), int(q)) for p, q in pairs)
        return cls(hooks, 0, sum(h.size for h in hooks))

    def __str__(self):
        return "Ind[" + ",".join(str(h) for h in self.factors()) + "]"


def block_for(mu: Sequence[int], c: Sequence[int]) -> BlockSignature:
    shape = shape_data(tuple(mu))
    c = tuple(c)
    if len(c) != shape.s or any(not 0 <= ck < p for ck, p in zip(c, shape.multiplicities)):
        raise ValueError(f"c={c} out of range for mu={tuple(mu)}")
    hooks = tuple(Hook(p - ck, ck) for p, ck in zip(shape.multiplicities, c))
    return BlockSignature(hooks, shape.zero_count, shape.n)


def block_dim(block: BlockSignature) -> int:
    """Young-subgroup index times the product of the factor dimensions."""
    dim = math.factorial(block.n)
    for h in block.factors():
        dim = dim // math.factorial(h.size) * hook_dim(h)
    return dim


def trivial_multiplicity(block: BlockSignature) -> int:
    """Multiplicity of the trivial module: 1 iff every factor is a single row."""
    return int(all(h.leg == 0 for h in block.hooks))
