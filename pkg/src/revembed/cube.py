"""Cubes: product terms over {0, 1, don't-care} with set-algebra operations.

A cube of length n denotes the set of input vectors it covers (its on-set).
Position i constrains variable x_{i+1}: 0 and 1 are literals, DC spans both.
"""
from __future__ import annotations

from typing import Iterator, Optional

DC = 2

_CHAR = {0: "0", 1: "1", DC: "-"}
_BIT = {"0": 0, "1": 1, "-": DC}


class Cube:
    """Immutable product term. ``bits`` is a tuple over {0, 1, DC}."""

    __slots__ = ("bits",)

    def __init__(self, bits):
        bits = tuple(bits)
        for b in bits:
            if b not in (0, 1, DC):
                raise ValueError("cube entries must be 0, 1, or DC")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> "Cube":
        try:
            return cls(_BIT[ch] for ch in text)
        except KeyError as exc:
            raise ValueError("illegal cube character %r" % (exc.args[0],)) from None

    @classmethod
    def full(cls, n: int) -> "Cube":
        return cls((DC,) * n)

    @classmethod
    def from_assignment(cls, point: int, n: int) -> "Cube":
        """Minterm cube for an integer assignment; x1 lives in bit 0."""
        if not 0 <= point < (1 << n):
            raise ValueError("point out of range for %d positions" % n)
        return cls((point >> i) & 1 for i in range(n))

    def weight(self) -> int:
        """Number of literal (non-DC) positions."""
        return sum(1 for b in self.bits if b != DC)

    def on_size(self) -> int:
        """Number of input vectors covered: 2^(n - weight)."""
        return 1 << (len(self.bits) - self.weight())

    def literals(self) -> Iterator[tuple[int, int]]:
        """Yield (position, bit) for each literal position."""
        for i, b in enumerate(self.bits):
            if b != DC:
                yield i, b

    def dc_positions(self) -> list[int]:
        return [i for i, b in enumerate(self.bits) if b == DC]

    def covers(self, point: int) -> bool:
        """Whether the integer assignment (x1 in bit 0) lies in the cube."""
        return all((point >> i) & 1 == b for i, b in self.literals())

    def with_bit(self, pos: int, bit: int) -> "Cube":
        bits = list(self.bits)
        bits[pos] = bit
        return Cube(bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __iter__(self):
        return iter(self.bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cube) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __str__(self) -> str:
        return "".join(_CHAR[b] for b in self.bits)

    def __repr__(self) -> str:
        return "Cube(%r)" % (str(self),)

    def __setattr__(self, name, value):
        raise AttributeError("Cube is immutable")


def cube_and(a: Cube, b: Cube) -> Optional[Cube]:
    """Intersection of two cubes, or None when they are disjoint."""
    if len(a) != len(b):
        raise ValueError("cube length mismatch")
    out = []
    for x, y in zip(a.bits, b.bits):
        if x == DC:
            out.append(y)
        elif y == DC or x == y:
            out.append(x)
        else:
            return None
    return Cube(out)


def cube_sharp(a: Cube, b: Cube) -> list[Cube]:
    """on(a) \\ on(b) as pairwise-disjoint cubes.

    Deterministic: peel one literal of b per step, in ascending position
    order, fixing peeled positions before moving on. Disjoint inputs return
    [a]; a contained in b returns [].
    """
    if len(a) != len(b):
        raise ValueError("cube length mismatch")
    if cube_and(a, b) is None:
        return [a]
    out = []
    cur = list(a.bits)
    for pos, bit in b.literals():
        if cur[pos] == DC:
            piece = cur[:]
            piece[pos] = 1 - bit
            out.append(Cube(piece))
            cur[pos] = bit
    return out
