"""Permutations of {1..n} in one-line form, composed as functions.

``(p * q)(i) = p(q(i))``.  These carry the finite groups that free group
elements are mapped into.
"""

from __future__ import annotations

import itertools
from math import lcm
from functools import total_ordering
from typing import Iterable, Sequence

from . import kernels


@total_ordering
class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images
        self._hash = None

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(1, degree + 1))
        seen = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if not 1 <= x <= degree or x in seen:
                    raise ValueError(f"bad cycle {cyc} for degree {degree}")
                seen.add(x)
                images[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation._trusted(kernels.perm_mul(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation._trusted(kernels.perm_inv(self.images))

    def __pow__(self, n: int) -> "Permutation":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = Permutation.identity(self.degree)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        cyc = self.cycles()
        return lcm(*(len(c) for c in cyc)) if cyc else 1

    def sort_key(self):
        return (self.degree, self.images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Permutation", self.images))
        return self._hash

    def one_line(self) -> list[int]:
        return list(self.images)

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def symmetric_group(degree: int) -> list[Permutation]:
    return [Permutation._trusted(p) for p in itertools.permutations(range(1, degree + 1))]


def cyclic_group(order: int) -> list[Permutation]:
    """C_n as the powers of the n-cycle (1 2 ... n), identity first."""
    g = Permutation.from_cycles(order, tuple(range(1, order + 1))) if order > 1 else Permutation.identity(1)
    return [g ** i for i in range(order)]


def closure(gens: Iterable[Permutation]) -> list[Permutation]:
    """Elements of the group generated by ``gens``, sorted."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator to fix the degree")
    ident = Permutation.identity(gens[0].degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)
