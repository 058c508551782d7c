"""Exact permutations of {1..n} with the degree carried explicitly.

The product ``a * b`` is the composition ``a after b``: ``(a * b)(x) = a(b(x))``.
Text form is 1-based disjoint cycle notation with cycles ordered by their
smallest moved point and fixed points omitted; the identity prints as ``()``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError


class Perm:
    """A permutation of {1..n}.  Immutable and hashable.

    The identity on 5 points and the identity on 6 points are distinct
    values: the degree is part of the object.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ParseError(f"not a bijection of 1..{n}: {images!r}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Perm":
        images = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n:
                    raise ParseError(f"symbol {a} out of range 1..{n}")
                if a in seen:
                    raise ParseError(f"repeated symbol {a}")
                seen.add(a)
            for a, b in zip(cyc, cyc[1:]):
                images[a - 1] = b
            if len(cyc) > 1:
                images[cyc[-1] - 1] = cyc[0]
        return cls(images)

    def apply(self, x: int) -> int:
        return self.images[x - 1]

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise ParseError("degree mismatch in product")
        return Perm(tuple(self.images[i - 1] for i in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Perm(inv)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugated_by(self, h: "Perm") -> "Perm":
        """Return h * self * h^-1."""
        return h * self * h.inverse()

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def cycles(self) -> tuple:
        """Moved cycles, least point first in each, ordered by least point."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1] or self.images[start - 1] == start:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self.images[start - 1]
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self.images[x - 1]
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> "CycleType":
        parts = tuple(sorted(len(c) for c in self.cycles()))
        return CycleType(parts, self.degree)

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def support(self) -> tuple:
        return tuple(i for i in range(1, self.degree + 1) if self.images[i - 1] != i)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Perm") -> bool:
        return (self.degree, self.images) < (other.degree, other.images)

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Perm[{self.degree}]{self}"


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths >= 2 inside an ambient degree n.

    Fixed points are implied: there are n - sum(parts) of them.
    """

    parts: tuple
    n: int

    def __post_init__(self):
        if any(k < 2 for k in self.parts):
            raise ParseError("cycle type parts must be >= 2")
        if sum(self.parts) > self.n:
            raise ParseError("cycle type exceeds ambient degree")
        if tuple(sorted(self.parts)) != self.parts:
            raise ParseError("cycle type parts must be sorted ascending")

    @property
    def fixed_points(self) -> int:
        return self.n - sum(self.parts)

    def order(self) -> int:
        return math.lcm(*self.parts) if self.parts else 1

    def is_even(self) -> bool:
        return sum(k - 1 for k in self.parts) % 2 == 0

    def splits(self) -> bool:
        """Whether this even type is a split class of the alternating group.

        True exactly when all cycle lengths are distinct odd integers, with
        fixed points counted as 1-cycles (so at most one fixed point).
        """
        if not self.is_even():
            return False
        if self.fixed_points > 1:
            return False
        if any(k % 2 == 0 for k in self.parts):
            return False
        return len(set(self.parts)) == len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(k) for k in self.parts) + ")"


def least_perm_of_type(ct: CycleType) -> Perm:
    """Lexicographically least permutation (by image tuple) of a cycle type.

    Fixed points sit on the smallest symbols, then cycles in ascending length
    occupy consecutive blocks, each cycle mapping a -> a+1 -> ... -> a.
    """
    cycles = []
    start = ct.fixed_points + 1
    for k in ct.parts:
        cycles.append(tuple(range(start, start + k)))
        start += k
    return Perm.from_cycles(cycles, ct.n)


_CYCLE_RE = re.compile(r"\(\s*((?:\d+\s*)*)\)")


def parse_perm(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation, e.g. ``(1 2)(3 4 5)`` or ``()``.

    Rejects repeated symbols and symbols outside 1..degree.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty permutation text")
    pos = 0
    cycles = []
    while pos < len(stripped):
        m = _CYCLE_RE.match(stripped, pos)
        if m is None:
            raise ParseError(f"bad permutation syntax at {stripped[pos:]!r}")
        body = m.group(1).split()
        if body:
            cycles.append([int(x) for x in body])
        pos = m.end()
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    return Perm.from_cycles(cycles, degree)
