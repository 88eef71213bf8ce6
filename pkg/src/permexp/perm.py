"""Permutations of {1..n} stored as 0-based image tables.

Products follow the "apply the left factor first" convention:
``(p * q)(i) == q(p(i))``.  All text I/O uses 1-based points.
"""

from __future__ import annotations

import re
from functools import reduce
from math import gcd
from operator import itemgetter
from typing import Iterable, Sequence


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def compose_images(p: tuple, q: tuple) -> tuple:
    """Image table of p followed by q (both 0-based tuples of equal length)."""
    if len(p) > 1:
        return itemgetter(*p)(q)
    return tuple(q[i] for i in p)


def invert_images(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycles_of(images: Sequence[int]) -> list[list[int]]:
    """Nontrivial cycles (0-based), each starting at its smallest point."""
    seen = [False] * len(images)
    out = []
    for start in range(len(images)):
        if seen[start] or images[start] == start:
            continue
        cyc = [start]
        seen[start] = True
        j = images[start]
        while j != start:
            seen[j] = True
            cyc.append(j)
            j = images[j]
        out.append(cyc)
    return out


def order_of_images(images: Sequence[int]) -> int:
    return reduce(_lcm, (len(c) for c in cycles_of(images)), 1)


class Permutation:
    """A bijection of {1..degree}.

    >>> p = Permutation.from_cycles("(1 2 3)", 3)
    >>> (p * p).cycle_string()
    '(1 3 2)'
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        self.images = tuple(images)
        if check and sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images!r}")
        self._hash = None

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls(range(degree), check=False)

    @classmethod
    def from_images(cls, images_1based: Sequence[int]) -> "Permutation":
        """Build from a 1-based image list: position i holds the image of i."""
        return cls(x - 1 for x in images_1based)

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        if not 1 <= point <= len(self.images):
            raise ValueError(f"point {point} out of range 1..{len(self.images)}")
        return self.images[point - 1] + 1

    def image_list(self) -> list[int]:
        """1-based image table."""
        return [x + 1 for x in self.images]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        out = list(range(len(self.images)))
        for cyc in cycles_of(self.images):
            m = len(cyc)
            for pos, x in enumerate(cyc):
                out[x] = cyc[(pos + k) % m]
        return Permutation(out, check=False)

    def inverse(self) -> "Permutation":
        return Permutation(invert_images(self.images), check=False)

    def order(self) -> int:
        return order_of_images(self.images)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[list[int]]:
        """Nontrivial cycles with 1-based points."""
        return [[x + 1 for x in c] for c in cycles_of(self.images)]

    def sign(self) -> int:
        odd = sum(len(c) - 1 for c in cycles_of(self.images)) % 2
        return -1 if odd else 1

    def support(self) -> list[int]:
        return [i + 1 for i, x in enumerate(self.images) if i != x]

    def cycle_string(self) -> str:
        return format_cycles(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return the permutation i -> q(p(i)); p is applied first."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(compose_images(p.images, q.images), check=False)


def element_order(p: Permutation) -> int:
    """Least m >= 1 with p**m the identity (lcm of the cycle lengths)."""
    return p.order()


_CYCLE_RE = re.compile(r"\((\d+(?: \d+)*)\)")


class CycleSyntaxError(ValueError):
    pass


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse strict cycle notation, e.g. ``"(1 2 3)(4 5)"`` or ``"()"``.

    Single spaces separate points; cycles are juxtaposed with no separator.
    Every point must lie in 1..degree and appear at most once.
    """
    if degree < 1:
        raise CycleSyntaxError("degree must be positive")
    images = list(range(degree))
    if text == "()":
        return Permutation(images, check=False)
    pos = 0
    seen: set[int] = set()
    if not text:
        raise CycleSyntaxError("empty permutation string; use '()' for the identity")
    while pos < len(text):
        m = _CYCLE_RE.match(text, pos)
        if m is None:
            raise CycleSyntaxError(f"malformed cycle notation at position {pos}: {text!r}")
        pts = [int(tok) for tok in m.group(1).split(" ")]
        for x in pts:
            if not 1 <= x <= degree:
                raise CycleSyntaxError(f"point {x} out of range 1..{degree}")
            if x in seen:
                raise CycleSyntaxError(f"duplicated point {x} in {text!r}")
            seen.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b - 1
        pos = m.end()
    return Permutation(images, check=False)


def format_cycles(p: Permutation) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
