"""Deterministic Schreier-Sims stabilizer chains over 0-based image tuples."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .perm import compose_images, invert_images


def _moved(g: tuple) -> int:
    for i, x in enumerate(g):
        if i != x:
            return i
    return -1


def _is_identity(g: tuple) -> bool:
    return all(i == x for i, x in enumerate(g))


@dataclass
class ChainLevel:
    base_point: int
    gens: list = field(default_factory=list)
    # point -> element mapping base_point to point, and its inverse
    transversal: dict = field(default_factory=dict)
    inverses: dict = field(default_factory=dict)

    def rebuild_orbit(self, degree: int) -> None:
        ident = tuple(range(degree))
        trans = {self.base_point: ident}
        queue = [self.base_point]
        for x in queue:
            ux = trans[x]
            for s in self.gens:
                y = s[x]
                if y not in trans:
                    trans[y] = compose_images(ux, s)
                    queue.append(y)
        self.transversal = trans
        self.inverses = {pt: invert_images(u) for pt, u in trans.items()}


class StabilizerChain:
    """Base and strong generating set with per-level transversals.

    Points are 0-based here; ``PermGroup`` converts at the boundary.
    """

    def __init__(self, degree: int, generators: Sequence[tuple]):
        self.degree = degree
        self.levels: list[ChainLevel] = []
        self._build([g for g in dict.fromkeys(generators) if not _is_identity(g)])

    @property
    def base(self) -> list[int]:
        return [lv.base_point for lv in self.levels]

    def orbit_sizes(self) -> list[int]:
        return [len(lv.transversal) for lv in self.levels]

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.transversal)
        return n

    def strong_generators(self) -> list[tuple]:
        return list(self.levels[0].gens) if self.levels else []

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        """Strip g through levels from ``start``; return (residue, level reached)."""
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            b = g[lv.base_point]
            inv = lv.inverses.get(b)
            if inv is None:
                return g, i
            g = compose_images(g, inv)
        return g, len(self.levels)

    def contains(self, g: tuple) -> bool:
        if len(g) != self.degree:
            return False
        h, j = self.sift(g)
        return j == len(self.levels) and _is_identity(h)

    def _build(self, gens: list[tuple]) -> None:
        degree = self.degree
        levels = self.levels
        for g in gens:
            if all(g[lv.base_point] == lv.base_point for lv in levels):
                levels.append(ChainLevel(_moved(g)))
        strong = list(gens)

        def refresh(i: int) -> None:
            fixed = [lv.base_point for lv in levels[:i]]
            levels[i].gens = [s for s in strong if all(s[b] == b for b in fixed)]
            levels[i].rebuild_orbit(degree)

        for i in range(len(levels)):
            refresh(i)

        i = len(levels) - 1
        while i >= 0:
            lv = levels[i]
            jumped = False
            for beta in list(lv.transversal):
                u_beta = lv.transversal[beta]
                for s in lv.gens:
                    gamma = s[beta]
                    sch = compose_images(compose_images(u_beta, s), lv.inverses[gamma])
                    if _is_identity(sch):
                        continue
                    h, j = self.sift(sch, i + 1)
                    if j < len(levels) or not _is_identity(h):
                        if j == len(levels):
                            levels.append(ChainLevel(_moved(h)))
                        strong.append(h)
                        for k in range(i + 1, j + 1):
                            refresh(k)
                        i = j
                        jumped = True
                        break
                if jumped:
                    break
            if not jumped:
                i -= 1

    def elements(self) -> Iterator[tuple]:
        """Each group element exactly once, as u_k * ... * u_1 * u_0."""
        trans = [list(lv.transversal.values()) for lv in self.levels]
        depth = len(trans)

        def rec(level: int, suffix: tuple) -> Iterator[tuple]:
            if level == depth:
                yield suffix
                return
            for u in trans[level]:
                yield from rec(level + 1, compose_images(u, suffix))

        yield from rec(0, tuple(range(self.degree)))

    def random_element(self, rng) -> tuple:
        g = tuple(range(self.degree))
        for lv in reversed(self.levels):
            keys = sorted(lv.transversal)
            g = compose_images(g, lv.transversal[keys[rng.randrange(len(keys))]])
        return g
