"""Indexed element lists for search algorithms on enumerable groups.

Subgroups are handled as sets of element indices; right multiplication
columns are computed on demand and cached.
"""

from __future__ import annotations

from .perm import compose_images, invert_images, order_of_images


class ElementTable:
    def __init__(self, elements: list[tuple]):
        self.elements = elements
        self.index = {g: i for i, g in enumerate(elements)}
        self.size = len(elements)
        self.identity = self.index[tuple(range(len(elements[0])))]
        self._cols: dict[int, list[int]] = {}
        self._orders: list[int] | None = None
        self._conj: dict[tuple, list[list[int]]] = {}

    def col(self, j: int) -> list[int]:
        """col(j)[i] is the index of e_i * e_j."""
        c = self._cols.get(j)
        if c is None:
            g = self.elements[j]
            idx = self.index
            c = [idx[compose_images(x, g)] for x in self.elements]
            self._cols[j] = c
        return c

    def orders(self) -> list[int]:
        if self._orders is None:
            self._orders = [order_of_images(g) for g in self.elements]
        return self._orders

    def inverse_index(self, i: int) -> int:
        return self.index[invert_images(self.elements[i])]

    def conjugation_maps(self, gen_indices: list[int]) -> list[list[int]]:
        """For each generator s, the index map i -> index of s^-1 e_i s."""
        key = tuple(gen_indices)
        cached = self._conj.get(key)
        if cached is None:
            cached = []
            for gi in gen_indices:
                g = self.elements[gi]
                inv = invert_images(g)
                cached.append([self.index[compose_images(compose_images(inv, x), g)] for x in self.elements])
            self._conj[key] = cached
        return cached

    def conjugacy_classes(self, gen_indices: list[int]) -> list[list[int]]:
        """Classes as orbits under conjugation by the given generators."""
        maps = self.conjugation_maps(gen_indices)
        seen = [False] * self.size
        classes = []
        for start in range(self.size):
            if seen[start]:
                continue
            seen[start] = True
            orbit = [start]
            for i in orbit:
                for m in maps:
                    j = m[i]
                    if not seen[j]:
                        seen[j] = True
                        orbit.append(j)
            classes.append(orbit)
        return classes

    def closure(self, gens: list[int]) -> set[int]:
        elems = {self.identity}
        frontier = [self.identity]
        cols = [self.col(s) for s in gens]
        for y in frontier:
            for c in cols:
                z = c[y]
                if z not in elems:
                    elems.add(z)
                    frontier.append(z)
        return elems

    def extend(self, elems: set[int] | frozenset, gens: list[int], g: int) -> set[int]:
        """Elements of <H, g> given H's element set and generators."""
        out = set(elems)
        new = []
        cg = self.col(g)
        for x in elems:
            y = cg[x]
            if y not in out:
                out.add(y)
                new.append(y)
        if not new:
            return out
        cols = [self.col(s) for s in gens] + [cg]
        for y in new:
            for c in cols:
                z = c[y]
                if z not in out:
                    out.add(z)
                    new.append(z)
        return out
