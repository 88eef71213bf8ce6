"""Permutation groups given by generators, plus subgroup and quotient constructions."""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .chain import StabilizerChain
from .config import DEFAULT_CAPS, CapExceeded, Caps
from .perm import Permutation, compose_images, invert_images
from .table import ElementTable

log = logging.getLogger(__name__)


def _as_images(g, degree: int) -> tuple:
    images = g.images if isinstance(g, Permutation) else tuple(g)
    if len(images) != degree:
        raise ValueError(f"degree mismatch: expected {degree}, got {len(images)}")
    return images


class PermGroup:
    """A permutation group of a fixed degree given by generators.

    The stabilizer chain and element table are built lazily and cached.
    An empty generator list gives the trivial group.
    """

    def __init__(self, degree: int, generators: Iterable = (), name: str | None = None):
        if degree < 1:
            raise ValueError("degree must be positive")
        self.degree = degree
        gens = [_as_images(g, degree) for g in generators]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"not a permutation: {g!r}")
        self._gens = gens
        self.name = name
        self._chain: StabilizerChain | None = None
        self._table: ElementTable | None = None
        self._lock = threading.Lock()
        self._memo: dict = {}

    @property
    def generators(self) -> list[Permutation]:
        return [Permutation(g, check=False) for g in self._gens]

    @property
    def gen_images(self) -> list[tuple]:
        return list(self._gens)

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            chain = StabilizerChain(self.degree, self._gens)
            with self._lock:
                if self._chain is None:
                    self._chain = chain
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def __len__(self) -> int:
        return self.order()

    def contains(self, g) -> bool:
        images = g.images if isinstance(g, Permutation) else tuple(g)
        return self.chain.contains(images)

    __contains__ = contains

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.chain.contains(g) for g in self._gens)

    def same_group(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def iter_images(self, caps: Caps | None = None) -> Iterator[tuple]:
        caps = caps or DEFAULT_CAPS
        n = self.order()
        if n > caps.enumeration_cap:
            raise CapExceeded("enumeration_cap", n, caps.enumeration_cap)
        if self._table is not None:
            return iter(self._table.elements)
        return self.chain.elements()

    def elements(self, caps: Caps | None = None) -> Iterator[Permutation]:
        """Stream every element exactly once (identity first)."""
        return (Permutation(g, check=False) for g in self.iter_images(caps))

    def table(self, caps: Caps | None = None) -> ElementTable:
        if self._table is None:
            table = ElementTable(list(self.iter_images(caps)))
            with self._lock:
                if self._table is None:
                    self._table = table
        return self._table

    def memo(self, key, compute: Callable):
        """Cache a value-determined result of ``compute()`` under ``key``."""
        try:
            return self._memo[key]
        except KeyError:
            value = compute()
            return self._memo.setdefault(key, value)

    def random_element(self, rng) -> Permutation:
        return Permutation(self.chain.random_element(rng), check=False)

    def gen_indices(self, caps: Caps | None = None) -> list[int]:
        t = self.table(caps)
        return [t.index[g] for g in self._gens]

    def __repr__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        gens = ", ".join(Permutation(g, check=False).cycle_string() for g in self._gens)
        return f"<PermGroup {label}degree {self.degree} <{gens}>>"


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, [])


def subgroup(G: PermGroup, gens: Sequence) -> PermGroup:
    """The group generated by ``gens`` (same degree as G)."""
    return PermGroup(G.degree, [_as_images(g, G.degree) for g in gens])


def _conj(x: tuple, g: tuple, g_inv: tuple) -> tuple:
    # g^-1 x g
    return compose_images(compose_images(g_inv, x), g)


def normal_closure(G: PermGroup, S: Sequence) -> PermGroup:
    """Smallest subgroup containing S and normalized by G's generators."""
    gens = [_as_images(s, G.degree) for s in S]
    N = PermGroup(G.degree, gens)
    conj = [(g, invert_images(g)) for g in G.gen_images]
    queue = list(N.gen_images)
    for x in queue:
        for g, gi in conj:
            y = _conj(x, g, gi)
            if not N.chain.contains(y):
                gens.append(y)
                N = PermGroup(G.degree, gens)
                queue.append(y)
    return N


def commutator(a: tuple, b: tuple) -> tuple:
    """a^-1 b^-1 a b."""
    return compose_images(compose_images(invert_images(a), invert_images(b)), compose_images(a, b))


def derived_subgroup(G: PermGroup) -> PermGroup:
    gens = G.gen_images
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms)


def is_normal(G: PermGroup, N: PermGroup) -> bool:
    if not N.is_subgroup_of(G):
        return False
    for g in G.gen_images:
        gi = invert_images(g)
        for x in N.gen_images:
            if not N.chain.contains(_conj(x, g, gi)):
                return False
    return True


@dataclass
class Homomorphism:
    """A group homomorphism given by generator images.

    ``mapper`` evaluates the map on arbitrary source elements when the
    construction supports it (coset actions do).
    """

    source: PermGroup
    image: PermGroup
    generator_images: list[Permutation]
    mapper: Callable[[Permutation], Permutation] | None = None

    def __call__(self, g: Permutation) -> Permutation:
        if self.mapper is None:
            raise NotImplementedError("no element mapper for this homomorphism")
        return self.mapper(g)

    def image_of_word(self, word: Sequence[int]) -> Permutation:
        """Image of the product of source generators indexed by ``word``."""
        out = self.image.identity()
        for i in word:
            out = out * self.generator_images[i]
        return out

    def check_words(self, rng, count: int = 20, length: int = 8) -> bool:
        """Spot-check multiplicativity on random generator words."""
        gens = self.source.generators
        if not gens or self.mapper is None:
            return True
        for _ in range(count):
            word = [rng.randrange(len(gens)) for _ in range(length)]
            g = self.source.identity()
            for i in word:
                g = g * gens[i]
            if self(g) != self.image_of_word(word):
                return False
        return True


class _CosetIndex:
    """Identifies right cosets Hx by a canonical key."""

    def __init__(self, H: PermGroup, index: int):
        self.H = H
        self.by_elements = H.order() <= max(index, 64)
        if self.by_elements:
            self.h_elems = list(H.chain.elements())
        self.reps: list[tuple] = []
        self.rep_invs: list[tuple] = []
        self.keys: dict[tuple, int] = {}

    def find(self, x: tuple) -> int | None:
        if self.by_elements:
            return self.keys.get(min(compose_images(h, x) for h in self.h_elems))
        chain = self.H.chain
        for i, ri in enumerate(self.rep_invs):
            if chain.contains(compose_images(x, ri)):
                return i
        return None

    def add(self, x: tuple) -> int:
        i = len(self.reps)
        self.reps.append(x)
        if self.by_elements:
            self.keys[min(compose_images(h, x) for h in self.h_elems)] = i
        else:
            self.rep_invs.append(invert_images(x))
        return i


def coset_action(G: PermGroup, H: PermGroup, caps: Caps | None = None) -> Homomorphism:
    """Action of G by right multiplication on the right cosets of H.

    Cosets are numbered from 1 with H itself as point 1.
    """
    caps = caps or DEFAULT_CAPS
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    index = G.order() // H.order()
    if index > caps.coset_cap:
        raise CapExceeded("coset_cap", index, caps.coset_cap)
    cosets = _CosetIndex(H, index)
    cosets.add(tuple(range(G.degree)))
    gens = G.gen_images
    rows: list[list[int]] = []
    i = 0
    while i < len(cosets.reps):
        r = cosets.reps[i]
        row = []
        for g in gens:
            x = compose_images(r, g)
            j = cosets.find(x)
            if j is None:
                j = cosets.add(x)
            row.append(j)
        rows.append(row)
        i += 1
    if len(cosets.reps) != index:
        raise AssertionError(f"coset enumeration found {len(cosets.reps)} cosets, expected {index}")
    gen_images = [tuple(rows[c][k] for c in range(index)) for k in range(len(gens))]
    image = PermGroup(index, gen_images)

    def mapper(g: Permutation) -> Permutation:
        x = _as_images(g, G.degree)
        return Permutation(
            [cosets.find(compose_images(r, x)) for r in cosets.reps], check=False
        )

    return Homomorphism(
        source=G,
        image=image,
        generator_images=[Permutation(t, check=False) for t in gen_images],
        mapper=mapper,
    )


def quotient(G: PermGroup, N: PermGroup, caps: Caps | None = None) -> PermGroup:
    """G/N realized as G acting on the cosets of the normal subgroup N."""
    if not N.is_subgroup_of(G):
        raise ValueError("N is not a subgroup of G")
    if not is_normal(G, N):
        raise ValueError("N is not normal in G")
    image = coset_action(G, N, caps).image
    expected = G.order() // N.order()
    if image.order() != expected:
        raise AssertionError(f"quotient order {image.order()} != |G|/|N| = {expected}")
    return image


def _lattice_table(G: PermGroup, caps: Caps) -> ElementTable:
    n = G.order()
    if n > caps.lattice_cap:
        raise CapExceeded("lattice_cap", n, caps.lattice_cap)
    return G.table(caps)


def _subgroup_sets(G: PermGroup, caps: Caps) -> tuple[ElementTable, dict[frozenset, list[int]]]:
    """All subgroups as {element-index set: generator indices}."""
    t = _lattice_table(G, caps)
    cyclic: dict[frozenset, list[int]] = {}
    for i in range(t.size):
        key = frozenset(t.closure([i]))
        cyclic.setdefault(key, [i])
    found = dict(cyclic)
    work = list(found)
    cyc = list(cyclic.items())
    for A in work:
        gens_A = found[A]
        for C, (c,) in cyc:
            if c in A:
                continue
            J = frozenset(t.extend(A, gens_A, c))
            if J not in found:
                found[J] = gens_A + [c]
                work.append(J)
    return t, found


def _to_groups(G: PermGroup, t: ElementTable, sets: Iterable[tuple[frozenset, list[int]]]) -> list[PermGroup]:
    out = []
    for elems, gens in sets:
        H = PermGroup(G.degree, [t.elements[i] for i in gens if i != t.identity])
        H._elem_set = elems
        out.append(H)
    return out


def all_subgroups(G: PermGroup, caps: Caps | None = None) -> list[PermGroup]:
    """Every subgroup, sorted by order then by sorted element list."""
    caps = caps or DEFAULT_CAPS
    t, found = _subgroup_sets(G, caps)
    items = sorted(found.items(), key=lambda kv: (len(kv[0]), sorted(t.elements[i] for i in kv[0])))
    return _to_groups(G, t, items)


def maximal_subgroups(G: PermGroup, caps: Caps | None = None) -> list[PermGroup]:
    caps = caps or DEFAULT_CAPS
    t, found = _subgroup_sets(G, caps)
    n = t.size
    proper = sorted((k for k in found if len(k) < n), key=len, reverse=True)
    maximal = []
    for M in proper:
        if not any(len(K) > len(M) and len(K) % len(M) == 0 and M < K for K in proper):
            maximal.append(M)
    maximal.sort(key=lambda k: (len(k), sorted(t.elements[i] for i in k)))
    return _to_groups(G, t, ((k, found[k]) for k in maximal))
