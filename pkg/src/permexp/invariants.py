"""Order, exponent, ratio E = |G|/exp(G), minimal generator count and Sylow data."""

from __future__ import annotations

import logging
import random
from dataclasses import asdict, dataclass, field

from .config import DEFAULT_CAPS, CapExceeded, Caps
from .group import PermGroup, derived_subgroup, is_normal, normal_closure, subgroup, commutator
from .numtheory import exact_log, factorize, lcm, p_part, smallest_prime_factor
from .perm import compose_images, invert_images, order_of_images
from .table import ElementTable

log = logging.getLogger(__name__)

# Groups up to this order use the indexed-table subgroup search for d(G).
TABLE_SEARCH_LIMIT = 2000
# Random p-element draws allowed per Sylow enlargement step beyond the enumeration cap.
SYLOW_RANDOM_TRIES = 20_000


class InternalError(AssertionError):
    """A computed quantity contradicts a basic group-theoretic fact."""


@dataclass
class SylowData:
    prime: int
    power: int  # |P| = prime ** power
    exponent: int
    d: int

    @property
    def ratio_E(self) -> int:
        return self.prime ** self.power // self.exponent


@dataclass
class Flags:
    cyclic: bool
    abelian: bool
    nilpotent: bool
    solvable: bool
    all_sylow_cyclic: bool


@dataclass
class GroupInvariants:
    order: int
    exponent: int
    ratio_E: int
    d: int
    smallest_prime: int | None
    max_element_order: int
    flags: Flags
    sylow_data: dict[int, SylowData] = field(default_factory=dict)
    exponent_method: str = "enumeration"

    def to_dict(self) -> dict:
        out = asdict(self)
        out["sylow_data"] = {str(p): asdict(s) for p, s in sorted(self.sylow_data.items())}
        return out


def _order_stats(G: PermGroup, caps: Caps) -> tuple[int, int]:
    def compute():
        exp, top = 1, 1
        for g in G.iter_images(caps):
            m = order_of_images(g)
            if m > top:
                top = m
            if exp % m:
                exp = lcm(exp, m)
        return exp, top

    return G.memo("order_stats", compute)


def exponent(G: PermGroup, caps: Caps | None = None) -> int:
    """lcm of all element orders, by full enumeration."""
    return _order_stats(G, caps or DEFAULT_CAPS)[0]


def max_element_order(G: PermGroup, caps: Caps | None = None) -> int:
    return _order_stats(G, caps or DEFAULT_CAPS)[1]


def exponent_with_method(G: PermGroup, caps: Caps | None = None, allow_fallback: bool = True) -> tuple[int, str]:
    """Exponent plus the method used: "enumeration" or "sylow-product".

    The Sylow-product route assumes exp(G) is the product of the Sylow
    exponents, so callers checking that identity must pass
    ``allow_fallback=False``.
    """
    caps = caps or DEFAULT_CAPS
    try:
        return exponent(G, caps), "enumeration"
    except CapExceeded:
        if not allow_fallback:
            raise
    value = 1
    for P in sylow_system(G, caps).values():
        value *= exponent(P, caps)
    return value, "sylow-product"


def ratio_E(G: PermGroup, caps: Caps | None = None) -> int:
    n = G.order()
    e = exponent(G, caps)
    if n % e:
        raise InternalError(f"exponent {e} does not divide order {n}")
    return n // e


def smallest_prime(G: PermGroup) -> int | None:
    return smallest_prime_factor(G.order())


def _p_power_part(g: tuple, p: int) -> tuple:
    m = order_of_images(g)
    cofactor = m // p_part(m, p)
    return _power(g, cofactor)


def _power(g: tuple, k: int) -> tuple:
    n = len(g)
    out = list(range(n))
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        j = g[s]
        while j != s:
            seen[j] = True
            cyc.append(j)
            j = g[j]
        L = len(cyc)
        for pos, x in enumerate(cyc):
            out[x] = cyc[(pos + k) % L]
    return tuple(out)


def _normalizes(P: PermGroup, y: tuple) -> bool:
    yi = invert_images(y)
    return all(P.chain.contains(compose_images(compose_images(yi, s), y)) for s in P.gen_images)


def _p_elements(G: PermGroup, p: int, caps: Caps) -> list[tuple]:
    def compute():
        out = []
        for g in G.iter_images(caps):
            m = order_of_images(g)
            if m > 1 and p_part(m, p) == m:
                out.append(g)
        return out

    return G.memo(("p_elements", p), compute)


def sylow(G: PermGroup, p: int, caps: Caps | None = None) -> PermGroup:
    """A Sylow p-subgroup, grown from a p-element of maximal order.

    While P is not yet Sylow, some p-element outside P normalizes it;
    adjoining it keeps P a p-group.  Groups beyond the enumeration cap
    draw p-parts of seeded random elements instead of scanning.
    """
    caps = caps or DEFAULT_CAPS
    n = G.order()
    if n % p:
        raise ValueError(f"{p} does not divide |G| = {n}")
    return G.memo(("sylow", p), lambda: _sylow(G, p, caps))


def _sylow(G: PermGroup, p: int, caps: Caps) -> PermGroup:
    target = p_part(G.order(), p)
    if G.order() <= caps.enumeration_cap:
        cands = _p_elements(G, p, caps)
        start = max(cands, key=order_of_images)
        P = subgroup(G, [start])
        while P.order() < target:
            for y in cands:
                if not P.chain.contains(y) and _normalizes(P, y):
                    P = subgroup(G, P.gen_images + [y])
                    break
            else:
                raise InternalError(f"Sylow {p}-search stalled at order {P.order()}")
    else:
        rng = random.Random(p)
        P = subgroup(G, [])
        while P.order() < target:
            for _ in range(SYLOW_RANDOM_TRIES):
                y = _p_power_part(G.chain.random_element(rng), p)
                if not P.chain.contains(y) and _normalizes(P, y):
                    P = subgroup(G, P.gen_images + [y])
                    break
            else:
                raise CapExceeded("enumeration_cap", G.order(), caps.enumeration_cap)
    if P.order() != target:
        raise InternalError(f"Sylow {p}-subgroup has order {P.order()}, expected {target}")
    return P


def sylow_system(G: PermGroup, caps: Caps | None = None) -> dict[int, PermGroup]:
    """One Sylow subgroup per prime dividing |G|, keyed by prime."""
    return {p: sylow(G, p, caps) for p in sorted(factorize(G.order()))}


def is_p_group(G: PermGroup, p: int) -> bool:
    n = G.order()
    return p_part(n, p) == n


def d_pgroup(P: PermGroup, p: int) -> int:
    """Burnside basis theorem: d(P) = log_p [P : Phi(P)].

    Phi(P) is the normal closure of the commutators of generator pairs
    together with the p-th powers of the generators.
    """
    if not is_p_group(P, p):
        raise ValueError(f"group of order {P.order()} is not a {p}-group")
    gens = P.gen_images
    seeds = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    seeds += [_power(g, p) for g in gens]
    frattini = normal_closure(P, seeds)
    return exact_log(P.order() // frattini.order(), p)


def conjugacy_class_reps(G: PermGroup, caps: Caps | None = None) -> list[tuple]:
    caps = caps or DEFAULT_CAPS

    def compute():
        t = G.table(caps)
        return [t.elements[c[0]] for c in t.conjugacy_classes(G.gen_indices(caps))]

    return G.memo("class_reps", compute)


def min_generators(G: PermGroup, caps: Caps | None = None) -> int:
    """Exact minimal number of generators.

    Exhaustive: k = 1 holds exactly for nontrivial cyclic groups; beyond
    that, generated subgroups are grown one generator at a time.  The
    first generator runs over conjugacy-class representatives only and
    candidates already inside a generated subgroup are skipped.  p-groups
    are cross-checked against the Burnside count.
    """
    caps = caps or DEFAULT_CAPS
    return G.memo("min_generators", lambda: _min_generators(G, caps))


def _min_generators(G: PermGroup, caps: Caps) -> int:
    n = G.order()
    if n > caps.enumeration_cap:
        raise CapExceeded("enumeration_cap", n, caps.enumeration_cap)
    if n == 1:
        return 0
    if max_element_order(G, caps) == n:
        d = 1
    elif n <= TABLE_SEARCH_LIMIT:
        d = _table_search(G, caps)
    else:
        d = _chain_search(G, caps)
    p = smallest_prime_factor(n)
    if is_p_group(G, p) and d != d_pgroup(G, p):
        raise InternalError(f"d search gave {d}, Burnside count gave {d_pgroup(G, p)}")
    return d


def _table_search(G: PermGroup, caps: Caps) -> int:
    """Breadth-first over subgroups generated by k elements.

    Each level keeps one subgroup per conjugacy class, and only those not
    contained in another kept subgroup: if H <= H' then <H, g1..gj> lies
    in <H', g1..gj>, so dropping H cannot change the number of steps
    needed to reach G.  For normal H, <H, g> up to conjugacy depends only
    on the class of g.
    """
    t = G.table(caps)
    n = t.size
    maps = t.conjugation_maps(G.gen_indices(caps))
    reps = [c[0] for c in t.conjugacy_classes(G.gen_indices(caps))]

    def mark_orbit(J: frozenset, seen: set) -> None:
        seen.add(J)
        orbit = [J]
        for K in orbit:
            for m in maps:
                K2 = frozenset([m[i] for i in K])
                if K2 not in seen:
                    seen.add(K2)
                    orbit.append(K2)

    seen: set[frozenset] = set()
    level: dict[frozenset, list[int]] = {}
    for r in reps:
        if r == t.identity:
            continue
        J = frozenset(t.closure([r]))
        if J not in seen:
            mark_orbit(J, seen)
            level[J] = [r]
    k = 1
    while True:
        level = _maximal_only(level)
        nxt: dict[frozenset, list[int]] = {}
        seen = set()
        for H, gens in level.items():
            normal = all(m[i] in H for m in maps for i in H)
            covered = set(H)
            for g in reps if normal else range(n):
                if g in covered:
                    continue
                J = t.extend(H, gens, g)
                if len(J) == n:
                    return k + 1
                covered |= J
                key = frozenset(J)
                if key not in seen:
                    mark_orbit(key, seen)
                    nxt[key] = gens + [g]
        if not nxt:
            raise InternalError("subgroup search exhausted without reaching G")
        level = nxt
        k += 1


def _maximal_only(level: dict[frozenset, list[int]]) -> dict[frozenset, list[int]]:
    by_size: dict[int, list[frozenset]] = {}
    for A in level:
        by_size.setdefault(len(A), []).append(A)
    sizes = sorted(by_size, reverse=True)
    kept = {}
    for a in sizes:
        bigger = [B for b in sizes if b > a and b % a == 0 for B in by_size[b] if B in kept]
        for A in by_size[a]:
            if not any(A < B for B in bigger):
                kept[A] = level[A]
    return kept


def _chain_search(G: PermGroup, caps: Caps) -> int:
    n = G.order()
    reps = [r for r in conjugacy_class_reps(G, caps) if order_of_images(r) > 1]
    elements = list(G.iter_images(caps))

    def extend(gens: list[tuple], H: PermGroup, slots: int) -> bool:
        if H.order() == n:
            return True
        if slots == 0:
            return False
        for g in elements:
            if H.chain.contains(g):
                continue
            gens2 = gens + [g]
            if extend(gens2, subgroup(G, gens2), slots - 1):
                return True
        return False

    k = 2
    while True:
        for r in reps:
            if extend([r], subgroup(G, [r]), k - 1):
                return k
        k += 1


def structural_flags(G: PermGroup, caps: Caps | None = None) -> Flags:
    caps = caps or DEFAULT_CAPS
    return G.memo("flags", lambda: _flags(G, caps))


def _flags(G: PermGroup, caps: Caps) -> Flags:
    n = G.order()
    gens = G.gen_images
    abelian = all(
        compose_images(a, b) == compose_images(b, a) for i, a in enumerate(gens) for b in gens[i + 1:]
    )
    sylows = sylow_system(G, caps)
    nilpotent = all(is_normal(G, P) for P in sylows.values())
    all_cyclic = all(max_element_order(P, caps) == P.order() for P in sylows.values())
    return Flags(
        cyclic=max_element_order(G, caps) == n,
        abelian=abelian,
        nilpotent=nilpotent,
        solvable=is_solvable(G),
        all_sylow_cyclic=all_cyclic,
    )


def derived_series(G: PermGroup) -> list[PermGroup]:
    series = [G]
    while True:
        D = derived_subgroup(series[-1])
        if D.order() == series[-1].order():
            return series
        series.append(D)


def is_solvable(G: PermGroup) -> bool:
    return G.memo("solvable", lambda: derived_series(G)[-1].order() == 1)


def sylow_data(G: PermGroup, caps: Caps | None = None) -> dict[int, SylowData]:
    caps = caps or DEFAULT_CAPS
    out = {}
    for p, P in sylow_system(G, caps).items():
        out[p] = SylowData(
            prime=p,
            power=exact_log(P.order(), p),
            exponent=exponent(P, caps),
            d=d_pgroup(P, p),
        )
    return out


def invariants_report(G: PermGroup, caps: Caps | None = None) -> GroupInvariants:
    caps = caps or DEFAULT_CAPS
    n = G.order()
    exp = exponent(G, caps)
    E = ratio_E(G, caps)
    top = max_element_order(G, caps)
    flags = structural_flags(G, caps)
    inv = GroupInvariants(
        order=n,
        exponent=exp,
        ratio_E=E,
        d=min_generators(G, caps),
        smallest_prime=smallest_prime(G),
        max_element_order=top,
        flags=flags,
        sylow_data=sylow_data(G, caps),
    )
    if exp % top:
        raise InternalError("maximal element order does not divide the exponent")
    if flags.nilpotent and top != exp:
        raise InternalError("nilpotent group without an element of order exp(G)")
    return inv
