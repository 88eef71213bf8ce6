"""Permutation realizations of the built-in group families."""

from __future__ import annotations

from dataclasses import dataclass, field

from .group import PermGroup
from .numtheory import is_prime
from .perm import compose_images, invert_images

FAMILIES = (
    "cyclic",
    "elementary_abelian",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "psl2",
    "power_auto",
    "direct_product",
)

# Right regular representation of Q8 with points
# 1:1, 2:-1, 3:i, 4:-i, 5:j, 6:-j, 7:k, 8:-k.
# Generators are right multiplication by i and by j.
Q8_RIGHT_MULT_I = [3, 4, 2, 1, 8, 7, 5, 6]
Q8_RIGHT_MULT_J = [5, 6, 7, 8, 2, 1, 4, 3]


@dataclass
class FamilySpec:
    family: str
    parameters: list[int] = field(default_factory=list)
    factors: list["FamilySpec"] = field(default_factory=list)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def label(self) -> str:
        if self.family == "direct_product":
            return "x".join(f.label() for f in self.factors)
        p = self.parameters
        if self.family == "cyclic":
            return f"C{p[0]}"
        if self.family == "elementary_abelian":
            return f"C{p[0]}^{p[1]}"
        if self.family == "dihedral":
            return f"D{2 * p[0]}"
        if self.family == "symmetric":
            return f"S{p[0]}"
        if self.family == "alternating":
            return f"A{p[0]}"
        if self.family == "quaternion8":
            return "Q8"
        if self.family == "psl2":
            return f"PSL2({p[0]})"
        return f"C{p[0]}^{p[1]}:C2"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``family:a,b`` (e.g. ``power_auto:3,2``); direct products use ``*``."""
        if "*" in text:
            return cls("direct_product", [], [cls.parse(t) for t in text.split("*")])
        fam, _, params = text.partition(":")
        return cls(fam, [int(x) for x in params.split(",")] if params else [])


def _cycle(points: list[int], degree: int) -> tuple:
    images = list(range(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        images[a] = b
    return tuple(images)


def _need(spec: FamilySpec, count: int) -> list[int]:
    if len(spec.parameters) != count:
        raise ValueError(f"{spec.family} takes {count} parameter(s), got {spec.parameters}")
    return spec.parameters


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    gens = [_cycle(list(range(n)), n)] if n > 1 else []
    return PermGroup(n, gens, name=f"C{n}")


def elementary_abelian(p: int, k: int) -> PermGroup:
    if not is_prime(p) or k < 1:
        raise ValueError("elementary abelian group needs a prime p and k >= 1")
    deg = p * k
    gens = [_cycle(list(range(b * p, b * p + p)), deg) for b in range(k)]
    return PermGroup(deg, gens, name=f"C{p}^{k}")


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n, degree n."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    rot = _cycle(list(range(n)), n)
    refl = tuple((-i) % n for i in range(n))
    return PermGroup(n, [rot, refl], name=f"D{2 * n}")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    if n == 1:
        return PermGroup(1, [], name="S1")
    gens = [_cycle([0, 1], n)]
    if n > 2:
        gens.append(_cycle(list(range(n)), n))
    return PermGroup(n, gens, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("alternating group needs n >= 1")
    if n < 3:
        return PermGroup(n, [], name=f"A{n}")
    long = list(range(n)) if n % 2 else list(range(1, n))
    gens = [_cycle([0, 1, 2], n)]
    if n > 3:
        gens.append(_cycle(long, n))
    return PermGroup(n, gens, name=f"A{n}")


def quaternion8() -> PermGroup:
    gens = [tuple(x - 1 for x in Q8_RIGHT_MULT_I), tuple(x - 1 for x in Q8_RIGHT_MULT_J)]
    return PermGroup(8, gens, name="Q8")


def psl2(p: int) -> PermGroup:
    """PSL(2, p) acting on the projective line; point p+1 stands for infinity."""
    if p < 3 or not is_prime(p):
        raise ValueError("psl2 needs an odd prime p")
    inf = p
    translate = tuple([(x + 1) % p for x in range(p)] + [inf])
    invert = [0] * (p + 1)
    for x in range(1, p):
        invert[x] = (-pow(x, -1, p)) % p
    invert[0] = inf
    invert[inf] = 0
    G = PermGroup(p + 1, [translate, tuple(invert)], name=f"PSL2({p})")
    expected = p * (p * p - 1) // 2
    if G.order() != expected:
        raise AssertionError(f"psl2({p}) has order {G.order()}, expected {expected}")
    return G


def power_auto(q: int, n: int) -> PermGroup:
    """(C_q)^n extended by the involution inverting every element; degree q*n."""
    if q < 3 or not is_prime(q) or n < 1:
        raise ValueError("power_auto needs an odd prime q and n >= 1")
    deg = q * n
    blocks = [_cycle(list(range(b * q, b * q + q)), deg) for b in range(n)]
    t = tuple(b * q + (-(x - b * q)) % q for b in range(n) for x in range(b * q, b * q + q))
    for a in blocks:
        if compose_images(compose_images(t, a), t) != invert_images(a):
            raise AssertionError("inversion relation t a t = a^-1 fails")
    return PermGroup(deg, blocks + [t], name=f"C{q}^{n}:C2")


def direct_product(G: PermGroup, H: PermGroup) -> PermGroup:
    """G x H on disjoint point sets, G first."""
    dg, dh = G.degree, H.degree
    deg = dg + dh
    gens = [tuple(g) + tuple(range(dg, deg)) for g in G.gen_images]
    gens += [tuple(range(dg)) + tuple(x + dg for x in h) for h in H.gen_images]
    name = f"{G.name}x{H.name}" if G.name and H.name else None
    return PermGroup(deg, gens, name=name)


def build(spec: FamilySpec) -> PermGroup:
    fam = spec.family
    if fam == "cyclic":
        (n,) = _need(spec, 1)
        return cyclic(n)
    if fam == "elementary_abelian":
        return elementary_abelian(*_need(spec, 2))
    if fam == "dihedral":
        return dihedral(*_need(spec, 1))
    if fam == "symmetric":
        return symmetric(*_need(spec, 1))
    if fam == "alternating":
        return alternating(*_need(spec, 1))
    if fam == "quaternion8":
        _need(spec, 0)
        return quaternion8()
    if fam == "psl2":
        return psl2(*_need(spec, 1))
    if fam == "power_auto":
        return power_auto(*_need(spec, 2))
    if len(spec.factors) < 2:
        raise ValueError("direct_product needs at least two factors")
    G = build(spec.factors[0])
    for f in spec.factors[1:]:
        G = direct_product(G, build(f))
    G.name = spec.label()
    return G
