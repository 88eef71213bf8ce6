"""Exact integer checks of the generator bound and its supporting facts.

Every comparison is done on integers.  The bound p**(d - 2) <= E is
evaluated as p**d <= E * p**2, and the logarithmic Sylow inequality

    sum_i (d(P_i) - 1) * log(p_i) / log(p) >= d - 2

is evaluated as p**2 * prod_i p_i**(d(P_i) - 1) >= p**d: multiply by
log(p) > 0, exponentiate, then multiply both sides by p**2.
"""

from __future__ import annotations

import logging
import random
from dataclasses import asdict, dataclass, field

from .config import DEFAULT_CAPS, CapExceeded, Caps
from .group import PermGroup, derived_subgroup, maximal_subgroups, normal_closure, quotient, subgroup
from .invariants import (
    InternalError,
    d_pgroup,
    exponent,
    exponent_with_method,
    is_solvable,
    max_element_order,
    min_generators,
    ratio_E,
    smallest_prime,
    structural_flags,
    sylow,
    sylow_system,
)
from .numtheory import p_part
from .perm import compose_images, order_of_images

log = logging.getLogger(__name__)

# Explicit regular-representation parity cross-check applies up to this order.
REGULAR_CROSSCHECK_LIMIT = 60


@dataclass
class TheoremVerdict:
    applicable: bool
    holds: bool
    equality: bool
    lhs_scaled: int | None
    rhs_scaled: int | None
    predicted_equality: bool
    consistent: bool
    p: int | None = None
    d: int | None = None
    ratio_E: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def check_theorem(G: PermGroup, caps: Caps | None = None) -> TheoremVerdict:
    """Compare p**d with E * p**2 and test the equality characterization."""
    caps = caps or DEFAULT_CAPS
    if G.order() == 1:
        return TheoremVerdict(
            applicable=False, holds=False, equality=False, lhs_scaled=None,
            rhs_scaled=None, predicted_equality=False, consistent=True,
        )
    p = smallest_prime(G)
    d = min_generators(G, caps)
    E = ratio_E(G, caps)
    lhs = p**d
    rhs = E * p * p
    equality = lhs == rhs
    flags = structural_flags(G, caps)
    predicted = (not flags.cyclic) and exponent(G, caps) == G.order()
    return TheoremVerdict(
        applicable=True,
        holds=lhs <= rhs,
        equality=equality,
        lhs_scaled=lhs,
        rhs_scaled=rhs,
        predicted_equality=predicted,
        consistent=equality == predicted,
        p=p,
        d=d,
        ratio_E=E,
    )


def check_e2_remark(G: PermGroup, caps: Caps | None = None) -> bool:
    """E(G) = 2 forces d(G) = 2; vacuous otherwise."""
    if G.order() == 1 or ratio_E(G, caps) != 2:
        return True
    return min_generators(G, caps) == 2


@dataclass
class LemmaReport:
    holds: bool
    lhs_scaled: int  # p**d
    rhs_scaled: int  # E * p
    max_order_is_exponent: bool
    # (chain length i, index of <x_1..x_i>, index * p**(i-1) <= E)
    chain: list[tuple[int, int, bool]] = field(default_factory=list)

    @property
    def equality(self) -> bool:
        return self.lhs_scaled == self.rhs_scaled

    @property
    def chain_ok(self) -> bool:
        return all(ok for _, _, ok in self.chain)

    @property
    def passed(self) -> bool:
        return self.holds and self.max_order_is_exponent and self.chain_ok


def lemma_report(G: PermGroup, caps: Caps | None = None) -> LemmaReport:
    """Nilpotent groups: p**(d-1) <= E, plus the two facts its proof uses.

    The greedy chain starts at an element of maximal order and keeps
    adjoining the first element outside the current subgroup; each step
    must satisfy index * p**(i-1) <= E.
    """
    caps = caps or DEFAULT_CAPS
    if G.order() == 1:
        raise ValueError("the lemma needs a nontrivial group")
    if not structural_flags(G, caps).nilpotent:
        raise ValueError("the lemma applies to nilpotent groups only")
    n = G.order()
    p = smallest_prime(G)
    E = ratio_E(G, caps)
    d = min_generators(G, caps)
    exp = exponent(G, caps)
    top = max_element_order(G, caps)

    elements = list(G.iter_images(caps))
    x1 = next(g for g in elements if order_of_images(g) == top)
    gens = [x1]
    H = subgroup(G, gens)
    chain = []
    i = 1
    while True:
        index = n // H.order()
        chain.append((i, index, index * p ** (i - 1) <= E))
        if index == 1:
            break
        nxt = next(g for g in elements if not H.chain.contains(g))
        gens.append(nxt)
        H = subgroup(G, gens)
        i += 1
    return LemmaReport(
        holds=p**d <= E * p,
        lhs_scaled=p**d,
        rhs_scaled=E * p,
        max_order_is_exponent=top == exp,
        chain=chain,
    )


def check_lemma(G: PermGroup, caps: Caps | None = None) -> bool:
    return lemma_report(G, caps).passed


def sylow_ratios(G: PermGroup, caps: Caps | None = None) -> dict[int, int]:
    """E(P) for each Sylow subgroup P, keyed by prime."""
    return {p: ratio_E(P, caps) for p, P in sylow_system(G, caps).items()}


def check_multiplicativity(G: PermGroup, caps: Caps | None = None) -> bool:
    """E(G) equals the product of E(P) over a Sylow system.

    exp(G) must come from enumeration here; the Sylow-product fallback
    would assume the identity under test.
    """
    caps = caps or DEFAULT_CAPS
    exp, method = exponent_with_method(G, caps, allow_fallback=False)
    if method != "enumeration":
        raise InternalError("multiplicativity check needs an enumerated exponent")
    product = 1
    for value in sylow_ratios(G, caps).values():
        product *= value
    return G.order() // exp == product


def check_lemma_product(G: PermGroup, caps: Caps | None = None) -> bool:
    """E(G) >= prod_i p_i**(d(P_i) - 1), the lemma applied per Sylow subgroup."""
    if G.order() == 1:
        return True
    bound = 1
    for p, P in sylow_system(G, caps).items():
        bound *= p ** (d_pgroup(P, p) - 1)
    return ratio_E(G, caps) >= bound


def star3_values(G: PermGroup, caps: Caps | None = None) -> tuple[int, int]:
    """(p**2 * prod_i p_i**(d(P_i) - 1), p**d)."""
    if G.order() < 2:
        raise ValueError("needs |G| >= 2")
    p = smallest_prime(G)
    lhs = p * p
    for q, P in sylow_system(G, caps).items():
        lhs *= q ** (d_pgroup(P, q) - 1)
    return lhs, p ** min_generators(G, caps)


def check_star3(G: PermGroup, caps: Caps | None = None) -> bool:
    lhs, rhs = star3_values(G, caps)
    return lhs >= rhs


def check_gl_bound(G: PermGroup, caps: Caps | None = None) -> bool:
    """d(G) <= 1 + max over primes of d(Sylow_p)."""
    if G.order() < 2:
        raise ValueError("needs |G| >= 2")
    top = max(d_pgroup(P, p) for p, P in sylow_system(G, caps).items())
    return min_generators(G, caps) <= 1 + top


@dataclass
class SectionSample:
    h_label: str
    n_label: str
    h_order: int
    n_order: int
    quotient_E: int
    divides: bool


@dataclass
class SectionSampleReport:
    samples: list[SectionSample]
    seed: int
    group_E: int
    skipped: list[str] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(not s.divides for s in self.samples)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "group_E": self.group_E,
            "sample_count": len(self.samples),
            "violations": self.violations,
            "skipped": list(self.skipped),
            "samples": [asdict(s) for s in self.samples],
        }


def section_ratio_E(H: PermGroup, N: PermGroup, caps: Caps | None = None) -> int:
    """E(H/N) with H/N realized by the coset action (N = 1 gives H itself)."""
    if N.order() == 1:
        return ratio_E(H, caps)
    return ratio_E(quotient(H, N, caps), caps)


def check_section_divisibility(
    G: PermGroup, sample_count: int = 20, seed: int = 0, caps: Caps | None = None
) -> SectionSampleReport:
    """Seeded sections H/N of G; record whether E(H/N) divides E(G).

    H runs over G, each Sylow subgroup, then subgroups generated by one or
    two random elements.  For each H, N runs over the trivial group, the
    derived subgroup and the normal closure of a random element of H.
    Samples over a cap are recorded in ``skipped``.
    """
    caps = caps or DEFAULT_CAPS
    rng = random.Random(seed)
    E_G = ratio_E(G, caps)
    report = SectionSampleReport(samples=[], seed=seed, group_E=E_G)

    def subgroups():
        yield "G", G
        for p, P in sylow_system(G, caps).items():
            yield f"Sylow{p}", P
        k = 0
        while True:
            k += 1
            gens = [G.chain.random_element(rng) for _ in range(1 + k % 2)]
            yield f"rand{len(gens)}", subgroup(G, gens)

    attempts = 0
    limit = 4 * sample_count + 8
    for h_label, H in subgroups():
        normals = [("trivial", subgroup(H, [])), ("derived", derived_subgroup(H))]
        h = H.chain.random_element(rng)
        normals.append(("ncl", normal_closure(H, [h])))
        for n_label, N in normals:
            if len(report.samples) >= sample_count or attempts >= limit:
                return report
            attempts += 1
            try:
                q = section_ratio_E(H, N, caps)
            except CapExceeded as exc:
                msg = f"{h_label}/{n_label}: {exc}"
                log.info("section sample skipped: %s", msg)
                report.skipped.append(msg)
                continue
            report.samples.append(
                SectionSample(h_label, n_label, H.order(), N.order(), q, E_G % q == 0)
            )
    return report


@dataclass
class PropositionReport:
    ratio_E: int
    applies: bool  # E(G) odd
    solvable: bool | None
    sylow2_order: int | None = None
    sylow2_cyclic: bool | None = None
    regular_sign: int | None = None
    regular_sign_explicit: int | None = None
    parity_kernel_index: int | None = None

    @property
    def passed(self) -> bool:
        if not self.applies:
            return True
        if not self.solvable:
            return False
        if self.sylow2_order is None:
            return True
        ok = self.sylow2_cyclic and self.regular_sign == -1 and self.parity_kernel_index == 2
        if self.regular_sign_explicit is not None:
            ok = ok and self.regular_sign_explicit == self.regular_sign
        return bool(ok)


def regular_sign(element_order: int, group_order: int) -> int:
    """Sign of g in the regular representation: |G|/m cycles of length m = ord(g)."""
    return -1 if (element_order - 1) * (group_order // element_order) % 2 else 1


def regular_sign_explicit(G: PermGroup, x: tuple, caps: Caps | None = None) -> int:
    """Sign of right multiplication by x on the element list of G."""
    t = G.table(caps)
    images = [t.index[compose_images(g, x)] for g in t.elements]
    seen = [False] * len(images)
    transpositions = 0
    for s in range(len(images)):
        if seen[s]:
            continue
        length = 0
        j = s
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        transpositions += length - 1
    return -1 if transpositions % 2 else 1


def proposition_report(G: PermGroup, caps: Caps | None = None) -> PropositionReport:
    """Odd E(G) forces solvability; checks the parity mechanism behind it.

    With E(G) odd and |G| even, the Sylow 2-subgroup is cyclic and its
    generator acts as an odd permutation in the regular representation,
    so the even part of the regular image has index 2.
    """
    caps = caps or DEFAULT_CAPS
    n = G.order()
    E = ratio_E(G, caps)
    if E % 2 == 0:
        return PropositionReport(ratio_E=E, applies=False, solvable=None)
    rep = PropositionReport(ratio_E=E, applies=True, solvable=is_solvable(G))
    if n % 2:
        return rep
    P = sylow(G, 2, caps)
    m = P.order()
    rep.sylow2_order = m
    rep.sylow2_cyclic = max_element_order(P, caps) == m
    if not rep.sylow2_cyclic:
        return rep
    x = next(g for g in P.iter_images(caps) if order_of_images(g) == m)
    rep.regular_sign = regular_sign(m, n)
    if n <= REGULAR_CROSSCHECK_LIMIT:
        rep.regular_sign_explicit = regular_sign_explicit(G, x, caps)
    even = sum(regular_sign(order_of_images(g), n) == 1 for g in G.iter_images(caps))
    rep.parity_kernel_index = n // even if n % even == 0 else 0
    return rep


def check_proposition(G: PermGroup, caps: Caps | None = None) -> bool:
    return proposition_report(G, caps).passed


def is_d_maximal(G: PermGroup, caps: Caps | None = None) -> bool:
    """d(G) exceeds d(M) for every maximal subgroup M."""
    caps = caps or DEFAULT_CAPS
    maxes = maximal_subgroups(G, caps)
    if not maxes:
        return True
    d = min_generators(G, caps)
    return all(d > min_generators(M, caps) for M in maxes)
