import pytest

from permexp.config import CapExceeded, Caps
from permexp.constructions import (
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    power_auto,
    psl2,
    quaternion8,
    symmetric,
)
from permexp.group import PermGroup
from permexp.invariants import (
    d_pgroup,
    exponent,
    exponent_with_method,
    invariants_report,
    is_p_group,
    max_element_order,
    min_generators,
    ratio_E,
    smallest_prime,
    structural_flags,
    sylow,
    sylow_system,
)
from permexp.numtheory import factorize
from permexp.perm import parse_cycles

import oracles


def test_exponent_s4():
    G = symmetric(4)
    assert exponent(G) == 12
    assert max_element_order(G) == 4


def test_exponent_three_disjoint_involutions():
    G = PermGroup(6, [parse_cycles(c, 6) for c in ("(1 2)", "(3 4)", "(5 6)")])
    assert exponent(G) == 2


def test_exponent_psl2_5():
    G = psl2(5)
    assert (G.order(), exponent(G), max_element_order(G)) == (60, 30, 5)


@pytest.mark.parametrize("G, E", [(lambda: psl2(5), 2), (lambda: symmetric(3), 1), (lambda: quaternion8(), 2)])
def test_ratio_E_examples(G, E):
    assert ratio_E(G()) == E


def test_q8_exponent():
    G = quaternion8()
    assert (G.order(), exponent(G)) == (8, 4)


def test_smallest_prime():
    assert smallest_prime(psl2(5)) == 2
    assert smallest_prime(direct_product(cyclic(3), cyclic(5))) == 3
    assert smallest_prime(PermGroup(2, [])) is None


def test_sylow_orders_s5():
    G = symmetric(5)
    assert sylow(G, 2).order() == 8
    assert sylow(G, 3).order() == 3
    assert sylow(G, 5).order() == 5
    assert sorted(sylow_system(G)) == [2, 3, 5]


def test_sylow_rejects_non_divisor():
    with pytest.raises(ValueError):
        sylow(symmetric(3), 5)


def test_sylow_psl2_13():
    G = psl2(13)
    for p, k in factorize(G.order()).items():
        P = sylow(G, p)
        assert P.order() == p**k and P.is_subgroup_of(G)


def test_exponent_fallback_above_cap():
    G = symmetric(8)
    with pytest.raises(CapExceeded):
        exponent_with_method(G, Caps(enumeration_cap=1000), allow_fallback=False)
    value, method = exponent_with_method(G, Caps(enumeration_cap=1000))
    assert method == "sylow-product" and value == 840


@pytest.mark.parametrize("G, d", [
    (lambda: elementary_abelian(2, 3), 3),
    (lambda: quaternion8(), 2),
    (lambda: cyclic(8), 1),
    (lambda: dihedral(4), 2),
    (lambda: elementary_abelian(3, 4), 4),
])
def test_d_pgroup(G, d):
    G = G()
    p = min(factorize(G.order()))
    assert is_p_group(G, p)
    assert d_pgroup(G, p) == d == min_generators(G)


def test_d_pgroup_rejects_non_pgroup():
    with pytest.raises(ValueError):
        d_pgroup(symmetric(3), 2)


@pytest.mark.parametrize("G, d", [
    (lambda: PermGroup(3, []), 0),
    (lambda: cyclic(12), 1),
    (lambda: symmetric(4), 2),
    (lambda: direct_product(cyclic(2), cyclic(2)), 2),
    (lambda: direct_product(symmetric(3), symmetric(3)), 2),
    (lambda: direct_product(elementary_abelian(2, 2), symmetric(3)), 3),
    (lambda: direct_product(elementary_abelian(2, 2), elementary_abelian(3, 2)), 2),
    (lambda: power_auto(3, 3), 4),
    (lambda: symmetric(7), 2),
])
def test_min_generators(G, d):
    assert min_generators(G()) == d


@pytest.mark.parametrize("G", [lambda: symmetric(4), lambda: dihedral(6), lambda: power_auto(3, 2),
                               lambda: direct_product(cyclic(2), dihedral(4))])
def test_min_generators_matches_oracle(G):
    G = G()
    elems = oracles.closure(G.gen_images, G.degree)
    assert min_generators(G) == oracles.min_generators(elems, G.gen_images, G.degree)


def test_flags():
    f = structural_flags(cyclic(6))
    assert f.cyclic and f.abelian and f.nilpotent and f.solvable and f.all_sylow_cyclic
    f = structural_flags(symmetric(3))
    assert not f.cyclic and not f.abelian and not f.nilpotent and f.solvable and f.all_sylow_cyclic
    f = structural_flags(quaternion8())
    assert not f.abelian and f.nilpotent and not f.all_sylow_cyclic
    f = structural_flags(psl2(7))
    assert not f.solvable and not f.nilpotent


def test_report_s3():
    r = invariants_report(symmetric(3))
    assert (r.order, r.exponent, r.ratio_E, r.d, r.smallest_prime, r.max_element_order) == (6, 6, 1, 2, 2, 3)
    assert {p: (s.power, s.exponent, s.d) for p, s in r.sylow_data.items()} == {2: (1, 2, 1), 3: (1, 3, 1)}


def test_report_trivial():
    r = invariants_report(PermGroup(1, []))
    assert (r.order, r.exponent, r.ratio_E, r.d, r.smallest_prime) == (1, 1, 1, 0, None)
    assert r.sylow_data == {}
    assert r.to_dict()["flags"]["cyclic"]


def test_report_psl2_7():
    r = invariants_report(psl2(7))
    assert (r.order, r.exponent, r.ratio_E, r.d) == (168, 84, 2, 2)
    assert r.sylow_data[2].power == 3 and r.sylow_data[2].exponent == 4


def test_corpus_invariant_relations(corpus_groups):
    for name, G in corpus_groups.items():
        r = invariants_report(G)
        assert r.exponent * r.ratio_E == r.order, name
        assert r.exponent % r.max_element_order == 0, name
        assert r.flags.cyclic == (r.max_element_order == r.order), name
        assert r.flags.all_sylow_cyclic == (r.exponent == r.order), name
        if r.flags.all_sylow_cyclic:
            assert r.d <= 2, name
        prod = 1
        for p, s in r.sylow_data.items():
            assert r.order % p**s.power == 0 and (r.order // p**s.power) % p, name
            prod *= s.exponent
        assert prod == r.exponent, name
