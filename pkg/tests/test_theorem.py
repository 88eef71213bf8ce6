import random

import pytest

from permexp.constructions import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    power_auto,
    psl2,
    quaternion8,
    symmetric,
)
from permexp.group import PermGroup, derived_subgroup, subgroup
from permexp.invariants import InternalError, ratio_E, sylow
from permexp.perm import order_of_images, parse_cycles
from permexp.theorem import (
    check_e2_remark,
    check_gl_bound,
    check_lemma,
    check_lemma_product,
    check_multiplicativity,
    check_proposition,
    check_section_divisibility,
    check_star3,
    check_theorem,
    is_d_maximal,
    lemma_report,
    proposition_report,
    regular_sign,
    regular_sign_explicit,
    section_ratio_E,
    star3_values,
    sylow_ratios,
)


def test_theorem_s3_equality():
    v = check_theorem(symmetric(3))
    assert (v.p, v.d, v.ratio_E) == (2, 2, 1)
    assert v.holds and v.equality and v.predicted_equality and v.consistent
    assert v.lhs_scaled == v.rhs_scaled == 4


def test_theorem_c2_cubed_strict():
    v = check_theorem(elementary_abelian(2, 3))
    assert (v.lhs_scaled, v.rhs_scaled) == (8, 16)
    assert v.holds and not v.equality and v.consistent


def test_theorem_psl2_5_strict():
    v = check_theorem(psl2(5))
    assert (v.lhs_scaled, v.rhs_scaled) == (4, 8)
    assert not v.predicted_equality and v.consistent


def test_theorem_trivial_group_not_applicable():
    v = check_theorem(PermGroup(1, []))
    assert not v.applicable and v.consistent
    assert v.lhs_scaled is None


def test_theorem_cyclic_not_equality():
    v = check_theorem(cyclic(15))
    assert v.holds and not v.equality and not v.predicted_equality


def test_theorem_dihedral_10_equality():
    v = check_theorem(dihedral(5))
    assert v.equality and v.predicted_equality


def test_e2_remark():
    assert check_e2_remark(psl2(7))
    assert check_e2_remark(quaternion8())
    assert check_e2_remark(symmetric(4))
    assert check_e2_remark(cyclic(5))  # vacuous


def test_lemma_examples():
    r = lemma_report(quaternion8())
    assert r.passed and r.equality and (r.lhs_scaled, r.rhs_scaled) == (4, 4)
    r = lemma_report(elementary_abelian(2, 3))
    assert r.passed and r.equality
    assert [i for i, _, _ in r.chain] == [1, 2, 3]
    r = lemma_report(cyclic(12))
    assert r.passed and r.lhs_scaled == 2 and r.rhs_scaled == 2
    assert r.chain == [(1, 1, True)]


def test_lemma_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        check_lemma(symmetric(3))
    with pytest.raises(ValueError):
        check_lemma(PermGroup(2, []))


def test_lemma_chain_indices_decrease():
    r = lemma_report(direct_product(dihedral(4), cyclic(3)))
    indices = [idx for _, idx, _ in r.chain]
    assert indices[-1] == 1
    assert all(a > b for a, b in zip(indices, indices[1:]))


def test_multiplicativity_examples():
    assert sylow_ratios(symmetric(4)) == {2: 2, 3: 1}
    assert check_multiplicativity(symmetric(4))
    assert sylow_ratios(psl2(5)) == {2: 2, 3: 1, 5: 1}
    assert check_multiplicativity(psl2(5))
    assert check_multiplicativity(quaternion8())


def test_lemma_product():
    for G in (symmetric(4), power_auto(3, 3), psl2(7)):
        assert check_lemma_product(G)


def test_section_whole_group_trivial_normal():
    G = symmetric(4)
    assert section_ratio_E(G, PermGroup(4, [])) == ratio_E(G)


def test_section_s4_mod_v4():
    G = symmetric(4)
    V = subgroup(G, [parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])
    assert section_ratio_E(G, V) == 1


def test_section_d8_mod_center():
    D8 = sylow(symmetric(4), 2)
    Z = derived_subgroup(D8)  # the center of D8 coincides with its derived subgroup
    assert Z.order() == 2
    assert section_ratio_E(D8, Z) == 2


def test_section_report_shape():
    r = check_section_divisibility(power_auto(3, 3), sample_count=20, seed=5)
    assert len(r.samples) == 20 and r.violations == 0 and not r.skipped
    assert r.samples[0].h_label == "G" and r.samples[0].n_label == "trivial"
    d = r.to_dict()
    assert d["sample_count"] == 20 and d["seed"] == 5


def test_section_report_seeded():
    a = check_section_divisibility(symmetric(5), seed=3).to_dict()
    b = check_section_divisibility(symmetric(5), seed=3).to_dict()
    assert a == b


def test_star3_examples():
    assert star3_values(symmetric(3)) == (4, 4)
    assert star3_values(power_auto(3, 2)) == (12, 8)
    assert check_star3(cyclic(9))
    with pytest.raises(ValueError):
        star3_values(PermGroup(1, []))


def test_gl_bound_examples():
    assert check_gl_bound(power_auto(3, 2))
    assert check_gl_bound(symmetric(4))
    assert check_gl_bound(cyclic(10))


def test_regular_sign_formula():
    assert regular_sign(2, 2) == -1
    assert regular_sign(2, 6) == -1
    assert regular_sign(2, 4) == 1
    assert regular_sign(3, 6) == 1


@pytest.mark.parametrize("G", [lambda: symmetric(3), lambda: dihedral(6), lambda: alternating(4),
                               lambda: cyclic(12)])
def test_regular_sign_matches_explicit(G):
    G = G()
    n = G.order()
    for g in G.iter_images():
        assert regular_sign(order_of_images(g), n) == regular_sign_explicit(G, g)


def test_proposition_examples():
    r = proposition_report(cyclic(2))
    assert r.passed and r.regular_sign == -1 and r.regular_sign_explicit == -1
    r = proposition_report(symmetric(3))
    assert r.applies and r.solvable and r.regular_sign == -1 and r.parity_kernel_index == 2
    r = proposition_report(alternating(5))
    assert r.ratio_E == 2 and not r.applies and r.passed


def test_proposition_odd_order():
    r = proposition_report(cyclic(15))
    assert r.applies and r.sylow2_order is None and r.passed


def test_d_maximal_examples():
    assert is_d_maximal(elementary_abelian(2, 3))
    assert not is_d_maximal(symmetric(4))
    assert is_d_maximal(cyclic(7))


def test_random_small_groups_satisfy_all_checks():
    rng = random.Random(11)
    for _ in range(8):
        n = rng.randint(3, 6)
        gens = []
        for _ in range(rng.randint(1, 3)):
            images = list(range(n))
            rng.shuffle(images)
            gens.append(tuple(images))
        G = PermGroup(n, gens)
        if G.order() == 1:
            continue
        v = check_theorem(G)
        assert v.holds and v.consistent
        assert check_multiplicativity(G)
        assert check_star3(G) and check_gl_bound(G)
        assert check_proposition(G)
        assert check_section_divisibility(G, sample_count=5, seed=1).violations == 0


def test_internal_error_is_assertion():
    assert issubclass(InternalError, AssertionError)
