import pytest

from permexp.constructions import (
    FAMILIES,
    FamilySpec,
    alternating,
    build,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    power_auto,
    psl2,
    quaternion8,
    symmetric,
)
from permexp.invariants import exponent, is_solvable, min_generators, ratio_E, structural_flags
from permexp.perm import compose_images, invert_images

import oracles


@pytest.mark.parametrize("G, order", [
    (lambda: cyclic(1), 1),
    (lambda: cyclic(30), 30),
    (lambda: elementary_abelian(2, 6), 64),
    (lambda: dihedral(20), 40),
    (lambda: symmetric(6), 720),
    (lambda: alternating(6), 360),
    (lambda: alternating(3), 3),
    (lambda: quaternion8(), 8),
    (lambda: psl2(11), 660),
    (lambda: power_auto(5, 3), 250),
    (lambda: direct_product(symmetric(3), cyclic(4)), 24),
])
def test_orders(G, order):
    assert G().order() == order


def test_small_orders_match_closure():
    for G in (dihedral(5), quaternion8(), alternating(4), power_auto(3, 2)):
        assert len(oracles.closure(G.gen_images, G.degree)) == G.order()


def test_q8_structure():
    G = quaternion8()
    elems = oracles.closure(G.gen_images, 8)
    exp, top = oracles.exponent_and_max(elems)
    assert (exp, top) == (4, 4)
    involutions = [g for g in elems if oracles.order_by_powers(g) == 2]
    assert len(involutions) == 1  # only -1
    assert not structural_flags(G).abelian


@pytest.mark.parametrize("q, n", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 2)])
def test_power_auto_relations(q, n):
    G = power_auto(q, n)
    *blocks, t = G.gen_images
    assert compose_images(t, t) == tuple(range(G.degree))
    for a in blocks:
        assert compose_images(compose_images(t, a), t) == invert_images(a)
    assert G.order() == 2 * q**n
    assert ratio_E(G) == q ** (n - 1)


@pytest.mark.parametrize("q, n", [(3, 1), (3, 2), (5, 1), (5, 2)])
def test_power_auto_generators(q, n):
    assert min_generators(power_auto(q, n)) == n + 1


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_psl2(p):
    G = psl2(p)
    assert G.order() == p * (p * p - 1) // 2
    assert ratio_E(G) == 2
    assert not is_solvable(G)


def test_dihedral_exponent():
    assert exponent(dihedral(5)) == 10
    assert exponent(dihedral(6)) == 6


@pytest.mark.parametrize("call", [
    lambda: cyclic(0),
    lambda: dihedral(2),
    lambda: psl2(9),
    lambda: psl2(2),
    lambda: power_auto(4, 2),
    lambda: power_auto(3, 0),
    lambda: elementary_abelian(6, 2),
])
def test_invalid_parameters(call):
    with pytest.raises(ValueError):
        call()


def test_family_spec_parse_and_label():
    assert FamilySpec.parse("power_auto:3,2").label() == "C3^2:C2"
    assert FamilySpec.parse("dihedral:5").label() == "D10"
    spec = FamilySpec.parse("symmetric:3*cyclic:4*quaternion8")
    assert spec.label() == "S3xC4xQ8"
    G = build(spec)
    assert G.order() == 192 and G.name == "S3xC4xQ8"


def test_family_spec_unknown():
    with pytest.raises(ValueError):
        FamilySpec.parse("monster:1")


def test_build_arity_checked():
    with pytest.raises(ValueError):
        build(FamilySpec("cyclic", [2, 3]))
    with pytest.raises(ValueError):
        build(FamilySpec("direct_product", [], [FamilySpec("cyclic", [2])]))


def test_every_family_buildable():
    samples = {
        "cyclic": "cyclic:4", "elementary_abelian": "elementary_abelian:2,2", "dihedral": "dihedral:3",
        "symmetric": "symmetric:3", "alternating": "alternating:4", "quaternion8": "quaternion8",
        "psl2": "psl2:5", "power_auto": "power_auto:3,1", "direct_product": "cyclic:2*cyclic:3",
    }
    assert set(samples) == set(FAMILIES)
    for text in samples.values():
        assert build(FamilySpec.parse(text)).order() > 1
