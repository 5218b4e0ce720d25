import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from liewide.hwmod import build_simple_module
from liewide.rootsys import (
    RootSystemError,
    Weight,
    apply_word,
    apply_word_coroot,
    apply_word_to,
    build_root_system,
    dominant_weights,
    fundamental_weight,
    longest_element,
    pairing,
    parse_system,
    reflect,
    root_label,
    weyl_dimension,
    weyl_group_elements,
)

# root counts and Weyl group orders from the classification tables
ROOT_COUNTS = {
    "A1": 2, "A2": 6, "A3": 12, "A4": 20, "B2": 8, "B3": 18, "B4": 32, "C3": 18, "C4": 32,
    "D4": 24, "D5": 40, "G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240,
}
WEYL_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "C3": 48, "D4": 192, "G2": 12, "F4": 1152}


@pytest.mark.parametrize("name,count", sorted(ROOT_COUNTS.items()))
def test_root_counts(name, count):
    phi = build_root_system(name)
    assert len(phi.roots) == count
    assert len(phi.positive_roots) == count // 2
    assert set(phi.negative_roots) == {tuple(-x for x in a) for a in phi.positive_roots}


def test_reducible_counts():
    phi = build_root_system("B2+A1")
    assert phi.rank == 3 and len(phi.roots) == 10
    assert phi.components == (("B", 2), ("A", 1))
    assert all(phi.component_of(a) == (0 if a[2] == 0 else 1) for a in phi.roots)


@pytest.mark.parametrize("name", [k for k in ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4")])
def test_cartan_golden(name, golden):
    assert [[int(x) for x in row] for row in build_root_system(name).cartan] == golden("cartan.json")[name]


@pytest.mark.parametrize("name,order", sorted(WEYL_ORDERS.items()))
def test_weyl_group_order(name, order):
    assert len(weyl_group_elements(build_root_system(name))) == order


@pytest.mark.parametrize("name", sorted(ROOT_COUNTS) + ["B2+A1", "A2+A1"])
def test_longest_element(name):
    phi = build_root_system(name)
    w0 = longest_element(phi)
    assert len(w0) == len(phi.positive_roots)
    assert apply_word(phi, w0, phi.positive_roots) == frozenset(phi.negative_roots)


def test_root_order():
    phi = build_root_system("A2")
    assert phi.roots == ((-1, -1), (0, -1), (-1, 0), (1, 0), (0, 1), (1, 1))
    assert phi.simple_roots == ((1, 0), (0, 1))


def test_highest_roots():
    assert build_root_system("B2").highest_roots == ((1, 2),)
    assert build_root_system("G2").highest_roots == ((3, 2),)
    assert build_root_system("A3").highest_roots == ((1, 1, 1),)


def test_root_lengths():
    g2 = build_root_system("G2")
    assert g2.norm((1, 0)) == 2 and g2.norm((0, 1)) == 6
    b2 = build_root_system("B2")
    assert b2.norm((1, 0)) == 4 and b2.norm((0, 1)) == 2


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "F4"])
def test_reflections_permute_roots(name):
    phi = build_root_system(name)
    for i in range(phi.rank):
        image = {reflect(phi, i, a) for a in phi.roots}
        assert image == set(phi.roots)
        assert reflect(phi, i, phi.simple_roots[i]) == tuple(-x for x in phi.simple_roots[i])
        assert all(reflect(phi, i, reflect(phi, i, a)) == a for a in phi.roots)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "B3"])
def test_pairings_are_integral(name):
    phi = build_root_system(name)
    for a in phi.roots:
        for b in phi.roots:
            p = pairing(phi, a, b)
            assert p == 2 * phi.inner(a, b) / phi.norm(b)
            assert -3 <= p <= 3


def test_coroot_of_simple_is_basis_vector():
    phi = build_root_system("G2")
    assert phi.coroot((1, 0)) == (1, 0)
    assert phi.coroot((0, 1)) == (0, 1)
    # long root 3a1+2a2 has coroot h1 + 2h2
    assert phi.coroot((3, 2)) == (1, 2)


@pytest.mark.parametrize("name", ["A3", "B2", "G2"])
def test_coroot_action_matches_root_action(name):
    phi = build_root_system(name)
    for w in weyl_group_elements(phi)[:20]:
        for a in phi.positive_roots:
            assert apply_word_coroot(phi, w, phi.coroot(a)) == phi.coroot(apply_word_to(phi, w, a))


def test_weyl_dimension_classical_values():
    for n in range(1, 5):
        phi = build_root_system(f"A{n}")
        for k in range(n):
            assert weyl_dimension(phi, fundamental_weight(phi, k)) == comb(n + 1, k + 1)
    b3 = build_root_system("B3")
    assert weyl_dimension(b3, Weight((1, 0, 0))) == 7
    assert weyl_dimension(b3, Weight((0, 0, 1))) == 8
    assert weyl_dimension(build_root_system("C3"), Weight((1, 0, 0))) == 6
    d4 = build_root_system("D4")
    assert [weyl_dimension(d4, fundamental_weight(d4, i)) for i in range(4)] == [8, 28, 8, 8]
    g2 = build_root_system("G2")
    assert weyl_dimension(g2, Weight((1, 0))) == 7 and weyl_dimension(g2, Weight((0, 1))) == 14
    assert weyl_dimension(build_root_system("F4"), Weight((0, 0, 0, 1))) == 26
    assert weyl_dimension(build_root_system("E6"), Weight((1, 0, 0, 0, 0, 0))) == 27
    assert weyl_dimension(build_root_system("E7"), Weight((0,) * 6 + (1,))) == 56
    assert weyl_dimension(build_root_system("E8"), Weight((0,) * 7 + (1,))) == 248


@pytest.mark.parametrize("name", ["A3", "B3", "C4", "D4", "G2", "F4", "E6"])
def test_adjoint_dimension(name):
    phi = build_root_system(name)
    theta = phi.root_to_weight(phi.highest_roots[0])
    assert weyl_dimension(phi, theta) == len(phi.roots) + phi.rank


def test_sl4_fundamental_dimension():
    assert weyl_dimension(build_root_system("A3"), Weight((0, 0, 1))) == 4


def test_g2_grid():
    g2 = build_root_system("G2")
    assert [weyl_dimension(g2, w) for w in dominant_weights(g2, 100)] == [1, 7, 14, 27, 64, 77, 77]


@pytest.mark.parametrize("name,max_dim", [("A2", 60), ("B2", 100), ("G2", 200)])
def test_dominant_weights_complete(name, max_dim):
    phi = build_root_system(name)
    got = dominant_weights(phi, max_dim)
    box = [Weight(m) for m in itertools.product(range(12), repeat=phi.rank)]
    expected = sorted((w for w in box if weyl_dimension(phi, w) <= max_dim), key=lambda w: (weyl_dimension(phi, w), w.marks))
    assert got == expected


@given(st.sampled_from(["A1", "A2", "B2", "G2", "A3", "B3", "C3"]), st.data())
def test_weyl_dimension_matches_constructed_module(name, data):
    phi = build_root_system(name)
    weights = dominant_weights(phi, 40)
    lam = data.draw(st.sampled_from(weights))
    assert build_simple_module(phi, None, lam).dim == weyl_dimension(phi, lam)


def test_nondominant_rejected():
    with pytest.raises(RootSystemError):
        weyl_dimension(build_root_system("A2"), Weight((-1, 0)))


def test_parse_system():
    assert parse_system("B2+A1") == [("B", 2), ("A", 1)]
    assert parse_system("a_3") == [("A", 3)]
    for bad in ["X3", "A", "C2", "D3", "G3", "E9"]:
        with pytest.raises(RootSystemError):
            build_root_system(bad)


def test_root_labels():
    a3 = build_root_system("A3")
    assert root_label(a3, (0, 1, 1)) == "a2,3"
    assert root_label(a3, (-1, 0, 0)) == "-a1"
    assert root_label(build_root_system("B2"), (1, 2)) == "[1,2]"


def test_bad_word_rejected():
    with pytest.raises(RootSystemError):
        apply_word(build_root_system("A2"), (0, 5), [(1, 0)])
