import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liewide.closedset import ClosedSubset, decompose, enumerate_closed_subsets
from liewide.presets import preset_tk_subalgebra, sl4_counterexample
from liewide.regsub import (
    GENERATED_BY_TR,
    RegularSubalgebra,
    SubalgebraError,
    adjoint_action_matrix,
    chevalley_constants,
    derived_dimension,
    has_ad_nilpotent_radical,
    is_levi_decomposable,
    is_perfect,
    killing_form,
)
from liewide.rootsys import build_root_system

SMALL = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1+A1", "A2+A1"]


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"])
def test_structure_constants_golden(name, golden):
    phi = build_root_system(name)
    cb = chevalley_constants(phi)
    pinned = {(tuple(a), tuple(b)): n for a, b, n in golden("structure_constants.json")[name]}
    for a in phi.roots:
        for b in phi.roots:
            assert cb.N(a, b) == pinned.get((a, b), 0)


def add(x, y):
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("name", SMALL)
def test_jacobi_identity(name):
    phi = build_root_system(name)
    cb = chevalley_constants(phi)
    basis = [{b: Fraction(1)} for b in cb.basis()]
    for x, y, z in itertools.combinations(basis, 3):
        total = add(add(cb.bracket(x, cb.bracket(y, z)), cb.bracket(y, cb.bracket(z, x))), cb.bracket(z, cb.bracket(x, y)))
        assert total == {}


@pytest.mark.parametrize("name", SMALL + ["F4", "D4"])
def test_abs_n_is_string_length(name):
    # |N_{a,b}| = p + 1 with p the largest integer such that b - p a is a root
    phi = build_root_system(name)
    cb = chevalley_constants(phi)
    roots = set(phi.roots)
    for a in phi.roots:
        for b in phi.roots:
            s = tuple(x + y for x, y in zip(a, b))
            if s not in roots:
                assert cb.N(a, b) == 0
                continue
            p = 0
            while tuple(y - (p + 1) * x for x, y in zip(a, b)) in roots:
                p += 1
            assert abs(cb.N(a, b)) == p + 1
            assert cb.N(a, b) == -cb.N(b, a)


def test_g2_constants_take_values_one_two_three():
    cb = chevalley_constants(build_root_system("G2"))
    phi = cb.phi
    assert {abs(cb.N(a, b)) for a in phi.roots for b in phi.roots} == {0, 1, 2, 3}


def test_sl2_relations():
    phi = build_root_system("A1")
    cb = chevalley_constants(phi)
    assert cb.bracket_basis(("e", (1,)), ("e", (-1,))) == {("h", 0): 1}
    assert cb.bracket_basis(("h", 0), ("e", (1,))) == {("e", (1,)): 2}
    assert cb.bracket_basis(("h", 0), ("e", (-1,))) == {("e", (-1,)): -2}


def test_killing_form_values():
    assert killing_form(build_root_system("A1"), (1,), (1,)) == 8
    A3 = build_root_system("A3")
    assert killing_form(A3, (0, 0, 1), (0, 2, 1)) == 0


def trace_form(n, h1, h2):
    # h_i = E_ii - E_{i+1,i+1} in sl_{n+1}
    def diag(h):
        return [(h[i] if i < n else 0) - (h[i - 1] if i > 0 else 0) for i in range(n + 1)]
    return sum(x * y for x, y in zip(diag(h1), diag(h2)))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(-3, 3), min_size=n, max_size=n),
    st.lists(st.integers(-3, 3), min_size=n, max_size=n),
)))
def test_killing_form_type_a_is_scaled_trace(args):
    n, h1, h2 = args
    assert killing_form(build_root_system(f"A{n}"), h1, h2) == 2 * (n + 1) * trace_form(n, h1, h2)


def test_example_levi_data():
    s = sl4_counterexample()
    assert s.t_mode == GENERATED_BY_TR
    assert s.k_basis == [[0, 0, 1]]
    assert s.kperp_basis == []
    assert s.kind == "levi" and s.dim == 6
    assert is_levi_decomposable(s) and has_ad_nilpotent_radical(s)
    v = sl4_counterexample(enlarged_t=True)
    assert v.kperp_basis == [[0, 1, Fraction(1, 2)]]
    assert v.dim == 7
    assert is_levi_decomposable(v) and not has_ad_nilpotent_radical(v)


def test_kinds_and_predicates():
    phi = build_root_system("A2")
    sym = RegularSubalgebra(ClosedSubset(phi, [(1, 0), (-1, 0)]))
    assert sym.kind == "semisimple" and not is_levi_decomposable(sym)
    sol = RegularSubalgebra(ClosedSubset(phi, [(-1, 0)]))
    assert sol.kind == "solvable" and not is_levi_decomposable(sol)
    for s in (sym, sol):
        with pytest.raises(SubalgebraError):
            is_perfect(s)
        with pytest.raises(SubalgebraError):
            has_ad_nilpotent_radical(s)
    # T^u empty but k_perp nonzero is still Levi decomposable
    gl = RegularSubalgebra(ClosedSubset(phi, [(1, 0), (-1, 0)]), [(1, 0), (0, 1)])
    assert gl.kind == "levi" and is_levi_decomposable(gl) and not has_ad_nilpotent_radical(gl)


def test_t_must_contain_levi_coroots():
    phi = build_root_system("A2")
    with pytest.raises(SubalgebraError):
        RegularSubalgebra(ClosedSubset(phi, [(1, 0), (-1, 0)]), [(0, 1)])
    with pytest.raises(SubalgebraError):
        RegularSubalgebra(ClosedSubset(phi, [(1, 0)]), [(1, 0, 0)])
    with pytest.raises(SubalgebraError):
        RegularSubalgebra(ClosedSubset(phi, [(1, 0)]), "everything")


def test_perfect_examples():
    assert not is_perfect(sl4_counterexample(True))
    s = sl4_counterexample()
    assert derived_dimension(s) == 5 and not is_perfect(s)
    for n in (2, 3, 4, 5):
        assert is_perfect(preset_tk_subalgebra(n, 1))
    assert not is_perfect(preset_tk_subalgebra(3, 2))


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_perfect_agrees_with_derived_algebra(name):
    phi = build_root_system(name)
    seen = 0
    for T in enumerate_closed_subsets(phi):
        Tr, _ = decompose(T)
        if not Tr:
            continue
        for t in (GENERATED_BY_TR, [[int(i == j) for j in range(phi.rank)] for i in range(phi.rank)]):
            s = RegularSubalgebra(T, t)
            if is_levi_decomposable(s):
                seen += 1
                assert is_perfect(s) == (derived_dimension(s) == s.dim)
    assert seen


def test_adjoint_action():
    phi = build_root_system("A3")
    T = ClosedSubset(phi, phi.roots)
    s = RegularSubalgebra(T, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    basis = s.basis()
    h = {("h", 0): Fraction(1), ("h", 2): Fraction(2)}
    m = adjoint_action_matrix(s, h)
    cb = chevalley_constants(phi)
    for j, a in enumerate(T.sorted_roots()):
        col = 3 + j
        assert [row[col] for row in m] == [cb.root_value(a, (1, 0, 2)) if i == col else 0 for i in range(len(basis))]
    e3 = {("e", (0, 0, 1)): Fraction(1)}
    col = 3 + T.sorted_roots().index((0, 0, -1))
    assert [row[col] for row in adjoint_action_matrix(s, e3)][:3] == [0, 0, 1]


def test_coordinates_errors():
    s = sl4_counterexample()
    with pytest.raises(SubalgebraError):
        s.coordinates({("e", (1, 0, 0)): Fraction(1)})
    with pytest.raises(SubalgebraError):
        s.coordinates({("h", 0): Fraction(1)})
    assert s.coordinates({("h", 2): Fraction(3), ("e", (0, 0, 1)): Fraction(1)})[0] == 3
    with pytest.raises(SubalgebraError):
        adjoint_action_matrix(s, {("e", (1, 0, 0)): Fraction(1)})
