import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pennant_webs.errors import InvalidInputError, NotInSpanError
from pennant_webs.exactpoly import monomial_exponents, sym_minor, variable
from pennant_webs.jellyfish import invariant_polynomial
from pennant_webs.setpartitions import (
    Permutation,
    SetPartition,
    is_noncrossing,
    reflect,
    rotate,
    singleton_free,
)
from pennant_webs.webbasis import (
    PennantShape,
    StandardTableau,
    build_basis,
    dihedral_matrix,
    enumerate_syt,
    expand_by_elimination,
    expand_in_basis,
    hook_length_count,
    identity_matrix,
    in_span,
    is_signed_permutation_matrix,
    matmul,
    predicted_action,
    rank,
    sn_act,
    syt_invariant,
    trace,
    verify_five_term,
)
from pennant_webs.verify import five_term_decompositions

P = SetPartition.parse


def p(i, j):
    return sym_minor([1, 2], [i, j])


def inv(text):
    return invariant_polynomial(P(text))


# ---------------------------------------------------------------- shapes


def test_pennant_shape():
    s = PennantShape.from_n_d(10, 3)
    assert (s.n, s.k, s.partition, s.conjugate) == (10, 6, (3, 3, 1, 1, 1, 1), (6, 2, 2))
    with pytest.raises(InvalidInputError):
        PennantShape(1, 0)


# ---------------------------------------------------------------- five-term


def test_five_term_base_case_is_plucker():
    assert verify_five_term({1}, {2}, {3}, {4}).is_zero()
    # with singleton right side, the left side is the three-term Plücker relation
    assert p(1, 3) * p(2, 4) == p(1, 2) * p(3, 4) + p(1, 4) * p(2, 3)


def test_five_term_examples():
    assert verify_five_term({1, 2}, {3, 4}, {5}, {6}).is_zero()
    assert verify_five_term({1, 2}, {3, 4}, {5}, {6}, [{7, 8}]).is_zero()


def test_five_term_detects_a_wrong_sign():
    # flipping one summand must leave a nonzero residual, so the check has teeth
    A, B, i, j = (1, 2), (3, 4), 5, 6
    lhs = inv("1,2,3,4|5,6") + inv("1,2,5|3,4,6") + inv("1,2,6|3,4,5")
    rhs = inv("1,2,5,6|3,4") + inv("1,2|3,4,5,6")
    assert (lhs - rhs).is_zero()
    assert not (lhs - rhs.scale(-1)).is_zero()
    assert verify_five_term(A, B, (i,), (j,)) == lhs - rhs


def test_five_term_rejects_non_partitions():
    with pytest.raises(InvalidInputError):
        verify_five_term({1}, {2}, {3}, {3})


@pytest.mark.parametrize("n", [4, 5, 6])
def test_five_term_holds_for_all_small_decompositions(n):
    for A, B, I, J, fixed in five_term_decompositions(n):
        residual = verify_five_term(A, B, I, J, fixed)
        assert residual.is_zero()


# ---------------------------------------------------------------- S_n action


def test_action_examples():
    s1, c = Permutation.simple(1, 4), Permutation.long_cycle(4)
    assert sn_act(s1, inv("1,2|3,4")) == inv("1,2|3,4").scale(-1)
    assert sn_act(c, inv("1,2|3,4")) == inv("1,4|2,3").scale((-1) ** 3)
    assert predicted_action(s1, P("1,3|2,4")) == (-1, P("1,4|2,3"))


def test_w0_on_all_of_pi_6_2():
    w0 = Permutation.longest(6)
    for pi in singleton_free(6, 2):
        assert sn_act(w0, invariant_polynomial(pi)) == invariant_polynomial(reflect(pi)).scale((-1) ** comb(6, 2))


@given(st.integers(4, 7).flatmap(lambda n: st.tuples(
    st.permutations(range(1, n + 1)), st.sampled_from(singleton_free(n, 2) + singleton_free(n, n // 2)))))
@settings(max_examples=60, deadline=None)
def test_any_permutation_acts_by_sign(args):
    w, pi = Permutation(args[0]), args[1]
    s, image = predicted_action(w, pi)
    assert sn_act(w, invariant_polynomial(pi)) == invariant_polynomial(image).scale(s)


# ---------------------------------------------------------------- basis


def test_basis_small_cases():
    # descending leading monomial: x11 x12 x24 x23 beats x11 x13 x24 x22
    assert [e.pi for e in build_basis(4, 2)] == [P("1,4|2,3"), P("1,2|3,4")]
    assert len(build_basis(6, 2)) == 9
    assert len(build_basis(6, 3)) == 5
    with pytest.raises(InvalidInputError):
        build_basis(5, 3)


def test_leading_monomial_marks_block_ends():
    lm = inv("1,2|3,4").leading_monomial()
    assert set(monomial_exponents(lm)) == {(1, 1), (1, 3), (2, 2), (2, 4)}


@pytest.mark.parametrize("n,d", [(n, d) for n in range(4, 9) for d in range(2, n // 2 + 1)])
def test_basis_theorem(n, d):
    basis = build_basis(n, d)
    shape = (d, d) + (1,) * (n - 2 * d)
    assert len({e.leading for e in basis}) == len(basis) == hook_length_count(shape)
    assert all(abs(e.leading_coeff) == 1 for e in basis)
    assert all(is_noncrossing(e.pi) for e in basis)
    for e in basis:
        exps = monomial_exponents(e.leading)
        for b in e.pi.blocks:
            assert (1, b[0]) in exps and (2, b[-1]) in exps


def test_crossing_pair_expansion():
    exp = expand_in_basis(inv("1,3|2,4"), 4, 2, target="1,3|2,4")
    assert exp.coeffs == {P("1,2|3,4"): -1, P("1,4|2,3"): -1}
    assert exp.reconstruct() == inv("1,3|2,4")
    assert json.loads(exp.to_json()) == {
        "target": "1,3|2,4",
        "coeffs": [{"pi": "1,4|2,3", "c": "-1/1"}, {"pi": "1,2|3,4", "c": "-1/1"}],
    }


def test_basis_element_expands_to_itself():
    for e in build_basis(7, 3):
        exp = expand_in_basis(e.poly, 7, 3)
        assert exp.coeffs == {e.pi: 1}


@pytest.mark.parametrize("n,d", [(6, 2), (6, 3), (7, 2), (7, 3)])
def test_expansion_routes_agree(n, d):
    for pi in singleton_free(n, d):
        poly = invariant_polynomial(pi)
        fast = expand_in_basis(poly, n, d)
        slow = expand_by_elimination(poly, n, d)
        assert {k: v for k, v in slow.items() if v} == fast.coeffs
        assert fast.reconstruct() == poly


def test_expansion_is_linear():
    a, b = inv("1,3|2,4,5,6"), inv("1,4,6|2,3,5")
    ea, eb = expand_in_basis(a, 6, 2), expand_in_basis(b, 6, 2)
    combo = expand_in_basis(a.scale(3) - b.scale(Fraction(1, 2)), 6, 2)
    for pi in combo.basis_order:
        assert combo.coefficient(pi) == 3 * ea.coefficient(pi) - Fraction(1, 2) * eb.coefficient(pi)


def test_not_in_span():
    stray = variable(1, 1) * variable(1, 2) * variable(2, 3) * variable(2, 4)
    with pytest.raises(NotInSpanError):
        expand_in_basis(stray, 4, 2)
    with pytest.raises(NotInSpanError):
        expand_in_basis(stray + inv("1,2|3,4"), 4, 2)


def test_rank_helpers():
    polys = [inv("1,2|3,4"), inv("1,4|2,3")]
    assert rank(polys + [inv("1,3|2,4")]) == 2
    assert in_span(inv("1,3|2,4"), polys)
    assert not in_span(variable(1, 1), polys)


# ---------------------------------------------------------------- standard tableaux


def test_syt_counts():
    assert len(enumerate_syt((2, 2))) == 2
    assert len(enumerate_syt((2, 2, 1, 1))) == 9 == hook_length_count((2, 2, 1, 1))
    u = StandardTableau(((1, 4, 7), (2, 6, 10), (3,), (5,), (8,), (9,)))
    assert u in enumerate_syt((3, 3, 1, 1, 1, 1))


@pytest.mark.parametrize("shape", [(1,), (3,), (2, 1), (3, 2), (2, 2, 2), (4, 2, 1), (3, 3, 1, 1, 1), (3, 1, 1, 1)])
def test_hook_length_matches_enumeration(shape):
    tabs = enumerate_syt(shape)
    assert len(tabs) == hook_length_count(shape) == len(set(tabs))
    assert all(t.is_standard() for t in tabs)


def test_enumerate_syt_rejects_non_partition():
    with pytest.raises(InvalidInputError):
        enumerate_syt((1, 2))


def test_syt_invariant_examples():
    assert syt_invariant(StandardTableau(((1, 3), (2, 4)))) == p(1, 2) * p(3, 4)
    assert syt_invariant(StandardTableau(((1, 2), (3, 4)))) == p(1, 3) * p(2, 4)
    t = StandardTableau(((1, 4), (2, 6), (3,), (5,)))
    assert t.columns() == [(1, 2, 3, 5), (4, 6)]
    assert syt_invariant(t) == sym_minor([1, 2, 3, 4], [1, 2, 3, 5]) * p(4, 6)
    with pytest.raises(InvalidInputError):
        syt_invariant(StandardTableau(((2, 1),)))


def test_standard_tableau_text():
    t = StandardTableau.parse("1,4,7;2,6,10;3;5;8;9")
    assert t.shape == (3, 3, 1, 1, 1, 1) and t.to_text() == "1,4,7;2,6,10;3;5;8;9"


@pytest.mark.parametrize("n,d", [(4, 2), (6, 2), (6, 3), (7, 2), (7, 3)])
def test_span_equality(n, d):
    syt_polys = [syt_invariant(t) for t in enumerate_syt((d, d) + (1,) * (n - 2 * d))]
    assert rank(syt_polys) == len(syt_polys)
    for poly in syt_polys:
        assert expand_in_basis(poly, n, d).reconstruct() == poly
    for e in build_basis(n, d):
        assert in_span(e.poly, syt_polys)


# ---------------------------------------------------------------- dihedral matrices


def test_matrix_for_c_at_4_2():
    mat = dihedral_matrix(Permutation.long_cycle(4), 4, 2)
    assert is_signed_permutation_matrix(mat)
    assert mat == [[0, -1], [-1, 0]]
    assert trace(mat) == 0


def test_identity_and_full_rotation():
    assert dihedral_matrix(Permutation.identity(6), 6, 2) == identity_matrix(9)
    assert dihedral_matrix(Permutation.long_cycle(6) ** 6, 6, 2) == identity_matrix(9)


@pytest.mark.parametrize("n,d", [(5, 2), (6, 2), (6, 3), (7, 3)])
def test_global_signs(n, d):
    basis = build_basis(n, d)
    index = {e.pi: i for i, e in enumerate(basis)}
    for w, relabel, s in ((Permutation.long_cycle(n), rotate, (-1) ** (n - 1)),
                          (Permutation.longest(n), reflect, (-1) ** comb(n, 2))):
        mat = dihedral_matrix(w, n, d)
        for j, e in enumerate(basis):
            col = [mat[i][j] for i in range(len(basis))]
            expected = [0] * len(basis)
            expected[index[relabel(e.pi)]] = s
            assert col == expected


def test_matrix_product_is_composition():
    n, d = 6, 2
    c, w0 = Permutation.long_cycle(n), Permutation.longest(n)
    assert matmul(dihedral_matrix(c, n, d), dihedral_matrix(w0, n, d)) == dihedral_matrix(c * w0, n, d)
