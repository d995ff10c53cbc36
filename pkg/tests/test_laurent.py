import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from qcterm.laurent import (
    Factor,
    LaurentPoly,
    QPoch,
    RationalCT,
    build_D,
    build_F,
    ct,
    ct_partial_fraction,
    ct_series_oracle,
    expand_qpoch_product,
    splitting_S_terms,
    verify_qfact_lemma,
    verify_splitting_S,
    verify_splitting_T,
    verify_symmetrization,
    weyl_sum_holds,
)
from qcterm.qfield import QRat, q

import oracle


def mono(vec, c=1):
    return LaurentPoly.monomial(vec, c)


def test_ct_examples():
    f = mono((1, -1)) + LaurentPoly.constant(3, 2)
    assert ct(f, [0, 1]).constant_term() == 3
    g = (LaurentPoly.constant(1, 2) - mono((1, -1))) * (LaurentPoly.constant(1, 2) - mono((-1, 1), q))
    assert ct(g, [0, 1]).constant_term() == 1 + q
    h = mono((2, 1)) + mono((1, 2), q)
    assert ct(h, [0, 1]).is_zero()


def test_build_F_single_factor():
    x0, x1 = sp.symbols("x0 x1")
    f = build_F(1, 0, 1, 1, 1, 0)
    assert f == (LaurentPoly.constant(1, 2) - mono((1, -1))) * (LaurentPoly.constant(1, 2) - mono((-1, 1), q))


def test_build_F_degenerate_pair():
    assert build_F(2, 1, 0, 0, 1, 0) == LaurentPoly.constant(1, 3)


def test_build_F_n0_full_equals_shifted_c():
    for c in (1, 2, 3):
        assert build_F(2, 2, 1, 1, c, 0) == build_F(2, 0, 1, 1, c - 1, 0)


def test_D_examples():
    D = build_D(2, 0, 1)
    assert D == build_F(2, 0, 0, 0, 1, 0)
    assert ct(D, [1, 2]).constant_term() == 1 + q
    x = oracle.xs(2)
    assert oracle.same(ct(D, [1, 2]).constant_term(), oracle.ct(oracle.F(2, 0, 0, 0, 1, 0), x))


def test_partial_fraction_direction():
    one = LaurentPoly.constant(1, 3)
    # 1/(1 - q x1/x2) with x2 outside x1: CT_x1 = 1
    out = ct_partial_fraction(RationalCT(one, [Factor(1, 1, 2)]), 1)
    assert len(out) == 1 and out[0].numerator == one and not out[0].factors
    # 1/(1 - q x1/x0) with x0 inside x1: CT_x1 = 0
    assert ct_partial_fraction(RationalCT(one, [Factor(1, 1, 0)]), 1) == []


def test_partial_fraction_degree_guard():
    num = LaurentPoly.monomial((0, 2, 0))
    with pytest.raises(ValueError):
        ct_partial_fraction(RationalCT(num, [Factor(0, 1, 2)]), 1)


@given(st.lists(st.tuples(st.integers(-2, 2), st.sampled_from([(1, 2), (1, 0), (2, 1), (0, 1)])), min_size=1, max_size=3, unique_by=lambda f: (f[1], f[0])), st.integers(-1, 1))
def test_partial_fraction_matches_series(factors, k0):
    facs = [Factor(e, u, v) for e, (u, v) in factors]
    active = [f for f in facs if 1 in (f.u, f.v)]
    if not active:
        return
    num = LaurentPoly.monomial((0, max(0, min(k0, len(active) - 1)), 0))
    try:
        lhs, rhs, _ = ct_series_oracle(RationalCT(num, facs), 1, depth=6)
    except ValueError:
        return
    assert lhs == rhs


@pytest.mark.parametrize("n,n0,c", [(2, 0, 1), (2, 1, 2), (3, 1, 2)])
def test_splitting_S(n, n0, c):
    assert verify_splitting_S(n, n0, c)


@pytest.mark.parametrize("n,n0,c", [(2, 0, 1), (3, 2, 2), (3, 0, 3)])
def test_splitting_T(n, n0, c):
    assert verify_splitting_T(n, n0, c)


def test_splitting_c1_has_no_first_sum():
    assert all(kind == "B" for kind, *_ in splitting_S_terms(3, 2, 1))


def test_splitting_fails_without_poles():
    # n0 = n and c = 1: S is the constant 1 and both sums are empty
    assert build_D(2, 2, 1) == LaurentPoly.constant(1, 3)
    assert splitting_S_terms(2, 2, 1) == []
    assert not verify_splitting_S(2, 2, 1)
    assert not verify_splitting_T(2, 2, 1)


@pytest.mark.parametrize("i,j,t,case", [(1, 1, 0, "b1"), (2, 2, 1, "c"), (1, 2, -1, "b2")])
def test_qfact_examples(i, j, t, case):
    assert verify_qfact_lemma(i, j, t, case)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(-1, 3), st.sampled_from(["b1", "b2", "c"]))
def test_qfact_lemma(i, j, t, case):
    ok = {"b1": 0 <= t <= j, "b2": -1 <= t <= j - 1, "c": 0 <= t <= j - 1}[case]
    if ok:
        assert verify_qfact_lemma(i, j, t, case)
    else:
        with pytest.raises(ValueError):
            verify_qfact_lemma(i, j, t, case)


def test_symmetrization_examples():
    assert verify_symmetrization(2, 1, LaurentPoly.constant(1, 3))
    e1 = mono((0, 1, 0)) + mono((0, 0, 1))
    e1inv = mono((0, -1, 0)) + mono((0, 0, -1))
    assert verify_symmetrization(2, 2, e1 * e1inv)
    with pytest.raises(ValueError):
        verify_symmetrization(2, 1, mono((0, 1, 0)))


@pytest.mark.parametrize("n,c", [(2, 1), (2, 3), (3, 1), (3, 2)])
def test_weyl_sum(n, c):
    assert weyl_sum_holds(n, c)


@given(st.lists(st.tuples(st.integers(-1, 1), st.integers(-1, 1), st.integers(-1, 2), st.integers(0, 3)), max_size=4))
def test_expand_product_is_product(raw):
    facs = [QPoch((0, a, b), e, k) for a, b, e, k in raw]
    whole = expand_qpoch_product(facs, 3)
    one = LaurentPoly.constant(1, 3)
    for f in facs:
        one = one * f.to_poly()
    assert whole == one


@given(st.lists(st.tuples(st.integers(-1, 1), st.integers(-1, 1), st.integers(0, 2), st.integers(0, 3)), max_size=4))
def test_keep_sets_dropped_variables_to_one(raw):
    facs = [QPoch((0, a, b), e, k) for a, b, e, k in raw]
    full = expand_qpoch_product(facs, 3)
    kept = expand_qpoch_product(facs, 3, keep=[1])
    collapsed = {}
    for vec, c in full:
        key = (0, vec[1], 0)
        collapsed[key] = collapsed.get(key, QRat(0)) + c
    assert kept == LaurentPoly(collapsed, 3)


@given(st.lists(st.tuples(st.integers(-1, 1), st.integers(-1, 1), st.integers(0, 2), st.integers(0, 3)), max_size=4))
def test_box_pruning_keeps_constant_term(raw):
    facs = [QPoch((0, a, b), e, k) for a, b, e, k in raw]
    full = expand_qpoch_product(facs, 3)
    boxed = expand_qpoch_product(facs, 3, box=[(0, 0)] * 3)
    assert ct(full, [1, 2]) == ct(boxed, [1, 2])
