import json
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcterm.identities import (
    _poch,
    bf_rhs,
    ct_bruteforce,
    ct_weighted,
    degree_bound,
    extra_point_B,
    interpolate_at,
    lhs_A,
    lhs_B,
    lhs_C,
    qmorris_lhs,
    qmorris_rhs,
    rhs_A,
    rhs_B,
    rhs_C,
    roots_B,
    values_in_a,
    verify_identity,
    verify_polynomiality,
    verify_roots,
    verify_special_points,
    verify_vanishing,
)
from qcterm.laurent import LaurentPoly, build_F, ct
from qcterm.partitions import conjugate
from qcterm.qfield import QRat, q, qpow

import oracle

PARTS = [(), (1,), (2,), (1, 1)]


# values derived with the sympy oracle, then frozen


def test_frozen_qmorris():
    assert qmorris_lhs(1, 1, 1, 0) == 1 + q
    assert qmorris_lhs(2, 0, 0, 1) == 1 + q
    assert qmorris_rhs(2, 0, 0, 1) == 1 + q
    rec = verify_identity("qmorris", n=0 + 1, a=0, b=0, c=0)
    assert rec.lhs == rec.rhs == 1


def test_frozen_B():
    assert lhs_B(2, 1, 1, 0, 2, 1, ()) == -(1 + q + q**2)
    assert rhs_B(2, 1, 1, 0, 2, 1, ()) == -(1 + q + q**2)
    assert lhs_B(1, 0, 1, 1, 1, 0, ()) == 1 + q


def test_frozen_C():
    assert lhs_C(2, 0, 0, 0, 1, 0, 2) == 1 + q
    assert rhs_C(2, 0, 0, 0, 1, 0, 2) == 1 + q


def test_frozen_A():
    assert lhs_A(1, 1, 1, 1, (1,), ()) == -1
    assert rhs_A(1, 1, 1, 1, (1,), ()) == -1


@pytest.mark.parametrize("n,a,b,c", [(1, 2, 1, 0), (2, 1, 2, 2), (3, 1, 1, 1)])
def test_oracle_qmorris(n, a, b, c):
    assert oracle.same(qmorris_lhs(n, a, b, c), oracle.qmorris_lhs(n, a, b, c))


@pytest.mark.parametrize("n,n0,a,b,c", [(2, 1, 1, 0, 2), (3, 1, 1, 1, 2), (2, 0, 2, 1, 1)])
def test_oracle_B_l1(n, n0, a, b, c):
    assert oracle.same(lhs_B(n, n0, a, b, c, 1, ()), oracle.lhs_B_l1(n, n0, a, b, c))


@pytest.mark.parametrize("n,n0,a,b,c,m", [(2, 0, 0, 0, 1, 2), (2, 1, 1, 0, 2, 1), (3, 1, 1, 0, 2, 2)])
def test_oracle_C_l0(n, n0, a, b, c, m):
    assert oracle.same(lhs_C(n, n0, a, b, c, 0, m), oracle.lhs_C_l0(n, n0, a, b, c, m))


def test_oracle_A():
    for a, b, c in [(1, 1, 1), (2, 0, 2), (0, 2, 1)]:
        assert oracle.same(lhs_A(1, a, b, c, (1,), ()), oracle.lhs_A_single(a, b, c))


# engine


@given(st.integers(1, 3), st.integers(0, 2), st.integers(0, 2), st.integers(1, 2), st.data())
def test_engine_matches_full_expansion(n, a, b, c, data):
    n0 = data.draw(st.integers(0, n - 1))
    m = data.draw(st.integers(0, n))
    K = data.draw(st.integers(0, 2))
    vec = data.draw(st.tuples(*[st.integers(0, K)] * n).filter(lambda v: sum(v) == K))
    G = LaurentPoly.monomial((0,) + vec)
    assert ct_weighted(n, n0, a, b, c, m, G, K) == ct_bruteforce(n, n0, a, b, c, m, G, K)


def test_engine_rejects_inhomogeneous_weight():
    G = LaurentPoly.monomial((0, 1, 0)) + LaurentPoly.monomial((0, 2, 0))
    with pytest.raises(AssertionError):
        ct_weighted(2, 0, 1, 1, 1, 0, G, 1)


@given(st.integers(1, 3), st.integers(0, 2), st.integers(0, 2), st.integers(1, 3), st.data())
def test_baker_forrester_reduction(n, a, b, c, data):
    n0 = data.draw(st.integers(0, n - 1))
    direct = ct(build_F(n, n0, a, b, c, 0), range(n + 1)).constant_term()
    assert lhs_B(n, n0, a, b, c, 0, ()) == direct == bf_rhs(n, n0, a, b, c) == rhs_B(n, n0, a, b, c, 0, ())


@given(st.integers(2, 3), st.integers(0, 2), st.integers(0, 2), st.integers(1, 3), st.integers(0, 2), st.data())
def test_C_at_full_m_is_shifted_B(n, a, b, c, l, data):
    n0 = data.draw(st.integers(0, n - 1))
    assert rhs_C(n, n0, a, b, c, l, n) == rhs_B(n, n0, a, b + 1, c, l, ())


def test_aflt_length_branch():
    assert lhs_A(1, 1, 1, 1, (1, 1), ()) == 0 == rhs_A(1, 1, 1, 1, (1, 1), ())
    assert lhs_A(2, 0, 1, 1, (1, 1, 1), (1,)) == 0 == rhs_A(2, 0, 1, 1, (1, 1, 1), (1,))


@given(st.integers(1, 3), st.integers(0, 2), st.integers(0, 2), st.integers(1, 2))
def test_aflt_empty_is_qmorris(n, a, b, c):
    assert lhs_A(n, a, b, c) == qmorris_lhs(n, a, b, c)
    assert rhs_A(n, a, b, c) == qmorris_rhs(n, a, b, c)


@given(st.sampled_from(PARTS), st.sampled_from(PARTS), st.integers(0, 2), st.integers(0, 2), st.integers(1, 2))
def test_aflt_small(lam, mu, a, b, c):
    for n in (1, 2):
        assert lhs_A(n, a, b, c, lam, mu) == rhs_A(n, a, b, c, lam, mu)


@given(st.integers(2, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.sampled_from(PARTS), st.integers(1, 2), st.data())
def test_thm11_random(n, a, b, l, mu, off, data):
    n0 = data.draw(st.integers(0, n - 1))
    if len(mu) >= n - n0:
        with pytest.raises(ValueError):
            rhs_B(n, n0, a, b, b + 1, l, mu)
        return
    c = b + (mu[0] if mu else 0) + off
    assert lhs_B(n, n0, a, b, c, l, mu) == rhs_B(n, n0, a, b, c, l, mu)


# the exponent u_j in the last product of the B closed form


def _reread(n, n0, b, c, l, mu, u):
    """Correction factor turning (q^E_j)_{mu_j + l} into (q^E_j)_{u_j + l} in the denominator."""
    out = QRat(1)
    for j in range(1, n - n0):
        e = (n - j) * c + b + 1 - n0
        mj = mu[j - 1] if j <= len(mu) else 0
        out = out * _poch(e, mj + l) / _poch(e, u(j) + l)
    return out


def test_u_equals_mu():
    bad_zero = bad_conj = 0
    for n, b, a, l in product((2, 3), range(2), range(2), range(2)):
        for n0 in range(n):
            for mu in PARTS:
                if len(mu) >= n - n0:
                    continue
                c = b + (mu[0] if mu else 0) + 1
                lhs = lhs_B(n, n0, a, b, c, l, mu)
                assert lhs == rhs_B(n, n0, a, b, c, l, mu)
                conj = conjugate(mu)
                zero = rhs_B(n, n0, a, b, c, l, mu) * _reread(n, n0, b, c, l, mu, lambda j: 0)
                alt = rhs_B(n, n0, a, b, c, l, mu) * _reread(
                    n, n0, b, c, l, mu, lambda j: conj[j - 1] if j <= len(conj) else 0
                )
                if not mu:
                    assert zero == lhs and alt == lhs
                bad_zero += zero != lhs
                bad_conj += alt != lhs
    assert bad_zero > 0 and bad_conj > 0


# vanishing


@pytest.mark.parametrize("c", [1, 2, 3])
def test_example_vanishing(c):
    assert verify_vanishing("fixed_monomial", c=c)


def test_h_product_example():
    assert verify_vanishing("h_product", n=2, n0=0, c=1, v=(1, 1), lam=(2,))
    with pytest.raises(ValueError):
        verify_vanishing("h_product", n=2, n0=0, c=1, v=(2, 0), lam=(2,))


@given(st.integers(1, 2), st.integers(1, 2), st.integers(1, 2), st.data())
def test_polynomial_h(n, c, l, data):
    n0 = data.draw(st.integers(0, n))
    a = data.draw(st.integers(0, l - 1))
    deg = data.draw(st.integers(0, 2))
    vecs = [v for v in product(range(deg + 1), repeat=n + 1) if sum(v) == deg]
    chosen = data.draw(st.lists(st.sampled_from(vecs), min_size=1, max_size=3, unique=True))
    H = LaurentPoly({(v): QRat(i + 1) for i, v in enumerate(chosen)}, n + 1)
    assert verify_vanishing("polynomial_h", n=n, n0=n0, c=c, l=l, a=a, H=H)


def test_polynomial_h_rejects_laurent_H():
    with pytest.raises(ValueError):
        verify_vanishing("polynomial_h", n=1, n0=0, c=1, l=1, a=0, H=LaurentPoly.monomial((1, -1)))


def test_polynomial_h_forces_B_roots():
    for a in range(2):
        assert lhs_B(2, 0, a, 1, 2, 2, (1,)).is_zero()
        assert lhs_C(2, 1, a, 0, 2, 2, 1).is_zero()


def test_composition_instances():
    for c in (1, 2):
        assert verify_vanishing("composition", n=4, n0=2, c=c, h=1, t=(0, 0, 0, 0))


# polynomiality, roots, special points


def test_polynomiality_examples():
    assert degree_bound("B", 1, 1, 0, ()) == 1
    assert verify_polynomiality("B", dict(n=1, n0=0, b=1, c=2, l=0, mu=()), extra_points=2)
    assert degree_bound("C", 2, 0, 1, 1) == 2
    assert verify_polynomiality("C", dict(n=2, n0=1, b=0, c=2, l=1, m=1))


def test_roots_examples():
    p = dict(n=3, n0=1, b=1, c=3, l=2, mu=(1,))
    assert roots_B(3, 1, 1, 3, 2, (1,)) == {"B1": {-6, -3, -1}, "B2": {0, 1}, "B3": {-7}}
    assert verify_roots("B", p)
    assert verify_roots("C", dict(n=2, n0=1, b=0, c=2, l=1, m=1))


def test_interpolation_recovers_values():
    p = dict(n=2, n0=0, b=1, c=2, l=1, mu=())
    deg = degree_bound("B", 2, 1, 1, ())
    vals = values_in_a("B", p, deg + 3)
    for a in range(deg + 3):
        assert interpolate_at(vals[: deg + 1], qpow(a)) == vals[a]


def test_special_point_examples():
    assert all(verify_special_points("B", dict(n=2, n0=0, b=0, c=2, l=0, mu=())).values())
    assert all(verify_special_points("C", dict(n=2, n0=1, b=0, c=3, l=0, m=1)).values())


@pytest.mark.parametrize("n,n0,b,c,l,mu", [(2, 0, 0, 2, 1, ()), (3, 0, 1, 3, 1, (1,)), (3, 1, 0, 2, 2, (1,))])
def test_special_point_B_normalization(n, n0, b, c, l, mu):
    # B carries h_l of the alphabet, which is (q^c)_l/(q)_l times P_(l)
    res = verify_special_points("B", dict(n=n, n0=n0, b=b, c=c, l=l, mu=mu))
    assert res == {"interpolated_vs_closed": True, "interpolated_vs_ct_A": True}
    _, fixed = extra_point_B(n, n0, b, c, l, mu)
    _, printed = extra_point_B(n, n0, b, c, l, mu, printed=True)
    assert fixed / printed == _poch(c, l) / _poch(1, l) != 1


def test_special_point_l0_forms_agree():
    assert extra_point_B(3, 1, 0, 2, 0, (1,)) == extra_point_B(3, 1, 0, 2, 0, (1,), printed=True)


def test_verdict_json():
    rec = verify_identity("thm11", n=2, n0=0, a=1, b=0, c=2, l=1, mu=(1,))
    d = json.loads(json.dumps(rec.to_json()))
    assert d["equal"] is True
    assert QRat.from_string(d["lhs"]) == rec.lhs
    assert d["params"]["mu"] == [1]
