from itertools import product

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from qcterm.combinatorics import (
    N,
    T_sr,
    classify_key,
    staircase_holds,
    eps1,
    eps2,
    eps_chain,
    in_S_sr,
    specialcase_cases,
    subs_alphabet,
    subs_witnesses,
    verify_monotone_lemmas,
    verify_specialcase,
    verify_subs_cardinality,
)
from qcterm.laurent import chi
from qcterm.plethysm import power_sum

W = (3, 1, 4, 7, 5, 2, 6)

perms = st.integers(1, 7).flatmap(lambda s: st.permutations(range(1, s + 1)).map(tuple))


def test_worked_example():
    assert N(W, 3) == 6
    assert eps1(W, 3) == (3, 2, 7, 6, 5, 1, 4)
    assert eps2((3, 2, 7, 6, 5, 1, 4), 3) == (7, 3, 2, 6, 5, 1, 4)
    assert [N(w, 3) for w in eps_chain(W, 3)[1:]] == [5, 4, 4, 4, 4]


def test_eps2_needs_sorted_blocks():
    with pytest.raises(ValueError):
        eps2(W, 3)


def test_monotone_lemmas():
    assert verify_monotone_lemmas(5)


@given(perms, st.data())
def test_eps1_properties(w, data):
    r = data.draw(st.integers(0, len(w) - 1))
    w1 = eps1(w, r)
    assert in_S_sr(w1, r)
    assert eps1(w1, r) == w1
    assert N(w1, r) <= N(w, r)
    chain = eps_chain(w, r)
    assert chain[-1] == tuple(range(len(w), 0, -1))
    assert N(chain[-1], r) == len(w) - r


def test_key_examples():
    assert classify_key(1, 0, 2, 0, 1, (1,)).case == 4
    wit = classify_key(2, 0, 2, 2, 3, (1, 1))
    assert 2 in wit.cases
    assert wit.case == 2


def test_staircase_example():
    s, b, c = 2, 1, 2
    k = (3, 2)
    assert all(k[i - 1] == (s - i) * (c - 1) + b + 1 for i in (1, 2))
    assert staircase_holds(s, b, c, k)
    wit = classify_key(s, b, c, 2, 1, k)
    assert not wit.cases & {1, 2}


@given(st.integers(1, 3), st.integers(0, 2), st.integers(1, 3), st.integers(0, 3), st.data())
def test_key_never_errors(s, b, c, t, data):
    r = data.draw(st.integers(0, s))
    top = (s - 1) * (c - 1) + b + t
    assume(top >= 1)
    k = data.draw(st.tuples(*[st.integers(1, top)] * s))
    wit = classify_key(s, b, c, r, t, k)
    assert wit.case in wit.cases
    if wit.w is not None:
        assert [k[i - 1] for i in wit.w] == sorted(k)


@pytest.mark.parametrize("s,b,c", [(1, 0, 1), (2, 0, 2), (2, 1, 2), (3, 0, 2), (3, 1, 3)])
def test_staircase_on_grid(s, b, c):
    top = (s - 1) * (c - 1) + b + 1
    assert all(staircase_holds(s, b, c, k) for k in product(range(1, top + 1), repeat=s))


def test_subs_empty_when_frak_t_zero():
    wits = list(subs_witnesses(2, 0, 2, 1, 0))
    assert wits
    for w in wits:
        X = subs_alphabet(2, 0, 2, 1, 0, w.k)
        assert all(power_sum(X, r, 1).is_zero() for r in (1, 2, 3))
        assert verify_subs_cardinality(2, 0, 2, 1, 0, w)


def test_subs_examples():
    (w,) = [w for w in subs_witnesses(1, 0, 2, 0, 1) if w.k == (1,)]
    assert verify_subs_cardinality(1, 0, 2, 0, 1, w)
    wits = list(subs_witnesses(2, 0, 3, 1, 1))
    assert wits and all(verify_subs_cardinality(2, 0, 3, 1, 1, w) for w in wits)


@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("frak_t", [0, 1, 2])
def test_subs_cardinality(s, frak_t):
    for b, c in product(range(2), range(1, 4)):
        for r in range(s):
            for w in subs_witnesses(s, b, c, r, frak_t):
                assert verify_subs_cardinality(s, b, c, r, frak_t, w)


def test_T_sr_values():
    assert T_sr(1, 0, 0, 2) == 1
    assert T_sr(3, 0, 1, 2) == 2 * 1 + 2 + 1 + 1


def test_specialcase_grid():
    n, n0 = 3, 1
    seen_iv = False
    for s, b, c, m in product(range(1, 4), range(2), range(1, 3), (0, 2, 3)):
        t = chi(s > n0 + 1) * (s - n0 - 1) + chi(s > n - m)
        top = (s - 1) * (c - 1) + b + t
        for r in range(min(s, n0) + 1):
            for k in product(range(1, top + 1), repeat=s):
                assert verify_specialcase(s, n, n0, b, c, m, r, k)
                cases = specialcase_cases(s, n, n0, b, c, m, r, k)
                if m == 0:
                    assert 4 not in cases
                if cases == {4}:
                    seen_iv = True
                    assert any(k[i - 1] == b + 1 for i in range(n - m + 1, s + 1))
    assert seen_iv
