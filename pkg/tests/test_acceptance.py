"""Acceptance grids, one test per criterion.

Each criterion records a PASS/FAIL line in ``VERDICTS``; ``conftest.py``
prints them at the end of the pytest run, and running this file directly
prints them too. Every comparison is exact equality in QQ(q) or QQ(q,t).
"""

from itertools import product

import pytest

from qcterm.cli import run
from qcterm.identities import rhs_B, rhs_C
from qcterm.macdonald import (
    macdonald_P,
    macdonald_Q,
    pieri_expand,
    verify_branching,
    verify_duality,
    verify_mac_vanishing,
)
from qcterm.partitions import contained_in, dominance_leq, is_horizontal_strip, partitions_of
from qcterm.qfield import QTRat
from qcterm.symfunc import convert, g, hall_inner

VERDICTS = {}

TITLES = {
    1: "q-Morris identity",
    2: "B family constant terms",
    3: "C family constant terms",
    4: "AFLT-type constant terms",
    5: "splitting formulas for S and T",
    6: "vanishing constant terms",
    7: "combinatorial lemmas",
    8: "Macdonald polynomial properties",
    9: "polynomiality in q^a and root sets",
    10: "values at the extra points",
}


def _record(k, ok, detail):
    VERDICTS[k] = f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {TITLES[k]}: {detail}"
    return ok


def _suites(k, *entries):
    report = run(list(entries))
    s = report["summary"]
    bad = [(r["suite"], r["params"]) for r in report["results"] if r["status"] in ("fail", "timeout")]
    ok = not bad and s["pass"] > 0
    detail = f"{s['pass']} pass, {s['fail']} fail, {s['skipped']} out of domain"
    if bad:
        detail += "; failing " + ", ".join(str(p) for _, p in bad[:4])
    return _record(k, ok, detail)


def criterion_1():
    return _suites(1, {"suite": "qmorris"})


def criterion_2():
    return _suites(2, {"suite": "thm11"})


def criterion_3():
    ok = _suites(3, {"suite": "thm12"})
    structural = 0
    for n, a, b, l, off in product((2, 3), range(3), range(3), range(3), (2, 3)):
        for n0 in range(n):
            c = b + off
            if rhs_C(n, n0, a, b, c, l, n) != rhs_B(n, n0, a, b + 1, c, l, ()):
                ok = False
            structural += 1
    VERDICTS[3] += f"; m = n reduction to B checked at {structural} points"
    if not ok:
        VERDICTS[3] = VERDICTS[3].replace("PASS", "FAIL", 1)
    return ok


def criterion_4():
    # lam = (1,1,1) exceeds n, exercising the zero branch
    return _suites(4, {"suite": "aflt"})


def criterion_5():
    return _suites(5, {"suite": "splitting"})


def criterion_6():
    return _suites(6, {"suite": "vanishing"})


def criterion_7():
    return _suites(
        7,
        {"suite": "combinatorics"},
        {"suite": "combinatorics", "ranges": {"check": ["monotone"], "s": [5, 6]}},
    )


def criterion_8():
    checks = 0
    bad = []

    def check(name, ok):
        nonlocal checks
        checks += 1
        if not ok:
            bad.append(name)

    for d in range(1, 6):
        parts = partitions_of(d)
        for lam in parts:
            P = macdonald_P(lam)
            check(("triangular", lam), P.coeffs.get(lam) == 1 and all(dominance_leq(mu, lam) for mu in P.coeffs))
            for mu in parts:
                check(("orthogonal", lam, mu), hall_inner(P, macdonald_Q(mu)) == (1 if mu == lam else 0))
    for d, c in product(range(1, 5), (1, 2, 3)):
        for lam in partitions_of(d):
            check(("routes", lam, c), macdonald_P(lam, c).coeffs == macdonald_P(lam, c, method="direct").coeffs)
    for d, r in product(range(5), (1, 2, 3)):
        for mu in partitions_of(d):
            support = {lam for lam, _ in pieri_expand(mu, r)}
            check(("pieri", mu, r), support == {l for l in partitions_of(d + r) if is_horizontal_strip(l, mu, r)})
    Q, T, one = QTRat.monomial(1, 0), QTRat.monomial(0, 1), QTRat.coerce(1)
    for r in range(1, 5):
        scale = one
        for i in range(r):
            scale = scale * (1 - Q * Q**i) / (1 - T * Q**i)
        check(("row", r), macdonald_P((r,)) == convert(g(r), "m", None).scale(scale))
    for d in range(1, 4):
        for lam in partitions_of(d):
            for e in range(d + 1):
                for mu in partitions_of(e):
                    if contained_in(mu, lam):
                        for l in (1, 2):
                            check(("duality", lam, mu, l), verify_duality(lam, mu, l))
    check(("alphabet", (2,)), verify_mac_vanishing("alphabet", (2,), 1))
    check(("alphabet", (3, 1)), verify_mac_vanishing("alphabet", (3, 1), 1))
    check(("skew", (2, 1)), verify_mac_vanishing("skew", (2, 1), (1,)))
    check(("degree", (2, 1)), verify_mac_vanishing("degree", (2, 1), (1, 2), 2))
    for d in range(1, 5):
        for lam in partitions_of(d):
            for xl, yl in ((1, 1), (1, 2), (2, 1)):
                check(("branching", lam, xl, yl), verify_branching(lam, xl, yl))
    detail = f"{checks - len(bad)} of {checks} checks hold"
    if bad:
        detail += f"; failing {bad[:4]}"
    return _record(8, not bad, detail)


def criterion_9():
    return _suites(9, {"suite": "polynomiality"}, {"suite": "roots"})


def criterion_10():
    return _suites(10, {"suite": "special_points"})


CRITERIA = {k: globals()[f"criterion_{k}"] for k in TITLES}


@pytest.mark.parametrize(
    "k",
    [
        pytest.param(
            k,
            marks=pytest.mark.xfail(
                strict=True,
                reason="at n0 = n with c = 1 the product is 1, has no poles in w, and the partial fraction sum is empty",
            ),
        )
        if k == 5
        else k
        for k in TITLES
    ],
)
def test_criterion(k):
    assert CRITERIA[k]()


def test_splitting_failures_are_exactly_the_degenerate_points():
    report = run([{"suite": "splitting"}])
    failing = sorted((r["params"]["n"], r["params"]["n0"], r["params"]["c"])
                     for r in report["results"] if r["status"] == "fail")
    assert failing == [(2, 2, 1), (3, 3, 1)]


if __name__ == "__main__":
    for k, f in CRITERIA.items():
        f()
        print(VERDICTS[k])
