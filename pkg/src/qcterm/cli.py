"""Batch verification front-end.

A run is a list of suites. Each suite expands its parameter ranges into
points, every point is checked independently, and the outcomes are
collected into a report whose content (timings aside) depends only on the
configuration.

Config file (JSON)::

    {
      "suites": [
        {"suite": "qmorris", "ranges": {"n": [1, 2], "a": [0, 1, 2]}},
        {"suite": "thm11", "ranges": {"mu": [[], [1]], "c_offset": [1]}}
      ],
      "jobs": 2,
      "timeout": 60,
      "out": "report.json",
      "format": "json"
    }

Ranges left out fall back to the suite defaults (see ``SUITES``).
Partitions are given as lists of parts.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from . import __version__
from .combinatorics import (
    N,
    classify_key,
    staircase_holds,
    eps1,
    eps_chain,
    verify_monotone_lemmas,
    subs_witnesses,
    verify_specialcase,
    verify_subs_cardinality,
)
from .identities import (
    compositions,
    verify_identity,
    verify_polynomiality,
    verify_roots,
    verify_special_points,
    verify_vanishing,
)
from .laurent import LaurentPoly, chi, verify_splitting_S, verify_splitting_T
from .partitions import Partition, partitions_of

PASS, FAIL, SKIP, TIMEOUT = "pass", "fail", "skipped", "timeout"

SMALL_PARTS = [[], [1], [2], [1, 1]]


# ---------------------------------------------------------------------------
# suites


def _grid(ranges: dict, keys):
    for combo in product(*(ranges[k] for k in keys)):
        yield dict(zip(keys, combo))


def _identity_points(keys, c_base):
    """Points with c taken from an explicit range, or else as c_base(point) + c_offset."""

    def points(r):
        if "c" in r:
            yield from _grid(r, list(keys) + ["c"])
            return
        for p in _grid(r, list(keys) + ["c_offset"]):
            p["c"] = c_base(p) + p.pop("c_offset")
            yield p

    return points


def _mu1(p):
    mu = p.get("mu", [])
    return mu[0] if mu else 0


def _run_identity(name):
    def run(p):
        rec = verify_identity(name, **p)
        return rec.equal, {"lhs": rec.lhs.to_string(), "rhs": rec.rhs.to_string()}

    return run


def _splitting_points(r):
    yield from _grid(r, ["n", "n0", "c"])


def _run_splitting(p):
    s, t = verify_splitting_S(**p), verify_splitting_T(**p)
    return s and t, {"S": s, "T": t}


def _vanishing_points(r):
    for case in r["case"]:
        if case == "fixed_monomial":
            for c in r["c"]:
                yield {"case": case, "c": c}
        elif case == "composition":
            for n in range(3, r["composition_n_max"] + 1):
                for n0 in range(2, n):
                    for hh in range(1, n0):
                        total = hh * (n - n0) - n0
                        if 0 <= total <= r["composition_t_max"]:
                            for t, c in product(compositions(total, n), r["c"]):
                                yield {"case": case, "n": n, "n0": n0, "c": c, "h": hh, "t": list(t)}
        elif case == "h_product":
            for n, c, d in product(r["n"], r["c"], r["deg"]):
                for n0 in range(n + 1):
                    for v in compositions(d, n):
                        for lam in partitions_of(d):
                            if lam[0] > max(v):
                                yield {"case": case, "n": n, "n0": n0, "c": c, "v": list(v), "lam": list(lam)}
        elif case == "polynomial_h":
            for n, c, l in product(r["n"], r["c"], r["l"]):
                for n0 in range(n + 1):
                    for a in range(l):
                        for vec in product(range(max(r["deg"]) + 1), repeat=n + 1):
                            if sum(vec) in r["deg"]:
                                yield {"case": case, "n": n, "n0": n0, "c": c, "l": l, "a": a, "H": list(vec)}
        else:
            raise ValueError(f"unknown vanishing case {case!r}")


def _run_vanishing(p):
    p = dict(p)
    case = p.pop("case")
    if case == "polynomial_h":
        p["H"] = LaurentPoly.monomial(p["H"])
    return verify_vanishing(case, **p), {}


def _combinatorics_points(r):
    for check in r["check"]:
        if check == "example":
            yield {"check": check}
        elif check == "monotone":
            for s in r["s"]:
                yield {"check": check, "s": s}
        elif check == "key":
            for s, b, c, t in product(r["s"], r["b"], r["c"], r["t"]):
                yield {"check": check, "s": s, "b": b, "c": c, "t": t}
        elif check == "subs":
            for s, b, c, t in product(r["subs_s"], r["subs_b"], r["c"], r["frak_t"]):
                yield {"check": check, "s": s, "b": b, "c": c, "t": t}
        elif check == "staircase":
            for s, b, c in product(r["s"], r["b"], r["c"]):
                yield {"check": check, "s": s, "b": b, "c": c}
        elif check == "special_case":
            for s, b, c, m in product(range(1, r["special_n"] + 1), r["b"], r["c"], r["special_m"]):
                yield {"check": check, "s": s, "n": r["special_n"], "n0": r["special_n0"], "b": b, "c": c, "m": m}
        else:
            raise ValueError(f"unknown combinatorics check {check!r}")


def _run_combinatorics(p):
    check = p["check"]
    if check == "example":
        w = (3, 1, 4, 7, 5, 2, 6)
        chain = eps_chain(w, 3)
        ns = [N(x, 3) for x in chain[1:]]
        ok = N(w, 3) == 6 and eps1(w, 3) == (3, 2, 7, 6, 5, 1, 4) and ns == [5, 4, 4, 4, 4]
        return ok, {"chain_N": [N(x, 3) for x in chain]}
    if check == "monotone":
        return verify_monotone_lemmas(p["s"]), {}
    s, b, c = p["s"], p["b"], p["c"]
    if check == "key":
        t = p["t"]
        top = (s - 1) * (c - 1) + b + t
        count = 0
        for r in range(s + 1):
            for k in product(range(1, top + 1), repeat=s):
                classify_key(s, b, c, r, t, k)
                count += 1
        return True, {"tuples": count}
    if check == "staircase":
        top = (s - 1) * (c - 1) + b + 1
        ok = all(staircase_holds(s, b, c, k) for k in product(range(1, top + 1), repeat=s))
        return ok, {}
    if check == "special_case":
        n, n0, m = p["n"], p["n0"], p["m"]
        if not (m == 0 or n - n0 <= m <= n):
            raise ValueError("need m = 0 or n - n0 <= m <= n")
        t = chi(s > n0 + 1) * (s - n0 - 1) + chi(s > n - m)
        top = (s - 1) * (c - 1) + b + t
        ok = all(
            verify_specialcase(s, n, n0, b, c, m, r, k)
            for r in range(min(s, n0) + 1)
            for k in product(range(1, top + 1), repeat=s)
        )
        return ok, {}
    ft = p["t"]
    witnesses = 0
    for r in range(s):
        for wit in subs_witnesses(s, b, c, r, ft):
            witnesses += 1
            if not verify_subs_cardinality(s, b, c, r, ft, wit):
                return False, {"k": list(wit.k), "r": r}
    return True, {"witnesses": witnesses}


def _bc_points(r):
    """B and C parameter points without a, for the roots and special-point suites."""
    for which in r["which"]:
        for n in r["n"]:
            for n0 in range(n):
                for b, l, off in product(r["b"], r["l"], r["c_offset"]):
                    if which == "B":
                        for mu in r["mu"]:
                            yield {"which": "B", "n": n, "n0": n0, "b": b, "c": b + (mu[0] if mu else 0) + off,
                                   "l": l, "mu": list(mu)}
                    else:
                        for m in range(n - n0, n + 1):
                            yield {"which": "C", "n": n, "n0": n0, "b": b, "c": b + 1 + off, "l": l, "m": m}


def _bc_params(p):
    p = dict(p)
    which = p.pop("which")
    if which == "B":
        if len(p["mu"]) >= p["n"] - p["n0"]:
            raise ValueError("need l(mu) < n - n0")
        p["mu"] = Partition(p["mu"])
    return which, p


def _run_polynomiality(p):
    which, params = _bc_params(p)
    return verify_polynomiality(which, params), {}


def _run_roots(p):
    which, params = _bc_params(p)
    return verify_roots(which, params), {}


def _run_special(p):
    which, params = _bc_params(p)
    if which == "C" and params["m"] >= params["n"]:
        raise ValueError("need n - n0 <= m < n")
    res = verify_special_points(which, params)
    return all(res.values()), res


@dataclass(frozen=True)
class Suite:
    points: object
    run: object
    defaults: dict


SUITES = {
    "qmorris": Suite(
        lambda r: _grid(r, ["n", "a", "b", "c"]),
        _run_identity("qmorris"),
        {"n": [1, 2, 3], "a": [0, 1, 2, 3], "b": [0, 1, 2, 3], "c": [0, 1, 2, 3]},
    ),
    "thm11": Suite(
        _identity_points(["n", "n0", "a", "b", "l", "mu"], lambda p: p["b"] + _mu1(p)),
        _run_identity("thm11"),
        {"n": [2, 3], "n0": [0, 1, 2], "a": [0, 1, 2], "b": [0, 1, 2], "l": [0, 1, 2], "mu": SMALL_PARTS,
         "c_offset": [1, 2]},
    ),
    "thm12": Suite(
        _identity_points(["n", "n0", "m", "a", "b", "l"], lambda p: p["b"] + 1),
        _run_identity("thm12"),
        {"n": [2, 3], "n0": [0, 1, 2], "m": [1, 2, 3], "a": [0, 1, 2], "b": [0, 1, 2], "l": [0, 1, 2],
         "c_offset": [1, 2]},
    ),
    "aflt": Suite(
        lambda r: _grid(r, ["n", "a", "b", "c", "lam", "mu"]),
        _run_identity("aflt"),
        {"n": [1, 2], "a": [0, 1, 2], "b": [0, 1, 2], "c": [1, 2], "lam": SMALL_PARTS + [[1, 1, 1]], "mu": SMALL_PARTS},
    ),
    "splitting": Suite(_splitting_points, _run_splitting, {"n": [2, 3], "n0": [0, 1, 2, 3], "c": [1, 2, 3]}),
    "vanishing": Suite(
        _vanishing_points,
        _run_vanishing,
        {"case": ["fixed_monomial", "composition", "h_product", "polynomial_h"], "c": [1, 2, 3], "n": [1, 2], "deg": [1, 2, 3], "l": [1, 2],
         "composition_n_max": 4, "composition_t_max": 3},
    ),
    "combinatorics": Suite(
        _combinatorics_points,
        _run_combinatorics,
        {"check": ["example", "monotone", "key", "staircase", "special_case", "subs"], "s": [1, 2, 3, 4], "b": [0, 1, 2],
         "c": [1, 2, 3], "t": [0, 1, 2, 3], "frak_t": [0, 1, 2], "subs_s": [1, 2, 3], "subs_b": [0, 1], "special_n": 3, "special_n0": 1, "special_m": [0, 2, 3]},
    ),
    "polynomiality": Suite(
        _bc_points, _run_polynomiality,
        {"which": ["B", "C"], "n": [2, 3], "b": [0, 1, 2], "l": [0, 1, 2], "mu": SMALL_PARTS, "c_offset": [1, 2]},
    ),
    "roots": Suite(
        _bc_points, _run_roots,
        {"which": ["B", "C"], "n": [2, 3], "b": [0, 1, 2], "l": [0, 1, 2], "mu": SMALL_PARTS, "c_offset": [1, 2]},
    ),
    "special_points": Suite(
        _bc_points, _run_special,
        {"which": ["B", "C"], "n": [2, 3], "b": [0, 1, 2], "l": [0, 1, 2], "mu": SMALL_PARTS, "c_offset": [1, 2]},
    ),
}


# ---------------------------------------------------------------------------
# running


class _Timeout(Exception):
    pass


def _alarm(signum, frame):
    raise _Timeout


def evaluate(task) -> dict:
    """Check one point. ``task`` is (suite, params, timeout-in-seconds or None)."""
    suite, params, timeout = task
    rec = {"suite": suite, "params": params}
    use_alarm = timeout and hasattr(signal, "setitimer")
    if use_alarm:
        old = signal.signal(signal.SIGALRM, _alarm)
        signal.setitimer(signal.ITIMER_REAL, timeout)
    t0 = time.perf_counter()
    try:
        ok, detail = SUITES[suite].run(params)
        rec["status"] = PASS if ok else FAIL
        if detail:
            rec["detail"] = detail
    except _Timeout:
        rec["status"] = TIMEOUT
    except ValueError as exc:
        rec["status"] = SKIP
        rec["reason"] = str(exc)
    finally:
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, old)
    rec["elapsed"] = round(time.perf_counter() - t0, 6)
    return rec


def expand(suites: list) -> list:
    """(suite, params) pairs for a list of {"suite": id, "ranges": {...}} entries."""
    out = []
    for entry in suites:
        sid = entry["suite"]
        if sid not in SUITES:
            raise ValueError(f"unknown suite {sid!r}")
        ranges = {**SUITES[sid].defaults, **entry.get("ranges", {})}
        for key, val in ranges.items():
            if isinstance(val, list) and not val:
                raise ValueError(f"empty range {key!r} in suite {sid!r}")
        out.extend((sid, p) for p in SUITES[sid].points(ranges))
    return out


def run(suites: list, jobs: int = 1, timeout: float | None = None) -> dict:
    tasks = [(sid, p, timeout) for sid, p in expand(suites)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(evaluate, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [evaluate(t) for t in tasks]
    summary = {k: sum(r["status"] == k for r in results) for k in (PASS, FAIL, SKIP, TIMEOUT)}
    return {"meta": {"version": __version__, "q-field": "QQ(q)"}, "results": results, "summary": summary}


def _fmt_params(p: dict) -> str:
    return ",".join(f"{k}={json.dumps(v, separators=(',', ''))}" for k, v in p.items())


def format_text(report: dict) -> str:
    lines = [
        f"{r['suite']} {_fmt_params(r['params'])} {r['status'].upper().replace('SKIPPED', 'SKIP')} {r['elapsed']:.3f}s"
        for r in report["results"]
    ]
    s = report["summary"]
    lines.append(f"summary pass={s[PASS]} fail={s[FAIL]} skipped={s[SKIP]} timeout={s[TIMEOUT]}")
    return "\n".join(lines) + "\n"


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qcterm", description="Verify q-series constant term identities on grids.")
    ap.add_argument("--config", help="JSON run configuration")
    ap.add_argument("--suite", action="append", choices=sorted(SUITES), help="suite to run (repeatable)")
    ap.add_argument("--all", action="store_true", help="run every suite with its default ranges")
    ap.add_argument("--jobs", type=int, help="worker processes")
    ap.add_argument("--timeout", type=float, help="seconds allowed per point")
    ap.add_argument("--out", help="write the report here instead of stdout")
    ap.add_argument("--format", choices=["json", "text"], help="report format (default json)")
    ap.add_argument("--version", action="version", version=__version__)
    return ap


def main(argv=None) -> int:
    ap = _parser()
    args = ap.parse_args(argv)
    cfg = {}
    if args.config:
        try:
            with open(args.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            ap.error(f"cannot read config: {exc}")
        if not isinstance(cfg, dict):
            ap.error("config must be a JSON object")
    entries = cfg.get("suites", [])
    if args.all:
        entries = [{"suite": s} for s in SUITES]
    if args.suite:
        by_id = {e.get("suite"): e for e in entries}
        entries = [by_id.get(s, {"suite": s}) for s in args.suite]
    jobs = args.jobs or cfg.get("jobs", 1)
    timeout = args.timeout if args.timeout is not None else cfg.get("timeout")
    fmt = args.format or cfg.get("format", "json")
    out = args.out or cfg.get("out")
    if jobs < 1:
        ap.error("--jobs must be positive")
    try:
        report = run(entries, jobs, timeout)
    except (ValueError, KeyError, TypeError) as exc:
        ap.error(f"invalid configuration: {exc}")
    text = json.dumps(report, indent=2) + "\n" if fmt == "json" else format_text(report)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if report["summary"][FAIL] else 0


if __name__ == "__main__":
    sys.exit(main())
