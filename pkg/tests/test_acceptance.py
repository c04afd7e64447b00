"""Acceptance criteria, one test each, exact arithmetic throughout.

Run with pytest, or directly (``python tests/test_acceptance.py``) for a
one-line-per-criterion summary.
"""

import contextlib
import io
import json
import sys
import time
from fractions import Fraction

import pytest

from partident import identities as ids
from partident import sweeps
from partident.application import chu_vandermonde_demo
from partident.cli import main

RESULTS: dict = {}


def _summary(reports):
    bad = [r for r in reports if not r.passed]
    detail = f"{len(reports) - len(bad)}/{len(reports)} reports pass"
    if bad:
        detail += f"; first failure {bad[0].identity} {bad[0].params} witness {bad[0].witness}"
    return not bad, detail


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def criterion_1():
    reports, secs = _timed(lambda: ids.verify_theorem1(5, 5))
    ok, detail = _summary(reports)
    return ok and len(reports) == 15 and secs < 180, f"{detail}, {secs:.1f}s (limit 180s)"


def criterion_2():
    reports = ids.verify_theorem2(6, 4) + ids.verify_x_zero(5)
    return _summary(reports)


def criterion_3():
    return _summary([sweeps.genbinom_oracle(8)])


def criterion_4():
    return _summary([sweeps.pjk_dual(6, 6), sweeps.pjk_closed_forms(8)])


def criterion_5():
    return _summary([sweeps.lambda_table(4), sweeps.lambda_rules(0, 20, 4),
                     sweeps.lambda_q_formulas(6)])


def criterion_6():
    reports, secs = _timed(lambda: [ids.verify_theorem3(p, (3, 3, 3)) for p in range(4)])
    ok, detail = _summary(reports)
    return ok and secs < 120, f"{detail}, {secs:.1f}s (limit 120s)"


def criterion_7():
    grid = sweeps.theorem4_grid(6)
    reports = grid + sweeps.vanishing_grid(3, 4)
    reports += [chu_vandermonde_demo(n) for n in range(1, 5)]
    ok, detail = _summary(reports)
    # the x-degree bound is one of the checks inside every theorem4 report
    return ok and len(grid) == 18, detail


def criterion_8():
    return _summary([sweeps.cauchy_formulas(6), sweeps.kernel_formulas(4),
                     sweeps.binomial_series(5, 6), sweeps.subset_products(4)])


def _cli(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def criterion_9():
    code, out = _cli("verify", "all", "--json")
    total = len(json.loads(out))
    original = ids.p_jk

    def corrupted(j, k, X=None):
        p = original(j, k, X)
        return p + Fraction(1, 5) if (j, k) == (2, 2) else p

    ids.p_jk = corrupted
    try:
        bad_code, bad_out = _cli("verify", "theorem1", "--n-max", "3", "--u-cap", "3", "--json")
    finally:
        ids.p_jk = original
    witnesses = [d["witness"]["monomial"] for d in json.loads(bad_out) if d["status"] == "fail"]
    ok = code == 0 and bad_code == 1 and bool(witnesses)
    return ok, (f"default sweep exit {code} over {total} reports; corrupted P_22 exit {bad_code}, "
                f"witness monomials {sorted(set(witnesses))}")


CRITERIA = [
    ("1", "first identity, n <= 5, u-cap 5, under 3 minutes", criterion_1),
    ("2", "second identity, n <= 6, u-cap 4, and X = 0", criterion_2),
    ("3", "generalized binomials against subset oracle and sum rule", criterion_3),
    ("4", "P_jk by two routes, closed forms P_j1 and P_j2", criterion_4),
    ("5", "lambda-ring formulary", criterion_5),
    ("6", "third identity, 0..3 letters, caps 3,3,3, under 2 minutes", criterion_6),
    ("7", "contents identity, vanishing, x-degree, row case", criterion_7),
    ("8", "symmetric-function formulary", criterion_8),
    ("9", "CLI contract: default sweep and corrupted fixture", criterion_9),
]


def _line(num, title, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title} -- {detail}"


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn):
    ok, detail = fn()
    RESULTS[num] = _line(num, title, ok, detail)
    print(RESULTS[num])
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        failures += not ok
        print(_line(num, title, ok, detail), flush=True)
    sys.exit(1 if failures else 0)
