"""Verification reports shared by the identity checkers and the CLI."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .exactring import Poly, Series, mono_str

PASS = "pass"
FAIL = "fail"

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["identity", "params", "status", "witness", "millis"],
        "additionalProperties": False,
        "properties": {
            "identity": {"type": "string"},
            "params": {"type": "object"},
            "status": {"enum": [PASS, FAIL]},
            "witness": {
                "oneOf": [
                    {"type": "null"},
                    {
                        "type": "object",
                        "required": ["monomial", "lhs", "rhs"],
                        "properties": {
                            "monomial": {"type": "string"},
                            "lhs": {"type": "string"},
                            "rhs": {"type": "string"},
                            "note": {"type": "string"},
                        },
                    },
                ]
            },
            "millis": {"type": "number", "minimum": 0},
        },
    },
}


@dataclass
class VerificationReport:
    identity: str
    params: dict
    status: str = PASS
    witness: dict | None = None
    millis: float = 0.0
    detail: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        d = asdict(self)
        d.pop("detail")
        d["millis"] = round(self.millis, 3)
        return d

    def line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        text = f"[{self.status.upper()}] {self.identity} {params} ({self.millis:.1f} ms)"
        if self.witness:
            w = self.witness
            text += f"\n    first difference at {w['monomial']}: lhs {w['lhs']} vs rhs {w['rhs']}"
        return text


def _terms(x) -> dict:
    if isinstance(x, Series):
        return x.poly.terms
    if isinstance(x, Poly):
        return x.terms
    return Poly.const(Fraction(x)).terms


def first_difference(lhs, rhs) -> dict | None:
    """Smallest monomial (canonical order) where the two sides differ."""
    diff = lhs - rhs
    dterms = _terms(diff)
    if not dterms:
        return None
    m = min(dterms)
    a = _terms(lhs).get(m, Fraction(0))
    b = _terms(rhs).get(m, Fraction(0))
    return {"monomial": mono_str(m) or "1", "lhs": str(a), "rhs": str(b)}


@contextmanager
def timed(report: VerificationReport):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.millis = (time.perf_counter() - start) * 1000


def compare(identity: str, params: dict, pairs) -> VerificationReport:
    """Report on a sequence of ``(label, thunk)`` returning ``(lhs, rhs)``.

    Stops at the first failing pair and keeps its witness.
    """
    report = VerificationReport(identity, dict(params))
    with timed(report):
        for label, thunk in pairs:
            lhs, rhs = thunk()
            w = first_difference(lhs, rhs)
            if w is not None:
                if label:
                    w["note"] = label
                report.status = FAIL
                report.witness = w
                break
    return report
