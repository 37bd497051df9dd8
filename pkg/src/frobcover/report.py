"""Check results and suite reports (the JSON the CLI emits)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import CapExceeded


@dataclass(frozen=True)
class CheckResult:
    check: str
    passed: bool
    witness: Any = None
    value: Any = None
    detail: str = ""

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failing check {self.check!r} must carry a witness")
        if self.passed and self.witness is not None:
            raise ValueError(f"passing check {self.check!r} must not carry a witness")

    def __bool__(self):
        return self.passed

    def to_json(self):
        out = {
            "check": self.check,
            "pass": self.passed,
            "witness": serialize(self.witness),
            "value": serialize(self.value),
        }
        if self.detail:
            out["detail"] = self.detail
        return out


def passed(check, value=None, detail=""):
    return CheckResult(check, True, None, value, detail)


def failed(check, witness, value=None, detail=""):
    return CheckResult(check, False, witness, value, detail)


def all_of(check, results, value=None):
    """Combine sub-results: pass iff all pass, witness = first failure."""
    results = list(results)
    for r in results:
        if not r.passed:
            return failed(check, [r.check, serialize(r.witness)], r.value, r.detail)
    return passed(check, value if value is not None else len(results))


@dataclass
class Report:
    suite: str
    results: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def add(self, result, elapsed=None):
        self.results.append(result)
        if elapsed is not None:
            self.timings[result.check] = elapsed
        return result

    @property
    def n_passed(self):
        return sum(1 for r in self.results if r.passed)

    @property
    def n_failed(self):
        return sum(1 for r in self.results if not r.passed)

    @property
    def ok(self):
        return self.n_failed == 0

    def to_json(self, include_timings=False):
        results = sorted(self.results, key=lambda r: r.check)
        checks = []
        for r in results:
            item = r.to_json()
            if include_timings and r.check in self.timings:
                item["elapsed"] = round(self.timings[r.check], 6)
            checks.append(item)
        return {
            "suite": self.suite,
            "passed": self.n_passed,
            "failed": self.n_failed,
            "witnesses": [
                {"check": r.check, "witness": serialize(r.witness)} for r in results if not r.passed
            ],
            "checks": checks,
        }

    def dumps(self, include_timings=False):
        return json.dumps(self.to_json(include_timings), indent=2, sort_keys=False) + "\n"


def serialize(x):
    """JSON-safe rendering; rationals become ``"p/q"`` strings."""
    from .algebra import AlgebraElement, LinearMap
    from .polynomial import Polynomial

    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return x
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, AlgebraElement):
        return [serialize(c) for c in x.coords]
    if isinstance(x, LinearMap):
        return [[serialize(c) for c in row] for row in x.matrix]
    if isinstance(x, Polynomial):
        return [serialize(c) for c in x.coeffs]
    if isinstance(x, dict):
        return {str(k): serialize(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [serialize(v) for v in x]
    if isinstance(x, CapExceeded):
        return str(x)
    return str(x)
