#!/usr/bin/env python3
"""
report.py

Verification records shared by every suite.

- VerifyReport: one checked instance (identity id, parameters, status, witness, timing)
- check_equal / check_zero / check_divides: build a report from an exact comparison
- summarize: per-identity table (pandas)
- write_tsv: per-instance table for --report-tsv

Reports serialize to one JSON object per line; timing lives in its own field so a
stream written with timing=False is byte-stable across runs.
"""

import json
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

import pandas as pd

from .errors import BaxterQError
from .exact_arith import LaurentPoly, RationalFn, as_rational, divides

logger = logging.getLogger(__name__)

# ----------------------------- config -----------------------------
PASS = "pass"
FAIL = "fail"
WITNESS_TERMS = 3  # leading coefficients kept in a failure witness


@dataclass
class VerifyReport:
    """Outcome of one identity instance."""

    id: str
    params: Dict
    status: str
    witness: Optional[Dict] = None
    micros: int = 0
    degree: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_record(self, timing: bool = True) -> str:
        record = {"id": self.id, "params": _jsonable(self.params), "status": self.status}
        if self.witness is not None:
            record["witness"] = _jsonable(self.witness)
        if self.degree is not None:
            record["degree"] = self.degree
        if timing:
            record["micros"] = self.micros
        return json.dumps(record, sort_keys=True)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (LaurentPoly, RationalFn)):
        return str(value)
    return value


def _leading_terms(p: LaurentPoly) -> List[List]:
    items = sorted(p.items(), reverse=True)[:WITNESS_TERMS]
    return [[e, str(c)] for e, c in items]


def difference_witness(lhs, rhs) -> Dict:
    """Leading coefficients of the numerator of lhs - rhs."""
    diff = as_rational(lhs) - as_rational(rhs)
    return {"leading": _leading_terms(diff.num), "numerator_degree": diff.num.degree}


@contextmanager
def timed():
    """Yields a one-element list filled with elapsed microseconds on exit."""
    box = [0]
    start = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = int((time.perf_counter() - start) * 1e6)


def _degree(value) -> Optional[int]:
    r = as_rational(value)
    return r.num.degree


def check_equal(identity: str, params: Dict, lhs: Callable, rhs: Callable) -> VerifyReport:
    """Evaluate both sides and compare exactly.

    Library errors raised while evaluating are reported as failures with the message
    as witness, so one bad instance does not stop a suite.
    """
    with timed() as elapsed:
        try:
            left, right = as_rational(lhs()), as_rational(rhs())
            ok = left == right
            witness = None if ok else difference_witness(left, right)
            degree = _degree(left)
        except BaxterQError as e:
            ok, witness, degree = False, {"error": f"{type(e).__name__}: {e}"}, None
    report = VerifyReport(identity, params, PASS if ok else FAIL, witness, elapsed[0], degree)
    _log(report)
    return report


def check_zero(identity: str, params: Dict, value: Callable) -> VerifyReport:
    return check_equal(identity, params, value, lambda: RationalFn(LaurentPoly()))


def check_divides(identity: str, params: Dict, divisor: Callable, dividend: Callable) -> VerifyReport:
    """Pass when the polynomial divisor divides the polynomial dividend exactly."""
    with timed() as elapsed:
        try:
            d, p = divisor(), dividend()
            ok, _ = divides(d, p)
            witness = None if ok else {"divisor": str(d), "dividend_degree": p.degree}
        except BaxterQError as e:
            ok, witness = False, {"error": f"{type(e).__name__}: {e}"}
    report = VerifyReport(identity, params, PASS if ok else FAIL, witness, elapsed[0])
    _log(report)
    return report


def check_true(identity: str, params: Dict, predicate: Callable[[], bool], witness=None) -> VerifyReport:
    with timed() as elapsed:
        try:
            ok = bool(predicate())
            wit = None if ok else witness
        except BaxterQError as e:
            ok, wit = False, {"error": f"{type(e).__name__}: {e}"}
    report = VerifyReport(identity, params, PASS if ok else FAIL, wit, elapsed[0])
    _log(report)
    return report


def _log(report: VerifyReport) -> None:
    if report.passed:
        logger.debug(f"{report.id} {report.params} pass ({report.micros} us)")
    else:
        logger.info(f"{report.id} {report.params} FAIL {report.witness}")


# ----------------------------- tables -----------------------------


def to_frame(reports: Iterable[VerifyReport]) -> pd.DataFrame:
    rows = [
        {
            "id": r.id,
            "params": json.dumps(_jsonable(r.params), sort_keys=True),
            "status": r.status,
            "micros": r.micros,
            "degree": r.degree,
        }
        for r in reports
    ]
    return pd.DataFrame(rows, columns=["id", "params", "status", "micros", "degree"])


def summarize(reports: Iterable[VerifyReport]) -> pd.DataFrame:
    """One row per identity id: instances, passed, failed, total ms."""
    df = to_frame(reports)
    if df.empty:
        return pd.DataFrame(columns=["id", "instances", "passed", "failed", "total_ms"])
    df["passed"] = (df["status"] == PASS).astype(int)
    df["failed"] = (df["status"] == FAIL).astype(int)
    out = (
        df.groupby("id", sort=False)
        .agg(instances=("status", "size"), passed=("passed", "sum"), failed=("failed", "sum"),
             total_ms=("micros", "sum"))
        .reset_index()
    )
    out["total_ms"] = (out["total_ms"] / 1000).round(1)
    return out


def write_tsv(reports: Iterable[VerifyReport], path: str) -> None:
    df = to_frame(reports)
    df.to_csv(path, sep="\t", index=False)
    logger.info(f"wrote {len(df)} report rows to {path}")


def all_passed(reports: Iterable[VerifyReport]) -> bool:
    return all(r.passed for r in reports)


@dataclass
class SuiteResult:
    """Reports of one suite, in its deterministic instance order."""

    name: str
    reports: List[VerifyReport] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.reports if not r.passed)
