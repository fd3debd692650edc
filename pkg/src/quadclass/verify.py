"""Cross-checking sweeps over ranges of fundamental discriminants.

For every fundamental D in a range, the class number is computed by each
applicable route (character sum, cycle sums, floor sums, interval sums,
factored interval sums) and every closed-form table identity that applies to
D's parity is checked.  One record per discriminant feeds the text, CSV and
JSON reports; the run passes only if every record agrees everywhere.
"""

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from math import gcd
from typing import Iterator, Sequence

from .classnum import (
    ek_table,
    h_dirichlet,
    h_floor_formula,
    h_from_ek,
    h_from_ek_factored,
    h_theorem1,
)
from .discriminant import Case, Discriminant, from_discriminant
from .errors import ExcludedDiscriminantError, InternalError, NotFundamentalError
from .theorems import (
    check_b2,
    check_b4,
    check_b6,
    check_b12,
    check_s1_s2,
    h_abs_sixth,
    h_quarter_sum,
)

__all__ = [
    "DEFAULT_BASES",
    "CHECK_KEYS",
    "DiscriminantRecord",
    "VerificationReport",
    "fundamental_discriminants",
    "verify_discriminant",
    "verify_range",
    "columns",
    "record_row",
    "to_text",
    "to_csv",
    "to_json",
]

DEFAULT_BASES = tuple(range(2, 14))

# Closed-form checks in report order; which apply depends on D's parity
# and on gcd(D, 3), the rest stay None.
CHECK_KEYS = ("base2", "base4", "base6", "sixth", "base12", "quarter", "sixth_pair")


@dataclass
class DiscriminantRecord:
    """Everything verified about one discriminant."""

    D: int
    N: int
    case: str
    h: int | None
    formulas: dict  # "cycle_B7" -> h by that route, or None when 7 | N
    factored_ok: bool | None  # all divisor regroupings agreed; None if none ran
    checks: dict  # CHECK_KEYS -> passed, or None where not applicable
    agree: bool
    passed: bool
    error: str | None = None


@dataclass
class VerificationReport:
    lo: int
    hi: int
    bases: tuple
    records: list
    elapsed: float

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def summary(self) -> dict:
        failed = [r for r in self.records if not r.passed]
        return {
            "discriminants": len(self.records),
            "passed": len(self.records) - len(failed),
            "failed": len(failed),
            "first_failure": failed[0].D if failed else None,
            "all_passed": not failed,
            "elapsed_seconds": round(self.elapsed, 3),
        }


def fundamental_discriminants(lo: int, hi: int) -> Iterator[Discriminant]:
    """Fundamental discriminants in [lo, hi], by decreasing D (hi first).

    Non-fundamental integers and the excluded pair -3, -4 are skipped.
    """
    for D in range(hi, lo - 1, -1):
        try:
            yield from_discriminant(D)
        except (NotFundamentalError, ExcludedDiscriminantError):
            continue


def _failed_record(disc: Discriminant, message: str) -> DiscriminantRecord:
    return DiscriminantRecord(
        disc.D, disc.N, disc.case.value, None, {}, None, dict.fromkeys(CHECK_KEYS),
        agree=False, passed=False, error=message,
    )


def verify_discriminant(D: int, bases: Sequence[int] = DEFAULT_BASES) -> DiscriminantRecord:
    """Run every route and every applicable closed-form check for one D."""
    disc = from_discriminant(D)
    try:
        h = h_dirichlet(disc).h
        formulas = {}
        agree = True
        for family, fn in (
            ("cycle", h_theorem1),
            ("floor", h_floor_formula),
            ("interval", h_from_ek),
        ):
            for b in bases:
                key = f"{family}_B{b}"
                if gcd(b, disc.N) != 1:
                    formulas[key] = None
                    continue
                value = fn(disc, b).h
                formulas[key] = value
                agree = agree and value == h

        factored = []
        for b in bases:
            if gcd(b, disc.N) != 1:
                continue
            for b1 in range(2, b):
                if b % b1 == 0:
                    factored.append(h_from_ek_factored(disc, b, b1).h == h)
        factored_ok = all(factored) if factored else None
        agree = agree and factored_ok is not False

        checks = dict.fromkeys(CHECK_KEYS)
        if disc.case is Case.ODD:
            checks["base2"] = check_b2(disc).passed
            checks["base4"] = check_b4(disc).passed
            if disc.N % 3:
                checks["base6"] = check_b6(disc).passed
                checks["sixth"] = h_abs_sixth(disc).h == h
                e0 = ek_table(disc, 12).entries[0]
                checks["base12"] = check_b12(disc, h, e0).passed
        else:
            checks["quarter"] = h_quarter_sum(disc).h == h
            if disc.N % 3:
                checks["sixth_pair"] = check_s1_s2(disc).passed

        passed = agree and not any(v is False for v in checks.values())
        return DiscriminantRecord(
            disc.D, disc.N, disc.case.value, h, formulas, factored_ok, checks,
            agree=agree, passed=passed,
        )
    except InternalError as exc:
        return _failed_record(disc, str(exc))


def verify_range(
    lo: int, hi: int, bases: Sequence[int] = DEFAULT_BASES, jobs: int = 1
) -> VerificationReport:
    """Verify every fundamental discriminant in [lo, hi], hi first.

    Records are deterministic for a fixed range and base list regardless of
    jobs; only elapsed time varies.
    """
    if lo > hi:
        raise ValueError(f"empty range: from {lo} to {hi}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    bases = tuple(sorted(set(bases)))
    if not bases:
        raise ValueError("need at least one base")
    if bases[0] < 2:
        raise ValueError(f"bases must be >= 2, got {bases[0]}")

    start = time.perf_counter()
    ds = [disc.D for disc in fundamental_discriminants(lo, hi)]
    if jobs > 1 and len(ds) > 1:
        worker = partial(verify_discriminant, bases=bases)
        chunk = max(1, len(ds) // (8 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(worker, ds, chunksize=chunk))
    else:
        records = [verify_discriminant(D, bases) for D in ds]
    return VerificationReport(lo, hi, bases, records, time.perf_counter() - start)


# ----- report serialization -----


def columns(bases: Sequence[int]) -> list:
    """CSV/JSON column names, fixed by the base list."""
    cols = ["D", "N", "case", "h"]
    for family in ("cycle", "floor", "interval"):
        cols += [f"{family}_B{b}" for b in bases]
    cols.append("factored_ok")
    cols += list(CHECK_KEYS)
    cols += ["agree", "passed", "error"]
    return cols


def record_row(rec: DiscriminantRecord, bases: Sequence[int]) -> dict:
    """One record flattened to the column schema."""
    row = {"D": rec.D, "N": rec.N, "case": rec.case, "h": rec.h}
    for family in ("cycle", "floor", "interval"):
        for b in bases:
            key = f"{family}_B{b}"
            row[key] = rec.formulas.get(key)
    row["factored_ok"] = rec.factored_ok
    for key in CHECK_KEYS:
        row[key] = rec.checks.get(key)
    row["agree"] = rec.agree
    row["passed"] = rec.passed
    row["error"] = rec.error
    return row


def _cell(value) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def to_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns(report.bases))
    for rec in report.records:
        writer.writerow([_cell(v) for v in record_row(rec, report.bases).values()])
    return buf.getvalue()


def to_json(report: VerificationReport) -> str:
    payload = {
        "from": report.lo,
        "to": report.hi,
        "bases": list(report.bases),
        "summary": report.summary,
        "records": [record_row(rec, report.bases) for rec in report.records],
    }
    return json.dumps(payload, indent=2) + "\n"


def to_text(report: VerificationReport) -> str:
    lines = []
    for rec in report.records:
        status = "pass" if rec.passed else "FAIL"
        line = f"{status}  D={rec.D:<7} N={rec.N:<6} {rec.case:<4} h={rec.h}"
        if not rec.passed:
            bad = [k for k, v in rec.formulas.items() if v is not None and v != rec.h]
            bad += [k for k, v in rec.checks.items() if v is False]
            if rec.factored_ok is False:
                bad.append("factored")
            if rec.error:
                bad.append(f"error: {rec.error}")
            line += "  [" + ", ".join(bad) + "]"
        lines.append(line)
    s = report.summary
    lines.append(
        f"{s['discriminants']} discriminants from {report.lo} to {report.hi}, "
        f"bases {','.join(map(str, report.bases))}: "
        f"{s['passed']} passed, {s['failed']} failed "
        f"({s['elapsed_seconds']}s)"
    )
    if s["first_failure"] is not None:
        lines.append(f"first failure: D={s['first_failure']}")
    return "\n".join(lines) + "\n"
