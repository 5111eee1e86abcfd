"""Classification reports, the closed-form p=3 catalog, and serialization.

For p = 3 the branch profile constraints collapse to

    b(1) + b(2) = g + 2,   b(1) = b(2) mod 3,

and the realizable multiplicity profiles can be listed in closed form, split
by g mod 3.  The catalog below reproduces that list; cross_check_p3 replays
it against the general solver.

A note on empty witness lists: they certify that no *Jacobian* carries the
profile.  At p = 3 every admissible profile is still realized by some
principally polarized abelian variety, namely a product of elliptic curves
with complex multiplication by the third roots of unity, acting by zeta on
one factor block and by zeta^{-1} on the other.  So non-realizable rows are
genuinely non-Jacobian ppav data, not impossible data.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .admissible import ProblemInstance, enumerate_admissible
from .curves import CurveModel, build_curve
from .errors import InvalidInputError
from .lefschetz import lefschetz_check
from .realizability import classify

P3_PPAV_NOTE = (
    "p=3: every admissible profile is realized by a product of CM elliptic "
    "curves, so rows without witnesses are ppav-but-not-Jacobian data."
)


@dataclass(frozen=True)
class P3CatalogRow:
    """One closed-form entry: genus g = 3k+r, parameter d, branch pair b,
    multiplicity pair a."""

    g: int
    k: int
    d: int
    b: tuple
    a: tuple


@dataclass(frozen=True)
class ReportRow:
    """One admissible profile with its verdict and optional curve data."""

    a: tuple
    compatible: bool
    witnesses: tuple
    curve: CurveModel | None
    lefschetz_holds: bool | None

    def to_json_dict(self) -> dict:
        return {
            "a": list(self.a),
            "compatible": self.compatible,
            "witnesses": [list(w) for w in self.witnesses],
            "curve": self.curve.to_json_dict() if self.curve is not None else None,
            "lefschetz_holds": self.lefschetz_holds,
        }


@dataclass(frozen=True)
class ClassificationReport:
    instance: ProblemInstance
    rows: tuple
    admissible_count: int
    realizable_count: int

    def __post_init__(self):
        expected = (self.instance.half_sum + 1) ** ((self.instance.p - 1) // 2)
        if self.admissible_count != expected:
            raise InvalidInputError(
                f"admissible count {self.admissible_count} != {expected}"
            )
        if self.realizable_count != sum(1 for r in self.rows if r.compatible):
            raise InvalidInputError("realizable count does not match rows")

    def to_json_dict(self) -> dict:
        return {
            "p": self.instance.p,
            "g": self.instance.g,
            "admissible_count": self.admissible_count,
            "realizable_count": self.realizable_count,
            "rows": [row.to_json_dict() for row in self.rows],
        }


def p3_catalog(g: int) -> list:
    """The closed-form list of realizable (a, b) pairs at p = 3 for genus g."""
    if not isinstance(g, int) or g < 1:
        raise InvalidInputError(f"g must be a positive integer, got {g!r}")
    rows = []
    r = g % 3
    if r == 1:
        k = (g - 1) // 3
        for d in range(k + 2):
            rows.append(
                P3CatalogRow(
                    g=g, k=k, d=d,
                    b=(3 * d, 3 * (k + 1 - d)),
                    a=(k + d, (2 * k + 1) - d),
                )
            )
    elif r == 2:
        k = (g - 2) // 3
        for d in range(k + 1):
            rows.append(
                P3CatalogRow(
                    g=g, k=k, d=d,
                    b=(3 * d + 2, 3 * (k - d) + 2),
                    a=((k + 1) + d, (2 * k + 1) - d),
                )
            )
    else:
        k = g // 3
        for d in range(k + 1):
            rows.append(
                P3CatalogRow(
                    g=g, k=k, d=d,
                    b=(3 * d + 1, 3 * (k - d) + 1),
                    a=(k + d, 2 * k - d),
                )
            )
    return rows


def expected_p3_realizable_count(g: int) -> int:
    """(g+5)/3, (g+1)/3 or (g+3)/3 according to g mod 3 = 1, 2, 0."""
    r = g % 3
    if r == 1:
        return (g + 5) // 3
    if r == 2:
        return (g + 1) // 3
    return (g + 3) // 3


def full_report(instance: ProblemInstance, verify: bool = False) -> ClassificationReport:
    """Classify every admissible profile; with verify=True, build the model
    curve for the first witness of each realizable row and run the exact
    fixed-point check on it."""
    verdicts = classify(instance)
    rows = []
    for verdict in verdicts:
        curve = None
        holds = None
        if verify and verdict.witnesses:
            curve = build_curve(verdict.witnesses[0])
            holds = lefschetz_check(curve).holds
        rows.append(
            ReportRow(
                a=verdict.profile.a.values,
                compatible=verdict.is_jacobian_compatible,
                witnesses=tuple(w.b.values for w in verdict.witnesses),
                curve=curve,
                lefschetz_holds=holds,
            )
        )
    return ClassificationReport(
        instance=instance,
        rows=tuple(rows),
        admissible_count=len(rows),
        realizable_count=sum(1 for r in rows if r.compatible),
    )


def cross_check_p3(g_max: int) -> bool:
    """Replay the closed-form catalog against the solver for g = 1..g_max.

    True iff for every g the catalog's (a, b) pairs coincide with the
    solver's realizable profiles and their witnesses.
    """
    if g_max < 1:
        raise InvalidInputError(f"g_max must be >= 1, got {g_max}")
    for g in range(1, g_max + 1):
        catalog_pairs = {(row.a, row.b) for row in p3_catalog(g)}
        if len(catalog_pairs) != expected_p3_realizable_count(g):
            return False
        report = full_report(ProblemInstance(3, g))
        solver_pairs = set()
        for row in report.rows:
            if row.compatible:
                if len(row.witnesses) != 1:
                    return False  # p=3 witnesses are unique
                solver_pairs.add((row.a, row.witnesses[0]))
        if catalog_pairs != solver_pairs:
            return False
    return True


# -- rendering ----------------------------------------------------------------


def report_to_json(report: ClassificationReport) -> str:
    return json.dumps(report.to_json_dict(), ensure_ascii=False)


def report_to_csv(report: ClassificationReport) -> str:
    """Bit-stable CSV: a_1..a_{p-1}, compatible, n_witnesses, b_1..b_{p-1}
    (first witness or blanks)."""
    p = report.instance.p
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = (
        [f"a_{v}" for v in range(1, p)]
        + ["compatible", "n_witnesses"]
        + [f"b_{v}" for v in range(1, p)]
    )
    writer.writerow(header)
    for row in report.rows:
        first = row.witnesses[0] if row.witnesses else ("",) * (p - 1)
        writer.writerow(
            list(row.a)
            + ["true" if row.compatible else "false", len(row.witnesses)]
            + list(first)
        )
    return buf.getvalue()


def report_to_table(report: ClassificationReport) -> str:
    """Human-readable fixed-width table."""
    p = report.instance.p
    lines = [
        f"p = {p}, g = {report.instance.g}: "
        f"{report.realizable_count} of {report.admissible_count} admissible "
        "profiles are Jacobian-compatible",
        "",
    ]
    a_width = max(12, 3 * (p - 1) + 2)
    header = f"{'a':<{a_width}} {'compatible':<11} {'witnesses'}"
    lines.append(header)
    lines.append("-" * len(header))
    for row in report.rows:
        a_txt = "(" + ",".join(str(x) for x in row.a) + ")"
        w_txt = (
            "; ".join("(" + ",".join(str(x) for x in w) + ")" for w in row.witnesses)
            or "-"
        )
        extra = ""
        if row.lefschetz_holds is not None:
            extra = "  [fixed-point identity: " + (
                "ok" if row.lefschetz_holds else "FAILED"
            ) + "]"
        lines.append(f"{a_txt:<{a_width}} {str(row.compatible).lower():<11} {w_txt}{extra}")
    if p == 3:
        lines.append("")
        lines.append(P3_PPAV_NOTE)
    return "\n".join(lines) + "\n"
