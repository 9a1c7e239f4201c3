"""Analysis reports: per-pair entropies, bound placement, and renderers.

Rows enumerate every (X, Y) with |X| = t_i and |Y| = s - t_o in
lexicographic order. Table output prints entropies at 6 decimals for
eyeballing; JSON and CSV carry full double precision so re-parsing is
numerically lossless.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import bounds as bnd
from .arrays import AONT, WEAK_AONT_ONLY, AontArray, ClassificationVerdict, classify
from .entropy import (
    SubsetPair,
    conditional_entropy,
    conditional_entropy_formula,
    statistical_distance,
    subset_entropy,
)
from .errors import InvalidParametersError
from .models import BLOCK_DEPENDENT, INDEPENDENT, InputModel

AUTO = "auto"


@dataclass(frozen=True)
class ReportRow:
    x: tuple[int, ...]
    y: tuple[int, ...]
    oracle: float
    formula: float | None
    stat_distance: float
    h_x: float
    source: str | None
    lower: float | None
    upper: float | None
    within: bool | None
    attains_lower: bool | None
    attains_upper: bool | None


@dataclass(frozen=True)
class AnalysisReport:
    array_label: str
    model_label: str
    t_i: int
    t_o: int
    verdict: ClassificationVerdict
    bounds_tag: str | None
    tolerance: float
    rows: tuple[ReportRow, ...]
    min_observed: float
    max_observed: float
    perfect_security: bool
    exceeds_min_entropy_cap: bool | None  # only defined for independent models

    def row_for(self, x: Sequence[int], y: Sequence[int]) -> ReportRow:
        key = (tuple(sorted(x)), tuple(sorted(y)))
        for row in self.rows:
            if (row.x, row.y) == key:
                return row
        raise KeyError(f"no row for pair {key}")


def admissible_pairs(s: int, t_i: int, t_o: int) -> list[SubsetPair]:
    """All (X, Y) with |X| = t_i, |Y| = s - t_o, lexicographic by (X, Y)."""
    pairs = []
    for x in combinations(range(1, s + 1), t_i):
        for y in combinations(range(s + 1, 2 * s + 1), s - t_o):
            pairs.append(SubsetPair(x, y))
    return pairs


def _auto_tag(verdict: str, model: InputModel, t_i: int, t_o: int) -> str | None:
    if verdict == AONT:
        if model.kind == BLOCK_DEPENDENT:
            return bnd.BLOCK_EXACT if t_i == t_o else None
        return bnd.SYMMETRIC if t_i == t_o else bnd.ASYMMETRIC
    if verdict == WEAK_AONT_ONLY and model.kind == INDEPENDENT:
        return bnd.WEAK
    return None


def build_report(
    array: AontArray,
    model: InputModel,
    t_i: int,
    t_o: int,
    bounds_tag: str = AUTO,
    tolerance: float = 1e-6,
    array_label: str = "array",
    model_label: str = "model",
    pairs: Sequence[SubsetPair] | None = None,
) -> AnalysisReport:
    if model.s != array.s or model.v != array.v:
        raise InvalidParametersError(
            f"model shape (s={model.s}, v={model.v}) does not match array "
            f"(s={array.s}, v={array.v})"
        )
    verdict = classify(array, t_i, t_o)
    if bounds_tag == AUTO:
        tag = _auto_tag(verdict.verdict, model, t_i, t_o)
    else:
        tag = bounds_tag
        if tag is not None and tag not in bnd.ALL_TAGS:
            raise InvalidParametersError(f"unknown bound tag {tag!r}; know {bnd.ALL_TAGS}")

    formula_ok = model.kind == INDEPENDENT and t_i == t_o and verdict.verdict == AONT
    min_cap = None
    if model.kind == INDEPENDENT:
        min_cap = bnd._min_subset_sum(bnd._column_entropies(model), t_i)

    all_pairs = admissible_pairs(array.s, t_i, t_o) if pairs is None else list(pairs)
    rows: list[ReportRow] = []
    for pair in all_pairs:
        oracle = conditional_entropy(array, model, pair)
        formula = conditional_entropy_formula(array, model, pair) if formula_ok else None
        sd = statistical_distance(array, model, pair)
        h_x = subset_entropy(array, model, pair.x)
        if tag is None:
            rows.append(
                ReportRow(pair.x, pair.y, oracle, formula, sd, h_x, None, None, None, None, None, None)
            )
        else:
            cmp = bnd.compare(array, model, pair, tag, tolerance)
            rows.append(
                ReportRow(
                    pair.x,
                    pair.y,
                    oracle,
                    formula,
                    sd,
                    h_x,
                    cmp.interval.source,
                    cmp.interval.lower,
                    cmp.interval.upper,
                    cmp.within,
                    cmp.attains_lower,
                    cmp.attains_upper,
                )
            )
    rows.sort(key=lambda r: (r.x, r.y))
    observed = [r.oracle for r in rows]
    perfect = all(abs(r.oracle - r.h_x) <= tolerance for r in rows)
    exceeds_cap = None
    if min_cap is not None:
        exceeds_cap = any(r.oracle > min_cap + tolerance for r in rows)
    return AnalysisReport(
        array_label=array_label,
        model_label=model_label,
        t_i=t_i,
        t_o=t_o,
        verdict=verdict,
        bounds_tag=tag,
        tolerance=tolerance,
        rows=tuple(rows),
        min_observed=min(observed),
        max_observed=max(observed),
        perfect_security=perfect,
        exceeds_min_entropy_cap=exceeds_cap,
    )


def _cols_label(cols: tuple[int, ...]) -> str:
    return "+".join(str(c) for c in cols) if cols else "-"


def _parse_cols_label(label: str) -> tuple[int, ...]:
    if label == "-":
        return ()
    return tuple(int(c) for c in label.split("+"))


def report_to_json_dict(report: AnalysisReport) -> dict:
    return {
        "array": report.array_label,
        "model": report.model_label,
        "t_i": report.t_i,
        "t_o": report.t_o,
        "verdict": report.verdict.verdict,
        "witness": list(report.verdict.witness) if report.verdict.witness else None,
        "bounds": report.bounds_tag,
        "tolerance": report.tolerance,
        "rows": [
            {
                "x": list(r.x),
                "y": list(r.y),
                "oracle": r.oracle,
                "formula": r.formula,
                "stat_distance": r.stat_distance,
                "h_x": r.h_x,
                "source": r.source,
                "lower": r.lower,
                "upper": r.upper,
                "within": r.within,
                "attains_lower": r.attains_lower,
                "attains_upper": r.attains_upper,
            }
            for r in report.rows
        ],
        "summary": {
            "min_observed": report.min_observed,
            "max_observed": report.max_observed,
            "perfect_security": report.perfect_security,
            "exceeds_min_entropy_cap": report.exceeds_min_entropy_cap,
        },
    }


_CSV_FIELDS = (
    "x",
    "y",
    "oracle",
    "formula",
    "stat_distance",
    "h_x",
    "source",
    "lower",
    "upper",
    "within",
    "attains_lower",
    "attains_upper",
)


def report_to_csv(report: AnalysisReport) -> str:
    """Full-precision CSV; parse_report_csv round-trips it exactly."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_FIELDS)
    for r in report.rows:
        writer.writerow(
            [
                _cols_label(r.x),
                _cols_label(r.y),
                repr(r.oracle),
                "" if r.formula is None else repr(r.formula),
                repr(r.stat_distance),
                repr(r.h_x),
                "" if r.source is None else r.source,
                "" if r.lower is None else repr(r.lower),
                "" if r.upper is None else repr(r.upper),
                "" if r.within is None else str(int(r.within)),
                "" if r.attains_lower is None else str(int(r.attains_lower)),
                "" if r.attains_upper is None else str(int(r.attains_upper)),
            ]
        )
    return buf.getvalue()


def parse_report_csv(text: str) -> list[dict]:
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        rows.append(
            {
                "x": _parse_cols_label(rec["x"]),
                "y": _parse_cols_label(rec["y"]),
                "oracle": float(rec["oracle"]),
                "formula": float(rec["formula"]) if rec["formula"] else None,
                "stat_distance": float(rec["stat_distance"]),
                "h_x": float(rec["h_x"]),
                "source": rec["source"] or None,
                "lower": float(rec["lower"]) if rec["lower"] else None,
                "upper": float(rec["upper"]) if rec["upper"] else None,
                "within": bool(int(rec["within"])) if rec["within"] else None,
                "attains_lower": bool(int(rec["attains_lower"])) if rec["attains_lower"] else None,
                "attains_upper": bool(int(rec["attains_upper"])) if rec["attains_upper"] else None,
            }
        )
    return rows


def report_to_table(report: AnalysisReport) -> str:
    """Human-readable table, entropies at 6 decimals."""

    def fmt(value: float | None) -> str:
        return "-" if value is None else f"{value:.6f}"

    lines = [
        f"array: {report.array_label}   model: {report.model_label}",
        f"parameters: t_i={report.t_i} t_o={report.t_o}   verdict: {report.verdict.verdict}"
        + (
            f" (witness columns {report.verdict.witness})"
            if report.verdict.witness
            else ""
        ),
        f"bounds: {report.bounds_tag or 'none applicable'}   tolerance: {report.tolerance:g}",
        "",
    ]
    header = f"{'X':>8} {'Y':>8} {'H(X|Y)':>10} {'formula':>10} {'SD':>10} {'lower':>10} {'upper':>10} {'within':>7}"
    lines.append(header)
    lines.append("-" * len(header))
    for r in report.rows:
        within = "-" if r.within is None else ("yes" if r.within else "NO")
        lines.append(
            f"{_cols_label(r.x):>8} {_cols_label(r.y):>8} {r.oracle:>10.6f} "
            f"{fmt(r.formula):>10} {r.stat_distance:>10.6f} {fmt(r.lower):>10} "
            f"{fmt(r.upper):>10} {within:>7}"
        )
    lines.append("")
    lines.append(
        f"observed range: [{report.min_observed:.6f}, {report.max_observed:.6f}]   "
        f"perfect security: {'yes' if report.perfect_security else 'no'}"
    )
    if report.exceeds_min_entropy_cap is not None:
        lines.append(
            "min-entropy cap exceeded: "
            + ("yes" if report.exceeds_min_entropy_cap else "no")
        )
    return "\n".join(lines) + "\n"
