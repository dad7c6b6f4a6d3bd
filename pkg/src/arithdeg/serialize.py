"""Text, JSON and CSV renderings of a DegreeReport.

JSON key order is fixed; only ``degree_approx`` is a float.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .degree import DegreeReport

FIELDS = (
    "stack", "m", "d_K", "d_B", "degenerate", "diff", "p", "splitting",
    "epsilon_p", "M", "R_M", "count", "length", "degree_coeff", "degree_approx",
)


def _rational(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def report_dict(report: DegreeReport) -> dict:
    M = report.argument_M
    return {
        "stack": report.stack,
        "m": report.m,
        "d_K": report.d_K,
        "d_B": report.d_B,
        "degenerate": report.degenerate,
        "diff": list(report.diff.primes),
        "p": report.p,
        "splitting": report.splitting_at_p.kind.value if report.splitting_at_p else None,
        "epsilon_p": report.epsilon_p,
        "M": None if M is None else {"num": M.numerator, "den": M.denominator},
        "R_M": report.R_of_M,
        "count": report.point_count_coefficient,
        "length": _rational(report.length),
        "degree_coeff": report.degree_coefficient,
        "degree_approx": report.degree_approx,
    }


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def to_json(report: DegreeReport) -> str:
    return dumps(report_dict(report))


def csv_cells(d: dict) -> list[str]:
    """Flatten one report dict to CSV cells (inverse: :func:`parse_csv_row`)."""
    cells = []
    for key in FIELDS:
        value = d[key]
        if value is None:
            cells.append("")
        elif key == "diff":
            cells.append(" ".join(str(p) for p in value))
        elif key == "M":
            cells.append(f"{value['num']}/{value['den']}")
        elif isinstance(value, bool):
            cells.append("true" if value else "false")
        else:
            cells.append(str(value) if not isinstance(value, float) else repr(value))
    return cells


def parse_csv_row(row: dict[str, str]) -> dict:
    def opt_int(s):
        return None if s == "" else int(s)

    length = row["length"]
    M = None
    if row["M"]:
        num, den = row["M"].split("/")
        M = {"num": int(num), "den": int(den)}
    return {
        "stack": row["stack"],
        "m": int(row["m"]),
        "d_K": int(row["d_K"]),
        "d_B": int(row["d_B"]),
        "degenerate": row["degenerate"] == "true",
        "diff": [int(p) for p in row["diff"].split()],
        "p": opt_int(row["p"]),
        "splitting": row["splitting"] or None,
        "epsilon_p": opt_int(row["epsilon_p"]),
        "M": M,
        "R_M": int(row["R_M"]),
        "count": int(row["count"]),
        "length": length if "/" in length else int(length),
        "degree_coeff": int(row["degree_coeff"]),
        "degree_approx": float(row["degree_approx"]),
    }


def to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for report in reports:
        writer.writerow(csv_cells(report_dict(report)))
    return buf.getvalue()


def _diff_label(report: DegreeReport) -> str:
    return "|Diff_B|" if report.stack == "Y" else "|Diff|"


def degree_line(report: DegreeReport) -> str:
    if report.degree_coefficient:
        return f"deg = {report.degree_display}"
    if report.p is None:
        return f"deg = 0 ({_diff_label(report)} = {len(report.diff)})"
    return (f"deg = 0 (no points: p = {report.p} divides d_B and "
            f"ord_p(m) = 0)")


DEGENERATE_NOTE = "  (degenerate: matrix algebra, formal reduction only)"


def to_text(report: DegreeReport) -> str:
    diff_name = "Diff_B" if report.stack == "Y" else "Diff"
    lines = [
        f"stack      {report.stack}",
        f"d_K        {report.d_K}",
        f"d_B        {report.d_B}" + (DEGENERATE_NOTE if report.degenerate and report.stack == "Y" else ""),
        f"m          {report.m}",
        f"{diff_name:<10} {{{', '.join(str(p) for p in report.diff.primes)}}}",
    ]
    if report.p is not None:
        sp = report.splitting_at_p
        lines += [
            f"p          {report.p} ({sp.kind.value}, e={sp.e}, f={sp.f})",
            f"epsilon_p  {report.epsilon_p}",
            f"M          {report.argument_M}",
            f"R(M)       {report.R_of_M}",
            f"count      {report.point_count_coefficient}",
            f"length     {_rational(report.length)}",
        ]
    lines.append(degree_line(report))
    return "\n".join(lines) + "\n"


def to_table_text(reports, stack: str = "Y") -> str:
    columns = ("m", "|Diff_B|" if stack == "Y" else "|Diff|", "p", "M", "R(M)",
               "count", "length", "degree")
    rows = [columns]
    for r in reports:
        rows.append((
            str(r.m), str(len(r.diff)), "-" if r.p is None else str(r.p),
            "-" if r.argument_M is None else str(r.argument_M),
            str(r.R_of_M), str(r.point_count_coefficient),
            str(_rational(r.length)), r.degree_display,
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(columns))]
    return "".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() + "\n"
        for row in rows)
