"""Serialize verification results as JSON, CSV or Markdown.

Complex numbers become ``[re, im]`` pairs.  Floats are written with
``repr`` (shortest round-trip decimal), so parsing a JSON or CSV report back
recovers every number bit for bit.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable, Sequence

from .identities import PARAM_NAMES, Identity, ParamPoint, TableRow, get
from .verify import IdentityVerdict, VerificationRecord

__all__ = [
    "FORMATS",
    "complex_pair",
    "record_to_dict",
    "verdict_to_dict",
    "render_verdicts",
    "render_table",
    "render_list",
    "render_constants",
]

FORMATS = ("json", "csv", "markdown")


def _num(x: float) -> float | None:
    # JSON has no NaN/Inf; those never occur in values, only in estimates
    return x if math.isfinite(x) else None


def complex_pair(z: complex | None) -> list[float] | None:
    if z is None:
        return None
    z = complex(z)
    return [z.real, z.imag]


def _params(pp: ParamPoint, uses) -> dict[str, list[float] | None]:
    return {name: complex_pair(getattr(pp, name)) if name in uses else None for name in PARAM_NAMES}


def record_to_dict(rec: VerificationRecord) -> dict[str, Any]:
    uses = get(rec.identity_id).uses
    return {
        "identity_id": rec.identity_id,
        "params": _params(rec.params, uses),
        "lhs": complex_pair(rec.lhs),
        "rhs": complex_pair(rec.rhs),
        "abs_err": rec.abs_err,
        "rel_err": rec.rel_err,
        "tol": rec.tol,
        "quad_converged": rec.quad_converged,
        "quad_err_estimate": _num(rec.quad_err_estimate),
        "quad_levels": rec.quad_levels,
        "quad_evaluations": rec.quad_evaluations,
        "reading_rel_err": dict(rec.reading_rel_err),
        "status": rec.status,
    }


def verdict_to_dict(v: IdentityVerdict, row: TableRow | None = None) -> dict[str, Any]:
    uses = get(v.identity_id).uses
    out: dict[str, Any] = {}
    if row is not None:
        out["row"] = row.row
        out["label"] = row.label
    out.update({
        "identity_id": v.identity_id,
        "verdict": v.verdict,
        "status_hint": v.status_hint,
        "n_records": len(v.records),
        "n_pass": sum(r.status == "PASS" for r in v.records),
        "max_rel_err": v.max_rel_err,
        "matching_readings": list(v.matching_readings),
        "skipped": [{"params": _params(pp, uses), "reason": msg} for pp, msg in v.skipped],
    })
    return out


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if c is None else (repr(c) if isinstance(c, float) else c) for c in row])
    return buf.getvalue()


def _fmt_c(z: complex | None, digits: int = 12) -> str:
    if z is None:
        return ""
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.{digits}g}"
    return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"


def _fmt_params(pp: ParamPoint, uses) -> str:
    parts = [f"{name}={_fmt_c(getattr(pp, name), 6)}" for name in PARAM_NAMES if name in uses]
    return ", ".join(parts) if parts else "(fixed)"


def _status_text(v: IdentityVerdict) -> str:
    if v.status_hint == "suspected_typo":
        return f"{v.verdict} (suspected typo)"
    return v.verdict


# ---------------------------------------------------------------------------


_RECORD_CSV_HEADER = (
    ["identity_id"]
    + [f"{n}_{part}" for n in PARAM_NAMES for part in ("re", "im")]
    + ["lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "tol", "quad_converged", "status"]
)


def _record_csv_row(rec: VerificationRecord) -> list:
    uses = get(rec.identity_id).uses
    row: list[Any] = [rec.identity_id]
    for name in PARAM_NAMES:
        z = getattr(rec.params, name) if name in uses else None
        row += [None, None] if z is None else [z.real, z.imag]
    row += [rec.lhs.real, rec.lhs.imag, rec.rhs.real, rec.rhs.imag,
            rec.abs_err, rec.rel_err, rec.tol, str(rec.quad_converged).lower(), rec.status]
    return row


def _records_markdown(v: IdentityVerdict) -> list[str]:
    ident = get(v.identity_id)
    lines = [
        f"## {v.identity_id}: {_status_text(v)}",
        "",
        f"`{ident.integrand_text}` = `{ident.closed_form_text}`",
        "",
        "| Params | LHS (quadrature) | RHS (closed form) | Rel err | Tol | Status |",
        "|---|---|---|---|---|---|",
    ]
    for r in v.records:
        lines.append(
            f"| {_fmt_params(r.params, ident.uses)} | {_fmt_c(r.lhs)} | {_fmt_c(r.rhs)} "
            f"| {r.rel_err:.2e} | {r.tol:.0e} | {r.status} |"
        )
    if len(ident.readings) > 1:
        names = ", ".join(v.matching_readings) if v.matching_readings else "none"
        lines += ["", f"Readings matching every point: {names}"]
    if v.skipped:
        lines += ["", "Skipped (outside domain):"]
        lines += [f"- {_fmt_params(pp, ident.uses)}: {msg}" for pp, msg in v.skipped]
    return lines


def render_verdicts(command: str, config: dict, verdicts: Sequence[IdentityVerdict], fmt: str) -> str:
    """Report for ``verify`` and ``sweep``."""
    if fmt == "json":
        return _dump_json({
            "command": command,
            "config": config,
            "records": [record_to_dict(r) for v in verdicts for r in v.records],
            "verdicts": [verdict_to_dict(v) for v in verdicts],
        })
    if fmt == "csv":
        return _csv(_RECORD_CSV_HEADER, (_record_csv_row(r) for v in verdicts for r in v.records))
    lines: list[str] = []
    for v in verdicts:
        if lines:
            lines.append("")
        lines += _records_markdown(v)
    return "\n".join(lines) + "\n"


def render_table(config: dict, rows: Sequence[tuple[TableRow, IdentityVerdict]], fmt: str) -> str:
    """Report for ``table``: one line per table row with its verdict."""
    if fmt == "json":
        return _dump_json({
            "command": "table",
            "config": config,
            "records": [record_to_dict(r) for _, v in rows for r in v.records],
            "verdicts": [verdict_to_dict(v, row) for row, v in rows],
        })
    if fmt == "csv":
        header = ["row", "identity_id", "integrand", "closed_form", "n_records", "max_rel_err",
                  "verdict", "status_hint"]
        return _csv(header, (
            [row.row, v.identity_id, row.label, get(v.identity_id).closed_form_text,
             len(v.records), v.max_rel_err, v.verdict, v.status_hint]
            for row, v in rows
        ))
    lines = [
        "| Row | f(x) | Integral over (0, 1) | Identity | Points | Max rel err | Status |",
        "|---|---|---|---|---|---|---|",
    ]
    for row, v in rows:
        ident = get(v.identity_id)
        lines.append(
            f"| {row.row} | `{row.label}` | `{ident.closed_form_text}` | {v.identity_id} "
            f"| {len(v.records)} | {v.max_rel_err:.2e} | {_status_text(v)} |"
        )
    return "\n".join(lines) + "\n"


def render_list(config: dict, identities: Sequence[Identity], fmt: str) -> str:
    def uses(ident):
        return "".join(n for n in PARAM_NAMES if n in ident.uses)

    if fmt == "json":
        return _dump_json({
            "command": "list",
            "config": config,
            "identities": [
                {
                    "id": i.id,
                    "description": i.description,
                    "uses": [n for n in PARAM_NAMES if n in i.uses],
                    "status_hint": i.status_hint,
                    "default_tol": i.default_tol,
                    "readings": list(i.readings),
                    "integrand": i.integrand_text,
                    "closed_form": i.closed_form_text,
                }
                for i in identities
            ],
        })
    if fmt == "csv":
        return _csv(["id", "uses", "status_hint", "default_tol", "description"],
                    ([i.id, uses(i), i.status_hint, i.default_tol, i.description] for i in identities))
    lines = ["| Id | Uses | Default tol | Hint | Description |", "|---|---|---|---|---|"]
    for i in identities:
        lines.append(f"| {i.id} | {uses(i) or '-'} | {i.default_tol:.0e} | {i.status_hint} | {i.description} |")
    return "\n".join(lines) + "\n"


def render_constants(config: dict, values: Sequence[tuple[str, float]], fmt: str) -> str:
    if fmt == "json":
        return _dump_json({"command": "constants", "config": config, "constants": dict(values)})
    if fmt == "csv":
        return _csv(["name", "value"], ([n, f"{v:.15g}"] for n, v in values))
    lines = ["| Constant | Value |", "|---|---|"]
    lines += [f"| {n} | {v:.15g} |" for n, v in values]
    return "\n".join(lines) + "\n"
