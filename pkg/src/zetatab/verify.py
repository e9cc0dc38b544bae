"""Compare quadrature against closed forms and classify identities.

The left-hand side always comes from :func:`zetatab.identities.eval_lhs`
(quadrature of the integrand) and the right-hand side from
:func:`zetatab.identities.eval_rhs` (special functions only), so the two
sides never share a numerical path.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import identities as ids
from .errors import EmptyGridAfterDomainFilter
from .identities import ParamPoint, TableRow
from .quad import DEFAULT_QUAD, QuadConfig

__all__ = [
    "PASS",
    "FAIL",
    "INCONCLUSIVE",
    "CONFIRMED",
    "FAILED",
    "MIXED",
    "UNDETERMINED",
    "VerificationRecord",
    "IdentityVerdict",
    "classify",
    "verify_point",
    "sweep",
    "reproduce_table",
]

PASS, FAIL, INCONCLUSIVE = "PASS", "FAIL", "INCONCLUSIVE"
CONFIRMED, FAILED, MIXED, UNDETERMINED = "CONFIRMED", "FAILED", "MIXED", "UNDETERMINED"


def _status(converged: bool, rel_err: float, tol: float) -> str:
    if not converged:
        return INCONCLUSIVE
    return PASS if rel_err <= tol else FAIL


def _rel(abs_err: float, rhs: complex) -> float:
    # max(1, |rhs|) keeps tiny right-hand sides from inflating the error
    return abs_err / max(1.0, abs(rhs))


@dataclass(frozen=True)
class VerificationRecord:
    """One comparison of quadrature against closed form at a parameter point.

    ``reading_rel_err`` holds the relative error of every closed-form
    reading the identity defines (always including ``"printed"``).
    """

    identity_id: str
    params: ParamPoint
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    tol: float
    quad_converged: bool
    status: str
    quad_err_estimate: float = math.nan
    quad_levels: int = 0
    quad_evaluations: int = 0
    reading_rel_err: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        expected = _status(self.quad_converged, self.rel_err, self.tol)
        if self.status != expected:
            raise ValueError(f"status {self.status!r} inconsistent with record (expected {expected!r})")


def classify(records: Sequence[VerificationRecord]) -> str:
    """Verdict for a nonempty set of records."""
    if not records:
        raise ValueError("cannot classify an empty record set")
    statuses = {r.status for r in records}
    if statuses == {PASS}:
        return CONFIRMED
    if statuses == {FAIL}:
        return FAILED
    if statuses == {INCONCLUSIVE}:
        return UNDETERMINED
    return MIXED


@dataclass(frozen=True)
class IdentityVerdict:
    """Outcome of a sweep over one identity.

    Attributes
    ----------
    skipped : tuple
        ``(ParamPoint, reason)`` for grid points outside the domain.
    matching_readings : tuple of str
        Closed-form readings under which every record agrees within
        tolerance with a converged quadrature.
    """

    identity_id: str
    records: tuple
    verdict: str
    status_hint: str = ids.EXPECTED_CONFIRMED
    skipped: tuple = ()
    matching_readings: tuple = ()

    def __post_init__(self):
        if self.verdict != classify(self.records):
            raise ValueError("verdict inconsistent with records")

    @property
    def max_rel_err(self) -> float:
        return max(r.rel_err for r in self.records)


def verify_point(
    identity_id: str,
    pp: ParamPoint,
    tol: float | None = None,
    qcfg: QuadConfig | None = None,
) -> VerificationRecord:
    """Evaluate both sides of one identity at ``pp`` and compare.

    ``tol`` defaults to the identity's own tolerance.  Quadrature that does
    not converge yields an ``INCONCLUSIVE`` record rather than an error.
    """
    ident = ids.get(identity_id)
    tol = ident.default_tol if tol is None else float(tol)
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    qcfg = DEFAULT_QUAD if qcfg is None else qcfg
    rhs = ids.eval_rhs(identity_id, pp)
    alt = {name: ids.eval_reading(identity_id, name, pp) for name in ident.readings}
    q = ids.eval_lhs(identity_id, pp, qcfg)
    lhs = complex(q.value)
    abs_err = abs(lhs - rhs)
    rel_err = _rel(abs_err, rhs)
    return VerificationRecord(
        identity_id=identity_id,
        params=pp.restricted(ident.uses),
        lhs=lhs,
        rhs=rhs,
        abs_err=abs_err,
        rel_err=rel_err,
        tol=tol,
        quad_converged=q.converged,
        status=_status(q.converged, rel_err, tol),
        quad_err_estimate=q.err_estimate,
        quad_levels=q.levels_used,
        quad_evaluations=q.evaluations,
        reading_rel_err={name: _rel(abs(lhs - v), v) for name, v in alt.items()},
    )


def _matching(ident, records) -> tuple:
    out = []
    for name in ident.readings:
        if all(r.quad_converged and r.reading_rel_err[name] <= r.tol for r in records):
            out.append(name)
    return tuple(out)


def sweep(
    identity_id: str,
    grid: Iterable[ParamPoint] | None = None,
    tol: float | None = None,
    qcfg: QuadConfig | None = None,
    *,
    workers: int | None = None,
) -> IdentityVerdict:
    """Verify an identity over a parameter grid.

    Points outside the domain are skipped with their reason; records keep
    grid order even when ``workers > 1`` evaluates points in parallel.
    ``grid=None`` uses the identity's default grid.

    Raises
    ------
    ValueError
        If ``grid`` is empty.
    EmptyGridAfterDomainFilter
        If no grid point lies in the domain.
    """
    ident = ids.get(identity_id)
    points = ident.grid() if grid is None else list(grid)
    if not points:
        raise ValueError("grid must be nonempty")
    kept, skipped = [], []
    for pp in points:
        msg = ids.check_domain(identity_id, pp)
        if msg:
            skipped.append((pp, msg))
        else:
            kept.append(pp)
    if not kept:
        reasons = "; ".join(sorted({m for _, m in skipped}))
        raise EmptyGridAfterDomainFilter(f"{identity_id}: every grid point is outside the domain ({reasons})")

    def one(pp):
        return verify_point(identity_id, pp, tol, qcfg)

    if workers and workers > 1 and len(kept) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = tuple(pool.map(one, kept))
    else:
        records = tuple(one(pp) for pp in kept)
    return IdentityVerdict(
        identity_id=identity_id,
        records=records,
        verdict=classify(records),
        status_hint=ident.status_hint,
        skipped=tuple(skipped),
        matching_readings=_matching(ident, records),
    )


def reproduce_table(
    tol: float | None = None,
    qcfg: QuadConfig | None = None,
    *,
    workers: int | None = None,
) -> list[tuple[TableRow, IdentityVerdict]]:
    """Verdict for every row of the integral table, in table order.

    Rows with free parameters are swept over their identity's default grid.
    """
    return [(row, sweep(row.identity_id, None, tol, qcfg, workers=workers)) for row in ids.table_rows()]
