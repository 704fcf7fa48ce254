"""Cell-level verification of the structure/utilization identities.

All checks operate on count-level (integer) matrices, the only level
where +, - and <= are defined.  Each check returns a report listing the
offending cells rather than raising, so callers can aggregate results.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatchError, NotSquareError

# keeps CLI output bounded on badly broken inputs
DEFECT_CAP = 100


@dataclass
class VerificationReport:
    """Outcome of one identity check.

    ``defects`` holds (row, col, lhs, rhs) tuples for every violated cell,
    capped at :data:`DEFECT_CAP`.  ``holds`` is true iff no defect was
    found.  ``skipped`` marks checks whose precondition was unmet.
    """

    name: str
    defects: list = field(default_factory=list)
    skipped: bool = False
    note: str = ""

    @property
    def holds(self) -> bool:
        return not self.defects

    def to_json_obj(self, labels=None):
        def cell_name(i):
            return labels[i] if labels is not None else int(i)

        return {
            "name": self.name,
            "holds": self.holds,
            "skipped": self.skipped,
            "note": self.note,
            "defects": [
                {
                    "row": cell_name(r),
                    "col": cell_name(c),
                    "lhs": _plain(lhs),
                    "rhs": _plain(rhs),
                }
                for r, c, lhs, rhs in self.defects
            ],
        }


def _plain(x):
    x = float(x)
    return int(x) if x.is_integer() else x


def _require_same_shape(*matrices):
    shape = matrices[0].shape
    for m in matrices[1:]:
        if m.shape != shape:
            raise DimensionMismatchError(shape, m.shape)


def hadamard(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Elementwise product of two equally shaped matrices."""
    X = np.asarray(X)
    Y = np.asarray(Y)
    if X.shape != Y.shape:
        raise DimensionMismatchError(X.shape, Y.shape)
    return X * Y


def _collect_defects(report, rows, cols, lhs, rhs):
    for r, c in zip(rows, cols):
        if len(report.defects) >= DEFECT_CAP:
            break
        report.defects.append((int(r), int(c), lhs[r, c], rhs[r, c]))


def verify_inequality(F, A, D) -> VerificationReport:
    """Check the chain F <= A*D <= D cellwise (``*`` is elementwise)."""
    F = np.asarray(F)
    A = np.asarray(A)
    D = np.asarray(D)
    _require_same_shape(F, A, D)
    AD = A * D
    report = VerificationReport(name="F <= A*D <= D")
    bad = np.argwhere(F > AD)
    _collect_defects(report, bad[:, 0], bad[:, 1], F, AD)
    bad = np.argwhere(AD > D)
    _collect_defects(report, bad[:, 0], bad[:, 1], AD, D)
    return report


def verify_flow_identities(F, D, L, T, A, Phat, Ehat) -> list[VerificationReport]:
    """Check the four identities tying utilization counts to structure.

    With * the elementwise product:

    1. L = T + Ehat*D   (indirect flow splits into alternative-route flow
       plus flow over pairs whose shortest connection needs >1 link)
    2. A*D = D - Ehat*D (direct-link demand is total demand minus the part
       with no direct link)
    3. D = Phat*D       (demand only exists where a path exists)
    4. F = A*D - T      (link flow is direct-link demand minus the part
       that detoured)

    All comparisons are exact integer equality.
    """
    F, D, L, T = (np.asarray(m) for m in (F, D, L, T))
    A, Phat, Ehat = (np.asarray(m) for m in (A, Phat, Ehat))
    _require_same_shape(F, D, L, T, A, Phat, Ehat)
    ED = Ehat * D
    checks = [
        ("L = T + Ehat*D", L, T + ED),
        ("A*D = D - Ehat*D", A * D, D - ED),
        ("D = Phat*D", D, Phat * D),
        ("F = A*D - T", F, A * D - T),
    ]
    reports = []
    for name, lhs, rhs in checks:
        report = VerificationReport(name=name)
        bad = np.argwhere(lhs != rhs)
        _collect_defects(report, bad[:, 0], bad[:, 1], lhs, rhs)
        reports.append(report)
    return reports


def verify_premagic(M, tolerance: float = 0.0) -> VerificationReport:
    """Check that each node's row sum equals its column sum.

    Use tolerance 0 for integer matrices and a small positive tolerance
    for real-valued flows.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotSquareError(M.shape)
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    row = M.sum(axis=1)
    col = M.sum(axis=0)
    report = VerificationReport(name="premagic")
    for i in np.flatnonzero(np.abs(row - col) > tolerance):
        if len(report.defects) >= DEFECT_CAP:
            break
        report.defects.append((int(i), int(i), row[i], col[i]))
    return report
