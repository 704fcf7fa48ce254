"""Analytic ideal flow of the uniform random walk.

The uniform walk on a strongly connected graph has a unique stationary
distribution pi.  Scaling each row of the transition matrix by pi gives a
link-flow matrix that is nonnegative, zero-diagonal and conserves flow at
every node (row sums equal column sums); with the uniform choice rule all
outgoing links of a node carry equal flow.  This module computes that
matrix, classifies arbitrary matrices against those properties, and
measures entropy.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceFailureError,
    NotNormalizedError,
    NotSquareError,
    NotStronglyConnectedError,
    SinkNodeError,
)
from . import graph as _graph

PROBABILITY_SCALED = "probability-scaled"
MIN_NORMALIZED = "min-normalized"

# above this size the direct linear solve gives way to power iteration
_DENSE_SOLVE_LIMIT = 500
_RESIDUAL_TOL = 1e-10


class PeriodicityWarning(UserWarning):
    """The graph is periodic; pointwise walk convergence needs time averaging."""


@dataclass(frozen=True, eq=False)
class IdealFlowMatrix:
    """Link-flow matrix together with its scale mode."""

    matrix: np.ndarray
    mode: str
    labels: tuple[str, ...] | None = None


@dataclass(frozen=True)
class FlowClassification:
    """Category plus the first violated property, if any.

    ``category`` is one of ``not-ideal``, ``generalized-ideal``,
    ``standard-ideal``.  ``degenerate`` flags the all-zero matrix, which
    satisfies the conservation properties only vacuously.
    """

    category: str
    violated: str | None = None
    degenerate: bool = False


def transition_from_adjacency(A: np.ndarray, labels=None) -> np.ndarray:
    """Row-normalize an adjacency matrix into uniform-choice probabilities."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSquareError(A.shape)
    out_degree = A.sum(axis=1)
    for i in np.flatnonzero(out_degree == 0):
        raise SinkNodeError(labels[i] if labels is not None else int(i))
    return A / out_degree[:, None]


def _validate_transition(S: np.ndarray) -> np.ndarray:
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise NotSquareError(S.shape)
    if np.any(S < 0):
        raise ValueError("transition matrix has a negative entry")
    if np.max(np.abs(S.sum(axis=1) - 1.0)) > 1e-12:
        raise ValueError("transition matrix rows must sum to 1")
    return S


def _support_strongly_connected(S: np.ndarray) -> bool:
    n = S.shape[0]
    succ = [np.flatnonzero(S[i] > 0) for i in range(n)]
    pred = [np.flatnonzero(S[:, j] > 0) for j in range(n)]
    for nbrs in (succ, pred):
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    queue.append(int(v))
        if count != n:
            return False
    return True


def stationary_distribution(S: np.ndarray, method: str = "auto") -> np.ndarray:
    """The unique pi with pi @ S = pi and sum(pi) = 1.

    ``method`` is ``"solve"`` (replace one balance equation with the
    normalization equation and solve the dense linear system),
    ``"power"`` (damped power iteration, robust to periodic chains), or
    ``"auto"`` which picks the solve below 500 nodes.
    """
    S = _validate_transition(S)
    if not _support_strongly_connected(S):
        raise NotStronglyConnectedError(
            "stationary distribution requires a strongly connected support"
        )
    n = S.shape[0]
    if method == "auto":
        method = "solve" if n <= _DENSE_SOLVE_LIMIT else "power"
    if method == "solve":
        M = S.T - np.eye(n)
        M[-1, :] = 1.0
        b = np.zeros(n)
        b[-1] = 1.0
        pi = np.linalg.solve(M, b)
        pi = pi / pi.sum()
    elif method == "power":
        pi = np.full(n, 1.0 / n)
        for _ in range(500_000):
            # averaging with the identity damps the rotating modes of
            # periodic chains without moving the fixed point
            nxt = 0.5 * (pi + pi @ S)
            nxt /= nxt.sum()
            if np.max(np.abs(nxt - pi)) < 1e-16:
                pi = nxt
                break
            pi = nxt
    else:
        raise ValueError(f"unknown method {method!r}")
    residual = float(np.max(np.abs(pi @ S - pi)))
    if residual > _RESIDUAL_TOL:
        raise ConvergenceFailureError(residual)
    return pi


def ideal_flow(
    pi: np.ndarray,
    S: np.ndarray,
    mode: str = MIN_NORMALIZED,
    labels=None,
) -> IdealFlowMatrix:
    """Scale each transition row by its stationary mass.

    Probability scaling leaves the entries summing to 1; min-normalization
    divides by the smallest nonzero entry so the weakest link carries
    exactly 1.
    """
    pi = np.asarray(pi, dtype=float)
    S = np.asarray(S, dtype=float)
    F = pi[:, None] * S
    if mode == MIN_NORMALIZED:
        nonzero = F[F > 0]
        if nonzero.size:
            F = F / nonzero.min()
    elif mode != PROBABILITY_SCALED:
        raise ValueError(f"unknown scale mode {mode!r}")
    return IdealFlowMatrix(matrix=F, mode=mode, labels=tuple(labels) if labels else None)


def graph_ideal_flow(g, mode: str = MIN_NORMALIZED, method: str = "auto"):
    """Compute (S, pi, flow) for a graph, warning when it is periodic."""
    if not _graph.strongly_connected(g):
        raise NotStronglyConnectedError(
            "ideal flow requires a strongly connected graph"
        )
    A = _graph.adjacency_matrix(g)
    S = transition_from_adjacency(A, labels=g.nodes)
    pi = stationary_distribution(S, method=method)
    p = _graph.period(g)
    if p > 1:
        warnings.warn(
            f"graph has period {p}; empirical walk counts converge only as "
            "time averages",
            PeriodicityWarning,
            stacklevel=2,
        )
    return S, pi, ideal_flow(pi, S, mode=mode, labels=g.nodes)


def entropy(p: np.ndarray) -> float:
    """Base-2 entropy of a probability vector, with 0*log(0) = 0."""
    p = np.asarray(p, dtype=float)
    if p.size == 0 or np.any(p < 0):
        raise NotNormalizedError("probability vector must be nonnegative")
    if abs(p.sum() - 1.0) > 1e-9:
        raise NotNormalizedError(f"probabilities sum to {p.sum()!r}, expected 1")
    q = p[p > 0]
    return float(-(q * np.log2(q)).sum())


def classify_ideal_flow(M: np.ndarray, tolerance: float = 1e-9) -> FlowClassification:
    """Grade a square matrix against the ideal-flow property list.

    Checks, in order: nonnegativity, zero diagonal, row/column-sum
    equality, and equal flow on all nonzero entries within each row.  The
    first three passing yields ``generalized-ideal``; all four yield
    ``standard-ideal``.  The all-zero matrix passes only vacuously and is
    flagged degenerate.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotSquareError(M.shape)
    if np.any(M < -tolerance):
        return FlowClassification("not-ideal", violated="nonnegative")
    if np.any(np.abs(np.diag(M)) > tolerance):
        return FlowClassification("not-ideal", violated="zero-diagonal")
    imbalance = np.abs(M.sum(axis=1) - M.sum(axis=0))
    if np.any(imbalance > tolerance):
        return FlowClassification("not-ideal", violated="premagic")
    if not np.any(np.abs(M) > tolerance):
        return FlowClassification("generalized-ideal", degenerate=True)
    for row in M:
        nonzero = row[np.abs(row) > tolerance]
        if nonzero.size and nonzero.max() - nonzero.min() > tolerance:
            return FlowClassification("generalized-ideal", violated="equal-outflow")
    return FlowClassification("standard-ideal")
