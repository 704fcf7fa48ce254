"""Trajectory ingestion and the three utilization-matrix levels.

A trajectory is an identified node sequence that walks along graph edges.
Utilization is analyzed at three levels: grids of trajectory-id sets,
their cardinalities, and the binarization of the counts.  Set semantics
apply throughout: a trajectory counts once per cell no matter how often
it satisfies the cell's condition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    DuplicateIdError,
    NonEdgeStepError,
    ParseError,
    TooShortError,
    TrajectoryValidationError,
    UnknownNodeError,
)
from .graph import DirectedGraph


@dataclass(frozen=True)
class Trajectory:
    id: int
    path: tuple[str, ...]


class TrajectorySet:
    """Validated trajectories over one graph.

    Construction checks every step against the graph's edge set and fails
    on the first violation; use :func:`load_trajectories` to collect all
    violations of a file at once.
    """

    def __init__(self, trajectories, graph: DirectedGraph):
        self.graph = graph
        items: list[Trajectory] = []
        seen_ids: set[int] = set()
        for tr in trajectories:
            validate_trajectory(tr, graph)
            if tr.id in seen_ids:
                raise DuplicateIdError(tr.id)
            seen_ids.add(tr.id)
            items.append(tr)
        self.trajectories: tuple[Trajectory, ...] = tuple(items)

    def __len__(self):
        return len(self.trajectories)

    def __iter__(self):
        return iter(self.trajectories)

    def ids(self) -> frozenset[int]:
        return frozenset(tr.id for tr in self.trajectories)


def validate_trajectory(tr: Trajectory, graph: DirectedGraph) -> None:
    if not isinstance(tr.id, int) or tr.id < 1:
        raise ValueError(f"trajectory id must be a positive integer, got {tr.id!r}")
    if len(tr.path) < 2:
        raise TooShortError(tr.id, len(tr.path))
    for label in tr.path:
        if label not in graph.index:
            raise UnknownNodeError(label, f"trajectory {tr.id}")
    for u, v in zip(tr.path, tr.path[1:]):
        if not graph.has_edge(u, v):
            raise NonEdgeStepError(u, v, tr.id)


def parse_trajectory_line(line: str):
    """Parse one `<id>: <node> <node> ...` line into (id, path tuple)."""
    head, sep, tail = line.partition(":")
    if not sep:
        raise ValueError("missing ':' separator")
    try:
        tid = int(head.strip())
    except ValueError:
        raise ValueError(f"trajectory id {head.strip()!r} is not an integer") from None
    if tid < 1:
        raise ValueError(f"trajectory id must be positive, got {tid}")
    path = tuple(tail.split())
    return tid, path


def load_trajectories(path, graph: DirectedGraph) -> TrajectorySet:
    """Read a trajectory file, validating every line against the graph.

    All invalid lines are collected and raised together as a
    :class:`TrajectoryValidationError`, so callers can report every
    defect in one pass.  Blank lines and `#` comments are ignored.
    """
    errors = []
    valid: list[Trajectory] = []
    seen_ids: set[int] = set()
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                tid, node_path = parse_trajectory_line(stripped)
            except ValueError as exc:
                errors.append(ParseError(path, line_no, str(exc)))
                continue
            tr = Trajectory(id=tid, path=node_path)
            try:
                validate_trajectory(tr, graph)
                if tid in seen_ids:
                    raise DuplicateIdError(tid)
            except Exception as exc:  # noqa: BLE001 - collected for aggregate report
                errors.append(exc)
                continue
            seen_ids.add(tid)
            valid.append(tr)
    if errors:
        raise TrajectoryValidationError(errors)
    return TrajectorySet(valid, graph)


class SetMatrix:
    """Square grid of trajectory-id sets, one cell per ordered node pair."""

    def __init__(self, labels, cells=None):
        self.labels: tuple[str, ...] = tuple(labels)
        n = len(self.labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if cells is None:
            cells = [[frozenset()] * n for _ in range(n)]
        self._cells: tuple[tuple[frozenset, ...], ...] = tuple(
            tuple(frozenset(cells[i][j]) for j in range(n)) for i in range(n)
        )

    @property
    def n(self) -> int:
        return len(self.labels)

    def cell(self, i: int, j: int) -> frozenset:
        return self._cells[i][j]

    def __getitem__(self, key) -> frozenset:
        u, v = key
        return self._cells[self._index[u]][self._index[v]]

    def counts(self) -> np.ndarray:
        return np.array(
            [[len(c) for c in row] for row in self._cells], dtype=np.int64
        )

    def items(self):
        """Yield ((row label, col label), ids) for every nonempty cell."""
        for i, u in enumerate(self.labels):
            for j, v in enumerate(self.labels):
                if self._cells[i][j]:
                    yield (u, v), self._cells[i][j]

    def __eq__(self, other):
        if not isinstance(other, SetMatrix):
            return NotImplemented
        return self.labels == other.labels and self._cells == other._cells

    def __hash__(self):
        return hash((self.labels, self._cells))

    def __repr__(self):
        filled = sum(1 for _ in self.items())
        return f"SetMatrix(n={self.n}, nonempty_cells={filled})"


def _empty_grid(n):
    return [[set() for _ in range(n)] for _ in range(n)]


def flow_set(ts: TrajectorySet) -> SetMatrix:
    """Ids of trajectories traversing each direct link at least once."""
    g = ts.graph
    grid = _empty_grid(g.n)
    for tr in ts:
        for u, v in zip(tr.path, tr.path[1:]):
            grid[g.index[u]][g.index[v]].add(tr.id)
    return SetMatrix(g.nodes, grid)


def od_set(ts: TrajectorySet) -> SetMatrix:
    """Ids of trajectories visiting s strictly before t, for each pair s != t.

    The diagonal is forced empty even when a trajectory revisits a node,
    keeping the origin-destination grid consistent with the zero-diagonal
    reachability binarization.
    """
    g = ts.graph
    grid = _empty_grid(g.n)
    for tr in ts:
        idx = [g.index[lab] for lab in tr.path]
        k = len(idx)
        for p in range(k - 1):
            s = idx[p]
            for q in range(p + 1, k):
                t = idx[q]
                if s != t:
                    grid[s][t].add(tr.id)
    return SetMatrix(g.nodes, grid)


def indirect_set(ts: TrajectorySet) -> SetMatrix:
    """Ids of trajectories going s -> t with at least one intermediate visit."""
    g = ts.graph
    grid = _empty_grid(g.n)
    for tr in ts:
        idx = [g.index[lab] for lab in tr.path]
        k = len(idx)
        for p in range(k - 2):
            s = idx[p]
            for q in range(p + 2, k):
                t = idx[q]
                if s != t:
                    grid[s][t].add(tr.id)
    return SetMatrix(g.nodes, grid)


def partition_indirect(L: SetMatrix, A: np.ndarray):
    """Split indirect flow by direct-link availability.

    Returns (alternative, substitute): cells of ``L`` where the pair also
    has a direct link, and cells where it does not.  The two parts are
    cellwise disjoint and their union reconstructs ``L``.
    """
    A = np.asarray(A)
    n = L.n
    if A.shape != (n, n):
        raise DimensionMismatchError(A.shape, (n, n))
    alt = [[L.cell(i, j) if A[i, j] else frozenset() for j in range(n)] for i in range(n)]
    sub = [[frozenset() if A[i, j] else L.cell(i, j) for j in range(n)] for i in range(n)]
    return SetMatrix(L.labels, alt), SetMatrix(L.labels, sub)


def count_matrix(S: SetMatrix) -> np.ndarray:
    """Elementwise cardinality of a set grid."""
    return S.counts()
