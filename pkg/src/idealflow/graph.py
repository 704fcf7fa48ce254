"""Directed network representation and its structural matrices.

A network is a simple labelled digraph without self-loops.  From it we
derive the adjacency matrix, the minimum-hop distance matrix (with an
``inf`` entry for unreachable pairs), the external matrix (distance minus
adjacency), and the binarizations of the latter two.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatchError,
    DuplicateEdgeError,
    EmptyGraphError,
    NotStronglyConnectedError,
    ParseError,
    SelfLoopError,
    UnknownNodeError,
)

UNREACHABLE = float("inf")


def _clean_label(raw) -> str:
    label = raw if isinstance(raw, str) else str(raw)
    if not label:
        raise ValueError("node labels must be non-empty")
    if any(c.isspace() for c in label) or "," in label:
        raise ValueError(f"node label {label!r} may not contain whitespace or commas")
    return label


class DirectedGraph:
    """Simple digraph whose node order is the first-appearance order.

    The node order is stable across runs and is echoed by every matrix and
    output file, so results are reproducible byte for byte.  Instances are
    immutable once constructed.
    """

    def __init__(self, nodes, edges=()):
        node_list = [_clean_label(x) for x in nodes]
        if not node_list:
            raise EmptyGraphError("graph has no nodes")
        if len(set(node_list)) != len(node_list):
            raise ValueError("duplicate node label in node list")
        self.nodes: tuple[str, ...] = tuple(node_list)
        self.index: dict[str, int] = {lab: i for i, lab in enumerate(self.nodes)}

        seen: set[tuple[str, str]] = set()
        edge_list: list[tuple[str, str]] = []
        for raw_u, raw_v in edges:
            u, v = _clean_label(raw_u), _clean_label(raw_v)
            if u not in self.index:
                raise UnknownNodeError(u, "edge source")
            if v not in self.index:
                raise UnknownNodeError(v, "edge target")
            if u == v:
                raise SelfLoopError(u)
            if (u, v) in seen:
                raise DuplicateEdgeError(u, v)
            seen.add((u, v))
            edge_list.append((u, v))
        self.edges: tuple[tuple[str, str], ...] = tuple(edge_list)
        self._edge_set = frozenset(edge_list)

        succ: list[list[int]] = [[] for _ in self.nodes]
        for u, v in self.edges:
            succ[self.index[u]].append(self.index[v])
        # successor order = edge input order, part of the determinism contract
        self.successor_indices: tuple[tuple[int, ...], ...] = tuple(
            tuple(s) for s in succ
        )

    @property
    def n(self) -> int:
        return len(self.nodes)

    def has_edge(self, u, v) -> bool:
        return (u, v) in self._edge_set

    def successors(self, label: str) -> tuple[str, ...]:
        return tuple(self.nodes[j] for j in self.successor_indices[self.index[label]])

    def out_degree(self, label: str) -> int:
        return len(self.successor_indices[self.index[label]])

    def __repr__(self):
        return f"DirectedGraph(nodes={len(self.nodes)}, edges={len(self.edges)})"


def build_graph(edge_list) -> DirectedGraph:
    """Build a graph from ordered label pairs; nodes in first-appearance order."""
    pairs = [(_clean_label(u), _clean_label(v)) for u, v in edge_list]
    if not pairs:
        raise EmptyGraphError("edge list is empty; no nodes can be derived")
    order: list[str] = []
    known: set[str] = set()
    for u, v in pairs:
        for lab in (u, v):
            if lab not in known:
                known.add(lab)
                order.append(lab)
    return DirectedGraph(order, pairs)


def load_graph(path) -> DirectedGraph:
    """Read an edge-list file: one `source target` pair per line.

    Blank lines and lines starting with `#` are ignored.
    """
    pairs = []
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = stripped.split()
            if len(tokens) != 2:
                raise ParseError(path, line_no, f"expected 2 tokens, got {len(tokens)}")
            pairs.append((tokens[0], tokens[1]))
    return build_graph(pairs)


def adjacency_matrix(g: DirectedGraph) -> np.ndarray:
    """Binary matrix with a 1 in row i, column j iff the edge i -> j exists."""
    A = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        A[g.index[u], g.index[v]] = 1
    return A


def path_matrix(g: DirectedGraph) -> np.ndarray:
    """Minimum hop counts between all node pairs via per-source BFS.

    The diagonal is 0 and unreachable pairs hold ``inf``.  Returned as a
    float matrix so the unreachable sentinel is a genuine tagged value
    rather than a magic integer.
    """
    n = g.n
    P = np.full((n, n), UNREACHABLE)
    for s in range(n):
        P[s, s] = 0.0
        queue = deque([s])
        dist = {s: 0}
        while queue:
            u = queue.popleft()
            for v in g.successor_indices[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    P[s, v] = dist[v]
                    queue.append(v)
    return P


def external_matrix(P: np.ndarray, A: np.ndarray) -> np.ndarray:
    """Distance minus adjacency; ``inf`` propagates through the subtraction."""
    P = np.asarray(P, dtype=float)
    A = np.asarray(A)
    if P.shape != A.shape:
        raise DimensionMismatchError(P.shape, A.shape)
    return P - A


def binarize(M: np.ndarray) -> np.ndarray:
    """1 where the entry is strictly positive and finite, else 0."""
    M = np.asarray(M)
    return ((M > 0) & np.isfinite(M)).astype(np.int64)


def strongly_connected(g: DirectedGraph) -> bool:
    """True iff every ordered node pair is joined by a directed path."""
    n = g.n
    if n == 1:
        return True
    pred: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        for v in g.successor_indices[u]:
            pred[v].append(u)
    return _reach_count(g.successor_indices, 0, n) == n and _reach_count(pred, 0, n) == n


def _reach_count(neighbors, root, n) -> int:
    seen = [False] * n
    seen[root] = True
    queue = deque([root])
    count = 1
    while queue:
        u = queue.popleft()
        for v in neighbors[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count


def period(g: DirectedGraph) -> int:
    """gcd of all directed cycle lengths of a strongly connected graph.

    Computed from a BFS levelling of the first node: each edge (u, v)
    contributes |level(u) + 1 - level(v)|, zero terms discarded.
    """
    if not strongly_connected(g):
        raise NotStronglyConnectedError("period requires a strongly connected graph")
    n = g.n
    if n == 1:
        return 1
    level = [0] * n
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.successor_indices[u]:
            if not seen[v]:
                seen[v] = True
                level[v] = level[u] + 1
                queue.append(v)
    gcd = 0
    for u, v in g.edges:
        d = abs(level[g.index[u]] + 1 - level[g.index[v]])
        if d:
            gcd = math.gcd(gcd, d)
    return gcd


@dataclass(frozen=True, eq=False)
class StructureMatrices:
    """All structural matrices of one graph, in its node order."""

    labels: tuple[str, ...]
    A: np.ndarray
    P: np.ndarray
    E: np.ndarray
    Phat: np.ndarray = field(repr=False)
    Ehat: np.ndarray = field(repr=False)


def structure_matrices(g: DirectedGraph) -> StructureMatrices:
    A = adjacency_matrix(g)
    P = path_matrix(g)
    E = external_matrix(P, A)
    return StructureMatrices(
        labels=g.nodes, A=A, P=P, E=E, Phat=binarize(P), Ehat=binarize(E)
    )
