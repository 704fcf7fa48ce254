"""Seeded multi-agent uniform random walks and convergence measurement.

Each agent draws from an independent random substream keyed by
(seed, agent index), so aggregate counts are identical no matter in which
order agents execute, and repeated runs are bit-identical.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import AllZeroError, SinkNodeError, ZeroAgentsError
from .flow import IdealFlowMatrix
from .graph import DirectedGraph, strongly_connected
from .trajectories import Trajectory, TrajectorySet


@dataclass(frozen=True)
class SimConfig:
    """Parameters of one simulation run."""

    agents: int
    steps: int
    seed: int = 0
    checkpoints: int = 1
    record_trajectories: bool = False
    warmup: int = 0
    log_spacing: bool = False

    def __post_init__(self):
        if self.agents < 1:
            raise ZeroAgentsError(self.agents)
        if self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if not 1 <= self.checkpoints <= self.steps:
            raise ValueError(
                f"checkpoints must lie in [1, steps], got {self.checkpoints}"
            )
        if not 0 <= self.warmup < self.steps:
            raise ValueError(f"warmup must lie in [0, steps), got {self.warmup}")

    @property
    def counted_steps_per_agent(self) -> int:
        return self.steps - self.warmup

    @property
    def total_counted_steps(self) -> int:
        return self.agents * self.counted_steps_per_agent


@dataclass(frozen=True, eq=False)
class CountAggregate:
    """Link-traversal counts of a whole run (multiplicity counts)."""

    counts: np.ndarray
    total_steps: int
    labels: tuple[str, ...]


@dataclass(frozen=True)
class ConvergenceSeries:
    """(cumulative counted steps, L-inf distance) pairs, steps increasing."""

    points: tuple[tuple[int, float], ...]


@dataclass(frozen=True, eq=False)
class SimResult:
    aggregate: CountAggregate
    trajectories: TrajectorySet | None = None


def _agent_visits(succ, n, seed, agent, steps):
    """Node-index sequence (length steps+1) of one agent's walk."""
    rng = np.random.default_rng([seed, agent])
    u = rng.random(steps + 1).tolist()
    node = int(u[0] * n)
    visits = [node]
    append = visits.append
    for t in range(1, steps + 1):
        nbrs = succ[node]
        node = nbrs[int(u[t] * len(nbrs))]
        append(node)
    return visits


def _pair_codes(visits, warmup, n):
    arr = np.asarray(visits, dtype=np.int64)
    return arr[warmup:-1] * n + arr[warmup + 1 :]


def checkpoint_positions(total: int, count: int, log_spacing: bool) -> list[int]:
    """Cumulative-step positions of the measurement points.

    Even spacing puts them at multiples of total/count; log spacing puts
    each point a factor of 10 below the next, ending at ``total``.
    """
    if log_spacing:
        raw = [total / 10 ** (count - k) for k in range(1, count + 1)]
    else:
        raw = [total * k / count for k in range(1, count + 1)]
    positions: list[int] = []
    for x in raw:
        p = max(1, round(x))
        if not positions or p > positions[-1]:
            positions.append(p)
    return positions


def _check_walkable(g: DirectedGraph):
    for i, nbrs in enumerate(g.successor_indices):
        if not nbrs:
            raise SinkNodeError(g.nodes[i])
    if not strongly_connected(g):
        warnings.warn(
            "graph is not strongly connected; counts remain valid but there "
            "is no analytic convergence target",
            UserWarning,
            stacklevel=3,
        )


def _run(g: DirectedGraph, cfg: SimConfig, target_prob=None):
    """Shared agent loop: final counts, optional paths, optional distances."""
    _check_walkable(g)
    n = g.n
    succ = [list(s) for s in g.successor_indices]
    flat = np.zeros(n * n, dtype=np.int64)
    recorded: list[Trajectory] = []
    points: list[tuple[int, float]] = []

    positions = []
    if target_prob is not None:
        positions = checkpoint_positions(
            cfg.total_counted_steps, cfg.checkpoints, cfg.log_spacing
        )
    next_cp = 0  # index into positions
    per_agent = cfg.counted_steps_per_agent

    for a in range(cfg.agents):
        visits = _agent_visits(succ, n, cfg.seed, a, cfg.steps)
        codes = _pair_codes(visits, cfg.warmup, n)
        offset = a * per_agent
        while next_cp < len(positions) and positions[next_cp] <= offset + per_agent:
            local = positions[next_cp] - offset
            snapshot = flat + np.bincount(codes[:local], minlength=n * n)
            empirical = snapshot / positions[next_cp]
            dist = float(np.max(np.abs(empirical - target_prob.ravel())))
            points.append((positions[next_cp], dist))
            next_cp += 1
        flat += np.bincount(codes, minlength=n * n)
        if cfg.record_trajectories:
            path = tuple(g.nodes[i] for i in visits[cfg.warmup :])
            recorded.append(Trajectory(id=a + 1, path=path))

    counts = flat.reshape(n, n)
    return counts, recorded, points


def simulate(g: DirectedGraph, cfg: SimConfig) -> SimResult:
    """Run the walk and aggregate every link traversal.

    Agents start at uniformly drawn nodes and take ``cfg.steps`` uniform
    out-neighbor moves each; the first ``cfg.warmup`` moves per agent are
    discarded from the counts.  Deterministic for a fixed seed.
    """
    counts, recorded, _ = _run(g, cfg)
    aggregate = CountAggregate(
        counts=counts, total_steps=cfg.total_counted_steps, labels=g.nodes
    )
    trajectories = (
        TrajectorySet(recorded, g) if cfg.record_trajectories else None
    )
    return SimResult(aggregate=aggregate, trajectories=trajectories)


def relative_flow(R) -> np.ndarray:
    """Counts divided by their minimum nonzero entry."""
    counts = R.counts if isinstance(R, CountAggregate) else np.asarray(R)
    nonzero = counts[counts > 0]
    if not nonzero.size:
        raise AllZeroError()
    return counts / nonzero.min()


def convergence_study(
    g: DirectedGraph, cfg: SimConfig, target: IdealFlowMatrix
) -> ConvergenceSeries:
    """Distance to the analytic flow at each checkpoint.

    Both sides are compared on the probability scale (entries summing
    to 1); min-normalized distances would be ill-conditioned whenever the
    weakest link has seen few traversals.
    """
    total = target.matrix.sum()
    if total <= 0:
        raise AllZeroError("target flow matrix has no nonzero entry")
    target_prob = np.asarray(target.matrix, dtype=float) / total
    if target_prob.shape != (g.n, g.n):
        raise ValueError("target shape does not match the graph")
    _, _, points = _run(g, cfg, target_prob=target_prob)
    return ConvergenceSeries(points=tuple(points))
