"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 structural
precondition failure (graph not strongly connected).  Diagnostics go to
stderr; data goes to files and stdout only, so the tool pipelines cleanly.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

import numpy as np

from . import __version__
from .errors import (
    IdealFlowError,
    NotStronglyConnectedError,
    TrajectoryValidationError,
)
from .flow import (
    MIN_NORMALIZED,
    PROBABILITY_SCALED,
    classify_ideal_flow,
    entropy,
    graph_ideal_flow,
)
from .graph import load_graph, period, strongly_connected, structure_matrices
from .matrixio import (
    format_real,
    write_convergence_csv,
    write_json,
    write_matrix_csv,
    write_matrix_json,
    write_set_matrix_json,
    write_trajectories,
    write_vector_csv,
)
from .relations import verify_flow_identities, verify_inequality, verify_premagic
from .simulate import (
    CountAggregate,
    ConvergenceSeries,
    SimConfig,
    _run,
    relative_flow,
)
from .trajectories import (
    count_matrix,
    flow_set,
    indirect_set,
    load_trajectories,
    od_set,
    partition_indirect,
)
from .graph import binarize


def _write_matrix(outdir: Path, stem: str, labels, M, integral=False, fmt="csv", **extra):
    if fmt == "json":
        write_matrix_json(outdir / f"{stem}.json", labels, M, integral=integral, **extra)
    else:
        write_matrix_csv(outdir / f"{stem}.csv", labels, M, integral=integral)


def run_matrices(graph_path, outdir, fmt="csv") -> int:
    g = load_graph(graph_path)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    sm = structure_matrices(g)
    _write_matrix(outdir, "A", sm.labels, sm.A, integral=True, fmt=fmt)
    _write_matrix(outdir, "P", sm.labels, sm.P, integral=True, fmt=fmt)
    _write_matrix(outdir, "E", sm.labels, sm.E, integral=True, fmt=fmt)
    _write_matrix(outdir, "Phat", sm.labels, sm.Phat, integral=True, fmt=fmt)
    _write_matrix(outdir, "Ehat", sm.labels, sm.Ehat, integral=True, fmt=fmt)
    connected = strongly_connected(g)
    period_str = str(period(g)) if connected else "n/a"
    print(
        f"nodes={g.n} edges={len(g.edges)} "
        f"strongly_connected={'true' if connected else 'false'} period={period_str}"
    )
    return 0


def run_ideal(graph_path, outdir, mode=MIN_NORMALIZED, tol=1e-9, fmt="csv") -> int:
    g = load_graph(graph_path)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    S, pi, flow = graph_ideal_flow(g, mode=mode)
    p = period(g)
    classification = classify_ideal_flow(flow.matrix, tolerance=tol)
    _write_matrix(outdir, "ideal_flow", g.nodes, flow.matrix, fmt=fmt, mode=mode)
    write_vector_csv(outdir / "pi.csv", g.nodes, pi, value_header="pi")
    report = {
        "nodes": list(g.nodes),
        "mode": mode,
        "strongly_connected": True,
        "period": p,
        "classification": {
            "category": classification.category,
            "violated": classification.violated,
            "degenerate": classification.degenerate,
        },
        "stationary_entropy": float(format_real(entropy(pi))),
        "row_entropies": {
            lab: float(format_real(entropy(S[i]))) for i, lab in enumerate(g.nodes)
        },
        "residual": float(format_real(np.max(np.abs(pi @ S - pi)))),
    }
    write_json(outdir / "report.json", report)
    print(f"classification={classification.category} mode={mode} period={p}")
    return 0


def run_simulate(
    graph_path,
    outdir,
    agents=1,
    steps=1000,
    seed=0,
    checkpoints=10,
    record=False,
    warmup=0,
    log_spacing=False,
    fmt="csv",
) -> int:
    g = load_graph(graph_path)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    cfg = SimConfig(
        agents=agents,
        steps=steps,
        seed=seed,
        checkpoints=checkpoints,
        record_trajectories=record,
        warmup=warmup,
        log_spacing=log_spacing,
    )
    target_prob = None
    if strongly_connected(g):
        _, _, target = graph_ideal_flow(g, mode=PROBABILITY_SCALED)
        target_prob = target.matrix
    else:
        print(
            "notice: graph is not strongly connected; convergence series skipped",
            file=sys.stderr,
        )
    counts, recorded, points = _run(g, cfg, target_prob=target_prob)
    aggregate = CountAggregate(
        counts=counts, total_steps=cfg.total_counted_steps, labels=g.nodes
    )
    _write_matrix(outdir, "R", g.nodes, aggregate.counts, integral=True, fmt=fmt)
    _write_matrix(outdir, "relative_flow", g.nodes, relative_flow(aggregate), fmt=fmt)
    summary = f"total_steps={aggregate.total_steps}"
    if target_prob is not None:
        series = ConvergenceSeries(points=tuple(points))
        write_convergence_csv(outdir / "convergence.csv", series)
        summary += f" final_linf={format_real(series.points[-1][1])}"
    if record:
        write_trajectories(outdir / "trajectories.txt", recorded)
    print(summary)
    return 0


_LEVELS = ("F", "D", "L", "T", "TC")


def run_analyze(graph_path, traj_path, outdir, fmt="csv") -> int:
    g = load_graph(graph_path)
    ts = load_trajectories(traj_path, g)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    sm = structure_matrices(g)
    L_sets = indirect_set(ts)
    T_sets, TC_sets = partition_indirect(L_sets, sm.A)
    set_matrices = {
        "F": flow_set(ts),
        "D": od_set(ts),
        "L": L_sets,
        "T": T_sets,
        "TC": TC_sets,
    }
    for name in _LEVELS:
        S = set_matrices[name]
        write_set_matrix_json(outdir / f"{name}_set.json", S)
        counts = count_matrix(S)
        _write_matrix(outdir, name, g.nodes, counts, integral=True, fmt=fmt)
        _write_matrix(outdir, f"{name}hat", g.nodes, binarize(counts), integral=True, fmt=fmt)
    print(f"trajectories={len(ts)} nodes={g.n}")
    return 0


def run_verify(graph_path, traj_path, outdir, tol=1e-9, tamper=None) -> int:
    g = load_graph(graph_path)
    ts = load_trajectories(traj_path, g)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    sm = structure_matrices(g)
    L_sets = indirect_set(ts)
    T_sets, _ = partition_indirect(L_sets, sm.A)
    mats = {
        "F": count_matrix(flow_set(ts)),
        "D": count_matrix(od_set(ts)),
        "L": count_matrix(L_sets),
        "T": count_matrix(T_sets),
    }
    if tamper is not None:
        mats = tamper(mats)

    reports = [verify_inequality(mats["F"], sm.A, mats["D"])]
    reports.extend(
        verify_flow_identities(
            mats["F"], mats["D"], mats["L"], mats["T"], sm.A, sm.Phat, sm.Ehat
        )
    )
    if strongly_connected(g):
        _, _, flow = graph_ideal_flow(g)
        premagic = verify_premagic(flow.matrix, tolerance=tol)
        premagic.name = "premagic(ideal_flow)"
        reports.append(premagic)
    else:
        from .relations import VerificationReport

        reports.append(
            VerificationReport(
                name="premagic(ideal_flow)",
                skipped=True,
                note="graph not strongly connected; no analytic ideal flow",
            )
        )

    failed = False
    for report in reports:
        if report.skipped:
            print(f"SKIP {report.name} ({report.note})")
        elif report.holds:
            print(f"PASS {report.name}")
        else:
            failed = True
            print(f"FAIL {report.name} ({len(report.defects)} defect cells)")
    write_json(
        outdir / "report.json",
        {
            "nodes": list(g.nodes),
            "checks": [r.to_json_obj(labels=g.nodes) for r in reports],
            "all_passed": not failed,
        },
    )
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealflow",
        description=(
            "Structural matrices, trajectory utilization analytics, and "
            "uniform random-walk ideal flows on directed networks."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("-o", "--outdir", default=".", help="output directory")
        p.add_argument("--format", choices=("csv", "json"), default="csv",
                       help="matrix file format (default csv)")

    p = sub.add_parser("matrices", help="write A, P, E, Phat, Ehat plus a summary line")
    p.add_argument("graph", help="edge-list file")
    common(p)
    p.set_defaults(func=lambda a: run_matrices(a.graph, a.outdir, fmt=a.format))

    p = sub.add_parser("ideal", help="analytic ideal flow of the uniform walk")
    p.add_argument("graph")
    common(p)
    p.add_argument("--mode", choices=(MIN_NORMALIZED, PROBABILITY_SCALED),
                   default=MIN_NORMALIZED)
    p.add_argument("--tol", type=float, default=1e-9,
                   help="tolerance for the classification checks")
    p.set_defaults(
        func=lambda a: run_ideal(a.graph, a.outdir, mode=a.mode, tol=a.tol, fmt=a.format)
    )

    p = sub.add_parser("simulate", help="seeded multi-agent random walk")
    p.add_argument("graph")
    common(p)
    p.add_argument("--agents", type=int, default=1)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checkpoints", type=int, default=10)
    p.add_argument("--record", action="store_true",
                   help="also write the walked trajectories")
    p.add_argument("--warmup", type=int, default=0,
                   help="per-agent steps to discard before counting")
    p.add_argument("--log-checkpoints", action="store_true",
                   help="space checkpoints by decades instead of evenly")
    p.set_defaults(
        func=lambda a: run_simulate(
            a.graph,
            a.outdir,
            agents=a.agents,
            steps=a.steps,
            seed=a.seed,
            checkpoints=a.checkpoints,
            record=a.record,
            warmup=a.warmup,
            log_spacing=a.log_checkpoints,
            fmt=a.format,
        )
    )

    p = sub.add_parser("analyze", help="utilization matrices at all three levels")
    p.add_argument("graph")
    p.add_argument("trajectories", help="trajectory file")
    common(p)
    p.set_defaults(
        func=lambda a: run_analyze(a.graph, a.trajectories, a.outdir, fmt=a.format)
    )

    p = sub.add_parser("verify", help="check the inequality chain, the four "
                       "identities, and flow conservation")
    p.add_argument("graph")
    p.add_argument("trajectories")
    p.add_argument("-o", "--outdir", default=".")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(
        func=lambda a: run_verify(a.graph, a.trajectories, a.outdir, tol=a.tol)
    )

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.func(args)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return code
    except TrajectoryValidationError as exc:
        for err in exc.errors:
            print(f"error: {err}", file=sys.stderr)
        return 2
    except NotStronglyConnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (IdealFlowError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
