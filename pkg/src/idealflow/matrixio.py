"""CSV/JSON serialization of matrices, vectors and reports.

Layout contract: CSV matrices carry node labels in the first row and
first column, unreachable entries serialize as the literal ``inf``, and
reals keep 12 significant digits.  All writers are deterministic, so
identical inputs produce byte-identical files.
"""

from __future__ import annotations

import csv
import json
import math

import numpy as np


def format_real(x) -> str:
    return f"{float(x):.12g}"


def format_count(x) -> str:
    x = float(x)
    return "inf" if math.isinf(x) else str(int(x))


def _formatter(integral: bool):
    return format_count if integral else format_real


def write_matrix_csv(path, labels, M, integral=False) -> None:
    M = np.asarray(M)
    fmt = _formatter(integral)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([""] + list(labels))
        for lab, row in zip(labels, M):
            writer.writerow([lab] + [fmt(x) for x in row])


def read_matrix_csv(path):
    """Returns (labels, float matrix); `inf` cells parse to numpy inf."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    labels = tuple(rows[0][1:])
    data = np.array([[float(cell) for cell in row[1:]] for row in rows[1:]])
    row_labels = tuple(row[0] for row in rows[1:])
    if row_labels != labels:
        raise ValueError(f"row labels {row_labels} differ from column labels {labels}")
    return labels, data


def _json_cell(x, integral: bool):
    x = float(x)
    if math.isinf(x):
        return "inf"
    return int(x) if integral else float(format_real(x))


def matrix_json_obj(labels, M, integral=False, **extra):
    M = np.asarray(M)
    obj = {"nodes": list(labels)}
    obj.update(extra)
    obj["data"] = [[_json_cell(x, integral) for x in row] for row in M]
    return obj


def write_matrix_json(path, labels, M, integral=False, **extra) -> None:
    write_json(path, matrix_json_obj(labels, M, integral=integral, **extra))


def read_matrix_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    labels = tuple(obj["nodes"])
    data = np.array(
        [[float(x) for x in row] for row in obj["data"]], dtype=float
    )
    return labels, data


def write_vector_csv(path, labels, v, value_header="value") -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["node", value_header])
        for lab, x in zip(labels, np.asarray(v)):
            writer.writerow([lab, format_real(x)])


def read_vector_csv(path):
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    labels = tuple(row[0] for row in rows[1:])
    values = np.array([float(row[1]) for row in rows[1:]])
    return labels, values


def set_matrix_json_obj(S):
    """Full object grid of sorted id arrays, keyed row label -> col label."""
    return {
        "nodes": list(S.labels),
        "sets": {
            u: {v: sorted(S[u, v]) for v in S.labels} for u in S.labels
        },
    }


def write_set_matrix_json(path, S) -> None:
    write_json(path, set_matrix_json_obj(S))


def read_set_matrix_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    labels = tuple(obj["nodes"])
    cells = [
        [frozenset(obj["sets"][u][v]) for v in labels] for u in labels
    ]
    return labels, cells


def write_json(path, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def write_convergence_csv(path, series) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["cumulative_nt", "linf_distance"])
        for steps, dist in series.points:
            writer.writerow([str(int(steps)), format_real(dist)])


def read_convergence_csv(path):
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    return [(int(r[0]), float(r[1])) for r in rows[1:]]


def write_trajectories(path, trajectories) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for tr in trajectories:
            fh.write(f"{tr.id}: {' '.join(tr.path)}\n")
