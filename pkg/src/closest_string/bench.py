"""Multi-run benchmark harness.

Every (instance, method, run) triple is executed once.  Run ``k`` uses a seed
derived from ``(master_seed, k)`` only, so adding methods or instances never
changes the seeds of existing runs.  Results are written as ``runs.csv``,
``summary.csv`` and ``summary.json``.
"""

from __future__ import annotations

import csv
import json
import logging
import time
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .baselines import brute_force_optimum, wfc_solve
from .beam import SolverConfig
from .core import Instance
from .instance_io import read_instance
from .solver import tsa_solve

__all__ = [
    "METHODS",
    "RunRecord",
    "SummaryRow",
    "run_seed",
    "run_benchmark",
    "summarize",
    "load_instances",
    "write_results",
]

logger = logging.getLogger(__name__)

METHODS = ("tsa", "wfc", "oracle")

RUN_FIELDS = [
    "instance", "method", "run", "seed", "distance", "time_s",
    "prune_s", "beam_s", "local_s", "t_max", "error",
]
SUMMARY_FIELDS = ["instance", "method", "runs", "best", "worst", "average", "avg_time_s", "is_best"]


@dataclass(frozen=True)
class RunRecord:
    instance: str
    method: str
    run: int
    seed: int
    distance: int | None
    time_s: float
    t_max: float | None = None
    stages: dict[str, float] = field(default_factory=dict)
    error: str = ""

    def row(self) -> dict:
        return {
            "instance": self.instance,
            "method": self.method,
            "run": self.run,
            "seed": self.seed,
            "distance": "" if self.distance is None else self.distance,
            "time_s": _fmt(self.time_s),
            "prune_s": _fmt(self.stages.get("prune")),
            "beam_s": _fmt(self.stages.get("beam")),
            "local_s": _fmt(self.stages.get("local")),
            "t_max": _fmt(self.t_max),
            "error": self.error,
        }


@dataclass(frozen=True)
class SummaryRow:
    instance: str
    method: str
    runs: int
    best: int
    worst: int
    average: float
    avg_time_s: float
    is_best: bool = False

    def row(self) -> dict:
        return {
            "instance": self.instance,
            "method": self.method,
            "runs": self.runs,
            "best": self.best,
            "worst": self.worst,
            "average": _fmt(self.average),
            "avg_time_s": _fmt(self.avg_time_s),
            "is_best": int(self.is_best),
        }


def _fmt(x) -> str:
    return "" if x is None else f"{x:.6f}"


def run_seed(master_seed: int, run: int) -> int:
    """64-bit seed of run ``run``; independent of method and instance."""
    ss = np.random.SeedSequence(master_seed, spawn_key=(run,))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _execute(job) -> RunRecord:
    inst_id, inst, method, run, seed, cfg = job
    t_max = cfg.resolved_t_max(inst.length)
    virtual = cfg.timing == "virtual"
    start = time.perf_counter()
    try:
        if method == "tsa":
            report = tsa_solve(inst, replace(cfg, seed=seed))
            stages = dict(report.timings)
            distance = report.distance
            elapsed = sum(stages.values()) if virtual else time.perf_counter() - start
        elif method == "wfc":
            distance, stages = wfc_solve(inst, seed).distance, {}
            elapsed = 0.0 if virtual else time.perf_counter() - start
        elif method == "oracle":
            distance, stages = brute_force_optimum(inst).distance, {}
            elapsed = 0.0 if virtual else time.perf_counter() - start
        else:
            raise ValueError(f"unknown method {method!r}")
    except Exception as exc:  # recorded, not fatal
        logger.warning("%s on %s run %d failed: %s", method, inst_id, run, exc)
        return RunRecord(inst_id, method, run, seed, None, 0.0, t_max, {}, f"{type(exc).__name__}: {exc}")
    return RunRecord(inst_id, method, run, seed, distance, elapsed, t_max, stages)


def run_benchmark(
    instances: Mapping[str, Instance] | Iterable[tuple[str, Instance]],
    methods: Sequence[str] = ("tsa", "wfc"),
    runs_per_instance: int = 10,
    cfg: SolverConfig | None = None,
    master_seed: int = 0,
    workers: int = 1,
) -> list[RunRecord]:
    """Run every method ``runs_per_instance`` times on every instance.

    ``cfg.t_max`` overrides the length-based time limit when set.  Records
    come back sorted by (instance, method, run) whatever ``workers`` is.
    """
    if runs_per_instance < 1:
        raise ValueError("runs_per_instance must be >= 1")
    cfg = cfg or SolverConfig()
    items = list(instances.items()) if isinstance(instances, Mapping) else list(instances)
    jobs = [
        (inst_id, inst, method, k, run_seed(master_seed, k), cfg)
        for inst_id, inst in items
        for method in methods
        for k in range(runs_per_instance)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_execute, jobs))
    else:
        records = [_execute(job) for job in jobs]
    return sorted(records, key=lambda r: (r.instance, r.method, r.run))


def summarize(records: Sequence[RunRecord]) -> tuple[list[SummaryRow], dict]:
    """Per-instance best/worst/average per method, plus per-method aggregates.

    The best marker goes to every method whose average is minimal on an
    instance.  The aggregate holds the mean of the per-instance averages and
    the number of best markers for each method.
    """
    if not records:
        raise ValueError("no records to summarize")
    groups: dict[tuple[str, str], list[RunRecord]] = defaultdict(list)
    for r in records:
        if r.distance is not None:
            groups[(r.instance, r.method)].append(r)

    rows = []
    for (inst_id, method), runs in sorted(groups.items()):
        d = [r.distance for r in runs]
        rows.append(SummaryRow(
            inst_id, method, len(d), min(d), max(d),
            sum(d) / len(d), sum(r.time_s for r in runs) / len(runs),
        ))

    minimum: dict[str, float] = {}
    for row in rows:
        minimum[row.instance] = min(row.average, minimum.get(row.instance, float("inf")))
    rows = [replace(row, is_best=row.average == minimum[row.instance]) for row in rows]

    aggregate = {}
    for method in sorted({row.method for row in rows}):
        mine = [row for row in rows if row.method == method]
        aggregate[method] = {
            "instances": len(mine),
            "mean_average_distance": sum(r.average for r in mine) / len(mine),
            "best_count": sum(r.is_best for r in mine),
        }
    return rows, aggregate


def load_instances(directory: str | Path) -> dict[str, Instance]:
    """All ``*.txt`` / FASTA files in ``directory``, keyed by file stem."""
    directory = Path(directory)
    suffixes = {".txt", ".csp", ".fa", ".fasta", ".fna", ".faa"}
    files = sorted(p for p in directory.iterdir() if p.suffix.lower() in suffixes)
    if not files:
        raise FileNotFoundError(f"no instance files in {directory}")
    return {p.stem: read_instance(p) for p in files}


def write_results(records: Sequence[RunRecord], out_dir: str | Path) -> tuple[list[SummaryRow], dict]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows, aggregate = summarize(records)
    with open(out / "runs.csv", "w", newline="") as fh:
        writer = csv.DictWriter(fh, RUN_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(r.row() for r in records)
    with open(out / "summary.csv", "w", newline="") as fh:
        writer = csv.DictWriter(fh, SUMMARY_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(r.row() for r in rows)
    payload = {"methods": aggregate, "instances": [r.row() for r in rows]}
    (out / "summary.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return rows, aggregate
