import csv
import json

import pytest

from closest_string import SolverConfig, pairwise_lower_bound
from closest_string.bench import (
    RunRecord,
    load_instances,
    run_benchmark,
    run_seed,
    summarize,
    write_results,
)
from closest_string.instance_io import GeneratorSpec, generate_uniform, write_instance

VIRTUAL = SolverConfig(timing="virtual", ls_budget=0.1)


def rec(inst, method, run, distance, t=1.0):
    return RunRecord(inst, method, run, run, distance, t)


@pytest.fixture(scope="module")
def small_records():
    inst = generate_uniform(GeneratorSpec(6, 150, "dna", 1))
    return inst, run_benchmark({"i150": inst}, ["tsa", "wfc"], 10, VIRTUAL, master_seed=3)


def test_record_count_and_tmax(small_records):
    inst, records = small_records
    assert len(records) == 20
    assert all(r.t_max == 30 for r in records)
    lb = pairwise_lower_bound(inst)
    assert all(r.distance >= lb and not r.error for r in records)
    assert [r.run for r in records if r.method == "tsa"] == list(range(10))


def test_seeds_independent_of_methods():
    inst = generate_uniform(GeneratorSpec(3, 8, "dna", 2))
    one = run_benchmark({"x": inst}, ["wfc"], 3, VIRTUAL, master_seed=9)
    two = run_benchmark({"x": inst}, ["oracle", "wfc"], 3, VIRTUAL, master_seed=9)
    assert one == [r for r in two if r.method == "wfc"]
    assert [r.seed for r in one] == [run_seed(9, k) for k in range(3)]
    assert len({run_seed(9, k) for k in range(100)}) == 100


def test_failures_are_recorded():
    big = generate_uniform(GeneratorSpec(3, 20, "dna", 0))
    records = run_benchmark({"big": big}, ["oracle", "bogus"], 1, VIRTUAL)
    assert all(r.distance is None and r.error for r in records)


def test_summarize_constant_runs():
    rows, agg = summarize([rec("a", "tsa", k, 486) for k in range(10)])
    assert (rows[0].best, rows[0].worst, rows[0].average) == (486, 486, 486)
    assert rows[0].is_best and agg["tsa"]["best_count"] == 1


def test_summarize_best_worst_average():
    rows, _ = summarize([rec("a", "tsa", 0, 3), rec("a", "tsa", 1, 4)])
    assert (rows[0].best, rows[0].worst, rows[0].average) == (3, 4, 3.5)


def test_summarize_shared_best_marker():
    records = [rec("a", "tsa", 0, 5), rec("a", "wfc", 0, 5), rec("b", "tsa", 0, 4), rec("b", "wfc", 0, 6)]
    rows, agg = summarize(records)
    assert [(r.instance, r.method, r.is_best) for r in rows] == [
        ("a", "tsa", True), ("a", "wfc", True), ("b", "tsa", True), ("b", "wfc", False),
    ]
    assert agg["tsa"] == {"instances": 2, "mean_average_distance": 4.5, "best_count": 2}
    assert agg["wfc"]["best_count"] == 1
    with pytest.raises(ValueError):
        summarize([])


def test_summary_invariants(small_records):
    _, records = small_records
    rows, _ = summarize(records)
    for row in rows:
        runs = [r.distance for r in records if r.method == row.method]
        assert row.best == min(runs) <= row.average <= row.worst == max(runs)
        assert row.average == sum(runs) / len(runs)


def test_outputs_are_byte_stable(tmp_path):
    insts = {f"i{k}": generate_uniform(GeneratorSpec(4, 20, "dna", k)) for k in range(2)}
    blobs = []
    for attempt in range(2):
        out = tmp_path / f"out{attempt}"
        write_results(run_benchmark(insts, ["tsa", "wfc"], 2, VIRTUAL, 5), out)
        blobs.append([(out / f).read_bytes() for f in ("runs.csv", "summary.csv", "summary.json")])
    assert blobs[0] == blobs[1]
    rows = list(csv.DictReader(open(tmp_path / "out0" / "summary.csv")))
    assert [(r["instance"], r["method"]) for r in rows] == sorted((r["instance"], r["method"]) for r in rows)
    summary = json.loads((tmp_path / "out0" / "summary.json").read_text())
    assert set(summary["methods"]) == {"tsa", "wfc"}


def test_parallel_workers_match_serial():
    insts = {"a": generate_uniform(GeneratorSpec(4, 12, "dna", 1))}
    serial = run_benchmark(insts, ["tsa", "wfc"], 2, VIRTUAL, 1, workers=1)
    parallel = run_benchmark(insts, ["tsa", "wfc"], 2, VIRTUAL, 1, workers=2)
    assert serial == parallel


def test_load_instances(tmp_path):
    for k in range(3):
        write_instance(generate_uniform(GeneratorSpec(3, 10, "dna", k)), tmp_path / f"inst{k}.txt")
    (tmp_path / "notes.md").write_text("ignored")
    assert list(load_instances(tmp_path)) == ["inst0", "inst1", "inst2"]
    with pytest.raises(FileNotFoundError):
        load_instances(tmp_path / "missing")
