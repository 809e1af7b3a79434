"""
Repeated runs and summary tables
================================

Runs both heuristics several times on a handful of generated instances and
writes runs.csv, summary.csv and summary.json.  Virtual timing keeps the
output identical from one invocation to the next.
"""

# %%
import tempfile
from pathlib import Path

from closest_string import SolverConfig
from closest_string.bench import run_benchmark, write_results
from closest_string.instance_io import GeneratorSpec, generate_uniform

instances = {
    f"alpha4_n10_L50_{k}": generate_uniform(GeneratorSpec(10, 50, "dna", k)) for k in range(3)
}
cfg = SolverConfig(timing="virtual", ls_budget=0.2)
records = run_benchmark(instances, ["tsa", "wfc"], runs_per_instance=3, cfg=cfg, master_seed=1)

# %%
out = Path(tempfile.mkdtemp())
rows, aggregate = write_results(records, out)
for row in rows:
    mark = "*" if row.is_best else " "
    print(f"{row.instance:20s} {row.method:4s} {row.best:3d} {row.worst:3d} {row.average:7.2f}{mark}")
print(aggregate)
print((out / "summary.csv").read_text())
