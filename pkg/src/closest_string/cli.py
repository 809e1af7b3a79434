"""Command line interface: ``closest-string <command> ...``."""

from __future__ import annotations

import argparse
import logging
import sys

from . import __version__
from .baselines import brute_force_optimum, wfc_solve
from .beam import SolverConfig
from .bench import load_instances, run_benchmark, write_results
from .instance_io import GeneratorSpec, generate_uniform, read_instance, write_instance
from .local_search import local_search


def _solve(args) -> int:
    from .solver import tsa_solve

    inst = read_instance(args.instance)
    cfg = SolverConfig(
        beta_initial=args.beta,
        beta_trial=args.beta_trial,
        t_max=args.t_max,
        ls_budget=args.ls_budget,
        rank_mode=args.rank,
        seed=args.seed,
        timing=args.timing,
    )
    report = tsa_solve(inst, cfg)
    print("\n".join(report.summary_lines()))
    return 0


def _improve(args) -> int:
    inst = read_instance(args.instance)
    sol = local_search(args.solution.strip(), inst, args.budget, args.seed)
    print(f"solution: {sol}")
    print(f"distance: {sol.distance}")
    return 0


def _oracle(args) -> int:
    result = brute_force_optimum(read_instance(args.instance))
    print(f"solution: {result.symbols}")
    print(f"distance: {result.distance}")
    print(f"examined: {result.examined}")
    return 0


def _wfc(args) -> int:
    sol = wfc_solve(read_instance(args.instance), args.seed)
    print(f"solution: {sol}")
    print(f"distance: {sol.distance}")
    return 0


def _generate(args) -> int:
    inst = generate_uniform(GeneratorSpec(args.n, args.len, args.alphabet, args.seed))
    write_instance(inst, args.out)
    return 0


def _bench(args) -> int:
    instances = load_instances(args.instances)
    cfg = SolverConfig(t_max=args.t_max, ls_budget=args.ls_budget, timing=args.timing)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    records = run_benchmark(instances, methods, args.runs, cfg, args.master_seed, args.workers)
    _, aggregate = write_results(records, args.out)
    for method, agg in aggregate.items():
        print(f"{method}: mean={agg['mean_average_distance']:.2f} best={agg['best_count']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="closest-string", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the three-stage solver")
    p.add_argument("--instance", required=True)
    p.add_argument("--t-max", type=float, default=None, help="seconds; default by length")
    p.add_argument("--beta", type=int, default=300)
    p.add_argument("--beta-trial", type=int, default=15)
    p.add_argument("--ls-budget", type=float, default=5.0)
    p.add_argument("--rank", choices=["auto", "r1", "r2"], default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", choices=["wall", "virtual"], default="wall")
    p.set_defaults(func=_solve)

    p = sub.add_parser("improve", help="local search from a given solution")
    p.add_argument("--instance", required=True)
    p.add_argument("--solution", required=True)
    p.add_argument("--budget", type=float, default=5.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_improve)

    p = sub.add_parser("oracle", help="exact optimum by enumeration (tiny instances)")
    p.add_argument("--instance", required=True)
    p.set_defaults(func=_oracle)

    p = sub.add_parser("wfc", help="WFC-style baseline")
    p.add_argument("--instance", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_wfc)

    p = sub.add_parser("generate", help="write a uniform random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--alphabet", default="dna", choices=["dna", "protein"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_generate)

    p = sub.add_parser("bench", help="repeated runs over a directory of instances")
    p.add_argument("--instances", required=True)
    p.add_argument("--methods", default="tsa,wfc")
    p.add_argument("--runs", type=int, default=10)
    p.add_argument("--master-seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--t-max", type=float, default=None)
    p.add_argument("--ls-budget", type=float, default=5.0)
    p.add_argument("--timing", choices=["wall", "virtual"], default="wall")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
