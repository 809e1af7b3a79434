"""Heuristic and exact solvers for the closest string problem."""

from .baselines import OracleResult, brute_force_optimum, pairwise_lower_bound, wfc_solve
from .beam import SolverConfig, adjust_beta, default_t_max, expand, select_best, trbs_solve
from .core import (
    CSPError,
    Instance,
    LengthMismatchError,
    Solution,
    SymbolError,
    complement_matches,
    hamming_distance,
    hamming_to_set,
    level_frequencies,
)
from .heuristic import BeamNode, ex_score, expected_solution, extend_node, suffix_score_tables, variance_score
from .instance_io import GeneratorSpec, generate_uniform, parse_fasta, parse_plain, read_instance, write_instance
from .local_search import find_critical_strings, local_search, repair_candidates
from .pruning import RankedAlphabet, RankSets, rank_identify, rank_sets
from .solver import SolveReport, tsa_solve

__version__ = "0.1.0"
