import time

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from closest_string import (
    Instance,
    brute_force_optimum,
    find_critical_strings,
    hamming_to_set,
    local_search,
    repair_candidates,
)
from closest_string.core import distance_vector
from closest_string.instance_io import GeneratorSpec, generate_uniform


def test_critical_strings(dna_four):
    assert find_critical_strings("GAACG", dna_four).tolist() == [1]
    equal = Instance.from_strings(["AC", "CA"], "ACGT")
    assert find_critical_strings("AA", equal).tolist() == [0, 1]
    pair = Instance.from_strings(["ACGT", "AGGA"], "ACGT")
    assert find_critical_strings("ACGT", pair).tolist() == [1]


def test_repair_candidates_worked_example(dna_four):
    own = [dna_four.freq[level, c] for level, c in enumerate(dna_four.codes[1])]
    assert own == [3, 1, 2, 2, 2]
    cands = repair_candidates([1], "GAACG", dna_four, 0)
    assert [(c.position, dna_four.alphabet[c.symbol]) for c in cands] == [(0, "C")]


def test_repair_candidates_identical_string_gives_nothing(dna_four):
    assert repair_candidates([0], "CAGTG", dna_four, 0) == []


def test_repair_candidates_keeps_ties():
    crit = Instance.from_strings(["AAGG", "ATGT", "CACA"], "ACGT")
    cands = repair_candidates([0], "CCCC", crit, 0)
    # s_0 = AAGG: counts A@0=2, A@1=2, G@2=2, G@3=1
    assert sorted((c.position, c.symbol) for c in cands) == [(0, 0), (1, 0), (2, 2)]


def test_one_iteration_worked_example(dna_four):
    trace = []
    sol = local_search("GAACG", dna_four, None, 0, max_iterations=1, trace=trace)
    assert (sol.symbols, sol.distance) == ("CAACG", 3)
    assert distance_vector("CAACG", dna_four).tolist() == [2, 3, 3, 1]


def test_single_string_converges():
    inst = Instance.from_strings(["GATTACA"], "ACGT")
    sol = local_search("CCCCCCC", inst, 5.0, 1)
    assert (sol.symbols, sol.distance) == ("GATTACA", 0)


def test_optimal_start_stays_optimal():
    inst = generate_uniform(GeneratorSpec(4, 8, "dna", 11))
    opt = brute_force_optimum(inst)
    sol = local_search(opt.symbols, inst, 0.5, 3)
    assert sol.distance == opt.distance


def test_budget_is_respected():
    inst = generate_uniform(GeneratorSpec(20, 400, "dna", 4))
    start = time.perf_counter()
    local_search(inst.strings[0], inst, 0.3, 0)
    assert time.perf_counter() - start < 0.3 + 0.2


def test_seeded_runs_repeat():
    inst = generate_uniform(GeneratorSpec(6, 30, "dna", 9))
    runs = [local_search("A" * 30, inst, None, 42, max_iterations=200) for _ in range(2)]
    assert runs[0] == runs[1]


@settings(max_examples=1000, deadline=None)
@given(
    st.integers(1, 6), st.integers(1, 15), st.integers(2, 4), st.integers(0, 2**32 - 1), st.data()
)
def test_local_search_properties(n, length, m, seed, data):
    inst = generate_uniform(GeneratorSpec(n, length, m, seed))
    init = np.array(data.draw(st.lists(st.integers(0, m - 1), min_size=length, max_size=length)))
    trace = []
    sol = local_search(init, inst, None, seed, max_iterations=50, trace=trace)
    assert sol.distance <= hamming_to_set(init, inst)
    assert sol.distance == hamming_to_set(sol.symbols, inst)

    current = init.copy()
    prev_dist = hamming_to_set(current, inst)
    for pos, symbol, dist in trace:
        nxt = current.copy()
        nxt[pos] = symbol
        assert np.count_nonzero(nxt != current) == 1
        assert symbol in inst.codes[:, pos]
        assert dist == hamming_to_set(nxt, inst) <= prev_dist
        current, prev_dist = nxt, dist
    assert inst.decode(current) == sol.symbols
