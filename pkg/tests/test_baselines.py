import itertools

import pytest

from closest_string import (
    Instance,
    brute_force_optimum,
    hamming_to_set,
    pairwise_lower_bound,
    wfc_solve,
)
from closest_string.baselines import InstanceTooLargeError
from closest_string.instance_io import GeneratorSpec, generate_uniform


def exhaustive(inst):
    """Plain enumeration without pruning: (distance, lexicographically first string)."""
    best = None
    for cand in itertools.product(range(inst.m), repeat=inst.length):
        d = hamming_to_set(inst.decode(cand), inst)
        if best is None or d < best[0]:
            best = (d, inst.decode(cand))
    return best


def tiny_instances(count=50):
    out = []
    for k in range(count):
        n = 3 + k % 4
        length = 6 + k % 3
        m = (2, 4)[k % 2]
        if m == 4:
            length = min(length, 7)
        out.append(generate_uniform(GeneratorSpec(n, length, m, 500 + k)))
    return out


def test_two_string_optimum(two_strings):
    assert pairwise_lower_bound(two_strings) == 2
    res = brute_force_optimum(two_strings)
    assert res.distance == 2
    assert exhaustive(two_strings) == (2, res.symbols)


def test_trivial_instances():
    single = Instance.from_strings(["GATC"], "ACGT")
    same = Instance.from_strings(["GATC"] * 4, "ACGT")
    for inst in (single, same):
        res = brute_force_optimum(inst)
        assert (res.symbols, res.distance) == ("GATC", 0)
        assert pairwise_lower_bound(inst) == 0
        sol = wfc_solve(inst, 0)
        assert (sol.symbols, sol.distance) == ("GATC", 0)


@pytest.mark.parametrize("inst", tiny_instances(20), ids=lambda i: f"n{i.n}L{i.length}m{i.m}")
def test_oracle_matches_exhaustive(inst):
    res = brute_force_optimum(inst)
    assert (res.distance, res.symbols) == exhaustive(inst)
    assert brute_force_optimum(inst) == res
    assert res.examined >= 1


def test_oracle_sandwich_for_wfc():
    for k, inst in enumerate(tiny_instances()):
        opt = brute_force_optimum(inst).distance
        assert pairwise_lower_bound(inst) <= opt
        sol = wfc_solve(inst, k)
        assert sol.distance >= opt
        assert sol.distance == hamming_to_set(sol.symbols, inst)
        assert len(sol.symbols) == inst.length
        assert set(sol.symbols) <= set(inst.alphabet)


def test_oracle_cap():
    inst = generate_uniform(GeneratorSpec(3, 13, "dna", 0))
    with pytest.raises(InstanceTooLargeError):
        brute_force_optimum(inst)
    assert brute_force_optimum(generate_uniform(GeneratorSpec(3, 4, "dna", 0)), cap=256).distance >= 0


def test_wfc_seeded():
    inst = generate_uniform(GeneratorSpec(10, 80, "protein", 3))
    assert wfc_solve(inst, 5) == wfc_solve(inst, 5)
