"""
Flattening the farthest string
==============================

One local-search step on a four-string DNA instance, then a full run.
"""

# %%
from closest_string import Instance, find_critical_strings, local_search, repair_candidates
from closest_string.core import distance_vector

inst = Instance.from_strings(["CAGTG", "CGATA", "GATCA", "CTACG"], "ACGT")
start = "GAACG"
print("distances:", distance_vector(start, inst))
critical = find_critical_strings(start, inst)
print("critical strings:", critical)
for cand in repair_candidates(critical, start, inst, rng=0):
    print("proposal: position", cand.position, "->", inst.alphabet[cand.symbol])

# %%
trace = []
step = local_search(start, inst, budget=None, rng_seed=0, max_iterations=1, trace=trace)
print(step, "distance", step.distance, "moves", trace)

# %%
final = local_search(start, inst, budget=1.0, rng_seed=0)
print("after the full budget:", final, final.distance)
