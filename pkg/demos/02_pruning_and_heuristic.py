"""
Ranked alphabets and the expected-distance score
================================================

Shows the rank-1 / rank-2 symbol sets of a small protein-like instance, the
consensus string with its suffix tables, and how a partial solution is
scored.
"""

# %%
from closest_string import (
    BeamNode,
    Instance,
    expected_solution,
    extend_node,
    rank_sets,
    suffix_score_tables,
)

inst = Instance.from_strings([
    "MKDLEXHXAL", "XXTDYKNSMI", "MFWHTEHYHI", "DHGCPCVGHW",
    "CYLATKQIIX", "MAMSSXNGHI", "QKSCYKLSVQ", "CHWDTEHSHW",
])
sets = rank_sets(inst)
for level in range(inst.length):
    r1 = "".join(sorted(sets.symbols(inst, "r1", level)))
    r2 = "".join(sorted(sets.symbols(inst, "r2", level)))
    print(f"level {level + 1:2d}: r1={r1:<4} r2={r2}")

# %%
pair = Instance.from_strings(["abaaabbaba", "abababaabb"], "ab")
consensus = expected_solution(pair)
tables = suffix_score_tables(pair, consensus)
print("consensus:", pair.decode(consensus))
print(tables)

# %%
# Extending the empty node symbol by symbol keeps per-string match counts.
node = BeamNode.root(tables)
for c in pair.encode("ababa"):
    node = extend_node(node, int(c), pair, tables)
print("matches:", node.matches, "EX:", node.ex, "variance:", node.variance)
