"""
Generating trees
================

Level n of the tree holds the avoiders of length n.  Each level is kept as
a multiset of labels, so 24 levels take milliseconds even though level 24
has about 4.5e16 nodes.
"""

import time

from invsort import RuleSet, Universe, expand, level_counts
from invsort.gentree import TreeLabel, rule_consistency_check
from invsort.patterns import count_avoiders

b = TreeLabel("B", 2, 2)
for rs in RuleSet:
    try:
        print(f"{rs.value:22s} {b} -> {', '.join(map(str, expand(b, rs)))}")
    except ValueError as exc:
        print(rs.value, exc)

# %%
for rs in RuleSet:
    t0 = time.perf_counter()
    counts = level_counts(rs, 24)
    print(f"{rs.value:22s} a(24) = {counts[-1]}  ({time.perf_counter() - t0:.3f}s)")

# %%
# The trees against exhaustive counting, and the rule self-check.
for rs in RuleSet:
    brute = [count_avoiders(Universe.inversion_sequences(n), rs.basis) for n in range(1, 9)]
    print(rs.value, level_counts(rs, 8) == brute, rule_consistency_check(rs, 10)["passed"])
