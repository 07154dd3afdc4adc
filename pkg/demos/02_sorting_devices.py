"""
Sorting devices
===============

Greedy simulators for the stack, the pop stack and their restricted
variants, each checked against the device's forbidden patterns and against
an exhaustive search over every legal move sequence.
"""

import itertools

from invsort import MachineConfig, format_word, simulate
from invsort.machines import format_trace, machine_basis, sortable_by_search, standard_machines
from invsort.patterns import avoids_all, format_basis

# %%
# One word, every device.
w = (1, 0, 2, 1, 0)
for m in standard_machines():
    print(f"{str(m):40s} {format_word(simulate(w, m))}")

# %%
# A step-by-step run of the (2,1)-pop stack of depth 2.  "push 2" slides the
# new entry under the top value group.
trace = []
m = MachineConfig("generalized-pop-stack", depth=2, r=2)
simulate((1, 0, 1, 1), m, trace)
print(format_trace(trace))

# %%
# Sortable words are exactly the avoiders of the basis.
for m in standard_machines():
    basis = machine_basis(m)
    words = [w for n in range(7) for w in itertools.product(range(3), repeat=n)]
    agree = all(avoids_all(w, basis) == (sorted(w) == list(simulate(w, m))) for w in words)
    print(f"{str(m):40s} basis {format_basis(basis):22s} agrees on {len(words)} words: {agree}")

# %%
# The greedy policy is optimal: exhaustive search finds nothing it missed.
w = (0, 2, 1)
print("021 by search:", sortable_by_search(w, m), " 201 by search:", sortable_by_search((2, 0, 1), m))
