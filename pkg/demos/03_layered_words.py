"""
Layered words
=============

Cut a word at its strict ascents.  If every run ends no lower than the
previous run began, the word is layered, and a pop stack sorts it with one
pop per layer.
"""

from invsort import count_by_layer_number, count_layered, eulerian, layer_decomposition, pop_stack_sort
from invsort.closedforms import tetrahedral

w = (2, 1, 1, 0, 3, 3, 2, 7, 5)
print("layers of 211033275:", layer_decomposition(w))
print("pop stack output:   ", pop_stack_sort(w))
print("0120 layered?       ", layer_decomposition((0, 1, 2, 0)))

# %%
# Layer-number counts for n = 6: one layer, two layers (Eulerian), n-1 layers.
n = 6
row = [count_by_layer_number(n, k) for k in range(1, n + 1)]
print("by layers:", row, "total", sum(row), "=", count_layered(n))
print("E(6,2) =", eulerian(6, 2), " C(7,3) =", tetrahedral(6))

# %%
# Limiting the depth of the pop stack limits distinct values per layer.
for depth in (1, 2, 3, None):
    print(f"depth {depth}:", [count_layered(n, depth) for n in range(10)])
