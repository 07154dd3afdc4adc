"""
Closed forms and series
=======================
"""

import itertools

from invsort import Series2, burstein_depth2_stack_words, burstein_gf, cake, catalan, fibonacci
from invsort.patterns import avoids_all

# %%
print("catalan  ", [catalan(n) for n in range(10)])
print("cake     ", [cake(n) for n in range(1, 12)])
print("fibonacci", [fibonacci(n) for n in range(12)])

# %%
# Words over k letters avoiding 120 and 210: formula vs counting.
for k in range(1, 5):
    formula = [burstein_depth2_stack_words(n, k) for n in range(1, 7)]
    brute = [sum(avoids_all(w, [(1, 2, 0), (2, 1, 0)]) for w in itertools.product(range(k), repeat=n))
             for n in range(1, 7)]
    print(f"k={k}", formula, formula == brute)

# %%
# A truncated bivariate series; rows are word lengths, columns alphabet sizes.
F = burstein_gf(6, 4)
for n in range(7):
    print(n, [F[n, k] for k in range(5)])

x = Series2({(1, 0): 1}, 4, 0)
print((1 - x).invert().format())
