"""
Inversion sequences and pattern avoidance
=========================================

An inversion sequence records, for each entry of a permutation, how many
earlier entries are larger.  Entry i (counting from 0) is at most i.
"""

from invsort import Universe, decode, encode, enumerate_universe, format_word
from invsort.patterns import contains, count_avoiders, occurrence_count, parse_basis

# %%
# Encoding is a bijection with permutations.
pi = (5, 1, 7, 4, 3, 8, 6, 2)
e = encode(pi)
print("pi       ", format_word(pi))
print("e(pi)    ", format_word(e))
print("decode   ", format_word(decode(e)))

# %%
# The six inversion sequences of length 3, in lexicographic order.
print([format_word(w, compact=True) for w in enumerate_universe(Universe.inversion_sequences(3))])

# %%
# Patterns of words: equal letters must match equal letters.
w = (0, 0, 2, 1, 1, 0, 4)
for p in [(1, 0, 0, 2), (2, 0, 1), (0, 0)]:
    print(format_word(p, compact=True), "in", format_word(w, compact=True), "->",
          contains(w, p), f"({occurrence_count(w, p)} occurrences)")

# %%
# Counting avoiders walks only avoiding prefixes, so it scales with the answer.
basis = parse_basis("120+201+210")
print([count_avoiders(Universe.inversion_sequences(n), basis) for n in range(1, 10)])
