"""Layered words and weakly decreasing word counts.

A word is layered when its maximal weakly decreasing runs (split at the
strict ascents) climb: every run ends no lower than the previous run began.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .closedforms import binom
from .core import ResourceLimitError, Word

__all__ = [
    "LayerDecomposition",
    "WDParameters",
    "runs",
    "layer_decomposition",
    "layer_count",
    "is_layered",
    "count_by_layer_number",
    "count_layered",
    "count_layered_binary",
    "wd_count_formula",
    "wd_count_brute",
]


def runs(w: Sequence[int]) -> list[Word]:
    """Split ``w`` at its strict ascents into maximal weakly decreasing runs."""
    out: list[list[int]] = []
    for x in w:
        if out and x <= out[-1][-1]:
            out[-1].append(x)
        else:
            out.append([x])
    return [Word(r) for r in out]


class LayerDecomposition(tuple):
    """The layers of a layered word, in order."""

    __slots__ = ()

    def word(self) -> Word:
        return Word(itertools.chain.from_iterable(self))

    def __str__(self) -> str:
        compact = all(x <= 9 for layer in self for x in layer)
        sep = "" if compact else ","
        return "|".join(sep.join(map(str, layer)) for layer in self)


def layer_decomposition(w: Sequence[int]) -> LayerDecomposition | None:
    """Layers of ``w``, or ``None`` when ``w`` is not layered.

    >>> str(layer_decomposition([2, 1, 1, 0, 3, 3, 2, 7, 5]))
    '2110|332|75'
    """
    rs = runs(w)
    for prev, cur in zip(rs, rs[1:]):
        if cur[-1] < prev[0]:
            return None
    return LayerDecomposition(rs)


def is_layered(w: Sequence[int]) -> bool:
    return layer_decomposition(w) is not None


def layer_count(w: Sequence[int]) -> int | None:
    d = layer_decomposition(w)
    return None if d is None else len(d)


def count_by_layer_number(n: int, k: int, max_nodes: int = 20_000_000) -> int:
    """Layered inversion sequences of length ``n`` with exactly ``k`` layers.

    Exhaustive: every prefix of a layered word is layered, so the search
    only extends layered prefixes, and each one is re-checked with
    :func:`layer_decomposition` rather than with any incremental shortcut.
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if not 1 <= k <= n:
        return 0
    budget = max_nodes
    total = 0
    stack: list[tuple[int, ...]] = [(0,)]
    while stack:
        prefix = stack.pop()
        d = layer_decomposition(prefix)
        if d is None or len(d) > k or len(d) + n - len(prefix) < k:
            continue
        budget -= 1
        if budget < 0:
            raise ResourceLimitError("layer enumeration exceeded its node budget")
        if len(prefix) == n:
            total += len(d) == k
            continue
        stack.extend(prefix + (x,) for x in range(len(prefix) + 1))
    return total


def count_layered(n: int, depth: int | None = None, alphabet: int | None = None) -> int:
    """Number of layered inversion sequences of length ``n`` whose layers
    each use at most ``depth`` distinct values (any number if ``None``),
    optionally restricted to letters below ``alphabet``.

    Dynamic programme over positions with state
    (lower bound for the current layer, first letter of the current layer,
    last letter, distinct values in the current layer).  A letter no larger
    than the last one continues the layer and must respect the lower bound;
    a strictly larger one opens a new layer, which from then on must stay at
    or above the first letter of the layer it closed.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    top = n if alphabet is None else alphabet
    states = {(0, 0, 0, 1): 1}
    for i in range(1, n):
        nxt: dict = {}
        hi = min(i, top - 1)
        for (low, first, last, d), c in states.items():
            for x in range(low, min(last, hi) + 1):
                dd = d + (x < last)
                if depth is not None and dd > depth:
                    continue
                key = (low, first, x, dd)
                nxt[key] = nxt.get(key, 0) + c
            for x in range(max(first, last + 1), hi + 1):
                key = (first, x, x, 1)
                nxt[key] = nxt.get(key, 0) + c
        states = nxt
    return sum(states.values())


def count_layered_binary(n: int) -> int:
    """Layered inversion sequences of length ``n`` using only 0 and 1."""
    return count_layered(n, alphabet=2)


@dataclass(frozen=True)
class WDParameters:
    """Weakly decreasing words of length ``n`` starting at ``a`` with at most ``k`` descents."""

    n: int
    a: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.a < 0 or not 1 <= self.k < self.n:
            raise ValueError(f"need n >= 1, a >= 0, 1 <= k < n; got {self}")


def wd_count_formula(p: WDParameters) -> int:
    """``1 + sum_{j=1..k} C(n-1, j) C(a, j)``: choose j descent positions and j smaller values."""
    return 1 + sum(binom(p.n - 1, j) * binom(p.a, j) for j in range(1, p.k + 1))


def wd_count_brute(p: WDParameters, limit: int = 5_000_000) -> int:
    if binom(p.a + p.n - 1, p.n - 1) > limit:
        raise ResourceLimitError("too many weakly decreasing words to enumerate")
    count = 0
    # tails are generated increasing; reversed, they are the weakly decreasing continuations
    for tail in itertools.combinations_with_replacement(range(p.a + 1), p.n - 1):
        w = (p.a,) + tail[::-1]
        descents = sum(1 for x, y in zip(w, w[1:]) if x > y)
        if descents <= p.k:
            count += 1
    return count
