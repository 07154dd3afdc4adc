"""Pattern containment for words, where equal pattern letters must match
equal text letters and strict comparisons must match strict comparisons.

Two containment tests are provided.  :func:`contains_naive` tries every
subsequence and is kept as the reference; :func:`contains` scans the word
once while tracking partial embeddings by their values, which is what the
counting code builds on.
"""

from __future__ import annotations

import functools
import itertools
import warnings
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .core import ResourceLimitError, Universe, Word, enumerate_universe, parse_word, worker_count

__all__ = [
    "Pattern",
    "Basis",
    "reduce_word",
    "parse_basis",
    "format_basis",
    "contains",
    "contains_naive",
    "avoids_all",
    "occurrence_count",
    "count_avoiders",
    "count_avoiders_naive",
    "iter_avoiders",
    "decreasing_pattern",
]

MAX_NODES = 50_000_000


def reduce_word(w: Sequence[int]) -> Word:
    """Replace each letter by its rank among the distinct letters of ``w``."""
    ranks = {v: i for i, v in enumerate(sorted(set(w)))}
    return Word(ranks[x] for x in w)


class Pattern(Word):
    """A word in reduced form: its letters are exactly ``0..max``."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        self = super().__new__(cls, letters)
        if set(self) != set(range(len(set(self)))):
            raise ValueError(f"pattern {tuple(self)} is not in reduced form")
        return self


def decreasing_pattern(m: int) -> Pattern:
    """``(m-1)(m-2)...10``, the strictly decreasing pattern of length m."""
    return Pattern(range(m - 1, -1, -1))


class Basis(frozenset):
    """A finite set of patterns used as forbidden patterns."""

    def __new__(cls, patterns: Iterable[Sequence[int]] = ()):
        return super().__new__(cls, (p if isinstance(p, Pattern) else Pattern(p) for p in patterns))

    def redundant(self) -> list[Pattern]:
        """Patterns that contain another member (so the set is not minimal)."""
        return sorted(
            p for p in self if any(q != p and contains_naive(p, q) for q in self)
        )

    def minimal(self) -> Basis:
        return Basis(p for p in self if p not in self.redundant())

    def __repr__(self) -> str:
        return f"Basis({format_basis(self)!r})"


def parse_basis(text: str) -> Basis:
    """Parse ``"120+201+1010"`` (letters may also be comma-separated)."""
    parts = [t for t in text.split("+") if t.strip()]
    if not parts:
        raise ValueError("empty basis")
    basis = Basis(Pattern(parse_word(t)) for t in parts)
    extra = basis.redundant()
    if extra:
        warnings.warn(
            f"basis {text!r} is not minimal: {', '.join(map(str, extra))} contain other members",
            stacklevel=2,
        )
    return basis


def format_basis(b: Iterable[Sequence[int]]) -> str:
    return "+".join("".join(map(str, p)) if max(p, default=0) <= 9 else ",".join(map(str, p))
                    for p in sorted(b, key=lambda p: (len(p), tuple(p))))


def _sign(a: int, b: int) -> int:
    return (a > b) - (a < b)


class _Matcher:
    """Incremental matcher for one pattern.

    A state is the set of partial embeddings seen so far, each recorded as
    the tuple of text values matched to a pattern prefix.  Positions are not
    needed: a later letter can extend a partial embedding iff its value
    compares with the recorded values the way the pattern letter does.
    """

    __slots__ = ("k", "rel")

    def __init__(self, pattern: Sequence[int]):
        self.k = len(pattern)
        self.rel = [
            tuple((i, _sign(pattern[t], pattern[i])) for i in range(t)) for t in range(self.k)
        ]

    def start(self) -> frozenset:
        return frozenset([()])

    def step(self, state: frozenset, x: int) -> frozenset | None:
        """Advance by letter ``x``; ``None`` means the pattern now occurs."""
        grown = []
        k = self.k
        for s in state:
            t = len(s)
            for i, c in self.rel[t]:
                v = s[i]
                if (x > v) - (x < v) != c:
                    break
            else:
                if t + 1 == k:
                    return None
                grown.append(s + (x,))
        if not grown:
            return state
        return state.union(grown)


@functools.lru_cache(maxsize=256)
def _matcher(p: tuple) -> _Matcher:
    return _Matcher(p)


def contains(w: Sequence[int], p: Sequence[int]) -> bool:
    """True iff some subsequence of ``w`` is order-isomorphic to ``p``."""
    if not p:
        return True
    if len(p) > len(w) or max(p) + 1 > len(set(w)):
        return False
    m = _matcher(tuple(p))
    state = m.start()
    for x in w:
        state = m.step(state, x)
        if state is None:
            return True
    return False


def contains_naive(w: Sequence[int], p: Sequence[int]) -> bool:
    p = tuple(p)
    return any(
        reduce_word(sub) == p for sub in itertools.combinations(w, len(p))
    ) if len(p) <= len(w) else False


def occurrence_count(w: Sequence[int], p: Sequence[int]) -> int:
    """Number of index tuples whose letters form an occurrence of ``p``."""
    p = tuple(p)
    if len(p) > len(w):
        return 0
    return sum(1 for sub in itertools.combinations(w, len(p)) if reduce_word(sub) == p)


def avoids_all(w: Sequence[int], b: Iterable[Sequence[int]]) -> bool:
    return not any(contains(w, p) for p in b)


def _dfs_count(u: Universe, matchers, prefix: list, states: tuple, budget: list) -> int:
    n = u.n
    total = 0
    for x in u.letter_choices(prefix):
        new = []
        for m, s in zip(matchers, states):
            s = m.step(s, x)
            if s is None:
                break
            new.append(s)
        else:
            budget[0] -= 1
            if budget[0] < 0:
                raise ResourceLimitError("avoider search exceeded its node budget")
            if len(prefix) + 1 == n:
                total += 1
            else:
                prefix.append(x)
                total += _dfs_count(u, matchers, prefix, tuple(new), budget)
                prefix.pop()
    return total


def _frontier(u: Universe, matchers, depth: int):
    """Surviving prefixes of length ``depth`` with their matcher states."""
    level = [([], tuple(m.start() for m in matchers))]
    for _ in range(depth):
        nxt = []
        for prefix, states in level:
            for x in u.letter_choices(prefix):
                new = []
                for m, s in zip(matchers, states):
                    s = m.step(s, x)
                    if s is None:
                        break
                    new.append(s)
                else:
                    nxt.append((prefix + [x], tuple(new)))
        level = nxt
    return level


def _count_from(args) -> int:
    u, patterns, prefix, states, max_nodes = args
    matchers = [_Matcher(p) for p in patterns]
    if len(prefix) == u.n:
        return 1
    return _dfs_count(u, matchers, list(prefix), states, [max_nodes])


def count_avoiders(
    u: Universe,
    b: Iterable[Sequence[int]],
    workers: int | None = None,
    max_nodes: int = MAX_NODES,
) -> int:
    """Exact number of members of ``u`` avoiding every pattern of ``b``.

    Containment is inherited by extensions, so the search only extends
    prefixes that still avoid the basis; the cost scales with the number
    of avoiders rather than with the size of the universe.  ``workers``
    (capped by ``INVSORT_THREADS``) splits the search over prefixes.
    """
    patterns = [tuple(p) for p in b]
    if any(len(p) == 0 for p in patterns):
        return 0
    matchers = [_Matcher(p) for p in patterns]
    if u.n == 0:
        return 1
    workers = worker_count(workers)
    if workers == 1 or u.n < 6:
        return _dfs_count(u, matchers, [], tuple(m.start() for m in matchers), [max_nodes])
    split = 4 if u.kind == "inv" else 2
    jobs = [(u, patterns, prefix, states, max_nodes) for prefix, states in _frontier(u, matchers, split)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_from, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def iter_avoiders(u: Universe, b: Iterable[Sequence[int]], max_nodes: int = MAX_NODES):
    """Yield the avoiders of ``b`` in ``u`` in lexicographic order."""
    matchers = [_Matcher(tuple(p)) for p in b]
    if any(m.k == 0 for m in matchers):
        return
    budget = max_nodes
    stack = [([], tuple(m.start() for m in matchers))]
    while stack:
        prefix, states = stack.pop()
        if len(prefix) == u.n:
            yield u.wrap(prefix)
            continue
        children = []
        for x in u.letter_choices(prefix):
            new = []
            for m, s in zip(matchers, states):
                s = m.step(s, x)
                if s is None:
                    break
                new.append(s)
            else:
                children.append((prefix + [x], tuple(new)))
        budget -= len(children)
        if budget < 0:
            raise ResourceLimitError("avoider search exceeded its node budget")
        stack.extend(reversed(children))


def count_avoiders_naive(u: Universe, b: Iterable[Sequence[int]], limit: int | None = None) -> int:
    """Filter the whole universe with :func:`contains_naive`; test oracle."""
    b = [tuple(p) for p in b]
    return sum(
        1 for w in enumerate_universe(u, limit) if not any(contains_naive(w, p) for p in b)
    )
