"""Words, inversion sequences, permutations and the universes they live in.

Words are plain tuples of nonnegative integers.  The two subclasses
:class:`InversionSequence` and :class:`Permutation` check their defining
invariant when constructed and are otherwise ordinary tuples, so every
function in the package accepts either.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "ResourceLimitError",
    "Word",
    "InversionSequence",
    "Permutation",
    "Universe",
    "encode",
    "decode",
    "enumerate_universe",
    "universe_size",
    "is_sorted",
    "parse_word",
    "format_word",
    "worker_count",
]

# Default cap on the number of members a universe may have before
# enumeration refuses to start.
MAX_UNIVERSE = 50_000_000


class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds an explicit size guard."""


class Word(tuple):
    """A finite sequence of nonnegative integers."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        self = super().__new__(cls, (int(x) for x in letters))
        for x in self:
            if x < 0:
                raise ValueError(f"word letters must be nonnegative, got {x}")
        return self

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


class InversionSequence(Word):
    """A word ``e`` with ``0 <= e[i] <= i`` (0-based positions)."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        self = super().__new__(cls, letters)
        for i, x in enumerate(self):
            if x > i:
                raise ValueError(
                    f"not an inversion sequence: entry {x} at position {i + 1} exceeds {i}"
                )
        return self


class Permutation(Word):
    """A rearrangement of ``1..n``."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, entries)
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self)}: {tuple(self)}")
        return self


@dataclass(frozen=True)
class Universe:
    """A finite family of words: ``inv`` (inversion sequences of length n),
    ``words`` (length n over letters 0..k-1) or ``perm`` (permutations of 1..n)."""

    kind: str
    n: int
    k: int | None = None

    def __post_init__(self):
        if self.kind not in ("inv", "words", "perm"):
            raise ValueError(f"unknown universe kind {self.kind!r}")
        if self.n < 0:
            raise ValueError("universe length must be >= 0")
        if self.kind == "words":
            if self.k is None or self.k < 1:
                raise ValueError("a words universe needs an alphabet size k >= 1")
        elif self.k is not None:
            raise ValueError(f"alphabet size is meaningless for {self.kind!r}")

    @classmethod
    def inversion_sequences(cls, n: int) -> Universe:
        return cls("inv", n)

    @classmethod
    def words(cls, n: int, k: int) -> Universe:
        return cls("words", n, k)

    @classmethod
    def permutations(cls, n: int) -> Universe:
        return cls("perm", n)

    def letter_choices(self, prefix: Sequence[int]) -> Iterable[int]:
        """Letters that may follow ``prefix`` inside this universe."""
        if self.kind == "inv":
            return range(len(prefix) + 1)
        if self.kind == "words":
            return range(self.k)
        used = set(prefix)
        return [v for v in range(1, self.n + 1) if v not in used]

    def wrap(self, letters: Iterable[int]) -> Word:
        cls = {"inv": InversionSequence, "words": Word, "perm": Permutation}[self.kind]
        return cls(letters)


def universe_size(u: Universe) -> int:
    if u.kind == "words":
        return u.k**u.n
    return math.factorial(u.n)


def _check_guard(u: Universe, limit: int | None) -> None:
    limit = MAX_UNIVERSE if limit is None else limit
    size = universe_size(u)
    if size > limit:
        raise ResourceLimitError(
            f"{u.kind} universe of length {u.n} has {size} members, guard is {limit}"
        )


def enumerate_universe(u: Universe, limit: int | None = None) -> Iterator[Word]:
    """Yield every member of ``u`` once, in lexicographic order.

    The generator is lazy and restartable (call again for a fresh pass).
    ``limit`` overrides the default size guard.
    """
    _check_guard(u, limit)
    if u.kind == "inv":
        for letters in itertools.product(*(range(i + 1) for i in range(u.n))):
            yield InversionSequence(letters)
    elif u.kind == "words":
        for letters in itertools.product(range(u.k), repeat=u.n):
            yield Word(letters)
    else:
        for letters in itertools.permutations(range(1, u.n + 1)):
            yield Permutation(letters)


def encode(perm: Sequence[int]) -> InversionSequence:
    """Inversion sequence of a permutation: entry i counts earlier larger entries.

    >>> str(encode(Permutation([5, 1, 7, 4, 3, 8, 6, 2])))
    '0,1,0,2,3,0,2,6'
    """
    perm = Permutation(perm)
    return InversionSequence(
        sum(1 for j in range(i) if perm[j] > perm[i]) for i in range(len(perm))
    )


def decode(e: Sequence[int]) -> Permutation:
    """Inverse of :func:`encode`.

    Works right to left: the last entry ``e[n-1]`` says how many of the
    values still unused are larger than the value placed there.
    """
    e = InversionSequence(e)
    remaining = list(range(1, len(e) + 1))
    out = [0] * len(e)
    for i in range(len(e) - 1, -1, -1):
        out[i] = remaining.pop(len(remaining) - 1 - e[i])
    return Permutation(out)


def is_sorted(w: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(w, w[1:]))


def parse_word(text: str) -> Word:
    """Parse ``"0,1,2,0"`` or, when all letters are single digits, ``"0120"``."""
    text = text.strip()
    if not text:
        return Word()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) == 2 and parts[1] == "":
            parts = parts[:1]  # "10," is the one-letter word 10
        if any(not p.isdigit() for p in parts):
            raise ValueError(f"cannot parse word {text!r}")
        return Word(int(p) for p in parts)
    if not text.isdigit():
        raise ValueError(f"cannot parse word {text!r}")
    return Word(int(c) for c in text)


def format_word(w: Sequence[int], compact: bool = False) -> str:
    """Canonical comma-separated text form; ``compact`` drops the commas
    when every letter is a single digit."""
    if compact and all(x <= 9 for x in w):
        return "".join(str(x) for x in w)
    if len(w) == 1 and w[0] > 9:
        return f"{w[0]},"  # bare "10" would read back as the compact word 1,0
    return ",".join(str(x) for x in w)


def worker_count(requested: int | None = None) -> int:
    """Number of worker processes to use.

    Without an explicit request this is ``INVSORT_THREADS`` (default 1);
    an explicit request is still capped by ``INVSORT_THREADS`` when set.
    """
    env = os.environ.get("INVSORT_THREADS")
    cap = max(1, int(env)) if env else None
    if requested is None:
        return cap or 1
    return max(1, min(requested, cap or os.cpu_count() or 1))
