"""Generating trees for three classes of pattern-avoiding inversion sequences.

Level n of each tree holds the avoiders of length n.  Nodes are never
built: a level is a multiset of labels (a :class:`LevelProfile`), and the
next level comes from expanding every label once and multiplying by its
multiplicity.  Labels at level n have ``m <= n``, so a level has O(n^2)
distinct labels and the whole computation is polynomial.

Labels and the prefixes they stand for::

    A(m)     0^m
    B(m, j)  0^m j            1 <= j <= m
    C2(m)    0^m 1 0          m >= 1
    C3(m, j) 0^m j (j-1)      1 <= j <= m
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from typing import NamedTuple, Sequence

from .core import ResourceLimitError, Word
from .patterns import Basis

__all__ = [
    "TreeLabel",
    "RuleSet",
    "LevelProfile",
    "expand",
    "root_profile",
    "next_profile",
    "level_counts",
    "rule_consistency_check",
    "format_counts",
]

MAX_LEVEL = 200


class TreeLabel(NamedTuple):
    kind: str
    m: int
    j: int | None = None

    def prefix(self) -> Word:
        """The inversion sequence this label stands for."""
        zeros = (0,) * self.m
        if self.kind == "A":
            return Word(zeros)
        if self.kind == "B":
            return Word(zeros + (self.j,))
        if self.kind == "C2":
            return Word(zeros + (1, 0))
        return Word(zeros + (self.j, self.j - 1))

    def __str__(self) -> str:
        return f"{self.kind}({self.m})" if self.j is None else f"{self.kind}({self.m},{self.j})"


def A(m):
    return TreeLabel("A", m)


def B(m, j):
    return TreeLabel("B", m, j)


def C2(m):
    return TreeLabel("C2", m)


def C3(m, j):
    return TreeLabel("C3", m, j)


class RuleSet(enum.Enum):
    AV_120_201_210 = "av-120-201-210"
    AV_120_201_1010 = "av-120-201-1010"
    AV_120_201_210_1010 = "av-120-201-210-1010"

    @property
    def basis(self) -> Basis:
        return Basis(tuple(int(c) for c in p) for p in self.value.split("-")[1:])

    @classmethod
    def parse(cls, name: str) -> RuleSet:
        key = name.strip().lower().replace("_", "-")
        for rs in cls:
            if rs.value == key:
                return rs
        raise ValueError(f"unknown ruleset {name!r}; choose from {', '.join(r.value for r in cls)}")


def _valid(label: TreeLabel, rs: RuleSet) -> bool:
    kind, m, j = label
    if m < 1:
        return False
    if kind == "A":
        return j is None
    if kind == "B":
        return j is not None and 1 <= j <= m
    if kind == "C2":
        return j is None and rs is RuleSet.AV_120_201_210_1010
    if kind == "C3":
        return j is not None and 1 <= j <= m and rs is RuleSet.AV_120_201_1010
    return False


def expand(label: TreeLabel, rs: RuleSet) -> list[TreeLabel]:
    """Children of ``label`` under ``rs``, with repetition."""
    if not _valid(label, rs):
        raise ValueError(f"label {label} is not valid for ruleset {rs.value}")
    kind, m, j = label
    if kind == "A":
        return [A(m + 1)] + [B(m, t) for t in range(1, m + 1)]
    if kind == "B":
        tail = [B(m + 1, j)] + [B(m + 1 - j, t) for t in range(1, m + 2 - j)]
        if rs is RuleSet.AV_120_201_210:
            return [B(m + 2 - j, 1)] * j + tail
        if rs is RuleSet.AV_120_201_1010:
            return [C3(m - j + t, t) for t in range(1, j + 1)] + tail
        return [C2(m + 1 - j)] * j + tail
    if kind == "C3":
        return (
            [C3(m + 1 - j + t, t) for t in range(1, j + 1)]
            + [A(m + 3 - j)]
            + [B(m + 2 - j, t) for t in range(1, m + 3 - j)]
        )
    return [C2(m + 1), A(m + 2)] + [B(m + 1, t) for t in range(1, m + 2)]


class LevelProfile(Counter):
    """Multiplicity of each label on one level of the tree; ``total()``
    is the number of nodes on the level."""


def root_profile() -> LevelProfile:
    return LevelProfile({A(1): 1})


def next_profile(profile: LevelProfile, rs: RuleSet) -> LevelProfile:
    out = LevelProfile()
    for label, mult in profile.items():
        for child in expand(label, rs):
            out[child] += mult
    return out


def level_counts(rs: RuleSet, max_level: int, guard: int = MAX_LEVEL) -> list[int]:
    """Node counts for levels 1..max_level; level n counts avoiders of length n."""
    if max_level < 1:
        raise ValueError("max_level must be >= 1")
    if max_level > guard:
        raise ResourceLimitError(f"max_level {max_level} exceeds guard {guard}")
    profile = root_profile()
    counts = [profile.total()]
    for _ in range(max_level - 1):
        profile = next_profile(profile, rs)
        counts.append(profile.total())
    return counts


def _labels_up_to(rs: RuleSet, max_m: int):
    for m in range(1, max_m + 1):
        yield A(m)
        for j in range(1, m + 1):
            yield B(m, j)
        if rs is RuleSet.AV_120_201_210_1010:
            yield C2(m)
        if rs is RuleSet.AV_120_201_1010:
            for j in range(1, m + 1):
                yield C3(m, j)


def rule_consistency_check(rs: RuleSet, max_m: int) -> dict:
    """Check that every label with ``m <= max_m`` has one child per letter
    that may extend its prefix (``len(prefix) + 1`` of them) and that all
    children are valid labels."""
    violations = []
    checked = 0
    for label in _labels_up_to(rs, max_m):
        checked += 1
        children = expand(label, rs)
        expected = len(label.prefix()) + 1
        if len(children) != expected:
            violations.append(f"{label}: {len(children)} children, expected {expected}")
        bad = [str(c) for c in children if not _valid(c, rs)]
        if bad:
            violations.append(f"{label}: invalid children {', '.join(bad)}")
    return {"ruleset": rs.value, "labels_checked": checked, "violations": violations,
            "passed": not violations}


def format_counts(counts: Sequence[int], fmt: str = "json", offset: int = 1) -> str:
    """Render a count sequence as ``json``, ``csv`` or OEIS-style ``bfile``."""
    if fmt == "json":
        return json.dumps(list(counts))
    if fmt == "csv":
        return "n,count\n" + "\n".join(f"{offset + i},{c}" for i, c in enumerate(counts))
    if fmt == "bfile":
        return "\n".join(f"{offset + i} {c}" for i, c in enumerate(counts))
    if fmt == "text":
        return ",".join(map(str, counts))
    raise ValueError(f"unknown format {fmt!r}")
