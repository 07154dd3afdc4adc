"""Sorting devices for words: stacks, pop stacks and their variants.

Every greedy simulator reads the input left to right, chooses between
pushing the next letter and popping, and finally drains whatever is left
in the device.  Stack contents are kept bottom-to-top.

:func:`sortable_by_search` is an independent check.  It ignores the greedy
policies and explores every legal move sequence of a device.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .core import ResourceLimitError, Word, is_sorted
from .patterns import Basis, decreasing_pattern

__all__ = [
    "MachineConfig",
    "UnsupportedMachineError",
    "TraceStep",
    "KINDS",
    "stack_sort",
    "pop_stack_sort",
    "pop_stack_sort_by_runs",
    "depth_limited_stack_sort",
    "depth_limited_pop_stack_sort",
    "two_one_pop_stack_depth2_sort",
    "tortoise_pop_stack_sort",
    "simulate",
    "is_sortable",
    "sortable_by_search",
    "machine_basis",
    "standard_machines",
    "format_trace",
]

KINDS = ("stack", "pop-stack", "tortoise-pop-stack", "generalized-pop-stack")


class UnsupportedMachineError(ValueError):
    pass


@dataclass(frozen=True)
class MachineConfig:
    """A sorting device.

    ``depth`` bounds the number of distinct values held at once (``None``
    for unbounded).  ``r`` is the number of value positions a push may
    target and only differs from 1 for ``generalized-pop-stack``.  An ``r``
    above ``depth`` is accepted: it sorts the same words as ``r == depth``.
    """

    kind: str
    depth: int | None = None
    r: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnsupportedMachineError(f"unknown machine kind {self.kind!r}")
        if self.depth is not None and self.depth < 1:
            raise UnsupportedMachineError("depth must be a positive integer")
        if self.r < 1:
            raise UnsupportedMachineError("r must be a positive integer")
        if self.r != 1 and self.kind != "generalized-pop-stack":
            raise UnsupportedMachineError(f"r > 1 is only meaningful for generalized-pop-stack")
        if self.kind == "generalized-pop-stack" and self.depth is None:
            raise UnsupportedMachineError("generalized-pop-stack needs a bounded depth")

    @property
    def effective_r(self) -> int:
        return min(self.r, self.depth) if self.depth is not None else self.r

    @property
    def pops_all(self) -> bool:
        return self.kind != "stack"

    def __str__(self) -> str:
        s = self.kind
        if self.depth is not None:
            s += f"[depth={self.depth}]"
        if self.r != 1:
            s += f"[r={self.r}]"
        return s


class TraceStep(NamedTuple):
    """Device state after one move; ``cursor`` is the number of letters read."""

    action: str
    cursor: int
    stack: tuple
    output: tuple


def format_trace(trace: Sequence[TraceStep]) -> str:
    lines = []
    for step in trace:
        stack = ",".join(map(str, step.stack))
        out = ",".join(map(str, step.output))
        lines.append(f"{step.action}\tstack=[{stack}]\toutput=[{out}]")
    return "\n".join(lines)


def _record(trace, action, cursor, stack, out):
    if trace is not None:
        trace.append(TraceStep(action, cursor, tuple(stack), tuple(out)))


def _as_word(letters) -> Word:
    # output is a rearrangement of an already checked input
    return tuple.__new__(Word, letters)


def _check_input(w: Sequence[int]) -> None:
    if w and min(w) < 0:
        raise ValueError("word letters must be nonnegative")


def _greedy(w, can_push, pop_all, trace=None):
    """Shared driver: push while ``can_push(stack, x)``, otherwise pop."""
    _check_input(w)
    stack: list[int] = []
    out: list[int] = []
    i = 0
    n = len(w)
    while i < n:
        x = w[i]
        if not stack or can_push(stack, x):
            stack.append(x)
            i += 1
            if trace is not None:
                _record(trace, "push 1", i, stack, out)
        elif pop_all:
            out.extend(reversed(stack))
            stack.clear()
            if trace is not None:
                _record(trace, "pop", i, stack, out)
        else:
            out.append(stack.pop())
            if trace is not None:
                _record(trace, "pop", i, stack, out)
    if stack:
        if pop_all:
            out.extend(reversed(stack))
            stack.clear()
            _record(trace, "drain", i, stack, out)
        else:
            while stack:
                out.append(stack.pop())
                _record(trace, "drain", i, stack, out)
    return _as_word(out)


def _distinct(stack) -> int:
    # greedy stacks are weakly decreasing bottom to top
    return 1 + sum(1 for a, b in zip(stack, stack[1:]) if a != b) if stack else 0


def stack_sort(w: Sequence[int], trace: list | None = None) -> Word:
    return _greedy(w, lambda s, x: x <= s[-1], pop_all=False, trace=trace)


def pop_stack_sort(w: Sequence[int], trace: list | None = None) -> Word:
    return _greedy(w, lambda s, x: x <= s[-1], pop_all=True, trace=trace)


def pop_stack_sort_by_runs(w: Sequence[int]) -> Word:
    """Reverse each maximal weakly decreasing run of ``w``."""
    out: list[int] = []
    run: list[int] = []
    for x in w:
        if run and x > run[-1]:
            out.extend(reversed(run))
            run = []
        run.append(x)
    out.extend(reversed(run))
    return Word(out)


def _depth_rule(k: int) -> Callable:
    if k < 1:
        raise UnsupportedMachineError("depth must be a positive integer")

    def can_push(s, x):
        top = s[-1]
        return x == top or (x < top and _distinct(s) < k)

    return can_push


def depth_limited_stack_sort(w: Sequence[int], k: int, trace: list | None = None) -> Word:
    return _greedy(w, _depth_rule(k), pop_all=False, trace=trace)


def depth_limited_pop_stack_sort(w: Sequence[int], k: int, trace: list | None = None) -> Word:
    return _greedy(w, _depth_rule(k), pop_all=True, trace=trace)


def tortoise_pop_stack_sort(w: Sequence[int], trace: list | None = None) -> Word:
    """Pop stack that never holds two equal letters: push only strictly below the top."""
    return _greedy(w, lambda s, x: x < s[-1], pop_all=True, trace=trace)


def two_one_pop_stack_depth2_sort(w: Sequence[int], trace: list | None = None) -> Word:
    """(2,1)-pop stack of depth 2.

    ``s`` counts the copies of the smaller (top) value.  A letter equal to
    the larger value is slid in just below those ``s`` copies.
    """
    _check_input(w)
    stack: list[int] = []
    out: list[int] = []
    s = 0
    i = 0
    while i < len(w):
        x = w[i]
        if not stack:
            stack.append(x)
            s = 1
            i += 1
            _record(trace, "push 1", i, stack, out)
        elif x == stack[-1]:
            stack.append(x)
            s += 1
            i += 1
            _record(trace, "push 1", i, stack, out)
        elif x == stack[0]:
            stack.insert(len(stack) - s, x)
            i += 1
            _record(trace, "push 2", i, stack, out)
        elif stack[0] != stack[-1]:
            out.extend(reversed(stack))
            stack.clear()
            _record(trace, "pop", i, stack, out)
        elif x < stack[-1]:
            stack.append(x)
            s = 1
            i += 1
            _record(trace, "push 1", i, stack, out)
        else:
            out.extend(reversed(stack))
            stack.clear()
            _record(trace, "pop", i, stack, out)
    if stack:
        out.extend(reversed(stack))
        stack.clear()
        _record(trace, "drain", i, stack, out)
    return _as_word(out)


def simulate(w: Sequence[int], m: MachineConfig, trace: list | None = None) -> Word:
    """Run the greedy simulator for ``m``."""
    if m.kind == "stack":
        if m.depth is None:
            return stack_sort(w, trace)
        return depth_limited_stack_sort(w, m.depth, trace)
    if m.kind == "pop-stack" or (m.kind == "generalized-pop-stack" and m.effective_r == 1):
        if m.depth is None:
            return pop_stack_sort(w, trace)
        return depth_limited_pop_stack_sort(w, m.depth, trace)
    if m.kind == "tortoise-pop-stack":
        if m.depth is not None:
            raise UnsupportedMachineError("no greedy simulator for a depth-limited tortoise pop stack")
        return tortoise_pop_stack_sort(w, trace)
    if m.depth == 2:
        return two_one_pop_stack_depth2_sort(w, trace)
    raise UnsupportedMachineError(f"no greedy simulator for {m}")


def is_sortable(w: Sequence[int], m: MachineConfig) -> bool:
    return is_sorted(simulate(w, m))


def machine_basis(m: MachineConfig) -> Basis:
    """Forbidden patterns characterizing the words ``m`` sorts (minimal form)."""
    if m.kind == "stack":
        b = [(1, 2, 0)]
    elif m.kind == "pop-stack" or (m.kind == "generalized-pop-stack" and m.effective_r == 1):
        b = [(1, 2, 0), (2, 0, 1), (1, 0, 1, 0)]
    elif m.kind == "tortoise-pop-stack" and m.depth is None:
        return Basis([(1, 2, 0), (2, 0, 1), (1, 1, 0), (1, 0, 0)])
    elif m.kind == "generalized-pop-stack" and m.depth == 2:
        return Basis([(1, 2, 0), (2, 0, 1), (2, 1, 0)])
    else:
        raise UnsupportedMachineError(f"no known basis for {m}")
    if m.depth is not None:
        b.append(decreasing_pattern(m.depth + 1))
    return Basis(b).minimal()


def standard_machines(depths: Sequence[int] = (1, 2, 3)) -> list[MachineConfig]:
    """The six device families, with the depth-limited ones at each depth."""
    ms = [MachineConfig("stack"), MachineConfig("pop-stack")]
    ms += [MachineConfig("stack", depth=k) for k in depths]
    ms += [MachineConfig("pop-stack", depth=k) for k in depths]
    ms += [MachineConfig("generalized-pop-stack", depth=2, r=2), MachineConfig("tortoise-pop-stack")]
    return ms


def _push_options(groups: tuple, x: int, m: MachineConfig):
    """All stacks reachable by pushing ``x``.

    ``groups`` is a bottom-to-top tuple of ``(value, count)`` runs.
    Position 1 is above the top run, position p sits just below the
    (p-1)-th run from the top.  Equal neighbours absorb the new letter.
    """
    g = len(groups)
    values = {v for v, _ in groups}
    if m.kind == "tortoise-pop-stack" and x in values:
        return
    if m.depth is not None and x not in values and len(values) >= m.depth:
        return
    seen = set()
    for p in range(1, min(m.r, g + 1) + 1):
        idx = g - p + 1  # insertion index in the bottom-to-top list
        above = groups[idx] if idx < g else None
        below = groups[idx - 1] if idx > 0 else None
        if above is not None and above[0] == x:
            new = groups[:idx] + ((x, above[1] + 1),) + groups[idx + 1:]
        elif below is not None and below[0] == x:
            new = groups[: idx - 1] + ((x, below[1] + 1),) + groups[idx:]
        else:
            new = groups[:idx] + ((x, 1),) + groups[idx:]
        if new not in seen:
            seen.add(new)
            yield new


def _pop_options(groups: tuple, last: int, m: MachineConfig):
    """(new stack, new last output) for each legal pop that keeps the output sorted."""
    if not groups:
        return
    if m.pops_all:
        prev = last
        for v, _ in reversed(groups):
            if v < prev:
                return
            prev = v
        yield (), prev
    else:
        v, c = groups[-1]
        if v < last:
            return
        rest = groups[:-1] + (((v, c - 1),) if c > 1 else ())
        yield rest, v


def sortable_by_search(
    w: Sequence[int],
    m: MachineConfig,
    max_len: int = 8,
    max_states: int = 1_000_000,
) -> bool:
    """Whether *some* sequence of legal moves sorts ``w`` on device ``m``.

    Depth-first search over (input position, stack, last output letter).
    Only sorted outputs are explored, which is sound because output is
    append-only.  Failed states are memoized for the duration of the call.
    """
    if len(w) > max_len:
        raise ResourceLimitError(f"search limited to words of length <= {max_len}, got {len(w)}")
    w = tuple(w)
    n = len(w)
    dead: set = set()
    lowest = min(w, default=0)

    def solve(i, groups, last):
        if i == n and not groups:
            return True
        key = (i, groups, last)
        if key in dead:
            return False
        if len(dead) >= max_states:
            raise ResourceLimitError(f"search exceeded {max_states} states")
        for new, new_last in _pop_options(groups, last, m):
            if solve(i, new, new_last):
                return True
        if i < n:
            for new in _push_options(groups, w[i], m):
                if solve(i + 1, new, last):
                    return True
        dead.add(key)
        return False

    limit = sys.getrecursionlimit()
    if 4 * n + 50 > limit:
        sys.setrecursionlimit(4 * n + 50)
    return solve(0, (), lowest)
