"""Exhaustive cross-checks between simulators, bases, search and formulas.

Each suite returns a list of :class:`CheckResult`, one per invariant, with
the first counterexample found (if any).
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Sequence

from .closedforms import (
    burstein_depth2_stack_words,
    burstein_gf,
    cake,
    catalan,
    fibonacci,
    tetrahedral,
)
from .core import Universe, enumerate_universe, format_word, is_sorted
from .gentree import RuleSet, level_counts
from .layers import (
    WDParameters,
    count_by_layer_number,
    count_layered,
    layer_count,
    wd_count_brute,
    wd_count_formula,
)
from .machines import (
    MachineConfig,
    machine_basis,
    pop_stack_sort,
    pop_stack_sort_by_runs,
    simulate,
    sortable_by_search,
    standard_machines,
)
from .patterns import _Matcher, contains, count_avoiders

__all__ = [
    "CheckResult",
    "SUITES",
    "basis_equivalence",
    "greedy_optimality",
    "closed_forms",
    "tree_vs_brute_force",
    "pop_stack_identities",
    "run_suite",
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" first counterexample: {self.counterexample}" if self.counterexample else ""
        return f"{status} {self.name} ({self.checked} checked){tail}"


class _Tally:
    def __init__(self, name: str):
        self.result = CheckResult(name, True, 0)

    def record(self, ok: bool, witness: Callable[[], str]) -> None:
        self.result.checked += 1
        if not ok and self.result.passed:
            self.result.passed = False
            self.result.counterexample = witness()


def _walk(max_n: int, choices: Callable[[int], range], patterns: Sequence[tuple]):
    """Yield ``(word, contained)`` for every word of length ``<= max_n`` in a
    prefix-closed family, where ``contained[i]`` says whether ``patterns[i]``
    occurs.  Containment is carried down the prefix tree, so each word costs
    one matcher step per pattern instead of a full scan."""
    matchers = [_Matcher(p) for p in patterns]
    stack = [((), tuple(m.start() for m in matchers))]
    while stack:
        w, states = stack.pop()
        yield w, tuple(s is None for s in states)
        if len(w) == max_n:
            continue
        for x in reversed(choices(len(w))):
            stack.append((w + (x,), tuple(
                None if s is None else m.step(s, x) for m, s in zip(matchers, states)
            )))


def basis_equivalence(
    inv_max_n: int = 9,
    word_max_n: int = 8,
    max_k: int = 4,
    machines: Sequence[MachineConfig] | None = None,
) -> list[CheckResult]:
    """Greedy sortability versus avoidance of the machine's basis, for every
    inversion sequence of length ``<= inv_max_n`` and every word of length
    ``<= word_max_n`` over ``max_k`` letters (which includes every smaller
    alphabet)."""
    machines = list(machines or standard_machines())
    patterns = sorted({tuple(p) for m in machines for p in machine_basis(m)})
    index = {p: i for i, p in enumerate(patterns)}
    bases = [(m, [index[tuple(p)] for p in machine_basis(m)]) for m in machines]
    families = [
        (f"inv(n<={inv_max_n})", inv_max_n, lambda i: range(i + 1)),
        (f"words(n<={word_max_n},k<={max_k})", word_max_n, lambda i: range(max_k)),
    ]
    out = []
    for label, max_n, choices in families:
        tallies = [_Tally(f"basis-equivalence {m} on {label}") for m in machines]
        for w, contained in _walk(max_n, choices, patterns):
            for t, (m, idx) in zip(tallies, bases):
                avoids = not any(contained[i] for i in idx)
                sortable = is_sorted(simulate(w, m))
                t.record(
                    avoids == sortable,
                    lambda: f"{format_word(w)} sortable={sortable} avoids={avoids}",
                )
        out.extend(t.result for t in tallies)
    return out


def greedy_optimality(max_n: int = 7, max_k: int = 4) -> list[CheckResult]:
    """Greedy simulators against the exhaustive move search, plus the
    r > depth collapse for the generalized pop stack."""
    machines = standard_machines()
    tallies = {m: _Tally(f"greedy-vs-search {m} on words(n<={max_n},k<={max_k})") for m in machines}
    collapse = _Tally(f"search r=3 vs r=2 at depth 2 on words(n<={max_n},k<={max_k})")
    r2 = MachineConfig("generalized-pop-stack", depth=2, r=2)
    r3 = MachineConfig("generalized-pop-stack", depth=2, r=3)
    for n in range(max_n + 1):
        for w in itertools.product(range(max_k), repeat=n):
            found = {}
            for m in machines:
                greedy = is_sorted(simulate(w, m))
                found[m] = sortable_by_search(w, m, max_len=max_n)
                tallies[m].record(
                    greedy == found[m],
                    lambda: f"{format_word(w)} greedy={greedy} search={found[m]}",
                )
            a, b = found[r2], sortable_by_search(w, r3, max_len=max_n)
            collapse.record(a == b, lambda: f"{format_word(w)} r2={a} r3={b}")
    return [t.result for t in tallies.values()] + [collapse.result]


def _compare(name: str, pairs: Iterable[tuple[str, int, int]]) -> CheckResult:
    t = _Tally(name)
    for where, got, want in pairs:
        t.record(got == want, lambda: f"{where}: got {got}, expected {want}")
    return t.result


def _words_avoiding(n: int, k: int, basis) -> int:
    return sum(
        1 for w in itertools.product(range(k), repeat=n) if not any(contains(w, p) for p in basis)
    )


def closed_forms(
    catalan_n: int = 12,
    layer_n: int = 10,
    cake_n: int = 12,
    fib_n: int = 8,
    word_n: int = 6,
    word_k: int = 5,
    wd_n: int = 8,
    wd_a: int = 6,
) -> list[CheckResult]:
    """Closed formulas against independent exhaustive counts."""
    inv = Universe.inversion_sequences
    out = [
        _compare(
            f"catalan(n) = |I_n(10)| for n<={catalan_n}",
            ((f"n={n}", count_avoiders(inv(n), [(1, 0)]), catalan(n)) for n in range(catalan_n + 1)),
        ),
        _compare(
            f"2-layer count = 2^n-n-1 for n<={layer_n}",
            ((f"n={n}", count_by_layer_number(n, 2), 2**n - n - 1) for n in range(1, layer_n + 1)),
        ),
        _compare(
            f"1-layer count = 1 for n<={layer_n}",
            ((f"n={n}", count_by_layer_number(n, 1), 1) for n in range(1, layer_n + 1)),
        ),
        _compare(
            f"(n-1)-layer count = C(n+1,3) for n<={layer_n}",
            ((f"n={n}", count_by_layer_number(n, n - 1), tetrahedral(n)) for n in range(1, layer_n + 1)),
        ),
        _compare(
            f"binary pop-stack sortable = cake(n) for n<={cake_n}",
            (
                (f"n={n}", _binary_sortable(n), cake(n))
                for n in range(1, cake_n + 1)
            ),
        ),
        _compare(
            f"(2,1)-pop-stack depth-2 sortable permutations = F(n+1) for n<={fib_n}",
            ((f"n={n}", _sortable_permutations(n), fibonacci(n + 1)) for n in range(fib_n + 1)),
        ),
        _compare(
            f"depth-2 stack word formula, n<={word_n}, k<={word_k}",
            (
                (f"n={n},k={k}", burstein_depth2_stack_words(n, k), _words_avoiding(n, k, [(1, 2, 0), (2, 1, 0)]))
                for n in range(1, word_n + 1)
                for k in range(1, word_k + 1)
            ),
        ),
    ]
    gf = burstein_gf(word_n, word_k)
    out.append(
        _compare(
            f"F(x,y) coefficients for 120,201,210-avoiding words, n<={word_n}, k<={word_k}",
            (
                (f"n={n},k={k}", gf[n, k], _words_avoiding(n, k, [(1, 2, 0), (2, 0, 1), (2, 1, 0)]))
                for n in range(word_n + 1)
                for k in range(word_k + 1)
            ),
        )
    )
    out.append(
        _compare(
            f"weakly decreasing word count, n<={wd_n}, a<={wd_a}, 1<=k<n",
            (
                (str(p), wd_count_formula(p), wd_count_brute(p))
                for p in (
                    WDParameters(n, a, k)
                    for n in range(2, wd_n + 1)
                    for a in range(wd_a + 1)
                    for k in range(1, n)
                )
            ),
        )
    )
    return out


def _binary_sortable(n: int) -> int:
    """Pop-stack sortable inversion sequences with letters in {0, 1}, by simulation."""
    count = 0
    for tail in itertools.product((0, 1), repeat=max(n - 1, 0)):
        w = (0,) + tail
        count += is_sorted(pop_stack_sort(w))
    return count


def _sortable_permutations(n: int) -> int:
    m = MachineConfig("generalized-pop-stack", depth=2, r=2)
    return sum(1 for p in itertools.permutations(range(1, n + 1)) if is_sorted(simulate(p, m)))


def tree_vs_brute_force(max_n: int = 10) -> list[CheckResult]:
    """Generating-tree level counts against pruned exhaustive counting, and
    the layered-sequence dynamic programme against pop-stack simulation."""
    out = []
    for rs in RuleSet:
        tree = level_counts(rs, max_n)
        out.append(
            _compare(
                f"{rs.value} tree levels = |I_n(basis)| for n<={max_n}",
                ((f"n={n}", tree[n - 1], count_avoiders(Universe.inversion_sequences(n), rs.basis))
                 for n in range(1, max_n + 1)),
            )
        )
    sim_n = min(max_n, 8)
    for depth in (None, 1, 2, 3):
        m = MachineConfig("pop-stack", depth=depth)
        out.append(
            _compare(
                f"layered DP (depth={depth}) = {m} simulation count for n<={sim_n}",
                (
                    (f"n={n}", count_layered(n, depth),
                     sum(1 for e in enumerate_universe(Universe.inversion_sequences(n))
                         if is_sorted(simulate(e, m))))
                    for n in range(sim_n + 1)
                ),
            )
        )
    return out


def pop_stack_identities(max_n: int = 8, max_k: int = 4) -> list[CheckResult]:
    """Run reversal and layer count = number of pops, on all words."""
    runs_t = _Tally(f"pop-stack output = reversed runs on words(n<={max_n},k<={max_k})")
    pops_t = _Tally(f"layer count = pops on layered words(n<={max_n},k<={max_k})")
    for n in range(max_n + 1):
        for w in itertools.product(range(max_k), repeat=n):
            trace: list = []
            out = pop_stack_sort(w, trace)
            runs_t.record(out == pop_stack_sort_by_runs(w), lambda: format_word(w))
            layers = layer_count(w)
            if layers is not None:
                pops = sum(1 for s in trace if s.action in ("pop", "drain"))
                pops_t.record(pops == layers, lambda: f"{format_word(w)} pops={pops} layers={layers}")
    return [runs_t.result, pops_t.result]


SUITES = {
    "basis-equivalence": lambda max_n, max_k: basis_equivalence(max_n, max_n, max_k),
    "greedy-optimality": lambda max_n, max_k: greedy_optimality(max_n, max_k),
    "closed-forms": lambda max_n, max_k: closed_forms(
        catalan_n=max_n, layer_n=max_n, cake_n=max_n, fib_n=min(max_n, 8),
        word_n=min(max_n, 6), word_k=max(max_k, 1), wd_n=max_n, wd_a=6,
    ),
    "generating-trees": lambda max_n, max_k: tree_vs_brute_force(max_n),
    "pop-stack-identities": lambda max_n, max_k: pop_stack_identities(max_n, max_k),
}


def run_suite(name: str, max_n: int, max_k: int = 4) -> list[CheckResult]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, max_n, max_k)]
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all") from None
    return suite(max_n, max_k)
