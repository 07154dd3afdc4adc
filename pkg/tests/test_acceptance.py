"""Acceptance criteria, each at its stated tolerance and time budget.

Every test logs one PASS/FAIL line; the lines are repeated in the
"acceptance criteria" section of the pytest summary.
"""

import itertools
import math

from invsort import (
    MachineConfig,
    RuleSet,
    Universe,
    WDParameters,
    burstein_depth2_stack_words,
    burstein_gf_coefficient,
    cake,
    catalan,
    count_avoiders,
    count_by_layer_number,
    enumerate_universe,
    fibonacci,
    is_sorted,
    level_counts,
    pop_stack_sort,
    simulate,
    wd_count_brute,
    wd_count_formula,
)
from invsort.patterns import contains_naive
from invsort.verify import basis_equivalence, greedy_optimality

# Published coefficients, copied verbatim.
AV_120_201_210 = [
    1, 2, 6, 23, 101, 484, 2468, 13166, 72630, 411076,
    2374188, 13938018, 82932254, 499031324, 3031610924,
    18568429963, 114541486785, 710973143614, 4437415155234,
    27831038618735, 175318861863701, 1108762012137252,
    7037137177329268, 44808588430903068,
]
AV_120_201_1010 = [
    1, 2, 6, 23, 101, 485, 2488, 13414, 75126, 433546,
    2563335, 15461646, 94835817, 589997530, 3715451178,
    23645541066, 151874732111, 983428159871,
    6413887925931, 42100271440339,
]
DEPTH2_POP_STACK = [1, 1, 2, 6, 23, 100, 471, 2349]  # n = 0..7


def _first_diff(got, want):
    for i, (a, b) in enumerate(zip(got, want)):
        if a != b:
            return f"first difference at index {i}: got {a}, expected {b}"
    return f"lengths {len(got)} vs {len(want)}"


def test_criterion_1_tree_120_201_210(criterion):
    with criterion(1, "av-120-201-210 tree, 24 published terms", 5) as c:
        got = level_counts(RuleSet.AV_120_201_210, 24)
        assert got == AV_120_201_210, _first_diff(got, AV_120_201_210)
        c.detail = f"a(24) = {got[-1]}"


def test_criterion_2_tree_120_201_1010(criterion):
    with criterion(2, "av-120-201-1010 tree, 20 published terms", 5) as c:
        got = level_counts(RuleSet.AV_120_201_1010, 20)
        assert got == AV_120_201_1010, _first_diff(got, AV_120_201_1010)
        c.detail = f"a(20) = {got[-1]}"


def test_criterion_3_depth2_pop_stack(criterion):
    with criterion(3, "depth-2 pop stack, brute force n=0..7 and tree suffix", 30) as c:
        m = MachineConfig("pop-stack", depth=2)
        brute = [
            sum(1 for e in enumerate_universe(Universe.inversion_sequences(n)) if is_sorted(simulate(e, m)))
            for n in range(8)
        ]
        assert brute == DEPTH2_POP_STACK, _first_diff(brute, DEPTH2_POP_STACK)
        tree = level_counts(RuleSet.AV_120_201_210_1010, 7)
        assert tree == DEPTH2_POP_STACK[1:], _first_diff(tree, DEPTH2_POP_STACK[1:])
        c.detail = ",".join(map(str, brute))


def test_criterion_4_basis_equivalence(criterion):
    with criterion(4, "basis equivalence, inv n<=9 and words n<=8 k<=4", 180) as c:
        results = basis_equivalence(inv_max_n=9, word_max_n=8, max_k=4)
        bad = [r.line() for r in results if not r.passed]
        assert not bad, "; ".join(bad)
        c.detail = f"{len(results)} machine/family checks, {sum(r.checked for r in results)} words, 0 counterexamples"


def test_criterion_5_search_optimality(criterion):
    with criterion(5, "greedy = search and r=3 collapse, n<=7 k<=4", 180) as c:
        results = greedy_optimality(max_n=7, max_k=4)
        bad = [r.line() for r in results if not r.passed]
        assert not bad, "; ".join(bad)
        c.detail = f"{len(results)} checks, {sum(r.checked for r in results)} comparisons, 0 counterexamples"


def test_criterion_6_closed_forms(criterion):
    with criterion(6, "Catalan, layer counts, cake, Fibonacci", 120) as c:
        inv = Universe.inversion_sequences
        for n in range(13):
            assert count_avoiders(inv(n), [(1, 0)]) == catalan(n), f"catalan n={n}"
        for n in range(1, 11):
            assert count_by_layer_number(n, 2) == 2**n - n - 1, f"2 layers n={n}"
            assert count_by_layer_number(n, n - 1) == math.comb(n + 1, 3), f"n-1 layers n={n}"
        for n in range(1, 13):
            binary = sum(
                1 for tail in itertools.product((0, 1), repeat=n - 1) if is_sorted(pop_stack_sort((0,) + tail))
            )
            assert binary == cake(n), f"binary n={n}: {binary} vs {cake(n)}"
        m = MachineConfig("generalized-pop-stack", depth=2, r=2)
        for n in range(9):
            sortable = sum(1 for p in itertools.permutations(range(1, n + 1)) if is_sorted(simulate(p, m)))
            assert sortable == fibonacci(n + 1), f"fibonacci n={n}: {sortable} vs {fibonacci(n + 1)}"
        c.detail = "all exact"


def _naive_avoiders(n, k, basis):
    return sum(
        1 for w in itertools.product(range(k), repeat=n) if not any(contains_naive(w, p) for p in basis)
    )


def test_criterion_7_word_formulas(criterion):
    with criterion(7, "word-count formulas vs brute force, n<=6 k<=5", 60) as c:
        checked = 0
        for n in range(1, 7):
            for k in range(1, 6):
                want = _naive_avoiders(n, k, [(1, 2, 0), (2, 1, 0)])
                assert burstein_depth2_stack_words(n, k) == want, f"depth-2 stack words n={n} k={k}"
                checked += 1
        for n in range(7):
            for k in range(6):
                want = _naive_avoiders(n, k, [(1, 2, 0), (2, 0, 1), (2, 1, 0)])
                assert burstein_gf_coefficient(n, k) == want, f"F(x,y) coefficient n={n} k={k}"
                checked += 1
        c.detail = f"{checked} coefficients exact"


def test_criterion_8_weakly_decreasing_words(criterion):
    with criterion(8, "weakly decreasing word count, n<=8 a<=6 1<=k<n", 30) as c:
        checked = 0
        for n in range(2, 9):
            for a in range(7):
                for k in range(1, n):
                    p = WDParameters(n, a, k)
                    assert wd_count_formula(p) == wd_count_brute(p), str(p)
                    checked += 1
        c.detail = f"{checked} parameter triples exact"
