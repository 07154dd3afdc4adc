import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invsort.closedforms import (
    Series2,
    binom,
    burstein_depth2_stack_words,
    burstein_gf,
    burstein_gf_coefficient,
    cake,
    catalan,
    eulerian,
    fibonacci,
    tetrahedral,
)
from invsort.core import Universe, enumerate_universe
from invsort.layers import layer_count
from invsort.patterns import contains_naive


def brute_words(n, k, basis):
    return sum(1 for w in itertools.product(range(k), repeat=n) if not any(contains_naive(w, p) for p in basis))


def descents(p):
    return sum(a > b for a, b in zip(p, p[1:]))


def test_binom():
    assert binom(5, 2) == 10
    assert binom(2, 3) == 0
    assert binom(3, -1) == 0
    assert binom(-1, 0) == 0


@pytest.mark.parametrize("n, want", [(0, 1), (3, 5), (10, math.comb(20, 10) // 11)])
def test_catalan(n, want):
    assert catalan(n) == want


def test_fibonacci():
    assert fibonacci(0) == 0
    assert fibonacci(1) == fibonacci(2) == 1
    # permutations of length 4 avoiding 231, 312 and 321 (as reduced 0-based patterns)
    av = [(1, 2, 0), (2, 0, 1), (2, 1, 0)]
    assert fibonacci(5) == sum(
        1 for p in itertools.permutations(range(4)) if not any(contains_naive(p, q) for q in av)
    )
    a, b = 0, 1
    for _ in range(10):
        a, b = b, a + b
    assert fibonacci(10) == a == 55
    assert fibonacci(200) == fibonacci(199) + fibonacci(198)


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian_matches_descent_counts(n):
    counts = [0] * n
    for p in itertools.permutations(range(n)):
        counts[descents(p)] += 1
    assert [eulerian(n, k) for k in range(1, n + 1)] == counts


def test_eulerian_examples():
    assert all(eulerian(n, 1) == 1 for n in range(1, 12))
    assert eulerian(4, 2) == 11
    assert eulerian(5, 3) == 66
    with pytest.raises(ValueError):
        eulerian(3, 4)


def test_tetrahedral():
    assert tetrahedral(1) == 0
    assert tetrahedral(4) == 10
    assert tetrahedral(6) == 35 == sum(1 for e in enumerate_universe(Universe.inversion_sequences(6)) if layer_count(e) == 5)


def test_cake():
    assert cake(1) == 1
    assert cake(4) == 8
    assert cake(8) == 64
    binary = [(0,) + t for t in itertools.product((0, 1), repeat=7)]
    assert cake(8) == sum(1 for w in binary if not contains_naive(w, (1, 0, 1, 0)))
    with pytest.raises(ValueError):
        cake(0)


def test_depth2_stack_word_formula():
    assert all(burstein_depth2_stack_words(n, 1) == 1 for n in range(1, 10))
    assert burstein_depth2_stack_words(2, 2) == 4
    assert burstein_depth2_stack_words(3, 3) == brute_words(3, 3, [(1, 2, 0), (2, 1, 0)])
    with pytest.raises(ValueError):
        burstein_depth2_stack_words(0, 2)


def test_word_series_examples():
    assert burstein_gf_coefficient(1, 1) == 1
    assert burstein_gf_coefficient(2, 2) == 4
    assert burstein_gf_coefficient(0, 0) == 1
    with pytest.raises(ValueError):
        burstein_gf_coefficient(-1, 0)


def test_word_series_reconstruction():
    nx, ny = 6, 5
    a = Series2({(0, 0): 1, (1, 0): -3, (2, 0): 2}, nx, ny)
    y = Series2({(0, 1): 1}, nx, ny)
    x2 = Series2({(2, 0): 1}, nx, ny)
    b = Series2({(0, 0): 2, (1, 0): -5, (2, 0): 3}, nx, ny)
    c = Series2({(0, 0): 1, (1, 0): -2}, nx, ny)
    num = a - (a + x2) * y
    den = a - b * y + c * y * y
    assert (burstein_gf(nx, ny) * den - num).is_zero()


def test_series_examples():
    y = Series2({(0, 1): 1}, 0, 2)
    assert (1 - y) * (1 + y + y * y) == 1
    x = Series2({(1, 0): 1}, 3, 0)
    inv = (1 - x).invert()
    assert inv.format() == "(0,0): 1\n(1,0): 1\n(2,0): 1\n(3,0): 1"
    assert inv[3, 0] == 1
    with pytest.raises(IndexError):
        inv[4, 0]


def test_series_errors():
    with pytest.raises(ValueError):
        (Series2.constant(2, 2, 2)).invert()
    with pytest.raises(ValueError):
        Series2.constant(1, 2, 2) + Series2.constant(1, 2, 3)


def test_series_negative_unit_inverse():
    s = Series2({(0, 0): -1, (1, 1): 3, (2, 0): 1}, 4, 4)
    assert s * s.invert() == 1


coeff = st.integers(-5, 5)


def series(unit=False):
    return st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coeff, max_size=8).map(
        lambda d: Series2({**d, (0, 0): 1} if unit else d, 3, 3)
    )


@settings(max_examples=60)
@given(series(), series(), series())
def test_series_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@settings(max_examples=60)
@given(series(unit=True))
def test_series_inverse(a):
    inv = a.invert()
    assert a * inv == 1
    assert all(type(v) is int for _, v in inv.items())


def test_series_exact_big_integers():
    x = Series2({(1, 0): 10**30}, 3, 0)
    assert ((1 - x).invert())[3, 0] == 10**90
