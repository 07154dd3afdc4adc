import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invsort.core import (
    InversionSequence,
    Permutation,
    ResourceLimitError,
    Universe,
    Word,
    decode,
    encode,
    enumerate_universe,
    format_word,
    is_sorted,
    parse_word,
    universe_size,
    worker_count,
)


def W(s):
    return tuple(int(c) for c in s)


@pytest.mark.parametrize(
    "perm, inv",
    [("51743862", "01023026"), ("1234", "0000"), ("3214", "0120"), ("", "")],
)
def test_encode_decode_examples(perm, inv):
    assert encode(W(perm)) == W(inv)
    assert decode(W(inv)) == W(perm)
    assert type(encode(W(perm))) is InversionSequence
    assert type(decode(W(inv))) is Permutation


def test_decode_matches_search_over_permutations():
    # the unique permutation whose left-larger counts are e, found by scanning S_n
    for n in range(6):
        by_code = {}
        for p in itertools.permutations(range(1, n + 1)):
            code = tuple(sum(p[j] > p[i] for j in range(i)) for i in range(n))
            by_code[code] = p
        assert len(by_code) == math.factorial(n)
        for e, p in by_code.items():
            assert decode(e) == p


@pytest.mark.parametrize("n", range(9))
def test_round_trip_exhaustive(n):
    for p in itertools.permutations(range(1, n + 1)):
        assert decode(encode(p)) == p
    for e in enumerate_universe(Universe.inversion_sequences(n)):
        assert encode(decode(e)) == e


@given(st.permutations(range(1, 31)))
def test_round_trip_long(p):
    assert decode(encode(p)) == tuple(p)


@pytest.mark.parametrize("bad", [(0, 2), (1,), (0, 0, 3)])
def test_decode_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        decode(bad)


@pytest.mark.parametrize("bad", [(1, 1), (0, 1), (2, 3)])
def test_encode_rejects_non_permutations(bad):
    with pytest.raises(ValueError):
        encode(bad)


def test_word_rejects_negative_letters():
    with pytest.raises(ValueError):
        Word([0, -1])


def test_enumerate_examples():
    inv3 = list(enumerate_universe(Universe.inversion_sequences(3)))
    assert inv3 == [(0, a, b) for a in range(2) for b in range(3)]
    assert [format_word(w, compact=True) for w in inv3] == ["000", "001", "002", "010", "011", "012"]
    assert list(enumerate_universe(Universe.words(1, 3))) == [(0,), (1,), (2,)]
    assert list(enumerate_universe(Universe.inversion_sequences(0))) == [()]


@pytest.mark.parametrize("n", range(10))
def test_inversion_sequence_count_is_factorial(n):
    u = Universe.inversion_sequences(n)
    assert sum(1 for _ in enumerate_universe(u)) == math.factorial(n) == universe_size(u)


def test_enumeration_is_lexicographic_and_typed():
    for u in (Universe.inversion_sequences(5), Universe.words(4, 3), Universe.permutations(5)):
        items = list(enumerate_universe(u))
        assert items == sorted(items)
        assert len(set(items)) == len(items) == universe_size(u)
        assert all(type(w) is type(u.wrap(items[0])) for w in items)


def test_enumeration_is_restartable():
    u = Universe.words(3, 2)
    assert list(enumerate_universe(u)) == list(enumerate_universe(u))


def test_size_guard():
    with pytest.raises(ResourceLimitError):
        next(enumerate_universe(Universe.inversion_sequences(8), limit=1000))
    with pytest.raises(ResourceLimitError):
        next(enumerate_universe(Universe.inversion_sequences(13)))


@pytest.mark.parametrize(
    "kwargs", [dict(kind="words", n=3), dict(kind="inv", n=-1), dict(kind="perm", n=2, k=3), dict(kind="bags", n=1)]
)
def test_universe_validation(kwargs):
    with pytest.raises(ValueError):
        Universe(**kwargs)


@pytest.mark.parametrize("w, want", [("0011", True), ("010", False), ("", True), ("5", True)])
def test_is_sorted(w, want):
    assert is_sorted(W(w)) is want


def test_parse_and_format():
    assert parse_word("0,1,2,0") == (0, 1, 2, 0)
    assert parse_word("0120") == (0, 1, 2, 0)
    assert parse_word(" 10, 3 ") == (10, 3)
    assert parse_word("10,") == (10,)
    assert format_word((10,)) == "10,"
    assert parse_word("") == ()
    assert format_word((0, 1, 2, 0)) == "0,1,2,0"
    assert format_word((0, 1, 2, 0), compact=True) == "0120"
    assert format_word((0, 12), compact=True) == "0,12"
    for bad in ("1,x", "a", "1,,2", "-1"):
        with pytest.raises(ValueError):
            parse_word(bad)


@given(st.lists(st.integers(0, 40), max_size=12))
def test_parse_format_round_trip(letters):
    assert parse_word(format_word(letters)) == tuple(letters)


def test_worker_count(monkeypatch):
    monkeypatch.delenv("INVSORT_THREADS", raising=False)
    assert worker_count() == 1
    monkeypatch.setenv("INVSORT_THREADS", "3")
    assert worker_count() == 3
    assert worker_count(8) == 3
    assert worker_count(2) == 2
