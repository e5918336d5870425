import math
import random

import pytest

from permavoid import (
    CapExceededError,
    Permutation,
    contains,
    copy_count_distribution,
    count_occurrences,
    enumerate_occurrences,
    enumerate_permutations,
)
from permavoid.perms import CopyCountDistribution

import oracles


def test_construction_and_call():
    p = Permutation((2, 4, 1, 3))
    assert len(p) == 4
    assert p(1) == 2 and p(4) == 3
    assert p.zero_based == (1, 3, 0, 2)
    assert Permutation.identity(3).values == (1, 2, 3)
    assert Permutation.identity(0).values == ()


def test_construction_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation((0, 1, 2))
    with pytest.raises(ValueError):
        Permutation((1, 2, 4))


def test_from_text_accepts_commas_and_whitespace():
    assert Permutation.from_text("2,4,1,3").values == (2, 4, 1, 3)
    assert Permutation.from_text("2 4 1 3").values == (2, 4, 1, 3)
    assert Permutation.from_text(" 2, 4,\n1, 3 ").values == (2, 4, 1, 3)
    assert Permutation.from_text("1").to_text() == "1"


def test_from_text_reports_bad_token_position():
    with pytest.raises(ValueError, match="token 2"):
        Permutation.from_text("2,x,1")
    with pytest.raises(ValueError, match="empty"):
        Permutation.from_text("  ")


def test_text_round_trip():
    for values in [(1,), (2, 1), (2, 4, 1, 3), (5, 3, 1, 2, 4)]:
        p = Permutation(values)
        assert Permutation.from_text(p.to_text()) == p


def test_reverse_complement_inverse():
    p = Permutation((2, 4, 1, 3))
    assert p.reverse().values == (3, 1, 4, 2)
    assert p.complement().values == (3, 1, 4, 2)
    assert p.inverse().values == (3, 1, 4, 2)
    assert p.reverse().reverse() == p
    assert p.complement().complement() == p
    assert p.inverse().inverse() == p


def test_count_golden_example():
    sigma = Permutation((2, 4, 1, 3))
    assert count_occurrences(sigma, (1, 2)) == 3
    assert enumerate_occurrences(sigma, (1, 2)) == ((1, 2), (1, 4), (3, 4))
    assert not contains(sigma, (1, 2, 3))


def test_empty_and_oversized_patterns():
    sigma = Permutation((2, 1, 3))
    assert contains(sigma, ())
    assert count_occurrences(sigma, ()) == 1
    assert enumerate_occurrences(sigma, ()) == ((),)
    assert not contains(sigma, (1, 2, 3, 4))
    assert count_occurrences(sigma, (1, 2, 3, 4)) == 0


@pytest.mark.parametrize("pattern", [(1, 2), (2, 1), (1, 3, 2), (3, 2, 1), (2, 4, 1, 3)])
def test_counts_match_oracle_on_random_permutations(pattern):
    rng = random.Random(451)
    for _ in range(40):
        n = rng.randrange(0, 9)
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        sigma = tuple(sigma)
        expected = oracles.occurrences_naive(sigma, pattern)
        assert count_occurrences(sigma, pattern) == len(expected)
        assert list(enumerate_occurrences(sigma, pattern)) == expected
        assert contains(sigma, pattern) == bool(expected)


def test_symmetry_identities():
    # Reversing positions reverses the pattern; complementing values
    # complements it; occurrence counts survive both.
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randrange(1, 8)
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        sigma = Permutation(tuple(sigma))
        for pattern in [(1, 2), (2, 1), (1, 3, 2), (3, 1, 2)]:
            pi = Permutation(pattern)
            base = count_occurrences(sigma, pi)
            assert count_occurrences(sigma.reverse(), pi.reverse()) == base
            assert count_occurrences(sigma.complement(), pi.complement()) == base
            assert count_occurrences(sigma.reverse().complement(),
                                     pi.reverse().complement()) == base


def test_enumerate_permutations_is_lexicographic():
    perms = list(enumerate_permutations(3))
    assert [p.values for p in perms] == [
        (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)
    ]


def test_enumerate_permutations_prefix_partition():
    whole = {p.values for p in enumerate_permutations(4)}
    assert len(whole) == 24
    pieces = set()
    for first in range(1, 5):
        chunk = {p.values for p in enumerate_permutations(4, prefix=(first,))}
        assert len(chunk) == 6
        assert all(v[0] == first for v in chunk)
        pieces |= chunk
    assert pieces == whole


def test_enumerate_permutations_rejects_bad_prefix():
    with pytest.raises(ValueError):
        list(enumerate_permutations(3, prefix=(1, 1)))
    with pytest.raises(ValueError):
        list(enumerate_permutations(3, prefix=(4,)))


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        list(enumerate_permutations(13))
    # An explicit cap raises the limit.
    gen = enumerate_permutations(13, cap=13)
    assert next(gen).values == tuple(range(1, 14))
    gen.close()


def test_distribution_golden_n3():
    assert copy_count_distribution(3, (1, 2)).histogram == {0: 1, 1: 2, 2: 2, 3: 1}
    assert copy_count_distribution(3, (1, 2, 3)).histogram == {0: 5, 1: 1}


@pytest.mark.parametrize("n", range(0, 6))
@pytest.mark.parametrize("pattern", [(1, 2), (2, 1), (1, 3, 2), (3, 2, 1)])
def test_distribution_matches_oracle(n, pattern):
    dist = copy_count_distribution(n, pattern)
    assert dist.histogram == oracles.histogram_naive(n, pattern)
    assert sum(dist.histogram.values()) == math.factorial(n)


def test_distribution_prefix_counts_avoiders():
    # Zero-copy permutations of an increasing triple: the Catalan numbers.
    catalan = [1, 2, 5, 14, 42, 132, 429]
    for n, expected in enumerate(catalan, start=1):
        dist = copy_count_distribution(n, (1, 2, 3))
        assert dist.prefix_count(0) == expected
    dist = copy_count_distribution(4, (1, 2))
    assert dist.prefix_count(dist.max_count()) == math.factorial(4)


def test_distribution_json_round_trip():
    dist = copy_count_distribution(4, (2, 1, 3))
    data = dist.to_json_dict()
    assert all(isinstance(k, str) and isinstance(v, str)
               for k, v in data["histogram"].items())
    assert CopyCountDistribution.from_json_dict(data) == dist
