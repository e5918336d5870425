import math
from fractions import Fraction

import pytest

from permavoid import (
    BinaryMatrix,
    CapExceededError,
    Permutation,
    count_matrix_copies,
    count_snm,
    easy_bound_check,
    extremal_block_diagonal,
    max_ones_avoiding,
    min_copies_brute,
    permutation_matrix,
    sna_copy_budget,
    sna_family,
    verify_sna_budget,
)

import oracles


# ----------------------------------------------------------- max ones


def test_max_ones_golden_small():
    rep = max_ones_avoiding(2, (1, 2))
    assert rep.max_ones == 3
    assert rep.witness.to_lists() == [[1, 1], [1, 0]]
    assert rep.ratio == Fraction(3, 2)
    assert max_ones_avoiding(3, (1, 2)).max_ones == 5
    assert max_ones_avoiding(1, (1, 2)).max_ones == 1


@pytest.mark.parametrize("pattern", [(1, 2), (2, 1), (2, 1, 3)])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_max_ones_matches_oracle(n, pattern):
    assert max_ones_avoiding(n, pattern).max_ones == oracles.max_ones_naive(n, pattern)


def test_max_ones_methods_agree():
    for pattern in [(1, 2), (2, 1), (1, 3, 2)]:
        for n in [2, 3, 4]:
            exhaustive = max_ones_avoiding(n, pattern)
            search = max_ones_avoiding(n, pattern, method="search")
            assert exhaustive.max_ones == search.max_ones
            assert exhaustive.method == "exhaustive"
            assert search.method == "branch-and-bound"
            # Both witnesses must actually avoid the pattern.
            for rep in (exhaustive, search):
                assert count_matrix_copies(rep.witness, pattern) == 0
                assert rep.witness.ones == rep.max_ones


def test_max_ones_validation_and_caps():
    with pytest.raises(ValueError):
        max_ones_avoiding(2, ())
    with pytest.raises(CapExceededError):
        max_ones_avoiding(5, (1, 2))  # 2^25 masks is past the default cap
    with pytest.raises(CapExceededError):
        max_ones_avoiding(3, (1, 2), cap=2)  # explicit caps may also lower
    assert max_ones_avoiding(4, (1, 2), cap=4).max_ones == 7  # ex = 2n-1


def test_easy_bound_check():
    # With c = ex(n, pattern)/n the bound count >= ones - c*n must hold
    # for every square matrix; try the extremes.
    c = Fraction(max_ones_avoiding(3, (1, 2)).max_ones, 3)
    assert easy_bound_check(BinaryMatrix.filled(3, 3), (1, 2), c)
    assert easy_bound_check(BinaryMatrix.zeros(3, 3), (1, 2), c)
    assert easy_bound_check(permutation_matrix((3, 1, 2)), (1, 2), c)
    # A deliberately tiny c breaks on the full matrix: 9 copies < 9 - 0.
    assert not easy_bound_check(BinaryMatrix.filled(3, 3), (1, 2), Fraction(-1))


# ---------------------------------------------------------- min copies


def test_min_copies_golden():
    assert min_copies_brute(2, 4, (1, 2)).min_copies == 1
    assert min_copies_brute(3, 9, (1, 2)).min_copies == 9
    assert min_copies_brute(2, 3, (1, 2)).min_copies == 0
    rep = min_copies_brute(2, 4, (1, 2))
    assert rep.witness == BinaryMatrix.filled(2, 2)
    assert rep.reference_bound == Fraction(4 ** 3, 2 ** 2)


@pytest.mark.parametrize("pattern", [(1, 2), (2, 1)])
def test_min_copies_matches_oracle(pattern):
    for n in [2, 3]:
        for a in range(n * n + 1):
            rep = min_copies_brute(n, a, pattern)
            assert rep.min_copies == oracles.min_copies_naive(n, a, pattern)
            assert rep.witness.ones == a
            assert count_matrix_copies(rep.witness, pattern) == rep.min_copies


def test_min_copies_validation():
    with pytest.raises(ValueError):
        min_copies_brute(2, 5, (1, 2))
    with pytest.raises(CapExceededError):
        min_copies_brute(5, 10, (1, 2))


# ------------------------------------------------------ block diagonal


def test_block_diagonal_golden():
    m = extremal_block_diagonal(4, 8)
    assert m.row_lines() == ["1100", "1100", "0011", "0011"]
    assert m.ones == 8
    assert count_matrix_copies(m, (2, 1)) == 2
    assert count_matrix_copies(m, (1, 2)) == 18
    assert extremal_block_diagonal(4, 16) == BinaryMatrix.filled(4, 4)
    assert extremal_block_diagonal(3, 3) == permutation_matrix((1, 2, 3))


def test_block_diagonal_descending_copies_stay_inside_blocks():
    # Each a/n-sided block contributes C(side,2)^2 falling pairs and
    # blocks never combine for a descent, hence the closed form.
    for n, a in [(4, 8), (6, 12), (8, 16)]:
        side = a // n
        blocks = n * n // a
        m = extremal_block_diagonal(n, a)
        assert count_matrix_copies(m, (2, 1)) == blocks * math.comb(side, 2) ** 2


def test_sharpness_sandwich_at_n4():
    # The brute-force minimum, the construction, and the reference
    # bound must nest for every ones count the construction supports.
    n, k = 4, 2
    for a in [4, 8, 16]:
        built = count_matrix_copies(extremal_block_diagonal(n, a), (2, 1))
        best = min_copies_brute(n, a, (2, 1)).min_copies
        bound = Fraction(a ** (2 * k - 1), n ** (2 * k - 2))
        assert best <= built <= bound


def test_block_diagonal_validation():
    with pytest.raises(ValueError):
        extremal_block_diagonal(4, 6)  # 4 does not divide 6
    with pytest.raises(ValueError):
        extremal_block_diagonal(4, 12)  # 12 does not divide 16
    with pytest.raises(ValueError):
        extremal_block_diagonal(0, 0)


# -------------------------------------------------- block permutations


def test_sna_family_members_golden():
    fam = sna_family(4, 2)
    assert (fam.q, fam.r, fam.size) == (2, 0, 4)
    members = [p.to_text() for p in fam.members()]
    assert members == ["1,2,3,4", "1,2,4,3", "2,1,3,4", "2,1,4,3"]
    assert fam.contains_member((2, 1, 4, 3))
    assert not fam.contains_member((3, 1, 2, 4))


def test_sna_family_size_formula():
    for n in range(1, 8):
        for a in range(1, n + 1):
            fam = sna_family(n, a)
            q, r = divmod(n, a)
            assert fam.size == math.factorial(a) ** q * math.factorial(r)
            assert sum(1 for _ in fam.members()) == fam.size


def test_sna_family_validation():
    with pytest.raises(ValueError):
        sna_family(3, 4)
    with pytest.raises(ValueError):
        sna_family(3, 0)


def test_sna_budget_formula():
    assert sna_copy_budget(6, 3, 3) == 2 * math.comb(3, 3) + math.comb(0, 3)
    assert sna_copy_budget(7, 3, 2) == 2 * math.comb(3, 2) + math.comb(1, 2)
    q, r = divmod(9, 4)
    assert sna_copy_budget(9, 4, 2) == q * math.comb(4, 2) + math.comb(r, 2)


def test_verify_sna_budget_descending_triple():
    rep = verify_sna_budget(6, 3, (3, 2, 1))
    assert rep.family_size == 36
    assert rep.budget == 2
    assert rep.max_observed == 2
    assert rep.within_budget
    assert rep.linear_cap == 6 * 3 ** 2
    assert rep.max_observed <= rep.budget <= rep.linear_cap


def test_verify_sna_budget_requires_falling_pattern():
    with pytest.raises(ValueError, match="reverse"):
        verify_sna_budget(6, 3, (1, 2, 3))


def test_budget_is_tight_for_descents():
    # A falling pair can only occur inside a run, so the bound is an
    # equality for the member that reverses every run.
    for n, a in [(5, 2), (6, 3), (7, 3)]:
        rep = verify_sna_budget(n, a, (2, 1))
        assert rep.max_observed == rep.budget


# ------------------------------------------------------- few copies


def test_count_snm_golden():
    assert count_snm(3, 1, (1, 2)) == 3
    assert count_snm(5, 0, (3, 2, 1)) == 42
    assert count_snm(3, 3, (1, 2)) == 6


def test_count_snm_monotone_and_exhaustive():
    previous = 0
    for m in range(0, math.comb(4, 2) + 1):
        current = count_snm(4, m, (1, 2))
        assert current >= previous
        previous = current
    assert count_snm(4, math.comb(4, 2), (1, 2)) == math.factorial(4)


def test_count_snm_matches_histogram_oracle():
    hist = oracles.histogram_naive(5, (2, 1, 3))
    for m in [0, 1, 2, 5]:
        assert count_snm(5, m, (2, 1, 3)) == sum(
            v for c, v in hist.items() if c <= m
        )
