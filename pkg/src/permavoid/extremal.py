"""Extremal searches and constructions for matrix pattern copies.

Four small instruments around the same question — how many 1s force
how many pattern copies:

  * ``max_ones_avoiding``: the exact extremal function at desk scale
    (most ones in an n x n matrix with zero copies);
  * ``min_copies_brute``: the exact supersaturation floor (fewest
    copies over all matrices with a prescribed number of ones);
  * ``extremal_block_diagonal``: the diagonal-blocks construction
    showing the floor is tight up to constants;
  * the S_{n,a} block-permutation family, whose members provably carry
    few pattern copies, with an exhaustive budget verifier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations, permutations as _lex_permutations, product
from typing import Iterator

from . import kernels
from .config import check_enum_cap, check_matrix_cap
from .errors import DimensionMismatchError
from .matrices import BinaryMatrix, count_matrix_copies
from .perms import PermLike, Permutation, as_permutation, copy_count_distribution


@dataclass(frozen=True)
class MaxOnesReport:
    """Exact (or branch-and-bound) maximum ones among avoiding matrices."""

    n: int
    pattern: Permutation
    max_ones: int
    ratio: Fraction  # max_ones / n, the desk-scale extremal-constant estimate
    witness: BinaryMatrix
    method: str


def _mask_rows(mask: int, n: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple((mask >> (i * n)) & full for i in range(n))


def max_ones_avoiding(
    n: int,
    pi: PermLike,
    method: str = "exhaustive",
    cap: int | None = None,
) -> MaxOnesReport:
    """Maximum number of ones in an n x n 0-1 matrix with no copy of
    the pattern matrix of pi.

    ``method="exhaustive"`` sweeps all 2^(n*n) matrices and is gated
    by the matrix cap; ``method="search"`` runs a branch-and-bound
    over entries that still proves optimality but is labeled
    separately because its running time is input-dependent.

    >>> max_ones_avoiding(2, (1, 2)).max_ones
    3
    """
    p = as_permutation(pi)
    if len(p) == 0:
        raise ValueError("every matrix contains the empty pattern")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if method == "exhaustive":
        check_matrix_cap(n, cap)
        best_ones = -1
        best_mask = 0
        pi0 = p.zero_based
        for mask in range(1 << (n * n)):
            if mask.bit_count() <= best_ones:
                continue
            rows = _mask_rows(mask, n)
            if not kernels.matrix_contains_perm(rows, n, pi0):
                best_ones = mask.bit_count()
                best_mask = mask
        witness = BinaryMatrix(n, n, _mask_rows(best_mask, n))
    elif method == "search":
        check_enum_cap(n, cap)
        witness = _max_ones_branch_and_bound(n, p)
        best_ones = witness.ones
    else:
        raise ValueError(f"unknown method {method!r}")
    return MaxOnesReport(
        n=n,
        pattern=p,
        max_ones=best_ones,
        ratio=Fraction(best_ones, n),
        witness=witness,
        method="exhaustive" if method == "exhaustive" else "branch-and-bound",
    )


def _max_ones_branch_and_bound(n: int, p: Permutation) -> BinaryMatrix:
    """Depth-first over cells in row-major order, 1 before 0.

    Any matrix containing the pattern only gains copies as later cells
    are filled, so a branch can be abandoned the moment the partial
    matrix contains it; the other prune is the trivial ones-plus-
    remaining bound.  First optimum found is returned, which the fixed
    cell order makes deterministic.
    """
    pi0 = p.zero_based
    cells = n * n
    rows = [0] * n
    best_ones = -1
    best_rows: tuple[int, ...] = (0,) * n

    def rec(cell: int, ones: int) -> None:
        nonlocal best_ones, best_rows
        if ones + (cells - cell) <= best_ones:
            return
        if cell == cells:
            best_ones = ones
            best_rows = tuple(rows)
            return
        i, j = divmod(cell, n)
        rows[i] |= 1 << j
        if not kernels.matrix_contains_perm(tuple(rows), n, pi0):
            rec(cell + 1, ones + 1)
        rows[i] &= ~(1 << j)
        rec(cell + 1, ones)

    rec(0, 0)
    return BinaryMatrix(n, n, best_rows)


def easy_bound_check(m: BinaryMatrix, pi: PermLike, c: "Fraction | int | str") -> bool:
    """True iff the copy count of pi in ``m`` is at least ones - c*n.

    This is the linear supersaturation floor: with c at least the
    extremal ratio for this pattern and size, deleting one 1 kills at
    most one copy, so the inequality holds for every matrix.
    """
    if m.rows != m.cols:
        raise DimensionMismatchError(f"need a square matrix, got {m.rows}x{m.cols}")
    c = Fraction(c)
    return count_matrix_copies(m, pi) >= m.ones - c * m.rows


@dataclass(frozen=True)
class MinCopiesReport:
    """Exact minimum copy count over matrices with a fixed ones count."""

    n: int
    a: int
    pattern: Permutation
    min_copies: int
    witness: BinaryMatrix
    reference_bound: Fraction  # a^(2k-1) / n^(2k-2), for comparison only
    method: str


def min_copies_brute(
    n: int, a: int, pi: PermLike, cap: int | None = None
) -> MinCopiesReport:
    """Exact minimum of the copy count over all n x n matrices with
    exactly ``a`` ones, by enumerating the C(n*n, a) supports.

    Gated by the matrix cap.  The witness is the lexicographically
    first minimizing support.
    """
    p = as_permutation(pi)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0 <= a <= n * n:
        raise ValueError(f"ones count {a} outside 0..{n * n}")
    check_matrix_cap(n, cap)
    pi0 = p.zero_based
    k = len(p)
    best = None
    best_rows: tuple[int, ...] = ()
    for support in combinations(range(n * n), a):
        rows = [0] * n
        for cell in support:
            rows[cell // n] |= 1 << (cell % n)
        copies = kernels.count_matrix_copies(tuple(rows), n, pi0)
        if best is None or copies < best:
            best = copies
            best_rows = tuple(rows)
            if best == 0:
                break  # the global minimum; keep the first witness
    bound = Fraction(a ** (2 * k - 1), n ** (2 * k - 2)) if k >= 1 else Fraction(0)
    return MinCopiesReport(
        n=n,
        a=a,
        pattern=p,
        min_copies=best,
        witness=BinaryMatrix(n, n, best_rows),
        reference_bound=bound,
        method="exhaustive",
    )


def extremal_block_diagonal(n: int, a: int) -> BinaryMatrix:
    """The diagonal-blocks matrix: n/(a/n) all-ones blocks of side a/n
    along the diagonal, a ones in total.

    Requires n | a and a | n^2 so the blocks tile; callers wanting
    other (n, a) adjust them by a constant factor first.

    >>> extremal_block_diagonal(4, 8).row_lines()
    ['1100', '1100', '0011', '0011']
    """
    if n < 1 or a < 1:
        raise ValueError(f"need n, a >= 1, got n={n}, a={a}")
    if a % n:
        raise ValueError(f"n={n} must divide a={a} (block side a/n)")
    if (n * n) % a:
        raise ValueError(f"a={a} must divide n^2={n * n} (whole number of blocks)")
    side = a // n
    block = (1 << side) - 1
    bits = tuple(block << (side * (i // side)) for i in range(n))
    return BinaryMatrix(n, n, bits)


@dataclass(frozen=True)
class SnaFamily:
    """The block permutations: positions split into q runs of length a
    plus a remainder of length r (n = q*a + r), each run permuting its
    own value range.

    The family has exactly (a!)^q * r! members.  Values in distinct
    runs only increase left to right, so an occurrence of a pattern
    whose first value exceeds its last can never straddle runs — it is
    trapped inside one, which is what keeps those copy counts low.
    """

    n: int
    a: int
    q: int
    r: int
    size: int

    def _block_ranges(self) -> list[range]:
        blocks = [
            range(j * self.a + 1, (j + 1) * self.a + 1) for j in range(self.q)
        ]
        if self.r:
            blocks.append(range(self.q * self.a + 1, self.n + 1))
        return blocks

    def members(self, cap: int | None = None) -> Iterator[Permutation]:
        """All members in lexicographic order (gated by the enumeration cap)."""
        check_enum_cap(self.n, cap)
        per_block = [_lex_permutations(b) for b in self._block_ranges()]
        for combo in product(*per_block):
            yield Permutation(tuple(chain.from_iterable(combo)))

    def contains_member(self, sigma: PermLike) -> bool:
        s = as_permutation(sigma)
        if len(s) != self.n:
            return False
        pos = 0
        for block in self._block_ranges():
            width = len(block)
            if sorted(s.values[pos : pos + width]) != list(block):
                return False
            pos += width
        return True


def sna_family(n: int, a: int) -> SnaFamily:
    """Descriptor for the block-permutation family with run length a.

    >>> sna_family(5, 2).size
    4
    """
    if not 1 <= a <= n:
        raise ValueError(f"need 1 <= a <= n, got a={a}, n={n}")
    q, r = divmod(n, a)
    size = math.factorial(a) ** q * math.factorial(r)
    return SnaFamily(n=n, a=a, q=q, r=r, size=size)


def sna_copy_budget(n: int, a: int, k: int) -> int:
    """The per-member copy budget q*C(a,k) + C(r,k).

    Each occurrence of a length-k pattern in a family member uses k
    positions of a single run, so the runs contribute at most C(a,k)
    copies each and the remainder at most C(r,k).
    """
    if not 1 <= a <= n:
        raise ValueError(f"need 1 <= a <= n, got a={a}, n={n}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    q, r = divmod(n, a)
    return q * math.comb(a, k) + math.comb(r, k)


@dataclass(frozen=True)
class SnaBudgetReport:
    """Exhaustive check of the family's copy budget for one pattern."""

    n: int
    a: int
    pattern: Permutation
    budget: int
    linear_cap: int  # n * a^(k-1), the coarser closed form
    family_size: int
    max_observed: int
    within_budget: bool


def verify_sna_budget(
    n: int, a: int, pi: PermLike, cap: int | None = None
) -> SnaBudgetReport:
    """Stream every family member and measure its copy count of pi.

    Requires pi(1) > pi(k): a pattern starting below its end could
    straddle two runs, and the budget argument breaks.  For the other
    patterns, verify pi.reverse() instead — reversing a permutation
    flips the rows of its matrix, a bijection that carries copies of
    pi to copies of pi.reverse() (see BinaryMatrix.flip_rows), so the
    same budget holds.
    """
    p = as_permutation(pi)
    k = len(p)
    if k < 2 or p.values[0] <= p.values[-1]:
        raise ValueError(
            "budget verification needs pi(1) > pi(k); "
            "verify pi.reverse() instead (same budget by the row-flip bijection)"
        )
    family = sna_family(n, a)
    budget = sna_copy_budget(n, a, k)
    linear_cap = n * a ** (k - 1)
    pi0 = p.zero_based
    max_observed = 0
    checked = 0
    for member in family.members(cap):
        c = kernels.count_occurrences(member.zero_based, pi0)
        if c > max_observed:
            max_observed = c
        checked += 1
    if checked != family.size:
        raise RuntimeError(
            f"streamed {checked} members, expected {family.size}"
        )
    return SnaBudgetReport(
        n=n,
        a=a,
        pattern=p,
        budget=budget,
        linear_cap=linear_cap,
        family_size=family.size,
        max_observed=max_observed,
        within_budget=max_observed <= budget <= linear_cap,
    )


def count_snm(n: int, m: int, pi: PermLike, cap: int | None = None) -> int:
    """Number of permutations in S_n with at most m copies of pi
    (a prefix sum of the copy-count distribution).

    >>> count_snm(3, 1, (1, 2))
    3
    """
    dist = copy_count_distribution(n, pi, cap)
    return dist.prefix_count(m)
