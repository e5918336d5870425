"""Pure-Python kernels: the reference twin of permavoid._speedups.

Every function here has an identical-signature compiled counterpart;
``permavoid.kernels`` picks whichever is importable.  Keep the two in
lockstep — tests/test_kernels.py asserts they agree on randomized
inputs.

Conventions shared by both backends:

  * permutations and patterns arrive as 0-based value tuples;
  * hypergraph edges arrive as sorted tuples of 0-based indices;
  * matrices arrive as per-row column bitmasks (bit j = column j);
  * full S_n passes run in lexicographic one-line order.
"""

from __future__ import annotations

from itertools import permutations as _lex_permutations

BACKEND = "python"


def _value_order(pi: tuple[int, ...]) -> tuple[int, ...]:
    """Positions of the pattern sorted by value: order[t] = pi^{-1}(t).

    A k-subset of positions x_0 < ... < x_{k-1} carries the pattern iff
    reading sigma at x[order[0]], x[order[1]], ... gives a strictly
    increasing value sequence.
    """
    order = [0] * len(pi)
    for i, v in enumerate(pi):
        order[v] = i
    return tuple(order)


def contains(sigma: tuple[int, ...], pi: tuple[int, ...]) -> bool:
    """True iff some index subsequence of sigma is order-isomorphic to pi."""
    n, k = len(sigma), len(pi)
    if k == 0:
        return True
    if k > n:
        return False
    vals = [0] * k

    def extend(depth: int, start: int) -> bool:
        for x in range(start, n - (k - depth) + 1):
            v = sigma[x]
            ok = True
            for t in range(depth):
                if (pi[t] < pi[depth]) != (vals[t] < v):
                    ok = False
                    break
            if ok:
                if depth == k - 1:
                    return True
                vals[depth] = v
                if extend(depth + 1, x + 1):
                    return True
        return False

    return extend(0, 0)


def count_occurrences(sigma: tuple[int, ...], pi: tuple[int, ...]) -> int:
    """Exact number of index subsequences of sigma order-isomorphic to pi."""
    n, k = len(sigma), len(pi)
    if k == 0:
        return 1
    if k > n:
        return 0
    vals = [0] * k
    count = 0

    def extend(depth: int, start: int) -> None:
        nonlocal count
        for x in range(start, n - (k - depth) + 1):
            v = sigma[x]
            ok = True
            for t in range(depth):
                if (pi[t] < pi[depth]) != (vals[t] < v):
                    ok = False
                    break
            if ok:
                if depth == k - 1:
                    count += 1
                else:
                    vals[depth] = v
                    extend(depth + 1, x + 1)

    extend(0, 0)
    return count


def enumerate_occurrences(
    sigma: tuple[int, ...], pi: tuple[int, ...]
) -> list[tuple[int, ...]]:
    """All occurrences as 0-based index tuples, lexicographic order."""
    n, k = len(sigma), len(pi)
    if k == 0:
        return [()]
    if k > n:
        return []
    vals = [0] * k
    idx = [0] * k
    out: list[tuple[int, ...]] = []

    def extend(depth: int, start: int) -> None:
        for x in range(start, n - (k - depth) + 1):
            v = sigma[x]
            ok = True
            for t in range(depth):
                if (pi[t] < pi[depth]) != (vals[t] < v):
                    ok = False
                    break
            if ok:
                idx[depth] = x
                if depth == k - 1:
                    out.append(tuple(idx))
                else:
                    vals[depth] = v
                    extend(depth + 1, x + 1)

    extend(0, 0)
    return out


def copy_count_histogram(n: int, pi: tuple[int, ...]) -> dict[int, int]:
    """Histogram {c: #sigma in S_n with exactly c occurrences of pi}."""
    hist: dict[int, int] = {}
    for p in _lex_permutations(range(n)):
        c = count_occurrences(p, pi)
        hist[c] = hist.get(c, 0) + 1
    return hist


def _edge_is_hit(sigma, edge, order) -> bool:
    prev = -1
    for t in order:
        v = sigma[edge[t]]
        if v <= prev:
            return False
        prev = v
    return True


def hits_edge(sigma, pi, edges) -> bool:
    """True iff some edge's index set carries the pattern (k >= 1)."""
    order = _value_order(pi)
    for edge in edges:
        if _edge_is_hit(sigma, edge, order):
            return True
    return False


def count_edge_hits(sigma, pi, edges) -> int:
    """Number of edges whose index set carries the pattern (k >= 1)."""
    order = _value_order(pi)
    return sum(1 for edge in edges if _edge_is_hit(sigma, edge, order))


def count_avoiders(
    n: int,
    pi: tuple[int, ...],
    edges: tuple[tuple[int, ...], ...] | None,
    collect: bool = False,
) -> tuple[int, list[tuple[int, ...]] | None]:
    """Count sigma in S_n with no pattern occurrence on an edge.

    ``edges=None`` means the complete hypergraph, i.e. classical
    avoidance.  Returns (count, avoiders or None); avoiders are 0-based
    value tuples in lexicographic order.
    """
    count = 0
    out: list[tuple[int, ...]] | None = [] if collect else None
    if edges is None:
        for p in _lex_permutations(range(n)):
            if not contains(p, pi):
                count += 1
                if collect:
                    out.append(p)
        return count, out
    order = _value_order(pi)
    for p in _lex_permutations(range(n)):
        hit = False
        for edge in edges:
            if _edge_is_hit(p, edge, order):
                hit = True
                break
        if not hit:
            count += 1
            if collect:
                out.append(p)
    return count, out


def count_matrix_copies(
    row_bits: tuple[int, ...], ncols: int, pi: tuple[int, ...]
) -> int:
    """Copies of the pattern's permutation matrix inside a 0-1 matrix.

    A copy is a pair (row k-subset, column k-subset) whose induced
    positions hold a 1 wherever the pattern matrix does.  Per row
    subset, the column subsets are counted by a prefix-sum sweep over
    columns instead of enumerating them one by one.
    """
    k = len(pi)
    if k == 0:
        return 1
    rows = [b for b in row_bits if b]  # all-zero rows can never host a 1
    if k > len(rows) or k > ncols:
        return 0
    order = _value_order(pi)
    nrows = len(rows)
    sel = [0] * k
    total = 0

    def count_columns() -> int:
        t0 = sel[order[0]]
        f = [(t0 >> c) & 1 for c in range(ncols)]
        for j in range(1, k):
            tj = sel[order[j]]
            g = [0] * ncols
            run = 0
            for c in range(ncols):
                if (tj >> c) & 1:
                    g[c] = run
                run += f[c]
            f = g
        return sum(f)

    def rec(depth: int, start: int) -> None:
        nonlocal total
        for x in range(start, nrows - (k - depth) + 1):
            sel[depth] = rows[x]
            if depth == k - 1:
                total += count_columns()
            else:
                rec(depth + 1, x + 1)

    rec(0, 0)
    return total


def matrix_contains_perm(
    row_bits: tuple[int, ...], ncols: int, pi: tuple[int, ...]
) -> bool:
    """True iff the matrix contains the pattern's permutation matrix."""
    k = len(pi)
    if k == 0:
        return True
    rows = [b for b in row_bits if b]
    if k > len(rows) or k > ncols:
        return False
    order = _value_order(pi)
    nrows = len(rows)
    sel = [0] * k

    def exists_columns() -> bool:
        t0 = sel[order[0]]
        f = [(t0 >> c) & 1 for c in range(ncols)]
        for j in range(1, k):
            tj = sel[order[j]]
            g = [0] * ncols
            seen = 0
            for c in range(ncols):
                if seen and (tj >> c) & 1:
                    g[c] = 1
                seen |= f[c]
            f = g
        return any(f)

    def rec(depth: int, start: int) -> bool:
        for x in range(start, nrows - (k - depth) + 1):
            sel[depth] = rows[x]
            if depth == k - 1:
                if exists_columns():
                    return True
            elif rec(depth + 1, x + 1):
                return True
        return False

    return rec(0, 0)
