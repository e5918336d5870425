# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the fast twin of permavoid._kernels_py.

Same signatures, same results, same iteration orders.  Counts are
carried in C long longs; callers guard against ranges where that could
overflow (see permavoid.kernels for the exact contract) and fall back
to the pure backend there.  Matrix kernels additionally require at most
64 columns so a row fits in one machine word.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

BACKEND = "compiled"

ctypedef unsigned long long u64
ctypedef long long i64


cdef inline void _fill_from_seq(int* dst, seq) except *:
    cdef Py_ssize_t i
    for i in range(len(seq)):
        dst[i] = seq[i]


cdef inline bint _next_perm(int* a, int n) noexcept:
    """Advance a to its lexicographic successor; False at the last one."""
    cdef int i = n - 2
    cdef int j, tmp, lo, hi
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    lo = i + 1; hi = n - 1
    while lo < hi:
        tmp = a[lo]; a[lo] = a[hi]; a[hi] = tmp
        lo += 1; hi -= 1
    return True


cdef bint _contains_rec(int* sigma, int n, int* pi, int k,
                        int* vals, int depth, int start) noexcept:
    cdef int x, t, v
    cdef bint ok
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
            if _contains_rec(sigma, n, pi, k, vals, depth + 1, x + 1):
                return True
    return False


cdef i64 _count_rec(int* sigma, int n, int* pi, int k,
                    int* vals, int depth, int start) noexcept:
    cdef int x, t, v
    cdef bint ok
    cdef i64 total = 0
    for x in range(start, n - (k - depth) + 1):
        v = sigma[x]
        ok = True
        for t in range(depth):
            if (pi[t] < pi[depth]) != (vals[t] < v):
                ok = False
                break
        if ok:
            if depth == k - 1:
                total += 1
            else:
                vals[depth] = v
                total += _count_rec(sigma, n, pi, k, vals, depth + 1, x + 1)
    return total


def contains(sigma, pi):
    """True iff some index subsequence of sigma is order-isomorphic to pi."""
    cdef int n = len(sigma)
    cdef int k = len(pi)
    if k == 0:
        return True
    if k > n:
        return False
    cdef int* buf = <int*> malloc((n + 2 * k) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* s = buf
    cdef int* p = buf + n
    cdef int* vals = buf + n + k
    _fill_from_seq(s, sigma)
    _fill_from_seq(p, pi)
    cdef bint found = _contains_rec(s, n, p, k, vals, 0, 0)
    free(buf)
    return bool(found)


def count_occurrences(sigma, pi):
    """Exact number of index subsequences of sigma order-isomorphic to pi."""
    cdef int n = len(sigma)
    cdef int k = len(pi)
    if k == 0:
        return 1
    if k > n:
        return 0
    cdef int* buf = <int*> malloc((n + 2 * k) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* s = buf
    cdef int* p = buf + n
    cdef int* vals = buf + n + k
    _fill_from_seq(s, sigma)
    _fill_from_seq(p, pi)
    cdef i64 total = _count_rec(s, n, p, k, vals, 0, 0)
    free(buf)
    return total


def copy_count_histogram(n, pi):
    """Histogram {c: #sigma in S_n with exactly c occurrences of pi}."""
    cdef int nn = n
    cdef int k = len(pi)
    cdef int i
    # C(n, k) bounds the occurrence count of any sigma in S_n.
    cdef i64 maxc = 1
    if 0 < k <= nn:
        for i in range(k):
            maxc = maxc * (nn - i) // (i + 1)
    cdef i64* hist = <i64*> malloc((maxc + 1) * sizeof(i64))
    cdef int* buf = <int*> malloc((nn + 2 * k + 1) * sizeof(int))
    if hist == NULL or buf == NULL:
        free(hist); free(buf)
        raise MemoryError()
    memset(hist, 0, (maxc + 1) * sizeof(i64))
    cdef int* sigma = buf
    cdef int* p = buf + nn
    cdef int* vals = buf + nn + k
    _fill_from_seq(p, pi)
    for i in range(nn):
        sigma[i] = i
    cdef i64 c
    while True:
        if k == 0:
            c = 1
        elif k > nn:
            c = 0
        else:
            c = _count_rec(sigma, nn, p, k, vals, 0, 0)
        hist[c] += 1
        if not _next_perm(sigma, nn):
            break
    out = {}
    for i in range(maxc + 1):
        if hist[i]:
            out[i] = hist[i]
    free(hist)
    free(buf)
    return out


cdef inline bint _edge_hit(int* sigma, int* edge, int* order, int k) noexcept:
    cdef int t, v
    cdef int prev = -1
    for t in range(k):
        v = sigma[edge[order[t]]]
        if v <= prev:
            return False
        prev = v
    return True


cdef void _load_edges(int* dst, edges, int k) except *:
    cdef Py_ssize_t e, t
    for e in range(len(edges)):
        edge = edges[e]
        for t in range(k):
            dst[e * k + t] = edge[t]


cdef void _load_order(int* order, pi, int k):
    cdef int i
    for i in range(k):
        order[pi[i]] = i


def hits_edge(sigma, pi, edges):
    """True iff some edge's index set carries the pattern (k >= 1)."""
    cdef int n = len(sigma)
    cdef int k = len(pi)
    cdef Py_ssize_t ne = len(edges)
    cdef int* buf = <int*> malloc((n + k + ne * k + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* s = buf
    cdef int* order = buf + n
    cdef int* earr = buf + n + k
    _fill_from_seq(s, sigma)
    _load_order(order, pi, k)
    _load_edges(earr, edges, k)
    cdef Py_ssize_t e
    cdef bint found = False
    for e in range(ne):
        if _edge_hit(s, earr + e * k, order, k):
            found = True
            break
    free(buf)
    return bool(found)


def count_edge_hits(sigma, pi, edges):
    """Number of edges whose index set carries the pattern (k >= 1)."""
    cdef int n = len(sigma)
    cdef int k = len(pi)
    cdef Py_ssize_t ne = len(edges)
    cdef int* buf = <int*> malloc((n + k + ne * k + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* s = buf
    cdef int* order = buf + n
    cdef int* earr = buf + n + k
    _fill_from_seq(s, sigma)
    _load_order(order, pi, k)
    _load_edges(earr, edges, k)
    cdef Py_ssize_t e
    cdef i64 total = 0
    for e in range(ne):
        if _edge_hit(s, earr + e * k, order, k):
            total += 1
    free(buf)
    return total


def count_avoiders(n, pi, edges, collect=False):
    """Count sigma in S_n with no pattern occurrence on an edge.

    ``edges=None`` means the complete hypergraph (classical avoidance).
    Returns (count, avoiders-or-None) exactly like the pure twin.
    """
    cdef int nn = n
    cdef int k = len(pi)
    cdef bint complete = edges is None
    cdef Py_ssize_t ne = 0 if complete else len(edges)
    cdef int* buf = <int*> malloc((nn + 3 * k + ne * k + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* sigma = buf
    cdef int* p = buf + nn
    cdef int* vals = buf + nn + k
    cdef int* order = buf + nn + 2 * k
    cdef int* earr = buf + nn + 3 * k
    _fill_from_seq(p, pi)
    if not complete:
        _load_order(order, pi, k)
        _load_edges(earr, edges, k)
    cdef int i
    for i in range(nn):
        sigma[i] = i
    out = [] if collect else None
    cdef i64 count = 0
    cdef bint hit
    cdef Py_ssize_t e
    while True:
        if complete:
            if k == 0:
                hit = True
            elif k > nn:
                hit = False
            else:
                hit = _contains_rec(sigma, nn, p, k, vals, 0, 0)
        else:
            hit = False
            for e in range(ne):
                if _edge_hit(sigma, earr + e * k, order, k):
                    hit = True
                    break
        if not hit:
            count += 1
            if collect:
                out.append(tuple([sigma[i] for i in range(nn)]))
        if not _next_perm(sigma, nn):
            break
    free(buf)
    return count, out


cdef i64 _matrix_count_rec(u64* rows, int nrows, int ncols, int* order,
                           int k, u64* sel, i64* f, i64* g,
                           int depth, int start) noexcept:
    cdef int x, j, c
    cdef i64 total = 0
    cdef i64 run, acc
    cdef u64 tj
    for x in range(start, nrows - (k - depth) + 1):
        sel[depth] = rows[x]
        if depth == k - 1:
            tj = sel[order[0]]
            for c in range(ncols):
                f[c] = (tj >> c) & 1
            for j in range(1, k):
                tj = sel[order[j]]
                run = 0
                for c in range(ncols):
                    if (tj >> c) & 1:
                        g[c] = run
                    else:
                        g[c] = 0
                    run += f[c]
                for c in range(ncols):
                    f[c] = g[c]
            acc = 0
            for c in range(ncols):
                acc += f[c]
            total += acc
        else:
            total += _matrix_count_rec(rows, nrows, ncols, order, k,
                                       sel, f, g, depth + 1, x + 1)
    return total


def count_matrix_copies(row_bits, ncols, pi):
    """Copies of the pattern's permutation matrix inside a 0-1 matrix.

    Requires ncols <= 64; the chooser routes wider matrices (and counts
    that might not fit a 64-bit integer) to the pure backend.
    """
    cdef int k = len(pi)
    if k == 0:
        return 1
    cdef int nc = ncols
    if nc > 64:
        raise ValueError("compiled matrix kernel supports at most 64 columns")
    nz = [b for b in row_bits if b]
    cdef int nrows = len(nz)
    if k > nrows or k > nc:
        return 0
    cdef u64* rows = <u64*> malloc((nrows + k) * sizeof(u64))
    cdef int* order = <int*> malloc(k * sizeof(int))
    cdef i64* f = <i64*> malloc(2 * nc * sizeof(i64))
    if rows == NULL or order == NULL or f == NULL:
        free(rows); free(order); free(f)
        raise MemoryError()
    cdef u64* sel = rows + nrows
    cdef i64* g = f + nc
    cdef int i
    for i in range(nrows):
        rows[i] = nz[i]
    _load_order(order, pi, k)
    cdef i64 total = _matrix_count_rec(rows, nrows, nc, order, k,
                                       sel, f, g, 0, 0)
    free(rows); free(order); free(f)
    return total


cdef bint _matrix_exists_rec(u64* rows, int nrows, int ncols, int* order,
                             int k, u64* sel, int depth, int start) noexcept:
    cdef int x, j, c
    cdef u64 tj, reach, seen
    for x in range(start, nrows - (k - depth) + 1):
        sel[depth] = rows[x]
        if depth == k - 1:
            # reach: columns where a partial increasing chain can end.
            reach = sel[order[0]]
            for j in range(1, k):
                tj = sel[order[j]]
                if reach == 0:
                    break
                # columns strictly right of the lowest set bit of reach
                seen = ~(reach ^ (reach - 1))
                reach = tj & seen
            if reach != 0:
                return True
        else:
            if _matrix_exists_rec(rows, nrows, ncols, order, k,
                                  sel, depth + 1, x + 1):
                return True
    return False


def matrix_contains_perm(row_bits, ncols, pi):
    """True iff the matrix contains the pattern's permutation matrix."""
    cdef int k = len(pi)
    if k == 0:
        return True
    cdef int nc = ncols
    if nc > 64:
        raise ValueError("compiled matrix kernel supports at most 64 columns")
    nz = [b for b in row_bits if b]
    cdef int nrows = len(nz)
    if k > nrows or k > nc:
        return False
    cdef u64* rows = <u64*> malloc((nrows + k) * sizeof(u64))
    cdef int* order = <int*> malloc(k * sizeof(int))
    if rows == NULL or order == NULL:
        free(rows); free(order)
        raise MemoryError()
    cdef u64* sel = rows + nrows
    cdef int i
    for i in range(nrows):
        rows[i] = nz[i]
    _load_order(order, pi, k)
    cdef bint found = _matrix_exists_rec(rows, nrows, nc, order, k, sel, 0, 0)
    free(rows); free(order)
    return bool(found)
