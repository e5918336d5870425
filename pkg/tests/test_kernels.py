"""The compiled kernels and their pure-Python twins must be
indistinguishable; these tests drive both through the same randomized
inputs.  When the extension is absent everything still passes — the
chooser already fell back — but the cross-checks are skipped.
"""

import os
import random
import subprocess
import sys
from itertools import combinations

import pytest

from permavoid import kernels
from permavoid.kernels import pure

import oracles

compiled_only = pytest.mark.skipif(
    kernels.BACKEND != "compiled", reason="compiled extension not loaded"
)


def random_sigma(rng, n):
    values = list(range(n))
    rng.shuffle(values)
    return tuple(values)


def zero_based_patterns():
    return [(0,), (0, 1), (1, 0), (0, 2, 1), (2, 0, 1), (1, 3, 0, 2)]


def test_backend_is_reported():
    assert kernels.BACKEND in {"compiled", "python"}
    assert pure.BACKEND == "python"


@compiled_only
def test_containment_kernels_agree():
    rng = random.Random(101)
    for _ in range(120):
        n = rng.randrange(0, 10)
        sigma = random_sigma(rng, n)
        for pi in zero_based_patterns():
            assert kernels.contains(sigma, pi) == pure.contains(sigma, pi)
            assert kernels.count_occurrences(sigma, pi) == \
                pure.count_occurrences(sigma, pi)


@compiled_only
def test_histogram_kernels_agree():
    for n in range(0, 7):
        for pi in zero_based_patterns():
            assert kernels.copy_count_histogram(n, pi) == \
                pure.copy_count_histogram(n, pi)


@compiled_only
def test_edge_kernels_agree():
    rng = random.Random(202)
    for _ in range(60):
        n = rng.randrange(1, 8)
        k = rng.randrange(1, min(n, 4) + 1)
        edges = [e for e in combinations(range(n), k) if rng.random() < 0.6]
        pi = random_sigma(rng, k)
        sigma = random_sigma(rng, n)
        assert kernels.hits_edge(sigma, pi, edges) == \
            pure.hits_edge(sigma, pi, edges)
        assert kernels.count_edge_hits(sigma, pi, edges) == \
            pure.count_edge_hits(sigma, pi, edges)
        assert kernels.count_avoiders(n, pi, edges) == \
            pure.count_avoiders(n, pi, edges)
        assert kernels.count_avoiders(n, pi, None) == \
            pure.count_avoiders(n, pi, None)


@compiled_only
def test_matrix_kernels_agree():
    rng = random.Random(303)
    for _ in range(80):
        rows = rng.randrange(0, 7)
        cols = rng.randrange(0, 7)
        grid = [[rng.randrange(2) for _ in range(cols)] for _ in range(rows)]
        row_bits = [sum(cell << j for j, cell in enumerate(row)) for row in grid]
        for pi in zero_based_patterns():
            assert kernels.count_matrix_copies(row_bits, cols, pi) == \
                pure.count_matrix_copies(row_bits, cols, pi)
            assert kernels.matrix_contains_perm(row_bits, cols, pi) == \
                pure.matrix_contains_perm(row_bits, cols, pi)


def test_pure_kernels_match_oracles():
    rng = random.Random(404)
    for _ in range(50):
        n = rng.randrange(0, 8)
        sigma = random_sigma(rng, n)
        one_based = tuple(v + 1 for v in sigma)
        for pi in zero_based_patterns():
            pattern = tuple(v + 1 for v in pi)
            assert pure.count_occurrences(sigma, pi) == \
                oracles.count_naive(one_based, pattern)


def test_avoider_collection_matches_count():
    count, collected = pure.count_avoiders(4, (0, 1), [(0, 1), (2, 3)],
                                           collect=True)
    assert count == len(collected)
    assert all(len(s) == 4 for s in collected)
    count_only, nothing = pure.count_avoiders(4, (0, 1), [(0, 1), (2, 3)])
    assert nothing is None
    assert count_only == count


def test_pure_override_env_var():
    # A fresh interpreter with the override must choose the pure twins.
    code = "from permavoid import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, PERMAVOID_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
