import itertools
import random
from math import prod

import pytest

from tmenum.graph import GAZE_LABELS, adjacency_matrix, build
from tmenum.matrix import mat_pow
from tmenum.walks import count_closed_walks, count_paired_walks, count_walks

from corpus import SMALL_BUILDERS, random_digraph

BUILDERS = SMALL_BUILDERS + ["antiprism:5", "cell24"]


def brute_walks(g, n, i, j):
    """Sum over every sequence of intermediate nodes of the product of multiplicities."""
    if n == 0:
        return int(i == j)
    total = 0
    for mid in itertools.product(range(g.n), repeat=n - 1):
        seq = (i, *mid, j)
        total += prod(g.mult(a, b) for a, b in zip(seq, seq[1:]))
    return total


def test_length_zero():
    g = build("antiprism:4")
    for i in range(g.n):
        for j in range(g.n):
            assert count_walks(g, 0, i, j) == int(i == j)
    assert count_closed_walks(g, 0) == g.n


def test_triangle_two_step():
    assert count_walks(build("cycle:3"), 2, 0, 0) == 2


def test_gaze_one_step():
    g = build("gaze")
    assert count_walks(g, 1, GAZE_LABELS.index("←←"), GAZE_LABELS.index("→→")) == 1


def test_node_out_of_range():
    with pytest.raises(ValueError):
        count_walks(build("cycle:3"), 1, 0, 3)


def test_closed_walks():
    assert count_closed_walks(build("gaze"), 4) == 828
    assert count_closed_walks(build("signature"), 3) == 4


def test_paired_walks():
    g = build("gaze")
    flip = [0, 1, 7, 6, 5, 4, 3, 2]
    assert count_paired_walks(g, 2, flip) == 30
    assert count_paired_walks(g, 9, flip) == 3614142
    for n in range(6):
        assert count_paired_walks(g, n, list(range(8))) == count_closed_walks(g, n)


def test_paired_walks_rejects_non_permutation():
    with pytest.raises(ValueError):
        count_paired_walks(build("gaze"), 2, [0] * 8)


@pytest.mark.parametrize("spec", BUILDERS)
def test_row_sums_and_trace(spec):
    g = build(spec)
    for n in range(13):
        p = mat_pow(adjacency_matrix(g), n)
        i = n % g.n
        assert sum(count_walks(g, n, i, j) for j in range(g.n)) == sum(p.rows[i])
        if n <= 8:
            assert count_closed_walks(g, n) == sum(count_walks(g, n, v, v) for v in range(g.n))


def test_against_brute_force():
    rng = random.Random(1729)
    for _ in range(1000):
        g = random_digraph(rng, rng.randint(1, 5), rng.random(), max_mult=2)
        n = rng.randint(0, 6)
        i, j = rng.randrange(g.n), rng.randrange(g.n)
        assert count_walks(g, n, i, j) == brute_walks(g, n, i, j)
