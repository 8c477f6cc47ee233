"""Walk counts read off powers of the adjacency matrix."""

from __future__ import annotations

from typing import Sequence

from tmenum.graph import Digraph, adjacency_matrix
from tmenum.matrix import mat_pow, trace


def _check_node(g: Digraph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"node {v} out of range 0..{g.n - 1}")


def count_walks(g: Digraph, n: int, i: int, j: int) -> int:
    """Number of walks of length ``n`` from ``i`` to ``j``."""
    _check_node(g, i)
    _check_node(g, j)
    return mat_pow(adjacency_matrix(g), n)[i, j]


def count_closed_walks(g: Digraph, n: int) -> int:
    """Rooted closed walks of length ``n``; there are ``g.n`` of length 0."""
    return trace(mat_pow(adjacency_matrix(g), n))


def check_permutation(sigma: Sequence[int], size: int) -> None:
    if len(sigma) != size or sorted(sigma) != list(range(size)):
        raise ValueError(f"{list(sigma)} is not a permutation of 0..{size - 1}")


def count_paired_walks(g: Digraph, n: int, sigma: Sequence[int]) -> int:
    """Sum of ``(A^n)[i, sigma[i]]`` over all nodes ``i``."""
    check_permutation(sigma, g.n)
    p = mat_pow(adjacency_matrix(g), n)
    return sum(p[i, sigma[i]] for i in range(g.n))
