"""Hamiltonian and fixed-length simple paths/cycles by inclusion-exclusion.

Every count is an alternating sum over node subsets ``T`` of walk counts in
the induced subgraph on ``T``::

    SC_k = 1/k * sum_T C(n-|T|, k-|T|) (-1)^(k-|T|) tr(A_T^k)
    SP_k =       sum_T C(n-|T|, k+1-|T|) (-1)^(k+1-|T|) SUM(A_T^k)

with ``HC = SC_n`` and ``HP = SP_{n-1}``.  Subsets whose binomial factor
vanishes (``|T|`` above the target size) are never visited.

Subset terms are independent exact integers, so the work can be split
across processes; the partition is a fixed stride over the enumeration
order and the result does not depend on the worker count.
"""

from __future__ import annotations

import atexit
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Literal

from tmenum.errors import ConsistencyError, DomainError
from tmenum.graph import Digraph
from tmenum.matrix import IntMatrix, delete_rows_cols, mat_pow, sum_all, sum_off_diagonal, trace

Kind = Literal["path", "cycle"]

MAX_NODES = 64
ORACLE_MAX_DEPTH = 16

_REDUCERS = {"trace": trace, "all": sum_all, "offdiag": sum_off_diagonal}


def masks_of_size(n: int, j: int) -> Iterator[int]:
    """All n-bit masks with exactly ``j`` bits set, in increasing order."""
    if j == 0:
        yield 0
        return
    if j > n:
        return
    mask = (1 << j) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        # next mask with the same popcount
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def _partial_sum(
    rows: tuple[tuple[int, ...], ...],
    length: int,
    target: int,
    reducer: str,
    part: int,
    parts: int,
) -> int:
    """Contribution of the subsets at positions ``part, part+parts, ...``."""
    a = IntMatrix(rows)
    n = a.dim
    reduce_ = _REDUCERS[reducer]
    total = 0
    pos = 0
    for size in range(min(target, n) + 1):
        coeff = math.comb(n - size, target - size)
        if (target - size) & 1:
            coeff = -coeff
        for mask in masks_of_size(n, size):
            if pos % parts == part:
                total += coeff * reduce_(mat_pow(delete_rows_cols(a, mask), length))
            pos += 1
    return total


_pools: dict[int, ProcessPoolExecutor] = {}


def _pool(workers: int) -> ProcessPoolExecutor:
    pool = _pools.get(workers)
    if pool is None:
        pool = _pools[workers] = ProcessPoolExecutor(max_workers=workers)
    return pool


@atexit.register
def shutdown_pools() -> None:
    for pool in _pools.values():
        pool.shutdown(wait=True)
    _pools.clear()


def ie_sum(g: Digraph, length: int, target: int, reducer: str = "all", workers: int = 1) -> int:
    """Raw alternating sum over subsets of size <= ``target``.

    ``workers=1`` runs in-process; larger values fan the same partition out
    to a process pool.
    """
    if g.n > MAX_NODES:
        raise DomainError(f"subset masks support at most {MAX_NODES} nodes, got {g.n}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers == 1:
        return _partial_sum(g.adj, length, target, reducer, 0, 1)
    pool = _pool(workers)
    futures = [
        pool.submit(_partial_sum, g.adj, length, target, reducer, w, workers)
        for w in range(workers)
    ]
    return sum(f.result() for f in futures)


def _divide(total: int, k: int, what: str) -> int:
    q, r = divmod(total, k)
    if r:
        raise ConsistencyError(f"{what}: alternating sum {total} is not divisible by {k}")
    return q


def _need_nodes(g: Digraph) -> None:
    if g.n < 1:
        raise DomainError("graph has no nodes")


def hamiltonian_paths(g: Digraph, workers: int = 1) -> int:
    """Directed Hamiltonian paths (the single node counts as one path when n = 1)."""
    _need_nodes(g)
    return ie_sum(g, g.n - 1, g.n, "all", workers)


def hamiltonian_cycles(g: Digraph, workers: int = 1) -> int:
    """Directed Hamiltonian cycles, each counted once regardless of start node."""
    _need_nodes(g)
    return _divide(ie_sum(g, g.n, g.n, "trace", workers), g.n, "Hamiltonian cycles")


def simple_cycles(g: Digraph, k: int, workers: int = 1) -> int:
    """Directed simple cycles of length ``k``, 1 <= k <= n."""
    if not 1 <= k <= g.n:
        raise DomainError(f"cycle length must be in 1..{g.n}, got {k}")
    return _divide(ie_sum(g, k, k, "trace", workers), k, f"{k}-cycles")


def simple_paths(g: Digraph, k: int, workers: int = 1) -> int:
    """Directed simple paths with ``k`` edges, 1 <= k <= n - 1."""
    if not 1 <= k <= g.n - 1:
        raise DomainError(f"path length must be in 1..{g.n - 1}, got {k}")
    return ie_sum(g, k, k + 1, "all", workers)


def undirected_count(raw: int, kind: Kind, k: int) -> int:
    """Halve a directed count of an undirected graph.

    Cycles of length 1 or 2 are their own reversals, so halving them is
    refused rather than guessed.
    """
    if kind == "cycle":
        if k < 3:
            raise DomainError(f"undirected halving is not defined for cycles of length {k} < 3")
    elif kind == "path":
        if k < 1:
            raise DomainError(f"undirected halving needs path length >= 1, got {k}")
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if raw % 2:
        raise ConsistencyError(f"directed {kind} count {raw} of an undirected graph is odd")
    return raw // 2


# ---------------------------------------------------------------------------
# Backtracking oracle
# ---------------------------------------------------------------------------

def brute_force_count(g: Digraph, kind: Kind, k: int) -> int:
    """Count simple paths/cycles of length ``k`` by depth-first search.

    Edge multiplicities multiply.  The search is refused when a path would
    visit more than ``ORACLE_MAX_DEPTH`` nodes.  Each cycle is found once per starting
    node, so the rooted total is divided by ``k``.
    """
    if kind not in ("path", "cycle"):
        raise ValueError(f"unknown kind {kind!r}")
    if k < (1 if kind == "cycle" else 0):
        raise DomainError(f"bad length {k} for {kind}")
    adj = g.adj
    nbrs = [[(j, m) for j, m in enumerate(row) if m] for row in adj]
    visited = [False] * g.n
    nodes_needed = k if kind == "cycle" else k + 1
    if min(nodes_needed, g.n) > ORACLE_MAX_DEPTH:
        raise DomainError(f"oracle search depth {nodes_needed} exceeds {ORACLE_MAX_DEPTH}")

    def extend(v: int, start: int, depth: int, weight: int) -> int:
        if depth == nodes_needed:
            return weight * adj[v][start] if kind == "cycle" else weight
        total = 0
        visited[v] = True
        for u, m in nbrs[v]:
            if not visited[u]:
                total += extend(u, start, depth + 1, weight * m)
        visited[v] = False
        return total

    if nodes_needed > g.n:
        return 0
    rooted = sum(extend(v, v, 1, 1) for v in range(g.n))
    if kind == "path":
        return rooted
    return _divide(rooted, k, "oracle cycles")
