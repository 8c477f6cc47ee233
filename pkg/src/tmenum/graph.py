"""Directed multigraphs, edge-list text I/O and the named graph builders.

Edge-list format::

    # optional comment lines
    undirected 3
    0 1
    1 2
    2 0 1

The header is ``directed <n>`` or ``undirected <n>``.  Each edge line is
``u v`` with an optional third column giving a multiplicity (default 1);
repeated lines accumulate.  An undirected edge ``u v`` adds to both
``mult(u, v)`` and ``mult(v, u)``; an undirected loop ``u u`` adds 1 once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from tmenum.matrix import IntMatrix, mask_indices


class GraphParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class BuilderError(ValueError):
    pass


@dataclass(frozen=True)
class Digraph:
    """Multigraph on nodes ``0..n-1`` given by its multiplicity table."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    directed: bool = True

    def __post_init__(self) -> None:
        if len(self.adj) != self.n or any(len(r) != self.n for r in self.adj):
            raise ValueError(f"multiplicity table is not {self.n}x{self.n}")
        for i, r in enumerate(self.adj):
            for j, m in enumerate(r):
                if not isinstance(m, int) or m < 0:
                    raise ValueError(f"bad multiplicity {m!r} at ({i}, {j})")
        if not self.directed:
            for i in range(self.n):
                for j in range(i):
                    if self.adj[i][j] != self.adj[j][i]:
                        raise ValueError(f"undirected graph is asymmetric at ({i}, {j})")

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]], directed: bool = True) -> Digraph:
        return cls(len(rows), tuple(tuple(int(x) for x in r) for r in rows), directed)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], directed: bool = True) -> Digraph:
        adj = [[0] * n for _ in range(n)]
        for u, v in edges:
            _add_edge(adj, u, v, 1, directed)
        return cls.from_matrix(adj, directed)

    def mult(self, i: int, j: int) -> int:
        return self.adj[i][j]

    def neighbors(self, i: int) -> list[int]:
        return [j for j, m in enumerate(self.adj[i]) if m]

    def degree(self, i: int) -> int:
        return sum(self.adj[i])

    def num_arcs(self) -> int:
        """Total number of directed edges, counted with multiplicity."""
        return sum(map(sum, self.adj))

    def is_symmetric(self) -> bool:
        return all(self.adj[i][j] == self.adj[j][i] for i in range(self.n) for j in range(i))


def _add_edge(adj: list[list[int]], u: int, v: int, m: int, directed: bool) -> None:
    adj[u][v] += m
    if not directed and u != v:
        adj[v][u] += m


def adjacency_matrix(g: Digraph) -> IntMatrix:
    return IntMatrix(g.adj)


def induced_subgraph(g: Digraph, keep: int | Iterable[int]) -> Digraph:
    """Subgraph induced by ``keep`` (a bitmask or an iterable of nodes), relabelled in order."""
    if isinstance(keep, int):
        idx = mask_indices(keep, g.n)
    else:
        idx = sorted(set(keep))
        if idx and (idx[0] < 0 or idx[-1] >= g.n):
            raise ValueError(f"node subset {idx} not within 0..{g.n - 1}")
    return Digraph(len(idx), tuple(tuple(g.adj[i][j] for j in idx) for i in idx), g.directed)


# ---------------------------------------------------------------------------
# Edge-list text
# ---------------------------------------------------------------------------

def from_edge_list(text: str) -> Digraph:
    adj: list[list[int]] | None = None
    directed = True
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if adj is None:
            if len(parts) != 2 or parts[0] not in ("directed", "undirected"):
                raise GraphParseError(lineno, f"expected 'directed <n>' or 'undirected <n>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphParseError(lineno, f"bad node count {parts[1]!r}") from None
            if n < 0:
                raise GraphParseError(lineno, f"negative node count {n}")
            directed = parts[0] == "directed"
            adj = [[0] * n for _ in range(n)]
            continue
        if len(parts) not in (2, 3):
            raise GraphParseError(lineno, f"expected 'u v [mult]', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
            m = int(parts[2]) if len(parts) == 3 else 1
        except ValueError:
            raise GraphParseError(lineno, f"non-integer field in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(lineno, f"node index out of range 0..{n - 1}: {line!r}")
        if m < 0:
            raise GraphParseError(lineno, f"negative multiplicity {m}")
        _add_edge(adj, u, v, m, directed)
    if adj is None:
        raise GraphParseError(0, "missing header line")
    return Digraph.from_matrix(adj, directed)


def to_edge_list(g: Digraph) -> str:
    lines = [f"{'directed' if g.directed else 'undirected'} {g.n}"]
    for i in range(g.n):
        for j in range(g.n if g.directed else i + 1):
            # undirected graphs are written from the lower triangle
            m = g.adj[i][j]
            if m == 1:
                lines.append(f"{i} {j}" if g.directed else f"{j} {i}")
            elif m:
                lines.append(f"{i} {j} {m}" if g.directed else f"{j} {i} {m}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

# Gaze order: (top over bottom) ->/->, <-/<-, <-/up, down/->, <-/->, ->/<-, ->/up, down/<-
GAZE_LABELS = ("→→", "←←", "←↑", "↓→", "←→", "→←", "→↑", "↓←")
GAZE_ROWS = (
    "10010010",
    "11111111",
    "11111111",
    "10111010",
    "10111010",
    "10010111",
    "10010111",
    "11111111",
)

SIGNATURE_LABELS = ("111", "010", "001", "100")
SIGNATURE_ROWS = ("0001", "0110", "1000", "0110")


def _from_bitrows(rows: Sequence[str]) -> Digraph:
    return Digraph.from_matrix([[int(c) for c in r] for r in rows], directed=True)


def gaze_digraph() -> Digraph:
    return _from_bitrows(GAZE_ROWS)


def signature_digraph() -> Digraph:
    return _from_bitrows(SIGNATURE_ROWS)


def circulant(m: int, steps: Iterable[int]) -> Digraph:
    """Simple circulant graph: i ~ i±s (mod m) for each step s."""
    if m < 1:
        raise BuilderError(f"circulant needs m >= 1, got {m}")
    adj = [[0] * m for _ in range(m)]
    for s in steps:
        if s % m == 0:
            raise BuilderError(f"circulant step {s} is 0 mod {m} (would add loops)")
        for i in range(m):
            adj[i][(i + s) % m] = adj[(i + s) % m][i] = 1
    return Digraph.from_matrix(adj, directed=False)


def complete(n: int) -> Digraph:
    if n < 1:
        raise BuilderError(f"complete needs n >= 1, got {n}")
    return Digraph.from_matrix([[int(i != j) for j in range(n)] for i in range(n)], directed=False)


def cycle(n: int) -> Digraph:
    if n < 3:
        raise BuilderError(f"cycle needs n >= 3, got {n}")
    return circulant(n, [1])


def path(n: int) -> Digraph:
    if n < 1:
        raise BuilderError(f"path needs n >= 1, got {n}")
    return Digraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], directed=False)


def antiprism(n: int) -> Digraph:
    if n < 3:
        raise BuilderError(f"antiprism is defined for n >= 3, got {n}")
    return circulant(2 * n, [1, 2])


def cell24_vertices() -> list[tuple[int, ...]]:
    """The 24 integer vectors with two coordinates in {+1, -1} and two zeros."""
    verts = set()
    for pos in itertools.combinations(range(4), 2):
        for signs in itertools.product((1, -1), repeat=2):
            v = [0, 0, 0, 0]
            for p, s in zip(pos, signs):
                v[p] = s
            verts.add(tuple(v))
    return sorted(verts)


def cell24() -> Digraph:
    verts = cell24_vertices()
    adj = [[int(sum(a * b for a, b in zip(u, v)) == 1) for v in verts] for u in verts]
    return Digraph.from_matrix(adj, directed=False)


def _ints(s: str, what: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x != ""]
    except ValueError:
        raise BuilderError(f"bad integer list for {what}: {s!r}") from None


def build(spec: str) -> Digraph:
    """Build a named graph from a spec such as ``antiprism:5`` or ``circulant:10:1,2``."""
    name, _, rest = spec.strip().partition(":")
    args = rest.split(":") if rest else []
    fixed = {"gaze": gaze_digraph, "signature": signature_digraph, "cell24": cell24}
    if name in fixed:
        if args:
            raise BuilderError(f"{name} takes no parameters")
        return fixed[name]()
    sized = {"complete": complete, "cycle": cycle, "path": path, "antiprism": antiprism}
    if name in sized:
        if len(args) != 1:
            raise BuilderError(f"usage: {name}:<n>")
        vals = _ints(args[0], name)
        if len(vals) != 1:
            raise BuilderError(f"usage: {name}:<n>")
        return sized[name](vals[0])
    if name == "circulant":
        if len(args) != 2:
            raise BuilderError("usage: circulant:<m>:<s1>,<s2>,...")
        m = _ints(args[0], "circulant size")
        steps = _ints(args[1], "circulant steps")
        if len(m) != 1 or not steps:
            raise BuilderError("usage: circulant:<m>:<s1>,<s2>,...")
        return circulant(m[0], steps)
    raise BuilderError(f"unknown graph builder {name!r}")


BUILDER_NAMES = ("circulant", "complete", "cycle", "path", "antiprism", "gaze", "signature", "cell24")
