"""Exact transfer-matrix enumeration of walks, cycles and paths in graphs."""

from tmenum.matrix import (
    IntMatrix,
    delete_rows_cols,
    identity,
    mat_mul,
    mat_pow,
    sum_all,
    trace,
)
from tmenum.graph import Digraph, adjacency_matrix, build, from_edge_list, induced_subgraph
from tmenum.series import CountSeq, Poly, RationalGF

__version__ = "0.1.0"

__all__ = [
    "IntMatrix",
    "Digraph",
    "Poly",
    "RationalGF",
    "CountSeq",
    "adjacency_matrix",
    "build",
    "delete_rows_cols",
    "from_edge_list",
    "identity",
    "induced_subgraph",
    "mat_mul",
    "mat_pow",
    "sum_all",
    "trace",
]
