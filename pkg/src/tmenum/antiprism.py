"""Directed Hamiltonian cycles of the antiprism graph C_{2n}^{1,2}.

A cycle either has a window ``(i, i+2), (i+1, i+2), (i+1, i+3)`` left
entirely unused at some node (4n such cycles), or every node carries one
of the signatures 111, 010, 001, 100, in which case the cycle is a closed
walk of length 2n in the signature digraph, counted once per direction.
"""

from __future__ import annotations

from tmenum.errors import DomainError
from tmenum.graph import adjacency_matrix, signature_digraph
from tmenum.matrix import IntMatrix, mat_mul, mat_pow, trace
from tmenum.series import CountSeq, RationalGF, gf_from_recurrence, trace_gf

HC_RECURRENCE = (3, -1, -2, 0, 1)


def _check(n: int) -> None:
    if n < 3:
        raise DomainError(f"antiprism graph is defined for n >= 3, got {n}")


def signature_matrix() -> IntMatrix:
    return adjacency_matrix(signature_digraph())


def _signature_square() -> IntMatrix:
    a = signature_matrix()
    return mat_mul(a, a)


def hc_type1_count(n: int) -> int:
    _check(n)
    return 4 * n


def hc_type2_count(n: int) -> int:
    """Directed cycles with no all-zero signature: 2 tr(A_S^(2n))."""
    _check(n)
    return 2 * trace(mat_pow(_signature_square(), n))


def hc_antiprism(n: int) -> int:
    """h_n, the number of directed Hamiltonian cycles in C_{2n}^{1,2}."""
    return hc_type1_count(n) + hc_type2_count(n)


def hc_sequence(start: int, stop: int) -> CountSeq:
    """h_start .. h_(stop-1)."""
    _check(start)
    return CountSeq(start, [hc_antiprism(n) for n in range(start, stop)])


def type1_gf() -> RationalGF:
    """Sum over n >= 3 of 4n z^n, from its recurrence a_n = 2 a_(n-1) - a_(n-2)."""
    return gf_from_recurrence(CountSeq(3, [12, 16]), (2, -1))


def type2_gf() -> RationalGF:
    """Sum over n >= 3 of 2 tr(A_S^(2n)) z^n."""
    return 2 * trace_gf(_signature_square()).tail(3)


def hc_gf() -> RationalGF:
    return type1_gf() + type2_gf()
