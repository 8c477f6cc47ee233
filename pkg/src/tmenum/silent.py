"""Silent configurations on prisms and circles of staring people.

Each person looks at one of two neighbours or at their partner.  Partner
pairs that do not look at each other form the eight *gazes* of the gaze
digraph, and silent configurations are closed walks in it (prisms) or walks
whose end gaze is the vertical flip of the start gaze (circles).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, Literal

from tmenum.errors import DomainError
from tmenum.graph import GAZE_LABELS, gaze_digraph, adjacency_matrix
from tmenum.matrix import IntMatrix, identity, mat_mul, mat_pow, trace
from tmenum.series import (
    CountSeq,
    Poly,
    RationalGF,
    gf_from_recurrence,
    largest_real_root,
    trace_gf,
)

Variant = Literal["prism", "circle"]

# Vertical flip of each gaze, in GAZE_LABELS order.
FLIP = (0, 1, 7, 6, 5, 4, 3, 2)

SILENT_RECURRENCE = (8, -16, 10, -1)

# Minimal polynomial of the gaze matrix, highest power first: x^5 - 8x^4 + 16x^3 - 10x^2 + x.
GAZE_MINIMAL_POLY = Poly([0, 1, -10, 16, -8, 1])


def gaze_matrix() -> IntMatrix:
    return adjacency_matrix(gaze_digraph())


def flip_label(label: str) -> str:
    """Swap the rows of a gaze and mirror the vertical arrows."""
    mirror = {"↑": "↓", "↓": "↑", "←": "←", "→": "→"}
    return mirror[label[1]] + mirror[label[0]]


def _paired_sum(p: IntMatrix) -> int:
    return sum(p[i, FLIP[i]] for i in range(p.dim))


def _check_circle(n: int) -> None:
    if n < 2:
        raise DomainError(
            f"circle count needs n >= 2, got {n}: for n = 1 both neighbours and the "
            "opposite person coincide"
        )


def prism_count(n: int) -> int:
    """t_n: silent configurations of an n-prism (formal trace value for n < 3)."""
    return trace(mat_pow(gaze_matrix(), n))


def circle_count(n: int) -> int:
    """s_n: silent configurations of 2n people in a circle, n >= 2."""
    _check_circle(n)
    return _paired_sum(mat_pow(gaze_matrix(), n))


def count(n: int, variant: Variant) -> int:
    if variant == "prism":
        return prism_count(n)
    if variant == "circle":
        return circle_count(n)
    raise ValueError(f"unknown variant {variant!r}")


def silence_probability(n: int, variant: Variant) -> tuple[Fraction, float]:
    """Exact probability ``count / 9**n`` and its 3-decimal rounding."""
    _check_circle(n)
    p = Fraction(count(n, variant), 9 ** n)
    return p, round(float(p), 3)


def gaze_powers() -> Iterator[IntMatrix]:
    """Yield A^0, A^1, A^2, ... of the gaze matrix, each from the previous one."""
    a = gaze_matrix()
    p = identity(a.dim)
    while True:
        yield p
        p = mat_mul(p, a)


def sequences(max_n: int) -> tuple[CountSeq, CountSeq]:
    """(t_0..t_max, s_2..s_max) from one pass over the gaze powers."""
    if max_n < 2:
        raise DomainError(f"table needs max_n >= 2, got {max_n}")
    t, s = [], []
    for n, p in zip(range(max_n + 1), gaze_powers()):
        t.append(trace(p))
        if n >= 2:
            s.append(_paired_sum(p))
    return CountSeq(0, t), CountSeq(2, s)


def table(max_n: int, min_n: int = 2) -> list[dict]:
    t, s = sequences(max_n)
    rows = []
    for n in range(min_n, max_n + 1):
        tn, sn = t.at(n), s.at(n)
        total = 9 ** n
        rows.append({
            "n": n,
            "t": tn,
            "s": sn,
            "p_t": Fraction(tn, total),
            "p_s": Fraction(sn, total),
        })
    return rows


def silent_gfs() -> tuple[RationalGF, RationalGF]:
    """GFs of t_n (from n = 0) and s_n (from n = 2)."""
    t_gf = trace_gf(gaze_matrix())
    s_init = CountSeq(2, [circle_count(n) for n in range(2, 6)])
    return t_gf, gf_from_recurrence(s_init, SILENT_RECURRENCE)


def growth_constant() -> tuple[float, float]:
    """Dominant eigenvalue alpha of the gaze matrix, and alpha / 9."""
    t_gf = trace_gf(gaze_matrix())
    alpha = largest_real_root(t_gf.den.reverse())
    return alpha, alpha / 9


# ---------------------------------------------------------------------------
# Exhaustive oracle
# ---------------------------------------------------------------------------
# Every person has three gaze edges.  Two people make eye contact when both
# stare along the same edge; for tiny rings (prism n = 2) the two neighbour
# edges join the same pair, and they stay distinct.

def _prism_edges(n: int) -> list[tuple[int, int, int, int]]:
    """(p, choice_p, q, choice_q) for every gaze edge of an n-prism."""
    edges = []
    for c in range(2):
        for i in range(n):
            p, q = c * n + i, c * n + (i + 1) % n
            edges.append((p, 0, q, 1))
    for i in range(n):
        edges.append((i, 2, n + i, 2))
    return edges


def _circle_edges(n: int) -> list[tuple[int, int, int, int]]:
    m = 2 * n
    edges = [(i, 0, (i + 1) % m, 1) for i in range(m)]
    edges += [(i, 2, i + n, 2) for i in range(n)]
    return edges


def brute_force_silent(n: int, variant: Variant) -> int:
    """Count silent configurations by trying all 3^(2n) stare assignments.

    Choice 0 looks clockwise, 1 counter-clockwise and 2 at the partner
    (prism) or the diametrically opposite person (circle).
    """
    if variant == "prism":
        if n < 2:
            raise DomainError(f"prism oracle needs n >= 2, got {n}")
        edges = _prism_edges(n)
    elif variant == "circle":
        _check_circle(n)
        edges = _circle_edges(n)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    silent = 0
    for choice in itertools.product(range(3), repeat=2 * n):
        if not any(choice[p] == cp and choice[q] == cq for p, cp, q, cq in edges):
            silent += 1
    return silent


__all__ = [
    "FLIP",
    "GAZE_LABELS",
    "GAZE_MINIMAL_POLY",
    "SILENT_RECURRENCE",
    "DomainError",
    "brute_force_silent",
    "circle_count",
    "flip_label",
    "gaze_matrix",
    "gaze_powers",
    "growth_constant",
    "prism_count",
    "sequences",
    "silence_probability",
    "silent_gfs",
    "table",
]
