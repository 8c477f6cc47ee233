"""Exit criteria: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the report.
"""

import math
import time

import pytest

from tmenum import antiprism, silent
from tmenum.graph import adjacency_matrix, build
from tmenum.matrix import mat_pow, trace
from tmenum.series import CountSeq, Poly, check_recurrence, gf_from_recurrence, largest_real_root, series_coeffs, trace_gf
from tmenum.subsets import (
    brute_force_count,
    hamiltonian_cycles,
    hamiltonian_paths,
    simple_cycles,
    simple_paths,
)

from corpus import SMALL_BUILDERS, builder_corpus, full_corpus, random_corpus

TABLE = [
    (2, 32, 30, "0.395", "0.370"),
    (3, 158, 156, "0.217", "0.214"),
    (4, 828, 826, "0.126", "0.126"),
    (5, 4408, 4406, "0.075", "0.075"),
    (6, 23564, 23562, "0.044", "0.044"),
    (7, 126106, 126104, "0.026", "0.026"),
    (8, 675076, 675074, "0.016", "0.016"),
    (9, 3614144, 3614142, "0.009", "0.009"),
    (10, 19349432, 19349430, "0.006", "0.006"),
]


def report(number, desc, ok, elapsed, limit=None):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    budget = f" (limit {limit}s)" if limit is not None else ""
    print(f"\n[{status}] criterion {number}: {desc} [{elapsed:.2f}s{budget}]")
    assert ok, f"criterion {number} failed: {desc}"
    assert within, f"criterion {number} exceeded {limit}s: {elapsed:.2f}s"


def all_counts(g, workers=1):
    out = [hamiltonian_paths(g, workers), hamiltonian_cycles(g, workers)]
    out += [simple_cycles(g, k, workers) for k in range(1, g.n + 1)]
    out += [simple_paths(g, k, workers) for k in range(1, g.n)]
    return out


def test_criterion_1_silent_table():
    t0 = time.perf_counter()
    rows = silent.table(10)
    got = [(r["n"], r["t"], r["s"], f"{float(r['p_t']):.3f}", f"{float(r['p_s']):.3f}") for r in rows]
    report(1, "silent-circle table n = 2..10 (counts and 3-decimal probabilities)",
           got == TABLE, time.perf_counter() - t0, 1)


def test_criterion_2_generating_functions():
    t0 = time.perf_counter()
    den = Poly([1, -8, 16, -10, 1])
    t_gf = trace_gf(silent.gaze_matrix())
    s_gf = gf_from_recurrence(CountSeq(2, [silent.circle_count(n) for n in range(2, 6)]), silent.SILENT_RECURRENCE)
    h_gf = antiprism.hc_gf()
    ok = (
        t_gf.num == Poly([8, -56, 96, -50, 4]) and t_gf.den == den
        and s_gf.num == Poly([0, 0, 30, -84, 58, -6]) and s_gf.den == den
        and h_gf.num == Poly([0, 0, 0, 2]) * Poly([16, -19, -15, 3, 9])
        and h_gf.den == Poly([1, -1]) * Poly([1, -1]) * Poly([1, -1, -2, -1])
    )
    report(2, "t-GF, s-GF and combined h-GF equal the printed forms", ok, time.perf_counter() - t0, 1)


def test_criterion_3_recurrences():
    t0 = time.perf_counter()
    t, s = silent.sequences(60)
    h = antiprism.hc_sequence(3, 63)
    ok = (
        len(t) >= 50 and len(s) >= 50 and len(h) >= 50
        and check_recurrence(t, (8, -16, 10, -1), 5)
        and check_recurrence(s, (8, -16, 10, -1), 6)
        and check_recurrence(h, (3, -1, -2, 0, 1), 8)
    )
    report(3, "t (n>=5), s (n>=6), h (n>=8) recurrences on 50+ terms", ok, time.perf_counter() - t0, 1)


def test_criterion_4_antiprism():
    t0 = time.perf_counter()
    values = [antiprism.hc_antiprism(n) for n in range(3, 8)]
    cross = all(antiprism.hc_antiprism(n) == hamiltonian_cycles(build(f"antiprism:{n}")) for n in (3, 4, 5))
    report(4, "h_3..h_7 = 32, 58, 112, 220, 450 and inclusion-exclusion agrees for n = 3, 4, 5",
           values == [32, 58, 112, 220, 450] and cross, time.perf_counter() - t0, 10)


def test_criterion_5_growth_constant():
    t0 = time.perf_counter()
    alpha = largest_real_root(Poly([1, -10, 16, -8, 1]))
    _, ratio = silent.growth_constant()
    ok = abs(alpha - 5.353856) <= 1e-5 and abs(alpha / 9 - 0.5948729) <= 1e-5 and abs(ratio - 0.5948729) <= 1e-5
    report(5, f"alpha = {alpha:.7f}, alpha/9 = {alpha / 9:.7f}", ok, time.perf_counter() - t0)


def test_criterion_6_oracle_equivalence():
    t0 = time.perf_counter()
    corpus = builder_corpus() + random_corpus(200)
    assert all(g.n <= 8 for _, g in corpus)
    assert sum(1 for name, g in corpus if name.startswith("random") and g.n <= 6) >= 200
    mismatches = []
    for name, g in corpus:
        # divisibility is asserted inside the counters; any violation raises here
        checks = [(hamiltonian_paths(g), brute_force_count(g, "path", g.n - 1)),
                  (hamiltonian_cycles(g), brute_force_count(g, "cycle", g.n))]
        checks += [(simple_cycles(g, k), brute_force_count(g, "cycle", k)) for k in range(1, g.n + 1)]
        checks += [(simple_paths(g, k), brute_force_count(g, "path", k)) for k in range(1, g.n)]
        if any(a != b for a, b in checks):
            mismatches.append(name)
    report(6, f"inclusion-exclusion = backtracking oracle on {len(corpus)} graphs, every k",
           not mismatches, time.perf_counter() - t0, 60)


def test_criterion_7_trace_series():
    t0 = time.perf_counter()
    specs = SMALL_BUILDERS + ["antiprism:5", "antiprism:12", "circulant:24:1,5,7", "cell24"]
    ok = True
    for spec in specs:
        a = adjacency_matrix(build(spec))
        ok &= list(series_coeffs(trace_gf(a), 13).values) == [trace(mat_pow(a, n)) for n in range(13)]
    report(7, f"series of trace GF = tr(A^n), n <= 12, on {len(specs)} builder graphs",
           ok, time.perf_counter() - t0, 5)


def test_criterion_8_silent_oracle():
    t0 = time.perf_counter()
    ok = all(
        silent.brute_force_silent(n, "prism") == silent.prism_count(n)
        and silent.brute_force_silent(n, "circle") == silent.circle_count(n)
        for n in (2, 3, 4)
    )
    report(8, "exhaustive 3^(2n) enumeration matches t_n, s_n for n = 2, 3, 4", ok, time.perf_counter() - t0, 5)


def test_criterion_9_cell24():
    t0 = time.perf_counter()
    g = build("cell24")
    got = {k: simple_cycles(g, k) for k in (3, 4, 5)}
    oracle = {k: brute_force_count(g, "cycle", k) for k in (3, 4, 5)}
    undirected = {k: v // 2 for k, v in got.items()}
    report(9, f"24-cell k-cycles k = 3, 4, 5 match the oracle (undirected {undirected})",
           got == oracle, time.perf_counter() - t0, 120)


def test_criterion_10_parallel_determinism():
    t0 = time.perf_counter()
    corpus = full_corpus()
    ok = True
    for _, g in corpus:
        base = all_counts(g, 1)
        ok &= all_counts(g, 2) == base and all_counts(g, 8) == base
    report(10, f"1, 2 and 8 workers give identical results on {len(corpus)} graphs",
           ok, time.perf_counter() - t0)
