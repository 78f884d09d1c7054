"""Acceptance criteria, each checked exhaustively at its stated size.

Every test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary (see ``conftest.py``) and by running this file directly.
All comparisons are exact.
"""

from __future__ import annotations

import os
import time

import pytest

from deltachroma.binary import (
    delta_matroid_of_matrix,
    enumerate_binary_delta_matroids,
    is_binary,
    is_even,
    is_graphical,
    symmetric_matrices,
)
from deltachroma.fourterm import (
    find_family_instance,
    primitive_value_span,
    sweep_four_term,
    sweep_interlacement,
    sweep_moves,
)
from deltachroma.graphs import all_graphs, chromatic_brute, delta_matroid_of_framed_graph, stanley_direct
from deltachroma.hopf import character_xi, coproduct, primitive_projection, reduced_coproduct
from deltachroma.ribbon import all_ribbon_graphs, delta_matroid_of_ribbon_graph, is_orientable
from deltachroma.setsystem import UNIT, elements_of, product, restrict
from deltachroma.symfunc import chromatic, evaluate_truncated, specialize_all
from deltachroma.xpoly import X, XPoly

RESULTS: list[str] = []
JOBS = max(1, min(4, os.cpu_count() or 1))


def record(number: int, title: str, ok: bool, detail: str, started: float) -> None:
    line = f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {title}: {detail} ({time.perf_counter() - started:.1f}s)"
    RESULTS.append(line)
    print(line)
    assert ok, line


def domain(max_grading: int, min_grading: int = 0):
    for n in range(min_grading, max_grading + 1):
        yield from enumerate_binary_delta_matroids(n)


def test_01_chromatic_polynomial():
    t0 = time.perf_counter()
    graphs = bad = 0
    for n in range(6):
        for G in all_graphs(n):
            graphs += 1
            s = chromatic(delta_matroid_of_framed_graph(G))
            bad += sum(specialize_all(s, t) != chromatic_brute(G, t) for t in range(7))
    record(1, "chromatic polynomial", bad == 0 and time.perf_counter() - t0 < 120,
           f"{graphs} graphs on <=5 vertices, t=0..6, {bad} mismatches", t0)


def test_02_stanley_oracle():
    t0 = time.perf_counter()
    graphs = bad = 0
    for n in range(5):
        for G in all_graphs(n):
            graphs += 1
            got = evaluate_truncated(chromatic(delta_matroid_of_framed_graph(G)), 5)
            want = {e: XPoly.const(c) for e, c in stanley_direct(G, 5).items()}
            bad += got != want
    record(2, "Stanley oracle", bad == 0, f"{graphs} graphs on <=4 vertices in 5 colors, {bad} mismatches", t0)


def test_03_four_term():
    t0 = time.perf_counter()
    r = sweep_four_term(4, ("xi", "chromatic"), jobs=JOBS)
    ok = r["failures"] == 0 and r["passes"] == r["instances"] and time.perf_counter() - t0 < 600
    record(3, "4-term relations", ok, f"{r['instances']} (D, a, b, invariant) checks, {r['failures']} failures", t0)


def test_04_move_algebra():
    t0 = time.perf_counter()
    r = sweep_moves(4, jobs=JOBS)
    worst = {k: v for k, v in r["failures_by_check"].items() if v}
    record(4, "move algebra", r["failures"] == 0,
           f"{r['instances']} checks over 8 properties, failures {worst or 'none'}", t0)


def test_05_hopf_structure():
    t0 = time.perf_counter()
    terms = bad = 0
    for D in domain(4):
        terms += 1
        d = coproduct(D)
        bad += d.apply_coproduct(0) != d.apply_coproduct(1)
        bad += d.swap() != d
        bad += restrict(D, 0) != UNIT
        positions = list(range(D.n))
        for U in range(1 << D.n):
            inside = [e for e in positions if U >> e & 1]
            R = restrict(D, U)
            for W in range(1 << len(inside)):
                outer = sum(1 << inside[i] for i in elements_of(W))
                bad += restrict(R, W) != restrict(D, outer)
    record(5, "Hopf structure", bad == 0,
           f"{terms} basis terms: coassociativity, cocommutativity, transitivity, unit; {bad} failures", t0)


def test_06_primitive_machinery():
    t0 = time.perf_counter()
    bad = checks = 0
    for D in domain(4, 2):
        p = primitive_projection(D)
        bad += primitive_projection(p) != p
        bad += bool(reduced_coproduct(p).terms)
        checks += 2
    small = [D for D in domain(3, 1)]
    for a in small:
        for b in small:
            if 2 <= a.n + b.n <= 4:
                bad += primitive_projection(product(a, b)) != 0
                checks += 1
    for D in domain(4, 1):
        bad += chromatic(D).coefficient((D.n,)) != character_xi(primitive_projection(D))
        checks += 1
    record(6, "primitive machinery", bad == 0, f"{checks} identities, {bad} failures", t0)


def test_07_primitive_span():
    t0 = time.perf_counter()
    parts = []
    ok = True
    for n in (2, 3):
        for even in (True, False):
            r = primitive_value_span(n, even_only=even)
            good = r.contains_zero_linear_space and r.dimension >= n
            ok &= good
            missing = ",".join(f"x^{i}" for i in r.missing_monomials) or "none"
            basis = "{" + ", ".join(map(str, r.basis)) + "}"
            parts.append(
                f"n={n} {'even' if even else 'all'}: span {basis} dim {r.dimension}, "
                f"missing {missing}, x in span: {r.contains_x}"
            )
    record(7, "primitive span", ok, "; ".join(parts), t0)


def test_08_two_vertex_family():
    t0 = time.perf_counter()
    hits = {(n, k): find_family_instance(n, k) for n in range(2, 6) for k in range(2, n + 1)}
    missed = [nk for nk, h in hits.items() if h is None]
    base = hits[2, 2]
    exact = base is not None and base.value == -(X * X)
    found = ", ".join(f"({n},{k}) {h.value}" for (n, k), h in hits.items() if h)
    detail = f"found {found}; none for {missed or 'no case'}; n=k=2 gives {base.value if base else 'nothing'}"
    record(8, "two-vertex family", not missed and exact, detail, t0)


def test_09_structural_lemmas():
    t0 = time.perf_counter()
    bad = 0
    classes = list(domain(4))
    for D in classes:
        bad += is_graphical(D) != (0 in D.feasible)
    matrices = 0
    for n in range(5):
        for A in symmetric_matrices(n):
            matrices += 1
            bad += is_even(delta_matroid_of_matrix(A)) != (not any(A.diagonal))
    ribbons = 0
    for G in all_ribbon_graphs(4, 2):
        ribbons += 1
        D = delta_matroid_of_ribbon_graph(G)
        bad += not is_binary(D)
        bad += is_even(D) != is_orientable(G)
    record(9, "structural lemmas", bad == 0,
           f"{len(classes)} classes, {matrices} matrices, {ribbons} ribbon graphs; {bad} failures", t0)


def test_10_interlacement():
    t0 = time.perf_counter()
    r = sweep_interlacement(5)
    record(10, "interlacement", r["failures"] == 0, f"{r['instances']} chord diagrams, {r['failures']} failures", t0)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
