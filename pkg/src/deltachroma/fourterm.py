"""Vassiliev moves on delta-matroids, 4-term relation sweeps and primitive-value spans."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import setsystem as ss
from .binary import delta_matroid_of_matrix, enumerate_binary_delta_matroids, is_binary, is_graphical
from .hopf import character_xi, primitive_projection
from .ribbon import (
    all_chord_diagrams,
    delta_matroid_of_ribbon_graph,
    family_layouts,
    intersection_graph,
    two_vertex_family,
)
from .setsystem import CapExceeded, DeltaMatroid, SetSystem, SetSystemError, is_delta_matroid
from .symfunc import chromatic
from .xpoly import XPoly

MAX_WITNESSES = 50


class MoveError(SetSystemError):
    pass


def _check_pair(D: SetSystem, a: int, b: int) -> None:
    if a == b:
        raise MoveError("Vassiliev moves need two distinct elements")
    if not (0 <= a < D.n and 0 <= b < D.n):
        raise MoveError(f"elements ({a}, {b}) not in ground set of size {D.n}")


def _result(D: SetSystem, fam) -> SetSystem:
    # Re-validated rather than assumed: a plain SetSystem comes back if SEA fails.
    S = SetSystem(D.n, tuple(fam))
    if S.is_proper and is_delta_matroid(S):
        return DeltaMatroid(S.n, S.feasible)
    return S


def _second_alt_masks(fam: set[int], n: int, a: int, b: int) -> set[int]:
    A, B = 1 << a, 1 << b
    out = set()
    for F in range(1 << n):
        a_not_b = bool(F & A) and not F & B
        in_phi = F in fam
        swapped = (F ^ A ^ B) in fam
        if not a_not_b and in_phi:
            out.add(F)
        elif a_not_b and in_phi and not swapped:
            out.add(F)
        elif a_not_b and not in_phi and swapped:
            out.add(F)
    return out


def second_vassiliev(D: SetSystem, a: int, b: int) -> SetSystem:
    """Toggle ``F + a`` for every ``F`` avoiding ``a, b`` with ``F + b`` feasible."""
    _check_pair(D, a, b)
    A, B = 1 << a, 1 << b
    fam = set(D.feasible)
    toggled = {(F ^ B) | A for F in D.feasible if F & B and not F & A}
    out = fam ^ toggled
    if ss.DEBUG:
        assert out == _second_alt_masks(fam, D.n, a, b), "the two second-move definitions disagree"
    return _result(D, out)


def second_vassiliev_alt(D: SetSystem, a: int, b: int) -> SetSystem:
    """The second move evaluated clause by clause from its three-part description."""
    _check_pair(D, a, b)
    return _result(D, _second_alt_masks(set(D.feasible), D.n, a, b))


def first_vassiliev(D: SetSystem, a: int, b: int) -> SetSystem:
    """For ``F`` containing both ``a`` and ``b``: feasible iff exactly one of ``F`` and
    ``F - {a, b}`` was; all other sets are unchanged.
    """
    _check_pair(D, a, b)
    AB = (1 << a) | (1 << b)
    fam = set(D.feasible)
    out = {F for F in fam if F & AB != AB}
    for F in range(1 << D.n):
        if F & AB == AB and ((F in fam) != ((F ^ AB) in fam)):
            out.add(F)
    return _result(D, out)


@dataclass(frozen=True)
class FourTuple:
    D: SetSystem
    first: SetSystem
    second: SetSystem
    both: SetSystem
    a: int
    b: int


def four_tuple(D: SetSystem, a: int, b: int) -> FourTuple:
    second = second_vassiliev(D, a, b)
    return FourTuple(D, first_vassiliev(D, a, b), second, first_vassiliev(second, a, b), a, b)


@dataclass(frozen=True)
class FourTermResult:
    lhs: object
    rhs: object
    passed: bool
    terms: FourTuple


def check_four_term(invariant: Callable[[SetSystem], object], D: SetSystem, a: int, b: int) -> FourTermResult:
    """Compare ``f(D) - f(D'_ab)`` with ``f(D~_ab) - f(D~'_ab)`` exactly."""
    t = four_tuple(D, a, b)
    lhs = invariant(t.D) - invariant(t.first)
    rhs = invariant(t.second) - invariant(t.both)
    return FourTermResult(lhs, rhs, lhs == rhs, t)


INVARIANTS: dict[str, Callable[[SetSystem], object]] = {
    "xi": character_xi,
    "chromatic": chromatic,
}


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(n) for b in range(n) if a != b]


def _four_term_chunk(args) -> list[tuple[str, SetSystem, int, int, str, str]]:
    D, names = args
    failures = []
    for a, b in _pairs(D.n):
        for name in names:
            r = check_four_term(INVARIANTS[name], D, a, b)
            if not r.passed:
                failures.append((name, r.terms, str(r.lhs), str(r.rhs)))
    return failures


def _parallel_map(fn, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def sweep_domain(max_grading: int, even_only: bool = False, extended: bool = False) -> list[DeltaMatroid]:
    out = []
    for n in range(max_grading + 1):
        out.extend(enumerate_binary_delta_matroids(n, even_only=even_only, extended=extended))
    return out


def sweep_four_term(
    max_grading: int,
    invariants: Iterable[str] = ("xi", "chromatic"),
    even_only: bool = False,
    jobs: int = 1,
) -> dict:
    """4-term relation over every class of grading ``<= max_grading`` and every ordered pair."""
    names = tuple(invariants)
    domain = sweep_domain(max_grading, even_only)
    results = _parallel_map(_four_term_chunk, [(D, names) for D in domain], jobs)
    instances = sum(len(_pairs(D.n)) for D in domain) * len(names)
    failures = [f for chunk in results for f in chunk]
    return {
        "kind": "4t",
        "grading": max_grading,
        "even_only": even_only,
        "invariants": list(names),
        "instances": instances,
        "passes": instances - len(failures),
        "failures": len(failures),
        "witnesses": [
            {"invariant": name, "tuple": terms, "lhs": lhs, "rhs": rhs}
            for name, terms, lhs, rhs in failures[:MAX_WITNESSES]
        ],
    }


MOVE_CHECKS = (
    "first_involution",
    "second_involution",
    "commute",
    "second_definitions_agree",
    "first_preserves_sea",
    "second_preserves_sea",
    "first_preserves_binary",
    "second_preserves_binary",
)


def _move_chunk(D: SetSystem) -> list[tuple[str, FourTuple]]:
    failures = []
    for a, b in _pairs(D.n):
        t = four_tuple(D, a, b)
        checks = {
            "first_involution": first_vassiliev(t.first, a, b) == D,
            "second_involution": second_vassiliev(t.second, a, b) == D,
            "commute": second_vassiliev(t.first, a, b) == t.both,
            "second_definitions_agree": second_vassiliev_alt(D, a, b) == t.second,
            "first_preserves_sea": isinstance(t.first, DeltaMatroid),
            "second_preserves_sea": isinstance(t.second, DeltaMatroid),
            "first_preserves_binary": t.first.is_proper and is_binary(t.first),
            "second_preserves_binary": t.second.is_proper and is_binary(t.second),
        }
        failures.extend((name, t) for name in MOVE_CHECKS if not checks[name])
    return failures


def sweep_moves(max_grading: int, even_only: bool = False, jobs: int = 1) -> dict:
    domain = sweep_domain(max_grading, even_only)
    results = _parallel_map(_move_chunk, domain, jobs)
    failures = [f for chunk in results for f in chunk]
    per_check = {name: 0 for name in MOVE_CHECKS}
    for name, _ in failures:
        per_check[name] += 1
    instances = sum(len(_pairs(D.n)) for D in domain) * len(MOVE_CHECKS)
    return {
        "kind": "moves",
        "grading": max_grading,
        "even_only": even_only,
        "instances": instances,
        "passes": instances - len(failures),
        "failures": len(failures),
        "failures_by_check": per_check,
        "witnesses": [{"check": name, "tuple": t} for name, t in failures[:MAX_WITNESSES]],
    }


def _row_reduce(vectors: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon basis of the span of ``vectors``."""
    rows = [list(v) for v in vectors if any(v)]
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for v in rows:
        for p, b in zip(pivots, basis):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, b)]
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            continue
        v = [x / v[lead] for x in v]
        for i, b in enumerate(basis):
            if b[lead]:
                f = b[lead]
                basis[i] = [x - f * y for x, y in zip(b, v)]
        basis.append(v)
        pivots.append(lead)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return [basis[i] for i in order]


def in_span(basis: list[list[Fraction]], v: Sequence[Fraction]) -> bool:
    return len(_row_reduce(basis + [list(v)])) == len(basis)


@dataclass
class SpanReport:
    grading: int
    even_only: bool
    instances: int
    distinct_values: list[XPoly]
    basis: list[XPoly]
    contains_x: bool
    contains_zero_linear_space: bool
    missing_monomials: list[int] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)


def primitive_value_span(n: int, even_only: bool = False) -> SpanReport:
    """Span of ``ξ(π(D))`` over all enumerated (even) binary delta-matroids of grading ``n``."""
    if n < 1:
        raise SetSystemError("grading must be positive")
    domain = enumerate_binary_delta_matroids(n, even_only=even_only)
    values = [character_xi(primitive_projection(D)) for D in domain]
    distinct = sorted(set(values), key=lambda p: (p.degree, p.coeffs))
    vectors = [[v.coeff(i) for i in range(n + 1)] for v in distinct]
    basis = _row_reduce(vectors)

    def unit(i):
        return [Fraction(int(i == j)) for j in range(n + 1)]

    missing = [i for i in range(n + 1) if i != 1 and not in_span(basis, unit(i))]
    return SpanReport(
        grading=n,
        even_only=even_only,
        instances=len(domain),
        distinct_values=[v for v in distinct if v],
        basis=[XPoly(b) for b in basis],
        contains_x=in_span(basis, unit(1)),
        contains_zero_linear_space=not missing,
        missing_monomials=missing,
    )


@dataclass(frozen=True)
class FamilyInstance:
    n: int
    k: int
    layout: tuple[tuple[int, ...], tuple[int, ...]]
    delta_matroid: DeltaMatroid
    value: XPoly
    layouts_tried: int


def find_family_instance(n: int, k: int, value_fn: Callable[[SetSystem], XPoly] | None = None) -> FamilyInstance | None:
    """First two-vertex layout whose primitive projection has ``ξ`` equal to ``c * x^k``, ``c != 0``."""
    if value_fn is None:
        from .hopf import primitive_xi_value as value_fn
    tried = 0
    for layout in family_layouts(n, k):
        tried += 1
        D = delta_matroid_of_ribbon_graph(two_vertex_family(n, k, layout))
        v = value_fn(D)
        if v and v.degree == k and all(v.coeff(i) == 0 for i in range(k)):
            return FamilyInstance(n, k, layout, D, v, tried)
    return None


def _counts(kind: str, grading: int, instances: int, failures: list, **extra) -> dict:
    return {
        "kind": kind,
        "grading": grading,
        **extra,
        "instances": instances,
        "passes": instances - len(failures),
        "failures": len(failures),
        "witnesses": failures[:MAX_WITNESSES],
    }


def sweep_lemma_graphical(max_grading: int, even_only: bool = False) -> dict:
    """Graphical iff the empty set is feasible, over every enumerated class."""
    domain = sweep_domain(max_grading, even_only)
    failures = [
        {"D": D, "graphical": g, "empty_feasible": e}
        for D in domain
        for g, e in [(is_graphical(D), 0 in D.feasible)]
        if g != e
    ]
    return _counts("lemma-graphical", max_grading, len(domain), failures, even_only=even_only)


INTERLACEMENT_CAP = 6


def sweep_interlacement(max_chords: int) -> dict:
    """Quasi-tree delta-matroid of each chord diagram against ``D`` of its intersection graph."""
    if not 0 <= max_chords <= ss.effective_cap(INTERLACEMENT_CAP):
        raise CapExceeded(f"chord diagrams with {max_chords} chords exceed the sweep cap")
    instances = 0
    failures = []
    for m in range(max_chords + 1):
        for C in all_chord_diagrams(m):
            instances += 1
            quasi = delta_matroid_of_ribbon_graph(C)
            G = intersection_graph(C)
            A = delta_matroid_of_matrix(G.adjacency())
            if quasi != A:
                failures.append({"chords": [[e.h1, e.h2] for e in C.edges], "quasi_trees": quasi, "graph": A})
    return _counts("interlacement", max_chords, instances, failures)


FAMILY_CAP = 5


def sweep_family(max_n: int) -> dict:
    """Layout search for every ``2 <= k <= n <= max_n``; a miss counts as a failure."""
    if not 2 <= max_n <= ss.effective_cap(FAMILY_CAP):
        raise CapExceeded(f"family search refused for n = {max_n}")
    rows = []
    failures = []
    for n in range(2, max_n + 1):
        for k in range(2, n + 1):
            hit = find_family_instance(n, k)
            row = {"n": n, "k": k, "found": hit is not None}
            if hit is not None:
                row.update(layout=[list(r) for r in hit.layout], value=str(hit.value), layouts_tried=hit.layouts_tried)
            else:
                row["layouts_tried"] = sum(1 for _ in family_layouts(n, k))
                failures.append(row)
            rows.append(row)
    report = _counts("family", max_n, len(rows), failures)
    report["cases"] = rows
    return report

