"""Symmetric matrices over F2 and the binary delta-matroids they generate."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from . import setsystem as ss
from .setsystem import (
    CapExceeded,
    DeltaMatroid,
    ImproperError,
    SetSystem,
    _compress,
    canonicalize,
    elements_of,
    twist,
)

ENUM_CAP = 4
ENUM_CAP_EXTENDED = 5


@dataclass(frozen=True)
class F2SymMatrix:
    """Symmetric F2 matrix; bit ``j`` of ``rows[i]`` is the entry ``a_ij``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if len(rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(rows)}")
        for i, r in enumerate(rows):
            if r < 0 or r >> self.n:
                raise ValueError(f"row {i} has entries outside the matrix")
            for j in range(self.n):
                if ((r >> j) & 1) != ((rows[j] >> i) & 1):
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> F2SymMatrix:
        n = len(entries)
        return cls(n, tuple(sum((int(v) & 1) << j for j, v in enumerate(row)) for row in entries))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def principal(self, U: int) -> F2SymMatrix:
        idx = elements_of(U)
        return F2SymMatrix(len(idx), tuple(_compress(self.rows[i], U) for i in idx))

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self[i, i] for i in range(self.n))


def det_f2(rows: Sequence[int], n: int) -> int:
    """Determinant over F2 of the ``n x n`` matrix given as row bitmasks."""
    work = list(rows)
    for col in range(n):
        bit = 1 << col
        pivot = next((r for r in range(col, n) if work[r] & bit), None)
        if pivot is None:
            return 0
        work[col], work[pivot] = work[pivot], work[col]
        prow = work[col]
        for r in range(col + 1, n):
            if work[r] & bit:
                work[r] ^= prow
    return 1


def principal_minor(A: F2SymMatrix, F: int) -> int:
    idx = elements_of(F)
    return det_f2([_compress(A.rows[i], F) for i in idx], len(idx))


@lru_cache(maxsize=1 << 16)
def _dm_of_rows(rows: tuple[int, ...], n: int) -> tuple[int, ...]:
    A = F2SymMatrix(n, rows)
    return tuple(F for F in range(1 << n) if principal_minor(A, F))


def delta_matroid_of_matrix(A: F2SymMatrix) -> DeltaMatroid:
    """Feasible sets are the index sets of nonsingular principal submatrices.

    The empty minor has determinant 1, so the empty set is always feasible.
    """
    D = DeltaMatroid(A.n, _dm_of_rows(A.rows, A.n))
    if ss.DEBUG:
        ss.validate_delta_matroid(D)
    return D


def reconstruct_matrix(S: SetSystem) -> F2SymMatrix | None:
    """The matrix ``A`` with ``D(A) == S``, or ``None`` if ``S`` is not graphical.

    The diagonal is read off the singletons and each off-diagonal entry off
    the corresponding pair; the candidate is then checked against every
    principal minor.
    """
    if not S.is_proper:
        raise ImproperError("set system has no feasible sets")
    fam = set(S.feasible)
    if 0 not in fam:
        return None
    n = S.n
    diag = [1 if (1 << i) in fam else 0 for i in range(n)]
    rows = [diag[i] << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            pair = ((1 << i) | (1 << j)) in fam
            # det [[a_ii, a_ij], [a_ij, a_jj]] = a_ii a_jj + a_ij over F2
            if (diag[i] & diag[j]) ^ pair:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    A = F2SymMatrix(n, tuple(rows))
    if _dm_of_rows(A.rows, n) != S.feasible:
        return None
    return A


def is_graphical(S: SetSystem) -> bool:
    return S.is_proper and reconstruct_matrix(S) is not None


def binary_witness(D: SetSystem) -> int | None:
    """A twist mask ``F`` making ``D * F`` graphical, else ``None``.

    Only feasible ``F`` are tried: a graphical system contains the empty set,
    and ``D * F`` contains it exactly when ``F`` is feasible.
    """
    found = None
    for F in D.feasible:
        if reconstruct_matrix(twist(D, F)) is not None:
            found = F
            break
    if ss.DEBUG:
        full = any(is_graphical(twist(D, F)) for F in range(1 << D.n))
        assert full == (found is not None), "feasible-twist scan disagrees with the full scan"
    return found


def is_binary(D: SetSystem) -> bool:
    return binary_witness(D) is not None


def is_even(D: SetSystem) -> bool:
    parities = {bin(F).count("1") & 1 for F in D.feasible}
    return len(parities) <= 1


def symmetric_matrices(n: int) -> Iterator[F2SymMatrix]:
    """All ``2**(n(n+1)/2)`` symmetric F2 matrices of size ``n``."""
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    for code in range(1 << len(cells)):
        rows = [0] * n
        for k, (i, j) in enumerate(cells):
            if (code >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield F2SymMatrix(n, tuple(rows))


def _check_grading(n: int, extended: bool) -> None:
    cap = ss.effective_cap(ENUM_CAP_EXTENDED if extended else ENUM_CAP)
    if n < 0 or n > cap:
        hint = "" if extended or n != ENUM_CAP_EXTENDED else " (extended mode allows grading 5)"
        raise CapExceeded(f"exhaustive enumeration refused for grading {n}{hint}")


def graphical_classes(n: int, extended: bool = False) -> tuple[DeltaMatroid, ...]:
    _check_grading(n, extended)
    return _graphical_classes(n)


# Caches are keyed on n alone and sit behind the cap check, so lowering the
# cap later still refuses work that happens to be cached.
@lru_cache(maxsize=None)
def _graphical_classes(n: int) -> tuple[DeltaMatroid, ...]:
    found = {canonicalize(delta_matroid_of_matrix(A)) for A in symmetric_matrices(n)}
    return tuple(sorted(found, key=lambda D: D.feasible))


@lru_cache(maxsize=None)
def _binary_classes(n: int) -> tuple[DeltaMatroid, ...]:
    # Twisting isomorphic systems by corresponding sets gives isomorphic
    # results, so twisting one representative per graphical class suffices.
    found = set()
    for G in _graphical_classes(n):
        for T in range(1 << n):
            found.add(canonicalize(twist(G, T)))
    return tuple(sorted(found, key=lambda D: D.feasible))


def enumerate_binary_delta_matroids(n: int, even_only: bool = False, extended: bool = False) -> list[DeltaMatroid]:
    """Canonical representatives of every binary delta-matroid class on ``n`` elements.

    Gradings up to 4 are exhaustive by default; grading 5 needs ``extended``.
    """
    _check_grading(n, extended)
    classes = _binary_classes(n)
    if even_only:
        return [D for D in classes if is_even(D)]
    return list(classes)
