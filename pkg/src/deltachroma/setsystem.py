"""Set systems and delta-matroids on small ground sets.

Ground-set elements are the integers ``0..n-1``; a subset is an ``n``-bit
mask with bit ``i`` standing for element ``i``.  Display names (``labels``)
are carried along for I/O only and never take part in equality.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

HARD_GROUND_CAP = 16
HARD_CANON_CAP = 8

# Set DELTA_CHROMA_DEBUG=1 to re-validate every derived delta-matroid.
DEBUG = os.environ.get("DELTA_CHROMA_DEBUG", "") not in ("", "0")


class SetSystemError(ValueError):
    pass


class CapExceeded(SetSystemError):
    pass


class ImproperError(SetSystemError):
    pass


class SEAViolation(SetSystemError):
    """No valid exchange exists for feasible ``X``, ``Y`` and element ``a``."""

    def __init__(self, X: int, Y: int, a: int):
        self.X, self.Y, self.a = X, Y, a
        super().__init__(
            f"symmetric exchange fails for X={set(elements_of(X))}, "
            f"Y={set(elements_of(Y))}, a={a}"
        )


def effective_cap(hard: int) -> int:
    """``hard`` lowered by the DELTA_CHROMA_CAP environment variable, if set."""
    raw = os.environ.get("DELTA_CHROMA_CAP", "").strip()
    if not raw:
        return hard
    try:
        value = int(raw)
    except ValueError:
        raise SetSystemError(f"DELTA_CHROMA_CAP must be an integer, got {raw!r}")
    return max(0, min(hard, value))


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def _as_mask(subset, n: int) -> int:
    m = subset if isinstance(subset, int) else mask_of(subset)
    if m < 0 or m >> n:
        raise SetSystemError(f"{set(elements_of(m)) if m >= 0 else m} is not a subset of the ground set")
    return m


@dataclass(frozen=True, eq=False)
class SetSystem:
    """A pair (ground set of size ``n``, family of feasible subsets)."""

    n: int
    feasible: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise SetSystemError("ground set size must be non-negative")
        if self.n > effective_cap(HARD_GROUND_CAP):
            raise CapExceeded(f"ground set of size {self.n} exceeds cap {effective_cap(HARD_GROUND_CAP)}")
        fam = tuple(sorted(set(self.feasible)))
        limit = 1 << self.n
        for F in fam:
            if F < 0 or F >= limit:
                raise SetSystemError(f"mask {F} uses elements outside 0..{self.n - 1}")
        object.__setattr__(self, "feasible", fam)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n or len(set(labels)) != self.n:
                raise SetSystemError("labels must be n pairwise distinct names")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]], labels: Sequence[str] | None = None):
        return cls(n, tuple(mask_of(s) for s in sets), tuple(labels) if labels is not None else None)

    def __eq__(self, other):
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.n == other.n and self.feasible == other.feasible

    def __hash__(self):
        return hash((self.n, self.feasible))

    def __repr__(self):
        sets = ", ".join("{" + ",".join(map(str, elements_of(F))) + "}" for F in self.feasible)
        return f"{type(self).__name__}({self.n}; [{sets}])"

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @property
    def is_proper(self) -> bool:
        return bool(self.feasible)

    def sets(self) -> list[tuple[int, ...]]:
        return [elements_of(F) for F in self.feasible]

    def names(self) -> tuple[str, ...]:
        return self.labels if self.labels is not None else tuple(str(i + 1) for i in range(self.n))


class DeltaMatroid(SetSystem):
    """A proper set system satisfying the symmetric exchange axiom.

    Obtain one through :func:`validate_delta_matroid`; the operations in this
    package return ``DeltaMatroid`` instances whenever their input was one.
    """


UNIT = DeltaMatroid(0, (0,))


def _derived(S: SetSystem, n: int, fam) -> SetSystem:
    if isinstance(S, DeltaMatroid):
        D = DeltaMatroid(n, tuple(fam))
        if DEBUG:
            validate_delta_matroid(D)
        return D
    return SetSystem(n, tuple(fam))


def find_sea_violation(S: SetSystem) -> tuple[int, int, int] | None:
    """First ``(X, Y, a)`` in ascending order for which no exchange works."""
    fam = set(S.feasible)
    for X in S.feasible:
        for Y in S.feasible:
            d = X ^ Y
            for a in elements_of(d):
                Xa = X ^ (1 << a)
                if not any((Xa ^ (1 << b) if b != a else Xa) in fam for b in elements_of(d)):
                    return X, Y, a
    return None


def validate_delta_matroid(S: SetSystem) -> DeltaMatroid:
    if not S.is_proper:
        raise ImproperError("set system has no feasible sets")
    witness = find_sea_violation(S)
    if witness is not None:
        raise SEAViolation(*witness)
    if isinstance(S, DeltaMatroid):
        return S
    return DeltaMatroid(S.n, S.feasible, S.labels)


def is_delta_matroid(S: SetSystem) -> bool:
    return S.is_proper and find_sea_violation(S) is None


def twist(D: SetSystem, A) -> SetSystem:
    """Local duality: replace every feasible ``F`` by ``F ^ A``."""
    A = _as_mask(A, D.n)
    if A == 0:
        return D
    out = _derived(D, D.n, (F ^ A for F in D.feasible))
    if D.labels is not None:
        object.__setattr__(out, "labels", D.labels)
    return out


def _compress(F: int, keep: int) -> int:
    """Pack the bits of ``F`` selected by ``keep`` into the low positions."""
    out = 0
    j = 0
    i = 0
    while keep >> i:
        if (keep >> i) & 1:
            if (F >> i) & 1:
                out |= 1 << j
            j += 1
        i += 1
    return out


def _delete_masks(fam: Iterable[int], e: int) -> tuple[int, ...]:
    bit = 1 << e
    fam = tuple(fam)
    avoiding = tuple(F for F in fam if not F & bit)
    if avoiding:
        return avoiding
    return tuple(F ^ bit for F in fam)


@lru_cache(maxsize=1 << 16)
def _restrict_masks(feasible: tuple[int, ...], n: int, keep: int) -> tuple[int, ...]:
    fam = feasible
    for e in range(n):
        if not (keep >> e) & 1:
            fam = _delete_masks(fam, e)
    return tuple(sorted({_compress(F, keep) for F in fam}))


def delete(D: SetSystem, e: int) -> SetSystem:
    """Delete element ``e``; the remaining elements are renumbered in order."""
    if not 0 <= e < D.n:
        raise SetSystemError(f"element {e} not in ground set")
    return restrict(D, D.ground & ~(1 << e))


def restrict(D: SetSystem, U) -> SetSystem:
    """Restriction to ``U`` by deleting every element outside it.

    Deleting ``e`` keeps the feasible sets avoiding ``e`` when there are any,
    and otherwise removes ``e`` from all of them, so the result stays proper
    and ``restrict(D, 0)`` is the unit.  Elements of ``U`` are renumbered in
    increasing order.
    """
    keep = _as_mask(U, D.n)
    if keep == D.ground:
        return D
    if not D.is_proper:
        raise ImproperError("cannot restrict an improper set system")
    out = _derived(D, bin(keep).count("1"), _restrict_masks(D.feasible, D.n, keep))
    if D.labels is not None:
        object.__setattr__(out, "labels", tuple(D.labels[i] for i in elements_of(keep)))
    return out


def product(D1: SetSystem, D2: SetSystem) -> SetSystem:
    """Disjoint union: the elements of ``D2`` are shifted above those of ``D1``."""
    n = D1.n + D2.n
    if n > effective_cap(HARD_GROUND_CAP):
        raise CapExceeded(f"product ground set of size {n} exceeds cap")
    fam = {F1 | (F2 << D1.n) for F1 in D1.feasible for F2 in D2.feasible}
    if isinstance(D1, DeltaMatroid) and isinstance(D2, DeltaMatroid):
        return DeltaMatroid(n, tuple(fam))
    return SetSystem(n, tuple(fam))


def relabel(S: SetSystem, perm: Sequence[int]) -> SetSystem:
    """Image of ``S`` under the bijection ``i -> perm[i]``."""
    if sorted(perm) != list(range(S.n)):
        raise SetSystemError("perm must be a permutation of the ground set")
    return _derived(S, S.n, (_permute_mask(F, perm) for F in S.feasible))


def _permute_mask(F: int, perm: Sequence[int]) -> int:
    out = 0
    i = 0
    while F:
        if F & 1:
            out |= 1 << perm[i]
        F >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class ConnectedFactorization:
    blocks: tuple[tuple[int, ...], ...]
    factors: tuple[SetSystem, ...]


def _split_once(fam: frozenset[int], elems: int) -> tuple[int, int] | None:
    """Find ``U | W = elems`` with ``fam`` equal to the product of its projections."""
    low = elems & -elems
    rest = elems ^ low
    # U always contains the least element; enumerate the rest of U by submask.
    sub = rest
    candidates = []
    while True:
        U = low | sub
        if U != elems:
            candidates.append(U)
        if sub == 0:
            break
        sub = (sub - 1) & rest
    for U in sorted(candidates, key=lambda m: (bin(m).count("1"), m)):
        W = elems ^ U
        pu = {F & U for F in fam}
        pw = {F & W for F in fam}
        if len(pu) * len(pw) == len(fam) and all((a | b) in fam for a in pu for b in pw):
            return U, W
    return None


@lru_cache(maxsize=1 << 14)
def _factor_blocks(feasible: tuple[int, ...], n: int) -> tuple[int, ...]:
    blocks = []
    stack = [((1 << n) - 1, frozenset(feasible))]
    while stack:
        elems, fam = stack.pop()
        if elems == 0:
            continue
        split = _split_once(fam, elems)
        if split is None:
            blocks.append(elems)
            continue
        U, W = split
        stack.append((U, frozenset(F & U for F in fam)))
        stack.append((W, frozenset(F & W for F in fam)))
    return tuple(sorted(blocks, key=lambda m: m & -m))


def factorize_connected(D: SetSystem) -> ConnectedFactorization:
    """Finest splitting of ``D`` into a product of set systems on disjoint blocks."""
    if not D.is_proper:
        raise ImproperError("cannot factorize an improper set system")
    blocks = _factor_blocks(D.feasible, D.n)
    factors = tuple(
        _derived(D, bin(B).count("1"), sorted({_compress(F & B, B) for F in D.feasible})) for B in blocks
    )
    return ConnectedFactorization(tuple(elements_of(B) for B in blocks), factors)


def is_connected(D: SetSystem) -> bool:
    return D.n > 0 and len(_factor_blocks(D.feasible, D.n)) == 1


@lru_cache(maxsize=8)
def _perm_tables(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(_permute_mask(F, p) for F in range(1 << n)) for p in permutations(range(n))
    )


@lru_cache(maxsize=1 << 16)
def _canonical_masks(feasible: tuple[int, ...], n: int) -> tuple[int, ...]:
    best = None
    if n <= 6:
        for table in _perm_tables(n):
            cand = tuple(sorted(table[F] for F in feasible))
            if best is None or cand < best:
                best = cand
    else:
        for p in permutations(range(n)):
            cand = tuple(sorted(_permute_mask(F, p) for F in feasible))
            if best is None or cand < best:
                best = cand
    return best if best is not None else ()


def canonicalize(S: SetSystem) -> SetSystem:
    """Relabeling of ``S`` whose sorted mask list is lexicographically least.

    Runs an exhaustive scan of all ``n!`` relabelings, so ``n`` is capped.
    """
    cap = effective_cap(HARD_CANON_CAP)
    if S.n > cap:
        raise CapExceeded(f"canonicalization refused for ground set of size {S.n} (cap {cap})")
    fam = _canonical_masks(S.feasible, S.n)
    if isinstance(S, DeltaMatroid):
        return DeltaMatroid(S.n, fam)
    return SetSystem(S.n, fam)


def are_isomorphic(S: SetSystem, T: SetSystem) -> bool:
    return S.n == T.n and len(S.feasible) == len(T.feasible) and canonicalize(S) == canonicalize(T)
