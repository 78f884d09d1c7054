"""Linear combinations of delta-matroid classes, the coproduct, and the character.

Basis elements are canonical forms of set systems; coefficients are
:class:`~deltachroma.xpoly.XPoly` values, so every identity is checked as a
polynomial identity in ``x``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .setsystem import (
    UNIT,
    SetSystem,
    SetSystemError,
    _factor_blocks,
    canonicalize,
    product,
    restrict,
)
from .xpoly import ONE, X, ZERO, XPoly


class HopfError(ValueError):
    pass


def _coerce_coeff(c) -> XPoly:
    return XPoly.coerce(c)


class HopfElement:
    """Finite linear combination of isomorphism classes of set systems."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[SetSystem, object] | Iterable[tuple[SetSystem, object]] = ()):
        acc: dict[SetSystem, XPoly] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for D, c in items:
            key = canonicalize(D)
            acc[key] = acc.get(key, ZERO) + _coerce_coeff(c)
        self.terms = {D: c for D, c in sorted(acc.items(), key=lambda kv: (kv[0].n, kv[0].feasible)) if c}

    @classmethod
    def basis(cls, D: SetSystem) -> HopfElement:
        return cls({D: ONE})

    @classmethod
    def coerce(cls, h) -> HopfElement:
        if isinstance(h, HopfElement):
            return h
        if isinstance(h, SetSystem):
            return cls.basis(h)
        raise TypeError(f"cannot convert {type(h).__name__} to HopfElement")

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (HopfElement, SetSystem)):
            return self.terms == HopfElement.coerce(other).terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __repr__(self):
        body = " + ".join(f"({c})*{D!r}" for D, c in self.terms.items())
        return f"HopfElement({body or '0'})"

    def __add__(self, other):
        other = HopfElement.coerce(other)
        return HopfElement(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return HopfElement({D: -c for D, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-HopfElement.coerce(other))

    def scale(self, c) -> HopfElement:
        c = _coerce_coeff(c)
        return HopfElement({D: c * v for D, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, XPoly)):
            return self.scale(other)
        other = HopfElement.coerce(other)
        out = []
        for D1, c1 in self.terms.items():
            for D2, c2 in other.terms.items():
                out.append((product(D1, D2), c1 * c2))
        return HopfElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, XPoly)):
            return self.scale(other)
        return HopfElement.coerce(other) * self

    def __pow__(self, k: int):
        out = HopfElement.basis(UNIT)
        for _ in range(k):
            out = out * self
        return out

    def gradings(self) -> set[int]:
        return {D.n for D in self.terms}

    def grading(self) -> int:
        """The common grading of all terms; raises for mixed gradings."""
        g = self.gradings()
        if len(g) > 1:
            raise HopfError(f"element is not homogeneous (gradings {sorted(g)})")
        return g.pop() if g else 0


class TensorElement:
    """Linear combination of ``k``-fold tensors of basis classes."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[SetSystem, ...], object] | Iterable = ()):
        acc: dict[tuple[SetSystem, ...], XPoly] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            key = tuple(canonicalize(D) for D in key)
            acc[key] = acc.get(key, ZERO) + _coerce_coeff(c)
        self.terms = {k: c for k, c in acc.items() if c}

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        body = " + ".join(f"({c})*" + "⊗".join(map(repr, k)) for k, c in self.terms.items())
        return f"TensorElement({body or '0'})"

    def __add__(self, other):
        return TensorElement(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        return TensorElement(list(self.terms.items()) + [(k, -c) for k, c in other.terms.items()])

    def swap(self) -> TensorElement:
        return TensorElement({tuple(reversed(k)): c for k, c in self.terms.items()})

    def apply_coproduct(self, position: int) -> TensorElement:
        """Apply the coproduct to tensor factor ``position``."""
        out = []
        for key, c in self.terms.items():
            for (L, R), v in coproduct(key[position]).terms.items():
                out.append((key[:position] + (L, R) + key[position + 1 :], c * v))
        return TensorElement(out)

    def multiply_out(self) -> HopfElement:
        """Multiply the tensor factors together."""
        return HopfElement((reduce(product, key, UNIT), c) for key, c in self.terms.items())


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            break
        sub = (sub - 1) & mask


def coproduct(h) -> TensorElement:
    """Sum over ordered splittings ``U | W`` of the ground set of ``D|U ⊗ D|W``."""
    h = HopfElement.coerce(h)
    out = []
    for D, c in h.terms.items():
        full = D.ground
        for U in _submasks(full):
            out.append(((restrict(D, U), restrict(D, full ^ U)), c))
    return TensorElement(out)


def reduced_coproduct(h) -> TensorElement:
    """The coproduct with the two terms ``h ⊗ 1`` and ``1 ⊗ h`` removed."""
    h = HopfElement.coerce(h)
    out = []
    for D, c in h.terms.items():
        full = D.ground
        for U in _submasks(full):
            if U and U != full:
                out.append(((restrict(D, U), restrict(D, full ^ U)), c))
    return TensorElement(out)


_SINGLETON_VALUES = {(0,): ONE, (1,): X, (0, 1): XPoly.const(-1)}


@lru_cache(maxsize=1 << 16)
def _xi_masks(feasible: tuple[int, ...], n: int) -> XPoly:
    if not feasible:
        raise SetSystemError("the character is defined on proper set systems only")
    blocks = _factor_blocks(feasible, n)
    if any(B & (B - 1) for B in blocks):
        return ZERO
    value = ONE
    for B in blocks:
        key = tuple(sorted({1 if F & B else 0 for F in feasible}))
        value = value * _SINGLETON_VALUES[key]
    return value


def character_xi(h) -> XPoly:
    """The character: zero off totally disconnected systems, else a product of
    ``1``, ``x`` or ``-1`` over the one-element factors ``{∅}``, ``{{1}}``, ``{∅,{1}}``.
    """
    if isinstance(h, SetSystem):
        return _xi_masks(h.feasible, h.n)
    total = ZERO
    for D, c in HopfElement.coerce(h).terms.items():
        total = total + c * _xi_masks(D.feasible, D.n)
    return total


@lru_cache(maxsize=1 << 18)
def _xi_restricted(feasible: tuple[int, ...], n: int, U: int) -> XPoly:
    D = SetSystem(n, feasible)
    R = restrict(D, U)
    return _xi_masks(R.feasible, R.n)


def _subsets_of_size(mask: int, k: int) -> Iterator[int]:
    for sub in _submasks(mask):
        if bin(sub).count("1") == k:
            yield sub


@lru_cache(maxsize=1 << 16)
def _xi_comp_masks(feasible: tuple[int, ...], n: int, parts: tuple[int, ...]) -> XPoly:
    def go(remaining: int, i: int) -> XPoly:
        if i == len(parts):
            return ONE
        total = ZERO
        for U in _subsets_of_size(remaining, parts[i]):
            v = _xi_restricted(feasible, n, U)
            if v:
                total = total + v * go(remaining ^ U, i + 1)
        return total

    return go((1 << n) - 1, 0)


def xi_composition(a: Sequence[int], h) -> XPoly:
    """Sum over ordered set partitions with block sizes ``a`` of the product of
    the character on the restrictions to the blocks.
    """
    parts = tuple(int(p) for p in a)
    if any(p <= 0 for p in parts):
        raise HopfError("parts must be positive")
    h = HopfElement.coerce(h)
    total = ZERO
    for D, c in h.terms.items():
        if sum(parts) != D.n:
            raise HopfError(f"parts {parts} do not sum to the grading {D.n}")
        total = total + c * _xi_comp_masks(D.feasible, D.n, parts)
    return total


def set_partitions(mask: int) -> Iterator[list[int]]:
    """Unordered partitions of ``mask`` into nonempty blocks (block of the low bit first)."""
    if mask == 0:
        yield []
        return
    low = mask & -mask
    rest = mask ^ low
    for sub in _submasks(rest):
        block = low | sub
        for tail in set_partitions(rest ^ sub):
            yield [block] + tail


def _log_weight(k: int) -> Fraction:
    # (-1)^(k-1)/k summed over the k! orderings of a k-block partition
    return Fraction((-1) ** (k - 1) * factorial(k - 1))


def primitive_projection(h, grading: int | None = None) -> HopfElement:
    """Projection onto primitives along decomposables (first Eulerian idempotent).

    Computes ``sum_k (-1)^(k-1)/k * m^(k-1) reduced_coproduct^(k-1)(h)``,
    grouped over unordered set partitions of the ground set.
    """
    h = HopfElement.coerce(h)
    if not h:
        return HopfElement()
    n = h.grading()
    if grading is not None and grading != n:
        raise HopfError(f"element has grading {n}, not {grading}")
    if n < 1:
        raise HopfError("primitive projection needs positive grading")
    out = []
    for D, c in h.terms.items():
        for blocks in set_partitions(D.ground):
            term = reduce(product, (restrict(D, B) for B in blocks), UNIT)
            out.append((term, c * _log_weight(len(blocks))))
    return HopfElement(out)


def primitive_xi_value(D: SetSystem) -> XPoly:
    """``character_xi(primitive_projection(D))`` without building the projection."""
    total = ZERO
    for blocks in set_partitions(D.ground):
        v = ONE
        for B in blocks:
            v = v * _xi_restricted(D.feasible, D.n, B)
            if not v:
                break
        if v:
            total = total + v * _log_weight(len(blocks))
    return total
