"""Symmetric functions in the power-sum basis and the chromatic morphism."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .hopf import HopfElement, HopfError, xi_composition
from .xpoly import ONE, ZERO, XPoly, format_poly

MONOMIAL_WEIGHT_CAP = 12

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in parts):
        raise ValueError("partition parts must be positive")
    return parts


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse-lexicographic order: (n), (n-1, 1), ..."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


class SymFunc:
    """Polynomial in ``p_1, p_2, ...``: maps a partition ``λ`` to the coefficient of ``p_λ``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], object] | Iterable = ()):
        acc: dict[Partition, XPoly] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lam, c in items:
            lam = partition(lam)
            acc[lam] = acc.get(lam, ZERO) + XPoly.coerce(c)
        self.terms = {lam: c for lam, c in sorted(acc.items(), key=_basis_key) if c}

    @classmethod
    def p(cls, *parts: int) -> SymFunc:
        return cls({parts: ONE})

    def coefficient(self, lam: Sequence[int]) -> XPoly:
        return self.terms.get(partition(lam), ZERO)

    def weights(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __add__(self, other):
        return SymFunc(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return SymFunc({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, XPoly)):
            c = XPoly.coerce(other)
            return SymFunc({lam: c * v for lam, v in self.terms.items()})
        out = []
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                out.append((l1 + l2, c1 * c2))
        return SymFunc(out)

    __rmul__ = __mul__

    def substitute_x(self, value) -> SymFunc:
        return SymFunc({lam: XPoly.const(c(Fraction(value))) for lam, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        return ", ".join(f"p[{','.join(map(str, lam))}]:{c}" for lam, c in self.terms.items())

    def __repr__(self):
        return f"SymFunc({str(self)!r})"


def _basis_key(item):
    lam = item[0]
    # lighter weight first; within a weight (1,1,..) first, (n) last
    return (sum(lam), lam)


def _count_maps(lam: Partition, mu: Partition) -> int:
    """Maps from the parts of ``lam`` to the parts of ``mu`` with fibre sums equal to ``mu``."""

    @lru_cache(maxsize=None)
    def go(i: int, remaining: tuple[int, ...]) -> int:
        if i == len(lam):
            return 1 if not any(remaining) else 0
        total = 0
        for j, r in enumerate(remaining):
            if r >= lam[i]:
                total += go(i + 1, remaining[:j] + (r - lam[i],) + remaining[j + 1 :])
        return total

    return go(0, mu)


@lru_cache(maxsize=None)
def power_to_monomial_matrix(n: int) -> tuple[tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    """Basis order and the integer matrix ``L`` with ``p_λ = Σ_μ L[λ][μ] m_μ``."""
    basis = tuple(partitions(n))
    return basis, tuple(tuple(_count_maps(lam, mu) for mu in basis) for lam in basis)


def _invert(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    size = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@lru_cache(maxsize=None)
def monomial_to_power_matrix(n: int) -> tuple[tuple[Partition, ...], tuple[tuple[Fraction, ...], ...]]:
    """Inverse transition: ``m_μ = Σ_λ M[μ][λ] p_λ``."""
    basis, L = power_to_monomial_matrix(n)
    # L is indexed [p-row][m-col]; the inverse is indexed [m-row][p-col]
    return basis, tuple(tuple(row) for row in _invert(L))


def monomial_in_power_sums(a: Sequence[int]) -> SymFunc:
    """The monomial symmetric function ``m_a`` written in power sums.

    ``m_a`` is the sum of the distinct monomials with exponent multiset ``a``.
    """
    a = partition(a)
    n = sum(a)
    if n > MONOMIAL_WEIGHT_CAP:
        raise ValueError(f"weight {n} exceeds cap {MONOMIAL_WEIGHT_CAP}")
    basis, M = monomial_to_power_matrix(n)
    row = M[basis.index(a)]
    return SymFunc({lam: c for lam, c in zip(basis, row) if c})


def chromatic(h) -> SymFunc:
    """Image under the morphism to power sums: ``Σ_{a ⊢ n} ξ^(a)(h) m_a``."""
    h = HopfElement.coerce(h)
    try:
        n = h.grading()
    except HopfError as exc:
        raise HopfError(f"{exc}; split into homogeneous parts first") from None
    out = SymFunc()
    for a in partitions(n):
        c = xi_composition(a, h)
        if c:
            out = out + monomial_in_power_sums(a) * c
    return out


def specialize_all(s: SymFunc, t=None):
    """Substitute ``p_k = t`` for every ``k``.

    With ``t`` omitted the result is the polynomial in ``t`` as a tuple of
    :class:`XPoly` coefficients, lowest power first; otherwise its value.
    """
    top = max((len(lam) for lam in s.terms), default=-1)
    coeffs = [ZERO] * (top + 1)
    for lam, c in s.terms.items():
        coeffs[len(lam)] = coeffs[len(lam)] + c
    if t is None:
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        return tuple(coeffs)
    t = Fraction(t)
    value = ZERO
    for c in reversed(coeffs):
        value = value * t + c
    return value


def format_t_poly(coeffs: Sequence[XPoly], var: str = "t") -> str:
    """Text form of a polynomial in ``t`` whose coefficients may involve ``x``."""
    if all(c.is_constant() for c in coeffs):
        return format_poly([c.coeff(0) for c in coeffs], var)
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if not c:
            continue
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        if not mono:
            parts.append(f"({c})")
        else:
            parts.append(f"({c})*{mono}")
    return "+".join(parts) if parts else "0"


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, ZERO) + ca * cb
    return {e: c for e, c in out.items() if c}


def evaluate_truncated(s: SymFunc, N: int) -> dict[tuple[int, ...], XPoly]:
    """Expand ``s`` in the variables ``c_1..c_N`` (``p_k = c_1^k + ... + c_N^k``).

    Returns a map from exponent vectors to coefficients.
    """
    zero = (0,) * N
    power_sum = {}

    def p(k):
        if k not in power_sum:
            power_sum[k] = {tuple(k if j == i else 0 for j in range(N)): ONE for i in range(N)}
        return power_sum[k]

    out: dict = {}
    for lam, c in s.terms.items():
        term = {zero: c}
        for k in lam:
            term = _poly_mul(term, p(k))
        for e, v in term.items():
            out[e] = out.get(e, ZERO) + v
    return {e: v for e, v in out.items() if v}
