"""Univariate polynomials in a formal ``x`` with exact rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational


def _trim(coeffs) -> tuple[Fraction, ...]:
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class XPoly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("XPoly is immutable")

    @classmethod
    def const(cls, c) -> XPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> XPoly:
        return cls([0] * degree + [c])

    @staticmethod
    def coerce(value) -> XPoly:
        if isinstance(value, XPoly):
            return value
        if isinstance(value, (int, Fraction, Rational)):
            return XPoly.const(value)
        raise TypeError(f"cannot convert {type(value).__name__} to XPoly")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        try:
            other = XPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self.coeffs)

    def __add__(self, other):
        try:
            other = XPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return XPoly([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    __radd__ = __add__

    def __neg__(self):
        return XPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        try:
            other = XPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return XPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = XPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, value):
        """Evaluate at ``value`` (Horner)."""
        acc = Fraction(0) if not isinstance(value, XPoly) else ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __str__(self):
        return format_poly(self.coeffs, "x")

    def __repr__(self):
        return f"XPoly({str(self)!r})"


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(coeffs, var: str) -> str:
    """Canonical text form, highest degree first: ``3/2*x^2-1``, ``-x``, ``0``."""
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[d])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if d == 0:
            body = _fmt_coeff(a)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += sign + body
    return text


_TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)(?:\*(x)(?:\^(\d+))?)?|(x)(?:\^(\d+))?)")


def parse_poly(text: str, var: str = "x") -> XPoly:
    """Inverse of :func:`format_poly`; tolerates whitespace."""
    if re.search(r"[\d/]\s+[\d/]", text):
        raise ValueError(f"cannot parse polynomial {text!r}")
    s = re.sub(r"\s+", "", text)
    if var != "x":
        s = s.replace(var, "x")
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    out: dict[int, Fraction] = {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise ValueError(f"cannot parse polynomial {text!r}")
        sign, num, x1, e1, x2, e2 = m.groups()
        if num is not None:
            c = Fraction(num)
            d = 0 if x1 is None else int(e1 or 1)
        else:
            c = Fraction(1)
            d = int(e2 or 1)
        if sign == "-":
            c = -c
        out[d] = out.get(d, Fraction(0)) + c
        pos = m.end()
    top = max(out)
    return XPoly([out.get(i, 0) for i in range(top + 1)])


ZERO = XPoly()
ONE = XPoly.const(1)
X = XPoly.monomial(1)
