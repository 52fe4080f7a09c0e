"""Exact univariate polynomial arithmetic and rational generating functions.

Coefficients are Python ints or fractions.Fraction values; every operation
is exact.  Polynomials are immutable, stored dense lowest degree first,
with trailing zeros trimmed so equal polynomials compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def binom(a: int, b: int) -> int:
    """Combinatorial binomial coefficient: 0 whenever b < 0 or b > a or a < 0."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class Polynomial:
    """Immutable dense polynomial with exact int/Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(c: Scalar) -> "Polynomial":
        return Polynomial([c])

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial([0, 1])

    @staticmethod
    def monomial(c: Scalar, d: int) -> "Polynomial":
        if d < 0:
            raise ValueError("degree must be nonnegative")
        return Polynomial([0] * d + [c])

    @staticmethod
    def binomial(a: int, m: int) -> "Polynomial":
        """The polynomial C(x+a, m) = (x+a)(x+a-1)...(x+a-m+1)/m! in x.

        This is the falling-factorial binomial: a genuine degree-m polynomial,
        nonzero in general even where the combinatorial convention gives 0.
        """
        if m < 0:
            raise ValueError("m must be nonnegative")
        p = Polynomial.constant(1)
        for i in range(m):
            p = p * Polynomial([a - i, 1])
        return p * Fraction(1, factorial(m))

    # -- basic protocol ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(isinstance(c, int) for c in self.coeffs)

    def coefficient(self, d: int) -> Scalar:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, v: Scalar) -> Scalar:
        """Exact Horner evaluation; returns an int when the value is integral."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return _norm(Fraction(acc)) if isinstance(acc, Fraction) else acc

    def shift(self, c: Scalar) -> "Polynomial":
        """Compose with a shifted argument: returns p(x + c)."""
        acc = Polynomial()
        xc = Polynomial([c, 1])
        for a in reversed(self.coeffs):
            acc = acc * xc + Polynomial.constant(a)
        return acc

    # -- rendering ---------------------------------------------------------

    def coeff_list(self) -> list[Scalar]:
        """Coefficients lowest degree first (trailing zeros trimmed)."""
        return list(self.coeffs)

    def coeff_text(self) -> str:
        """Space-joined coefficient list, rationals as p/q literals."""
        if self.is_zero:
            return "0"
        return " ".join(str(c) for c in self.coeffs)

    def text(self, var: str = "x") -> str:
        """Human form like '1 + 7x + 18x^2 - 15x^3', ascending degree."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if d == 0:
                body = str(mag)
            else:
                xpart = var if d == 1 else f"{var}^{d}"
                if mag == 1:
                    body = xpart
                elif isinstance(mag, Fraction):
                    body = f"({mag}){xpart}"
                else:
                    body = f"{mag}{xpart}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def backward_difference(p: Polynomial, s: int = 1) -> Polynomial:
    """s-fold backward difference: one step maps p(x) to p(x) - p(x-1)."""
    if s < 0:
        raise ValueError("order must be nonnegative")
    for _ in range(s):
        p = p - p.shift(-1)
    return p


@dataclass(frozen=True)
class RationalGenFun:
    """Generating function numerator(x) / (1-x)^pole_order with exact coefficients."""

    numerator: Polynomial
    pole_order: int

    def __post_init__(self):
        if self.pole_order < 0:
            raise ValueError("pole order must be nonnegative")

    @property
    def is_canonical(self) -> bool:
        """Canonical when the numerator does not vanish at 1 (pole order exact)."""
        return self.numerator.is_zero or self.numerator(1) != 0

    def canonical(self) -> "RationalGenFun":
        """Strip (1-x) factors shared with the denominator."""
        num, r = self.numerator, self.pole_order
        while r > 0 and not num.is_zero and num(1) == 0:
            # synthetic division: num = (1-x) * q with q_i = sum of low coeffs
            cs = num.coeff_list()
            q = []
            acc: Scalar = 0
            for c in cs[:-1]:
                acc += c
                q.append(acc)
            num = Polynomial(q)
            r -= 1
        return RationalGenFun(num, r)

    def series(self, count: int) -> list[Scalar]:
        """First `count` Taylor coefficients at 0, exactly."""
        if count < 0:
            raise ValueError("count must be nonnegative")
        num = self.numerator.coeffs
        r = self.pole_order
        out: list[Scalar] = []
        for d in range(count):
            # 1/(1-x)^r = sum_m C(m+r-1, r-1) x^m  (the constant 1 when r = 0)
            acc: Scalar = 0
            for i, c in enumerate(num):
                if i > d:
                    break
                m = d - i
                acc += c * (binom(m + r - 1, r - 1) if r > 0 else (1 if m == 0 else 0))
            out.append(_norm(Fraction(acc)) if isinstance(acc, Fraction) else acc)
        return out

    def text(self, var: str = "x") -> str:
        return f"numerator={self.numerator.text(var)}\npole_order={self.pole_order}"


def alternating_binomial_sum(n: int, d: int) -> int:
    """sum_{p=0}^{d} (-1)^p C(n,p), which telescopes to (-1)^d C(n-1,d)."""
    return sum((-1) ** p * binom(n, p) for p in range(d + 1))
