"""Exact Gaussian-rational scalars: a + b*i with a, b in Q.

Plain rationals are `fractions.Fraction`; this module adds the quadratic
extension by i together with parsing/formatting of the "p/q" wire form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError


def as_fraction(x) -> Fraction:
    """Coerce an int or Fraction to Fraction; reject floats (exactness)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(s) -> Fraction:
    """Parse "p/q" or "p" (also accepts plain ints)."""
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {s!r}") from exc
    raise InputError(f"bad rational value {s!r}")


def format_rational(x: Fraction) -> str:
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, eq=False)
class GaussRational:
    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @staticmethod
    def of(x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        return GaussRational(as_fraction(x), Fraction(0))

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """|z|^2 = re^2 + im^2, exact."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __add__(self, other):
        o = GaussRational.of(other)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        o = GaussRational.of(other)
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussRational.of(other) - self

    def __mul__(self, other):
        o = GaussRational.of(other)
        return GaussRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussRational.of(other)
        n = o.norm_sq()
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRational")
        return self * GaussRational(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        return GaussRational.of(other) / self

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        # Real values hash like their Fraction so mixed-type dict keys behave.
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return format_rational(self.re)
        return f"({format_rational(self.re)}{'+' if self.im >= 0 else '-'}{format_rational(abs(self.im))}i)"


ZERO = GaussRational(Fraction(0), Fraction(0))
ONE = GaussRational(Fraction(1), Fraction(0))
I = GaussRational(Fraction(0), Fraction(1))


def conj(x):
    """Conjugate that also accepts plain rationals."""
    if isinstance(x, GaussRational):
        return x.conjugate()
    return as_fraction(x)


def re_part(x) -> Fraction:
    return x.re if isinstance(x, GaussRational) else as_fraction(x)


def im_part(x) -> Fraction:
    return x.im if isinstance(x, GaussRational) else Fraction(0)
