"""Exact Gaussian-rational scalars.

Every coefficient in the engine lives in Q(sqrt(-1)): a pair of exact
rationals (re, im).  Diagram coefficients stay rational; the functor
oracle needs the imaginary unit (the odd map on the natural module
scales by sqrt(-1)).  Using one ring everywhere keeps the two oracles
directly comparable.

Rationals are gmpy2.mpq when available (the arithmetic here is the hot
loop of both oracles), with fractions.Fraction as a drop-in fallback.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as RAT
except ImportError:  # pragma: no cover
    RAT = Fraction

_R0 = RAT(0)
_R1 = RAT(1)


class Scalar:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_R0) else RAT(re)
        self.im = im if type(im) is type(_R0) else RAT(im)

    @staticmethod
    def of(x) -> "Scalar":
        """Coerce an int, Fraction or Scalar."""
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)) or type(x) is type(_R0):
            return Scalar(RAT(x), _R0)
        raise TypeError("cannot coerce %r to Scalar" % (x,))

    @staticmethod
    def i() -> "Scalar":
        return Scalar(_R0, _R1)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return Scalar(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return Scalar(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar):
            if not other.im:
                if other.re == 1:
                    return self
                return Scalar(self.re * other.re, self.im * other.re)
            if not self.im:
                return Scalar(self.re * other.re, self.re * other.im)
            return Scalar(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, int):
            if other == 1:
                return self
            if other == -1:
                return Scalar(-self.re, -self.im)
            return Scalar(self.re * other, self.im * other)
        if isinstance(other, Fraction):
            return Scalar(self.re * RAT(other), self.im * RAT(other))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        nrm = self.re * self.re + self.im * self.im
        if not nrm:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(self.re / nrm, -self.im / nrm)

    def __truediv__(self, other):
        return self * Scalar.of(other).inverse()

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_zero(self) -> bool:
        return not self

    def __repr__(self):
        return "Scalar(%s, %s)" % (self.re, self.im)

    def __str__(self):
        if not self.im:
            return _frac_str(self.re)
        if not self.re:
            return "%s i" % _frac_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return "%s %s %s i" % (_frac_str(self.re), sign, _frac_str(abs(self.im)))


def _frac_str(x) -> str:
    return str(x)


ZERO = Scalar()
ONE = Scalar.of(1)
I = Scalar.i()


def rational(p, q=1):
    """Exact rational constructor (the backing type may be gmpy2.mpq)."""
    return RAT(p) / RAT(q)


def scalar_from_strings(re: str, im: str = "0") -> Scalar:
    """Parse the "p/q" wire format used in all JSON output."""
    return Scalar(RAT(Fraction(re)), RAT(Fraction(im)))
