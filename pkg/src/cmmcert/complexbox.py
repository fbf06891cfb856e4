"""Complex enclosures as rectangles of real intervals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import interval as iv
from .interval import DEFAULT_PREC, Interval


def _iv(x, prec: int) -> Interval:
    if isinstance(x, Interval):
        return x
    if isinstance(x, float):
        x = Fraction(x)
    return Interval(x, prec=prec)


@dataclass(frozen=True)
class ComplexBox:
    re: Interval
    im: Interval

    @classmethod
    def of(cls, z, prec: int = DEFAULT_PREC) -> ComplexBox:
        """Build from a ComplexBox, a (re, im) pair, a complex, or a real."""
        if isinstance(z, ComplexBox):
            return z
        if isinstance(z, tuple):
            return cls(_iv(z[0], prec), _iv(z[1], prec))
        if isinstance(z, complex):
            return cls(_iv(z.real, prec), _iv(z.imag, prec))
        return cls(_iv(z, prec), Interval(0, prec=prec))

    @property
    def prec(self) -> int:
        return max(self.re.prec, self.im.prec)

    def _coerce(self, other) -> ComplexBox:
        return ComplexBox.of(other, self.prec)

    def __add__(self, other) -> ComplexBox:
        o = self._coerce(other)
        return ComplexBox(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> ComplexBox:
        return ComplexBox(-self.re, -self.im)

    def __sub__(self, other) -> ComplexBox:
        o = self._coerce(other)
        return ComplexBox(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> ComplexBox:
        return self._coerce(other) - self

    def __mul__(self, other) -> ComplexBox:
        if isinstance(other, (Interval, int, Fraction)):
            return ComplexBox(self.re * other, self.im * other)
        o = self._coerce(other)
        return ComplexBox(self.re * o.re - self.im * o.im,
                          self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm2(self) -> Interval:
        return self.re.sqr() + self.im.sqr()

    def conj(self) -> ComplexBox:
        return ComplexBox(self.re, -self.im)

    def __truediv__(self, other) -> ComplexBox:
        if isinstance(other, (Interval, int, Fraction)):
            return ComplexBox(self.re / other, self.im / other)
        o = self._coerce(other)
        d = o.norm2()
        n = self * o.conj()
        return ComplexBox(n.re / d, n.im / d)

    def __rtruediv__(self, other) -> ComplexBox:
        return self._coerce(other) / self

    def __pow__(self, n: int) -> ComplexBox:
        if n < 0:
            return 1 / (self ** -n)
        out = ComplexBox.of(1, self.prec)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def abs(self) -> Interval:
        return iv.sqrt(self.norm2())

    def contains(self, z) -> bool:
        z = complex(z)
        return self.re.contains(Fraction(z.real)) and self.im.contains(Fraction(z.imag))

    def __str__(self) -> str:
        return f"({self.re}) + ({self.im})i"


def cexp(z: ComplexBox) -> ComplexBox:
    r = iv.exp(z.re)
    return ComplexBox(r * iv.cos(z.im), r * iv.sin(z.im))


def clog(z: ComplexBox) -> ComplexBox:
    """Principal logarithm for boxes in the open right half-plane."""
    if not z.re.is_positive():
        raise ValueError("clog needs Re z > 0")
    return ComplexBox(iv.log(z.norm2()).scale2(-1), iv.atan(z.im / z.re))
