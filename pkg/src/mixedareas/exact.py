"""Exact scalar arithmetic: rationals and quadratic surds.

Rationals are plain :class:`fractions.Fraction`.  ``Surd`` represents finite
sums ``sum_i c_i * sqrt(r_i)`` with rational ``c_i`` and positive rational
radicands ``r_i``.  All operations are exact; comparisons are decided by an
exact sign computation (term merging plus integer-square-root interval
refinement), never by floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Union

Rat = Fraction
Scalar = Union[int, Fraction, "Surd"]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def _extract_square(n: int) -> tuple[int, int]:
    """Return (s, m) with n = s^2 * m, pulling out small prime squares.

    m is squarefree whenever all prime-square factors of n involve primes in
    the small-prime table or the leftover is a perfect square; equality and
    merging below never rely on m being fully squarefree.
    """
    s = 1
    for p in _SMALL_PRIMES:
        p2 = p * p
        while n % p2 == 0:
            n //= p2
            s *= p
    if _is_square(n):
        s *= isqrt(n)
        n = 1
    return s, n


def _reduce_radicand(r: Fraction) -> tuple[Fraction, Fraction]:
    """Rewrite sqrt(r) as c*sqrt(m) with m a positive integer: returns (c, m)."""
    if r < 0:
        raise ValueError("negative radicand")
    if r == 0:
        return Fraction(0), Fraction(1)
    n = r.numerator * r.denominator
    s, m = _extract_square(n)
    return Fraction(s, r.denominator), Fraction(m)


class Surd:
    """An exact real number of the form ``sum_i c_i * sqrt(r_i)``.

    Stored as a tuple of (radicand, coefficient) pairs with nonzero
    coefficients and pairwise non-square radicand ratios; the rational part
    uses radicand 1.  Closed under +, -, *, and division by values with at
    most two terms.
    """

    __slots__ = ("_terms",)

    def __init__(self, value: int | Fraction = 0):
        q = as_fraction(value)
        self._terms: tuple[tuple[Fraction, Fraction], ...] = (
            ((Fraction(1), q),) if q else ()
        )

    @staticmethod
    def _from_terms(terms: Iterable[tuple[Fraction, Fraction]]) -> "Surd":
        merged: list[tuple[Fraction, Fraction]] = []
        for rad, coeff in terms:
            if not coeff:
                continue
            for k, (r0, c0) in enumerate(merged):
                ratio = rad / r0
                num, den = ratio.numerator, ratio.denominator
                if _is_square(num) and _is_square(den):
                    # sqrt(rad) = sqrt(ratio)*sqrt(r0)
                    merged[k] = (r0, c0 + coeff * Fraction(isqrt(num), isqrt(den)))
                    break
            else:
                merged.append((rad, coeff))
        out = Surd.__new__(Surd)
        out._terms = tuple(sorted((r, c) for r, c in merged if c))
        return out

    @staticmethod
    def sqrt(value) -> "Surd":
        q = as_fraction(value) if not isinstance(value, Surd) else None
        if q is None:
            v = value  # type: ignore[assignment]
            if isinstance(v, Surd):
                if v.is_rational():
                    q = v.to_fraction()
                else:
                    raise ValueError("sqrt of an irrational surd is not supported")
        if q < 0:
            raise ValueError("sqrt of a negative value")
        c, m = _reduce_radicand(q)
        return Surd._from_terms([(m, c)])

    # -- queries -------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(rad == 1 for rad, _ in self._terms)

    def to_fraction(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if self.is_rational():
            return self._terms[0][1]
        raise ValueError(f"{self!r} is irrational")

    def as_single_term(self) -> tuple[Fraction, Fraction]:
        """Return (coefficient, radicand) for a value c*sqrt(r)."""
        if not self._terms:
            return Fraction(0), Fraction(1)
        if len(self._terms) == 1:
            rad, coeff = self._terms[0]
            return coeff, rad
        raise ValueError(f"{self!r} is not a single-term surd")

    def sign(self) -> int:
        if not self._terms:
            return 0
        signs = {1 if c > 0 else -1 for _, c in self._terms}
        if len(signs) == 1:
            return signs.pop()
        # Mixed signs: refine rational enclosures of each sqrt until the
        # interval for the sum excludes zero; terminates because the value
        # is nonzero (radicand classes are linearly independent over Q).
        bits = 16
        while True:
            lo = Fraction(0)
            hi = Fraction(0)
            scale = 1 << bits
            for rad, coeff in self._terms:
                n = rad.numerator * rad.denominator
                root_lo = isqrt(n * scale * scale)
                enc_lo = Fraction(root_lo, scale * rad.denominator)
                enc_hi = Fraction(root_lo + 1, scale * rad.denominator)
                if coeff > 0:
                    lo += coeff * enc_lo
                    hi += coeff * enc_hi
                else:
                    lo += coeff * enc_hi
                    hi += coeff * enc_lo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Surd":
        if isinstance(x, Surd):
            return x
        if isinstance(x, (int, Fraction)):
            return Surd(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = Surd._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Surd._from_terms(self._terms + o._terms)

    __radd__ = __add__

    def __neg__(self):
        return Surd._from_terms((r, -c) for r, c in self._terms)

    def __sub__(self, other):
        o = Surd._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = Surd._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prods = []
        for r1, c1 in self._terms:
            for r2, c2 in o._terms:
                cc, m = _reduce_radicand(r1 * r2)
                prods.append((m, c1 * c2 * cc))
        return Surd._from_terms(prods)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Surd._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("surd division by zero")
        if len(o._terms) == 1:
            rad, coeff = o._terms[0]
            # 1/(c*sqrt(r)) = sqrt(r)/(c*r)
            inv = Surd._from_terms([(rad, Fraction(1) / (coeff * rad))])
            return self * inv
        if len(o._terms) == 2:
            (r1, c1), (r2, c2) = o._terms
            conj = Surd._from_terms([(r1, c1), (r2, -c2)])
            denom = c1 * c1 * r1 - c2 * c2 * r2  # (a+b)(a-b), rational
            if denom == 0:
                raise ZeroDivisionError("surd division by zero")
            return self * conj * Fraction(1, 1) / Fraction(denom)
        raise ValueError("division by surds with more than two terms is not supported")

    def __rtruediv__(self, other):
        o = Surd._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        out = Surd(1)
        for _ in range(exponent):
            out = out * self
        return out

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other):
        o = Surd._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).is_zero()

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self):
        return not self.is_zero()

    def __float__(self):
        return sum(float(c) * float(r) ** 0.5 for r, c in self._terms)

    def __repr__(self):
        if not self._terms:
            return "Surd(0)"
        parts = []
        for rad, coeff in self._terms:
            parts.append(str(coeff) if rad == 1 else f"{coeff}*sqrt({rad})")
        return "Surd(" + " + ".join(parts) + ")"


def surd_sign(x: Scalar) -> int:
    if isinstance(x, Surd):
        return x.sign()
    q = as_fraction(x)
    return (q > 0) - (q < 0)
