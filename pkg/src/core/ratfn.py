"""
Elements of K = F_p(x_1, ..., x_n) as canonical fractions.

A RatFn is always stored reduced: gcd(num, den) = 1 and den has leading
coefficient 1 in grlex order. Equality is therefore componentwise.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Union

from core.errors import ArityMismatch, VariableIndexError, ZeroDenominator
from core.field import FpScalar, PrimeChar, char_of
from core.poly import Poly, poly_cofactors

logger = logging.getLogger(__name__)


def ratfn_normalize(num: Poly, den: Poly) -> "RatFn":
    """Reduce ``num/den`` to canonical form; idempotent on canonical input."""
    num._check(den)
    if den.is_zero:
        raise ZeroDenominator("zero denominator")
    if num.is_zero:
        return RatFn._make(num, Poly.one(num.arity, num.char))
    if not den.is_constant:
        _, num, den = poly_cofactors(num, den)
    lc = den.leading_coeff()
    if lc != 1:
        inv = den.char.inverse(lc)
        num = num.scale(inv)
        den = den.scale(inv)
    return RatFn._make(num, den)


class RatFn:
    """A canonical fraction num/den of polynomials over F_p."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Optional[Poly] = None):
        if den is None:
            den = Poly.one(num.arity, num.char)
        reduced = ratfn_normalize(num, den)
        self.num = reduced.num
        self.den = reduced.den

    @classmethod
    def _make(cls, num: Poly, den: Poly) -> "RatFn":
        # caller guarantees canonical form
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    # --- constructors ---------------------------------------------------------

    @classmethod
    def from_poly(cls, num: Poly) -> "RatFn":
        return cls._make(num, Poly.one(num.arity, num.char))

    @classmethod
    def zero(cls, arity: int, char: Union[PrimeChar, int]) -> "RatFn":
        return cls.from_poly(Poly.zero(arity, char))

    @classmethod
    def one(cls, arity: int, char: Union[PrimeChar, int]) -> "RatFn":
        return cls.from_poly(Poly.one(arity, char))

    @classmethod
    def constant(cls, c: int, arity: int, char: Union[PrimeChar, int]) -> "RatFn":
        return cls.from_poly(Poly.constant(c, arity, char))

    @classmethod
    def var(cls, i: int, arity: int, char: Union[PrimeChar, int]) -> "RatFn":
        return cls.from_poly(Poly.var(i, arity, char))

    @classmethod
    def monomial(cls, exps, arity: int, char: Union[PrimeChar, int], coeff: int = 1) -> "RatFn":
        """A Laurent monomial; negative exponents go to the denominator."""
        exps = tuple(exps)
        up = tuple(max(e, 0) for e in exps)
        down = tuple(max(-e, 0) for e in exps)
        char = char if isinstance(char, PrimeChar) else char_of(char)
        if coeff % char.p == 0:
            return cls.zero(arity, char)
        return cls._make(Poly.monomial(up, arity, char, coeff), Poly.monomial(down, arity, char))

    # --- inspection -----------------------------------------------------------

    @property
    def arity(self) -> int:
        return self.num.arity

    @property
    def char(self) -> PrimeChar:
        return self.num.char

    @property
    def p(self) -> int:
        return self.num.char.p

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.is_one and self.den.is_one

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_one

    @property
    def size(self) -> int:
        """Total number of monomials in numerator and denominator."""
        return len(self.num) + len(self.den)

    # --- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFn):
            if other.arity != self.arity:
                raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
            self.char.check(other.char)
            return other
        if isinstance(other, Poly):
            self.num._check(other)
            return RatFn.from_poly(other)
        if isinstance(other, FpScalar):
            self.char.check(other.char)
            return RatFn.constant(other.value, self.arity, self.char)
        if isinstance(other, int):
            return RatFn.constant(other, self.arity, self.char)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            if d1.is_one:
                return RatFn.from_poly(self.num + other.num)
            return ratfn_normalize(self.num + other.num, d1)
        if d1.is_one:
            # a + n/d = (a*d + n)/d is already reduced
            return RatFn._make(self.num * d2 + other.num, d2)
        if d2.is_one:
            return RatFn._make(self.num + other.num * d1, d1)
        g, e1, e2 = poly_cofactors(d1, d2)
        if g.is_one:
            num = self.num * d2 + other.num * d1
            if num.is_zero:
                return RatFn.zero(self.arity, self.char)
            return RatFn._make(num, d1 * d2)
        return ratfn_normalize(self.num * e2 + other.num * e1, d1 * e2)

    __radd__ = __add__

    def __neg__(self) -> "RatFn":
        return RatFn._make(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return RatFn.zero(self.arity, self.char)
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d1.is_one and d2.is_one:
            return RatFn.from_poly(n1 * n2)
        # cross-cancel; quotients of monic polynomials by monic gcds stay monic
        if not d2.is_one:
            _, n1, d2 = poly_cofactors(n1, d2)
        if not d1.is_one:
            _, n2, d1 = poly_cofactors(n2, d1)
        return RatFn._make(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RatFn":
        if self.is_zero:
            raise ZeroDenominator("inverse of zero")
        lc = self.num.leading_coeff()
        if lc == 1:
            return RatFn._make(self.den, self.num)
        inv = self.char.inverse(lc)
        return RatFn._make(self.den.scale(inv), self.num.scale(inv))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> "RatFn":
        if k < 0:
            return self.inverse() ** (-k)
        # powers of coprime, monic parts stay coprime and monic
        return RatFn._make(self.num ** k, self.den ** k)

    def frobenius(self) -> "RatFn":
        return RatFn._make(self.num.frobenius(), self.den.frobenius())

    def derivative(self, i: int) -> "RatFn":
        if not 0 <= i < self.arity:
            raise VariableIndexError(f"variable index {i} out of range for arity {self.arity}")
        dn = self.num.derivative(i)
        if self.den.is_one:
            return RatFn.from_poly(dn)
        dd = self.den.derivative(i)
        if dd.is_zero:
            return ratfn_normalize(dn, self.den)
        return ratfn_normalize(dn * self.den - self.num * dd, self.den * self.den)

    # --- comparison and text --------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Poly)):
            other = self._coerce(other)
        if not isinstance(other, RatFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def to_text(self, names: Optional[List[str]] = None) -> str:
        if self.den.is_one:
            return self.num.to_text(names)
        return f"({self.num.to_text(names)})/({self.den.to_text(names)})"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RatFn({self.to_text()!r}, p={self.p})"


def partial_derivative(b: Union[Poly, RatFn], i: int) -> Union[Poly, RatFn]:
    """Formal partial derivative in variable ``i`` (0-based)."""
    return b.derivative(i)


def iterated_partial(b: Union[Poly, RatFn], i: int, k: int) -> Union[Poly, RatFn]:
    """``k``-fold partial derivative in variable ``i``; the slow path that fast_iterated_partial must match."""
    if k < 0:
        raise ValueError("derivative count must be nonnegative")
    if not 0 <= i < b.arity:
        raise VariableIndexError(f"variable index {i} out of range for arity {b.arity}")
    for _ in range(k):
        if b.is_zero:
            break
        b = b.derivative(i)
    return b
