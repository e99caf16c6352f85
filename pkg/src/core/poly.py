"""
Sparse multivariate polynomials over a prime field F_p.

Terms are kept in a dict from exponent tuples to least nonnegative residues;
a zero coefficient is never stored, so the zero polynomial is the empty dict.
Monomials are ordered graded-lexicographically (total degree first, then the
exponent tuple compared lexicographically); this order fixes leading terms,
printing and the canonical form of fractions.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from sympy.polys.domains import GF
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from core.errors import ArityMismatch, NotAPthPower, NotDivisible, VariableIndexError, ZeroInput
from core.field import FpScalar, PrimeChar, char_of

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]  # ExponentVector: one nonnegative exponent per variable


def grlex_key(m: Monomial) -> Tuple[int, Monomial]:
    return (sum(m), m)


def variable_names(arity: int) -> List[str]:
    if arity == 1:
        return ["x"]
    if arity == 2:
        return ["x", "y"]
    return [f"x{i + 1}" for i in range(arity)]


def _format_monomial(m: Monomial, names: List[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Poly:
    """
    A polynomial in ``arity`` variables with coefficients in F_p.

    Instances are immutable; every operation returns a new polynomial.
    Variable indices are 0-based.
    """

    __slots__ = ("_terms", "arity", "char", "_hash")

    def __init__(self, terms: Mapping[Monomial, Union[int, FpScalar]], arity: int, char: Union[PrimeChar, int]):
        char = char if isinstance(char, PrimeChar) else char_of(char)
        if arity < 1:
            raise ArityMismatch(f"arity must be >= 1, got {arity}")
        p = char.p
        clean: Dict[Monomial, int] = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != arity or any(e < 0 for e in m):
                raise ArityMismatch(f"bad exponent vector {m} for arity {arity}")
            if isinstance(c, FpScalar):
                char.check(c.char)
                c = c.value
            c %= p
            if c:
                clean[m] = c
        self._terms = clean
        self.arity = arity
        self.char = char
        self._hash = None

    @classmethod
    def _make(cls, terms: Dict[Monomial, int], arity: int, char: PrimeChar) -> "Poly":
        # terms must already be reduced and free of zeros
        obj = object.__new__(cls)
        obj._terms = terms
        obj.arity = arity
        obj.char = char
        obj._hash = None
        return obj

    # --- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, arity: int, char: Union[PrimeChar, int]) -> "Poly":
        return cls({}, arity, char)

    @classmethod
    def constant(cls, c: int, arity: int, char: Union[PrimeChar, int]) -> "Poly":
        return cls({(0,) * arity: c}, arity, char)

    @classmethod
    def one(cls, arity: int, char: Union[PrimeChar, int]) -> "Poly":
        return cls.constant(1, arity, char)

    @classmethod
    def monomial(cls, exps: Iterable[int], arity: int, char: Union[PrimeChar, int], coeff: int = 1) -> "Poly":
        return cls({tuple(exps): coeff}, arity, char)

    @classmethod
    def var(cls, i: int, arity: int, char: Union[PrimeChar, int]) -> "Poly":
        if not 0 <= i < arity:
            raise VariableIndexError(f"variable index {i} out of range for arity {arity}")
        exps = [0] * arity
        exps[i] = 1
        return cls.monomial(exps, arity, char)

    # --- inspection -----------------------------------------------------------

    @property
    def p(self) -> int:
        return self.char.p

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms.items())

    def coefficient(self, m: Iterable[int]) -> FpScalar:
        return FpScalar(self._terms.get(tuple(m), 0), self.char)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    @property
    def is_one(self) -> bool:
        return len(self._terms) == 1 and self._terms.get((0,) * self.arity) == 1

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def low_degree(self) -> Optional[int]:
        """Smallest total degree of a nonzero term, None for zero."""
        return min((sum(m) for m in self._terms), default=None)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self._terms), default=-1)

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ZeroInput("zero polynomial has no leading term")
        return max(self._terms, key=grlex_key)

    def leading_coeff(self) -> int:
        return self._terms[self.leading_monomial()] if self._terms else 0

    # --- arithmetic -----------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
        self.char.check(other.char)

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, FpScalar):
            self.char.check(other.char)
            return Poly.constant(other.value, self.arity, self.char)
        if isinstance(other, int):
            return Poly.constant(other, self.arity, self.char)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.char.p
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = (out.get(m, 0) + c) % p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._make(out, self.arity, self.char)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        p = self.char.p
        return Poly._make({m: p - c for m, c in self._terms.items()}, self.arity, self.char)

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
        if not self._terms or not other._terms:
            return Poly._make({}, self.arity, self.char)
        p = self.char.p
        acc: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                acc[m] = acc.get(m, 0) + c1 * c2
        out = {}
        for m, c in acc.items():
            c %= p
            if c:
                out[m] = c
        return Poly._make(out, self.arity, self.char)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial; use RatFn")
        result = Poly.one(self.arity, self.char)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: int) -> "Poly":
        p = self.char.p
        c %= p
        if c == 0:
            return Poly._make({}, self.arity, self.char)
        return Poly._make({m: v * c % p for m, v in self._terms.items()}, self.arity, self.char)

    def mul_monomial(self, exps: Iterable[int], c: int = 1) -> "Poly":
        p = self.char.p
        c %= p
        if c == 0:
            return Poly._make({}, self.arity, self.char)
        exps = tuple(exps)
        return Poly._make(
            {tuple(a + b for a, b in zip(m, exps)): v * c % p for m, v in self._terms.items()},
            self.arity,
            self.char,
        )

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        return self.scale(self.char.inverse(self.leading_coeff()))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.constant(other, self.arity, self.char)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.arity == other.arity and self.char.p == other.char.p and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.arity, self.char.p, frozenset(self._terms.items())))
        return self._hash

    # --- calculus and Frobenius -----------------------------------------------

    def derivative(self, i: int) -> "Poly":
        if not 0 <= i < self.arity:
            raise VariableIndexError(f"variable index {i} out of range for arity {self.arity}")
        p = self.char.p
        out: Dict[Monomial, int] = {}
        for m, c in self._terms.items():
            e = m[i]
            if e % p == 0:
                continue
            out[m[:i] + (e - 1,) + m[i + 1:]] = c * e % p
        return Poly._make(out, self.arity, self.char)

    def frobenius(self) -> "Poly":
        """The p-th power, computed by scaling exponents (F_p is fixed by Frobenius)."""
        p = self.char.p
        return Poly._make(
            {tuple(e * p for e in m): c for m, c in self._terms.items()}, self.arity, self.char
        )

    def frobenius_root(self) -> "Poly":
        p = self.char.p
        out = {}
        for m, c in self._terms.items():
            if any(e % p for e in m):
                raise NotAPthPower(f"{self} is not a p-th power")
            out[tuple(e // p for e in m)] = c
        return Poly._make(out, self.arity, self.char)

    # --- division -------------------------------------------------------------

    def to_ring(self) -> PolyElement:
        """The same polynomial as an element of sympy's F_p[x_1, ..., x_n]."""
        return sympy_ring(self.arity, self.char.p).from_dict(self._terms)

    @classmethod
    def from_ring(cls, f: PolyElement, char: Union[PrimeChar, int]) -> "Poly":
        return cls({m: int(c) for m, c in f.items()}, f.ring.ngens, char)

    def exquo(self, other: "Poly") -> "Poly":
        """Exact quotient ``self / other``; raises NotDivisible on a remainder."""
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        try:
            q = self.to_ring().exquo(other.to_ring())
        except ExactQuotientFailed:
            raise NotDivisible(f"{other} does not divide {self}") from None
        return Poly.from_ring(q, self.char)

    def divides(self, other: "Poly") -> bool:
        try:
            other.exquo(self)
        except NotDivisible:
            return False
        return True

    # --- text -----------------------------------------------------------------

    def to_text(self, names: Optional[List[str]] = None) -> str:
        if not self._terms:
            return "0"
        names = names or variable_names(self.arity)
        parts = []
        for m, c in self.sorted_terms():
            mono = _format_monomial(m, names)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r}, p={self.char.p})"


# --- gcd ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def sympy_ring(arity: int, p: int) -> PolyRing:
    return PolyRing(",".join(variable_names(arity)), GF(p, symmetric=False), grlex)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (leading coefficient 1 in grlex order)."""
    a._check(b)
    if a.is_zero and b.is_zero:
        raise ZeroInput("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.is_constant or b.is_constant:
        return Poly.one(a.arity, a.char)
    return Poly.from_ring(a.to_ring().gcd(b.to_ring()), a.char).monic()


def poly_cofactors(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """(g, a/g, b/g) with g = poly_gcd(a, b); a and b must both be nonzero."""
    a._check(b)
    if a.is_zero or b.is_zero:
        raise ZeroInput("cofactors need two nonzero polynomials")
    h, cff, cfg = a.to_ring().cofactors(b.to_ring())
    g = Poly.from_ring(h, a.char)
    lc = g.leading_coeff()
    # a = h * cff = (h / lc) * (lc * cff)
    return g.monic(), Poly.from_ring(cff, a.char).scale(lc), Poly.from_ring(cfg, a.char).scale(lc)


def poly_arith(a: Poly, b: Poly, which: str) -> Poly:
    ops = {"add": Poly.__add__, "sub": Poly.__sub__, "mul": Poly.__mul__}
    if which not in ops:
        raise ValueError(f"unknown operation {which!r}")
    a._check(b)
    return ops[which](a, b)


def poly_lcm(a: Poly, b: Poly) -> Poly:
    """Monic least common multiple of two nonzero polynomials."""
    _, _, b_rest = poly_cofactors(a, b)
    return (a * b_rest).monic()
