"""
Derivations sum_i f_i d/dx_i on K and the brute-force p-th power.

In characteristic p the p-th iterate of a derivation is again a derivation,
so D^p is determined by its values on the variables and is stored that way.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from core.errors import ArityMismatch
from core.field import PrimeChar
from core.poly import variable_names
from core.ratfn import RatFn

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Derivation:
    coeffs: Tuple[RatFn, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ArityMismatch("a derivation needs at least one coefficient")
        first = coeffs[0]
        for c in coeffs:
            if c.arity != len(coeffs):
                raise ArityMismatch(f"{len(coeffs)} coefficients over a field of arity {c.arity}")
            first.char.check(c.char)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, *coeffs: RatFn) -> "Derivation":
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, arity: int, char: Union[PrimeChar, int]) -> "Derivation":
        return cls(tuple(RatFn.zero(arity, char) for _ in range(arity)))

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    @property
    def char(self) -> PrimeChar:
        return self.coeffs[0].char

    @property
    def p(self) -> int:
        return self.coeffs[0].p

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def apply(self, b: RatFn) -> RatFn:
        if b.arity != self.arity:
            raise ArityMismatch(f"derivation of arity {self.arity} applied to arity {b.arity}")
        self.char.check(b.char)
        total = RatFn.zero(self.arity, self.char)
        for i, f in enumerate(self.coeffs):
            if f.is_zero:
                continue
            d = b.derivative(i)
            if not d.is_zero:
                total = total + f * d
        return total

    __call__ = apply

    def scale(self, c: RatFn) -> "Derivation":
        return Derivation(tuple(c * f for f in self.coeffs))

    def __str__(self) -> str:
        names = variable_names(self.arity)
        return " + ".join(f"({f})*d/d{n}" for f, n in zip(self.coeffs, names))


@dataclass(frozen=True)
class ClosureWitness:
    """An ``a`` with D^p = a D, checked on every variable at construction."""

    a: RatFn
    verified: bool


def brute_power_p(D: Derivation) -> Derivation:
    """D^p by its images D^p(x_i), each from p-fold application of D."""
    images = []
    for i in range(D.arity):
        v = RatFn.var(i, D.arity, D.char)
        for _ in range(D.p):
            if v.is_zero:
                break
            v = D.apply(v)
        images.append(v)
    return Derivation(tuple(images))


def brute_obstruction(D: Derivation) -> RatFn:
    """D(x) D^p(y) - D(y) D^p(x) for a derivation in two variables."""
    if D.arity != 2:
        raise ArityMismatch(f"the two-variable obstruction needs arity 2, got {D.arity}")
    Dp = brute_power_p(D)
    f, g = D.coeffs
    u, v = Dp.coeffs
    return f * v - g * u


def closure_witness(D: Derivation, power: Optional[Derivation] = None) -> Optional[ClosureWitness]:
    """
    The a with D^p = a D, or None when D is not p-closed. The zero derivation
    gets a = 0. ``power`` may carry a precomputed D^p.
    """
    if D.is_zero:
        return ClosureWitness(RatFn.zero(D.arity, D.char), True)
    Dp = power if power is not None else brute_power_p(D)
    pivot = next(i for i, f in enumerate(D.coeffs) if not f.is_zero)
    a = Dp.coeffs[pivot] / D.coeffs[pivot]
    for f, image in zip(D.coeffs, Dp.coeffs):
        if a * f != image:
            logger.debug("closure_witness: D^p is not proportional to D")
            return None
    return ClosureWitness(a, True)


def leibniz_defect(D: Derivation, u: RatFn, v: RatFn) -> RatFn:
    """D(uv) - u D(v) - v D(u); zero for every derivation."""
    return D.apply(u * v) - u * D.apply(v) - v * D.apply(u)
