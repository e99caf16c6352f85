"""
The Cartier operator on closed 1-forms u dx + v dy over F_p(x, y).

On a closed form, d_x^{p-1}(u) and d_y^{p-1}(v) are killed by both partials
and so lie in K^p; the operator takes their p-th roots:

    C(u dx + v dy) = -(d_x^{p-1} u)^{1/p} dx - (d_y^{p-1} v)^{1/p} dy.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

from core.errors import ArityMismatch, InvariantViolation, NotAPthPower, NotClosed
from core.field import PrimeChar
from core.pdecomp import fast_iterated_partial, pth_root
from core.ratfn import RatFn
from derivations.derivation import Derivation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OneForm:
    u: RatFn
    v: RatFn

    def __post_init__(self):
        for c in (self.u, self.v):
            if c.arity != 2:
                raise ArityMismatch(f"1-forms live over F_p(x, y); got arity {c.arity}")
        self.u.char.check(self.v.char)

    @classmethod
    def zero(cls, char: Union[PrimeChar, int]) -> "OneForm":
        return cls(RatFn.zero(2, char), RatFn.zero(2, char))

    @property
    def char(self) -> PrimeChar:
        return self.u.char

    @property
    def is_zero(self) -> bool:
        return self.u.is_zero and self.v.is_zero

    def scale(self, c: RatFn) -> "OneForm":
        return OneForm(c * self.u, c * self.v)

    def __add__(self, other: "OneForm") -> "OneForm":
        if not isinstance(other, OneForm):
            return NotImplemented
        return OneForm(self.u + other.u, self.v + other.v)

    def __neg__(self) -> "OneForm":
        return OneForm(-self.u, -self.v)

    def __sub__(self, other: "OneForm") -> "OneForm":
        if not isinstance(other, OneForm):
            return NotImplemented
        return self + (-other)

    def __str__(self) -> str:
        return f"({self.u})*dx + ({self.v})*dy"


def exact_form(h: RatFn) -> OneForm:
    """dh."""
    return OneForm(h.derivative(0), h.derivative(1))


def multiplier_form(f: RatFn, g: RatFn, a: RatFn) -> OneForm:
    """ag dx - af dy, closed exactly when (af, ag) is divergence-free."""
    return OneForm(a * g, -(a * f))


def is_closed(w: OneForm) -> bool:
    return w.v.derivative(0) == w.u.derivative(1)


def cartier(w: OneForm) -> OneForm:
    if not is_closed(w):
        raise NotClosed(f"{w} is not closed")
    try:
        u = -pth_root(fast_iterated_partial(w.u, 0))
        v = -pth_root(fast_iterated_partial(w.v, 1))
    except NotAPthPower as exc:
        raise InvariantViolation(f"Cartier of the closed form {w}: {exc}") from exc
    logger.debug("cartier: %s -> (%s, %s)", w, u, v)
    return OneForm(u, v)


def pair(w: OneForm, D: Derivation) -> RatFn:
    """w(D) = u D(x) + v D(y)."""
    if D.arity != 2:
        raise ArityMismatch(f"pairing a 1-form in two variables with a derivation of arity {D.arity}")
    w.char.check(D.char)
    f, g = D.coeffs
    return w.u * f + w.v * g
