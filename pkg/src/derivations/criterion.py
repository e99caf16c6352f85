"""
The fast p-closedness test for D = f d/dx + g d/dy on K = F_p(x, y).

With a multiplier a making (af, ag) divergence-free,

    a (D(x) D^p(y) - D(y) D^p(x)) = f^p d_x^{p-1}(ag) - g^p d_y^{p-1}(af),

and the right side needs no iteration: each (p-1)-fold partial is a
coefficient extraction on the p-decomposition.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from core.errors import (
    ArityMismatch,
    DivergenceNotZero,
    InvariantViolation,
    NotAPthPower,
    NotCoprime,
    VariableIndexError,
    ZeroInput,
)
from core.pdecomp import fast_iterated_partial, integrate, is_pth_power, p_decompose, pth_root
from core.poly import Poly, poly_gcd
from core.ratfn import RatFn
from derivations.derivation import ClosureWitness, Derivation, closure_witness
from derivations.multiplier import find_multiplier

logger = logging.getLogger(__name__)

AXES = {"x": 0, "y": 1}


@dataclass(frozen=True)
class CriterionReport:
    p: int
    f: RatFn
    g: RatFn
    a: RatFn
    c_f: RatFn
    c_g: RatFn
    obstruction: RatFn
    p_closed: bool
    witness: Optional[ClosureWitness] = None

    @property
    def c_f_root(self) -> RatFn:
        return pth_root(self.c_f)

    @property
    def c_g_root(self) -> RatFn:
        return pth_root(self.c_g)


@dataclass(frozen=True)
class HamiltonianDecomposition:
    """f = d_y(h) + c_f y^(p-1) and g = -d_x(h) + c_g x^(p-1)."""

    h: RatFn
    c_f: RatFn
    c_g: RatFn

    def rebuild(self) -> Tuple[RatFn, RatFn]:
        return from_decomposition(self.h, self.c_f, self.c_g)


def _require_plane(*elems: RatFn) -> None:
    first = elems[0]
    for b in elems:
        if b.arity != 2:
            raise ArityMismatch(f"expected an element of F_p(x, y), got arity {b.arity}")
        first.char.check(b.char)


def _axis(axis: Union[str, int]) -> int:
    if isinstance(axis, str):
        try:
            return AXES[axis]
        except KeyError:
            raise VariableIndexError(f"unknown axis {axis!r}; use 'x' or 'y'") from None
    if axis not in (0, 1):
        raise VariableIndexError(f"axis {axis} out of range for two variables")
    return axis


def check_divergence_free(F: RatFn, G: RatFn) -> bool:
    _require_plane(F, G)
    return (F.derivative(0) + G.derivative(1)).is_zero


def _require_divergence_free(F: RatFn, G: RatFn) -> None:
    if not check_divergence_free(F, G):
        raise DivergenceNotZero(f"d/dx({F}) + d/dy({G}) is not zero")


def fast_partial_pow(b: RatFn, axis: Union[str, int]) -> RatFn:
    """d^(p-1) along ``axis`` by coefficient extraction."""
    _require_plane(b)
    return fast_iterated_partial(b, _axis(axis))


def c_coefficients(F: RatFn, G: RatFn) -> Tuple[RatFn, RatFn]:
    """(-d_y^{p-1} F, -d_x^{p-1} G); both lie in K^p for a divergence-free pair."""
    _require_divergence_free(F, G)
    c_F = -fast_partial_pow(F, "y")
    c_G = -fast_partial_pow(G, "x")
    if not is_pth_power(c_F) or not is_pth_power(c_G):
        raise InvariantViolation(f"c-coefficients ({c_F}, {c_G}) are not both p-th powers")
    return c_F, c_G


def rhs_obstruction(f: RatFn, g: RatFn, a: RatFn) -> RatFn:
    """f^p d_x^{p-1}(ag) - g^p d_y^{p-1}(af)."""
    _require_plane(f, g, a)
    af, ag = a * f, a * g
    _require_divergence_free(af, ag)
    return f.frobenius() * fast_partial_pow(ag, "x") - g.frobenius() * fast_partial_pow(af, "y")


def is_p_closed(f: RatFn, g: RatFn, witness: bool = True) -> CriterionReport:
    """
    Run the criterion with a multiplier found for (f, g). With ``witness``
    the brute-force D^p is computed too and must agree with the verdict.
    """
    _require_plane(f, g)
    a = find_multiplier((f, g))
    obstruction = rhs_obstruction(f, g, a)
    c_f, c_g = c_coefficients(a * f, a * g)
    p_closed = obstruction.is_zero
    found = None
    if witness:
        found = closure_witness(Derivation.of(f, g))
        if (found is not None) != p_closed:
            raise InvariantViolation(
                f"criterion says p_closed={p_closed} but the brute-force witness disagrees for ({f}, {g})"
            )
    logger.debug("is_p_closed: (%s, %s) a=%s -> %s", f, g, a, p_closed)
    return CriterionReport(f.p, f, g, a, c_f, c_g, obstruction, p_closed, found)


def star_certificate(f: RatFn, g: RatFn) -> Optional[RatFn]:
    """
    The c in K^p with (c_f, c_g) = (c f^p, c g^p), or None when no such c
    exists, which happens exactly when D is not p-closed.
    """
    c_f, c_g = c_coefficients(f, g)
    if not f.is_zero:
        c = c_f / f.frobenius()
    elif not g.is_zero:
        c = c_g / g.frobenius()
    else:
        c = RatFn.zero(2, f.char)
    if c * f.frobenius() != c_f or c * g.frobenius() != c_g:
        return None
    if not is_pth_power(c):
        raise InvariantViolation(f"certificate {c} is not in K^p")
    return c


def coprime_case_check(f: Union[Poly, RatFn], g: Union[Poly, RatFn]) -> bool:
    """
    For coprime nonzero polynomials the criterion collapses to c_f = c_g = 0.
    """
    f, g = (_as_poly(b) for b in (f, g))
    if f.is_zero or g.is_zero:
        raise ZeroInput("both coefficients must be nonzero")
    if not poly_gcd(f, g).is_one:
        raise NotCoprime(f"gcd({f}, {g}) = {poly_gcd(f, g)}")
    c_f, c_g = c_coefficients(RatFn.from_poly(f), RatFn.from_poly(g))
    return c_f.is_zero and c_g.is_zero


def _as_poly(b: Union[Poly, RatFn]) -> Poly:
    if isinstance(b, Poly):
        if b.arity != 2:
            raise ArityMismatch(f"expected a polynomial in x, y, got arity {b.arity}")
        return b
    if not b.is_polynomial:
        raise ArityMismatch(f"{b} is not a polynomial")
    _require_plane(b)
    return b.num


def hamiltonian_pair(h: RatFn) -> Tuple[RatFn, RatFn]:
    """(d_y h, -d_x h)."""
    _require_plane(h)
    return h.derivative(1), -h.derivative(0)


def from_decomposition(h: RatFn, c_f: RatFn, c_g: RatFn) -> Tuple[RatFn, RatFn]:
    _require_plane(h, c_f, c_g)
    p = h.p
    f, g = hamiltonian_pair(h)
    f = f + c_f * RatFn.monomial((0, p - 1), 2, h.char)
    g = g + c_g * RatFn.monomial((p - 1, 0), 2, h.char)
    return f, g


def hamiltonian_decompose(f: RatFn, g: RatFn) -> HamiltonianDecomposition:
    c_f, c_g = c_coefficients(f, g)
    p, char = f.p, f.char
    try:
        h = integrate(f - c_f * RatFn.monomial((0, p - 1), 2, char), 1)
        # what is left of g depends on x alone over K^p
        w = g + h.derivative(0)
        h = h - integrate(w - c_g * RatFn.monomial((p - 1, 0), 2, char), 0)
    except NotAPthPower as exc:
        raise InvariantViolation(f"no antiderivative while decomposing ({f}, {g}): {exc}") from exc

    constant_part = p_decompose(h).component((0, 0))
    if not constant_part.is_zero:
        h = h - constant_part

    decomposition = HamiltonianDecomposition(h, c_f, c_g)
    if decomposition.rebuild() != (f, g):
        raise InvariantViolation(f"decomposition h={h} does not rebuild ({f}, {g})")
    logger.debug("hamiltonian_decompose: h=%s c_f=%s c_g=%s", h, c_f, c_g)
    return decomposition
