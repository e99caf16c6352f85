"""
Multipliers making a coefficient vector divergence-free.

For f_1, ..., f_n in K there is a in K^x with sum_i d/dx_i (a f_i) = 0. Writing
a = sum_I a_I^p x^I turns the condition into a homogeneous K-linear system in
the roots a_I with p^n rows and columns; the row of the all-(p-1) index is
identically zero, so a nonzero solution always exists.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Sequence, Tuple

from core.errors import ArityMismatch, InvariantViolation
from core.field import PrimeChar
from core.linalg import kernel_solve
from core.pdecomp import MultiIndex, basis_indices, p_decompose
from core.poly import Poly, poly_lcm
from core.ratfn import RatFn

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiplierSystem:
    """Rows are equations, columns unknown roots; both use ``index`` order."""

    matrix: Tuple[Tuple[RatFn, ...], ...]
    index: Tuple[MultiIndex, ...]
    cleared: Tuple[Poly, ...]

    @property
    def size(self) -> int:
        return len(self.index)

    def position(self, multi_index: MultiIndex) -> int:
        return self.index.index(tuple(multi_index))

    def top_row(self) -> Tuple[RatFn, ...]:
        """The equation at the all-(p-1) index; always zero."""
        p = self.cleared[0].p
        return self.matrix[self.position((p - 1,) * len(self.cleared))]


def divergence(coeffs: Sequence[RatFn]) -> RatFn:
    """sum_i d/dx_i (f_i)."""
    total = RatFn.zero(coeffs[0].arity, coeffs[0].char)
    for i, f in enumerate(coeffs):
        total = total + f.derivative(i)
    return total


def _check_coeffs(coeffs: Sequence[RatFn]) -> Tuple[int, PrimeChar]:
    if not coeffs:
        raise ArityMismatch("empty coefficient list")
    n = len(coeffs)
    char = coeffs[0].char
    for f in coeffs:
        if f.arity != n:
            raise ArityMismatch(f"{n} coefficients over a field of arity {f.arity}")
        char.check(f.char)
    return n, char


def build_system(coeffs: Sequence[RatFn]) -> MultiplierSystem:
    n, char = _check_coeffs(coeffs)
    p = char.p
    # clear denominators by a p-th power, which the partials treat as a constant
    d = reduce(lambda u, v: u * v, (f.den for f in coeffs), Poly.one(n, char))
    dp = d.frobenius()
    cleared = tuple(f.num * dp.exquo(f.den) for f in coeffs)
    decomps = [p_decompose(RatFn.from_poly(c)) for c in cleared]

    index = tuple(basis_indices(n, p))
    position = {I: k for k, I in enumerate(index)}
    acc: Dict[Tuple[int, int], Poly] = {}
    for col, I in enumerate(index):
        for i, dec in enumerate(decomps):
            for J in dec:
                phi = dec.roots[J].num
                total = [a + b for a, b in zip(I, J)]
                q = total[i] % p
                if q == 0:
                    continue
                row_index = [t % p for t in total]
                row_index[i] -= 1
                carry = [t // p for t in total]
                key = (position[tuple(row_index)], col)
                term = phi.mul_monomial(carry, q)
                acc[key] = acc[key] + term if key in acc else term

    zero = RatFn.zero(n, char)
    matrix = tuple(
        tuple(RatFn.from_poly(acc[(r, c)]) if (r, c) in acc else zero for c in range(len(index)))
        for r in range(len(index))
    )
    logger.debug("build_system: %d unknowns, %d nonzero entries", len(index), len(acc))
    return MultiplierSystem(matrix, index, cleared)


def find_multiplier(coeffs: Sequence[RatFn]) -> RatFn:
    """
    A nonzero a with sum_i d/dx_i (a f_i) = 0, normalised to a polynomial with
    leading coefficient 1. Returns 1 when the input is already divergence-free.
    """
    n, char = _check_coeffs(coeffs)
    if divergence(coeffs).is_zero:
        return RatFn.one(n, char)

    system = build_system(coeffs)
    roots = kernel_solve(system.matrix)
    if roots is None:
        raise InvariantViolation("multiplier system has a trivial kernel")

    # a L^p = sum_I (r_I L)^p x^I is a polynomial multiple of a by an element of K^p
    nonzero = [(I, r) for I, r in zip(system.index, roots) if not r.is_zero]
    common = reduce(poly_lcm, (r.den for _, r in nonzero), Poly.one(n, char))
    total = Poly.zero(n, char)
    for I, r in nonzero:
        total = total + (r.num * common.exquo(r.den)).frobenius().mul_monomial(I)
    if total.is_zero:
        raise InvariantViolation("kernel vector recomposed to zero")
    a = RatFn.from_poly(total.monic())

    if not divergence([a * f for f in coeffs]).is_zero:
        raise InvariantViolation(f"multiplier {a} does not kill the divergence")
    logger.debug("find_multiplier: a = %s", a)
    return a
