"""
Monomial derivations y^{m_y} d/dx + x^{m_x} d/dy in closed form.

With n = m + 1, d_z^{p-1}(z^m) = eps z^{n-p} where eps = -1 if p | n and 0
otherwise, so the obstruction is (xy)^{-p} (eps_x x^{n_x} y^{p n_y} -
eps_y x^{p n_x} y^{n_y}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from core.field import FpScalar, PrimeChar, char_of
from core.ratfn import RatFn


@dataclass(frozen=True)
class MonomialClass:
    m_x: int
    m_y: int
    n_x: int
    n_y: int
    eps_x: FpScalar
    eps_y: FpScalar
    p_closed: bool

    @property
    def p(self) -> int:
        return self.eps_x.char.p


def _char(p: Union[PrimeChar, int]) -> PrimeChar:
    return p if isinstance(p, PrimeChar) else char_of(p)


def _eps(n: int, char: PrimeChar) -> FpScalar:
    return FpScalar(-1 if n % char.p == 0 else 0, char)


def classify_monomial(m_x: int, m_y: int, p: Union[PrimeChar, int]) -> MonomialClass:
    char = _char(p)
    n_x, n_y = m_x + 1, m_y + 1
    units = n_x % char.p != 0 and n_y % char.p != 0
    return MonomialClass(
        m_x=m_x,
        m_y=m_y,
        n_x=n_x,
        n_y=n_y,
        eps_x=_eps(n_x, char),
        eps_y=_eps(n_y, char),
        p_closed=units or (n_x == 0 and n_y == 0),
    )


def monomial_pair(m_x: int, m_y: int, p: Union[PrimeChar, int]) -> Tuple[RatFn, RatFn]:
    """(y^{m_y}, x^{m_x}); negative exponents become denominators."""
    char = _char(p)
    return RatFn.monomial((0, m_y), 2, char), RatFn.monomial((m_x, 0), 2, char)


def monomial_obstruction(m_x: int, m_y: int, p: Union[PrimeChar, int]) -> RatFn:
    cls = classify_monomial(m_x, m_y, p)
    char, q = _char(p), _char(p).p
    first = RatFn.monomial((cls.n_x - q, q * cls.n_y - q), 2, char, cls.eps_x.value)
    second = RatFn.monomial((q * cls.n_x - q, cls.n_y - q), 2, char, cls.eps_y.value)
    return first - second


def proof_case(cls: MonomialClass) -> Optional[int]:
    """
    1 when both eps vanish, 2 when both are -1 and the two monomials of the
    obstruction coincide, None for a derivation that is not p-closed.
    """
    if not cls.eps_x and not cls.eps_y:
        return 1
    if cls.eps_x and cls.eps_y and (cls.n_x, cls.p * cls.n_y) == (cls.p * cls.n_x, cls.n_y):
        return 2
    return None
