"""
Truncations of the p-closed power-series family

    f = sum_i (d_y h)^{p^i} c^{(p^i - 1)/(p - 1)} y^{p^i - 1}
    g = -sum_i (d_x h)^{p^i} c^{(p^i - 1)/(p - 1)} x^{p^i - 1}

with h in k[x, y] and c in k[x^p, y^p], cut after whole terms i = 0..I.

Writing f_J, g_J for the level-J truncations and t_I, s_I for the level-I
terms, c_f = c f_{I-1}^p and c_g = c g_{I-1}^p, so the obstruction is

    f^p c_g - g^p c_f = c (t_I g_{I-1} - s_I f_{I-1})^p,

which has no monomial of total degree below p (p^I - 1).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from core.errors import MalformedSeriesSpec
from core.pdecomp import fast_iterated_partial
from core.poly import Poly
from core.ratfn import RatFn

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesSpec:
    h: Poly
    c: Poly
    level: int

    def __post_init__(self):
        if self.h.arity != 2 or self.c.arity != 2:
            raise MalformedSeriesSpec("h and c must be polynomials in x, y")
        if self.h.p != self.c.p:
            raise MalformedSeriesSpec(f"h is over F_{self.h.p} but c is over F_{self.c.p}")
        if self.level < 0:
            raise MalformedSeriesSpec(f"level must be >= 0, got {self.level}")
        p = self.h.p
        for m, _ in self.c.items():
            if any(e % p for e in m):
                raise MalformedSeriesSpec(f"c = {self.c} has a monomial outside k[x^{p}, y^{p}]")

    @property
    def p(self) -> int:
        return self.h.p


@dataclass(frozen=True)
class SeriesTerms:
    """Per-level terms t_i of f and s_i of g."""

    f_terms: Tuple[Poly, ...]
    g_terms: Tuple[Poly, ...]

    def truncation(self, level: int) -> Tuple[Poly, Poly]:
        zero = Poly.zero(2, self.f_terms[0].char)
        f, g = zero, zero
        for t, s in zip(self.f_terms[: level + 1], self.g_terms[: level + 1]):
            f, g = f + t, g + s
        return f, g


@dataclass
class SeriesReport:
    spec: SeriesSpec
    f: Poly
    g: Poly
    divergence_free: bool
    c_f: Poly
    c_g: Poly
    obstruction: Poly
    threshold: int
    lowest_degree: Optional[int]
    vanishes_below_threshold: bool
    c_closed_form_ok: bool
    tail_identity_ok: bool
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _iterate_frobenius(b: Poly, times: int) -> Poly:
    for _ in range(times):
        b = b.frobenius()
    return b


def series_terms(s: SeriesSpec) -> SeriesTerms:
    p, char = s.p, s.h.char
    A, B = s.h.derivative(1), s.h.derivative(0)
    gamma = Poly.one(2, char)
    f_terms, g_terms = [], []
    for i in range(s.level + 1):
        if i:
            gamma = s.c * gamma.frobenius()
        q = p ** i
        f_terms.append((_iterate_frobenius(A, i) * gamma).mul_monomial((0, q - 1)))
        g_terms.append(-(_iterate_frobenius(B, i) * gamma).mul_monomial((q - 1, 0)))
    return SeriesTerms(tuple(f_terms), tuple(g_terms))


def series_generate(s: SeriesSpec) -> Tuple[Poly, Poly]:
    return series_terms(s).truncation(s.level)


def series_threshold(p: int, level: int) -> int:
    """Total degree below which the level-``level`` obstruction has no terms."""
    return p * (p ** level - 1)


def _c_coefficient(b: Poly, axis: int) -> Poly:
    return (-fast_iterated_partial(RatFn.from_poly(b), axis)).num


def series_verify(s: SeriesSpec) -> SeriesReport:
    """Check a generated pair; failed checks land in ``failures``."""
    terms = series_terms(s)
    f, g = terms.truncation(s.level)
    failures: List[str] = []

    divergence_free = (f.derivative(0) + g.derivative(1)).is_zero
    if not divergence_free:
        failures.append("divergence of the generated pair is not zero")

    c_f, c_g = _c_coefficient(f, 1), _c_coefficient(g, 0)
    obstruction = f.frobenius() * c_g - g.frobenius() * c_f

    zero = Poly.zero(2, s.h.char)
    if s.level == 0:
        expected_c_f = expected_c_g = expected_obstruction = zero
    else:
        f_prev, g_prev = terms.truncation(s.level - 1)
        t, u = terms.f_terms[s.level], terms.g_terms[s.level]
        expected_c_f, expected_c_g = s.c * f_prev.frobenius(), s.c * g_prev.frobenius()
        expected_obstruction = s.c * (t * g_prev - u * f_prev).frobenius()

    c_closed_form_ok = c_f == expected_c_f and c_g == expected_c_g
    if not c_closed_form_ok:
        failures.append("c_f, c_g differ from c times the previous truncation to the p")
    tail_identity_ok = obstruction == expected_obstruction
    if not tail_identity_ok:
        failures.append("obstruction differs from the tail identity")

    threshold = series_threshold(s.p, s.level)
    lowest = obstruction.low_degree()
    vanishes = lowest is None or lowest >= threshold
    if not vanishes:
        failures.append(f"obstruction has a term of degree {lowest} below {threshold}")

    logger.debug("series_verify: level %d, lowest degree %s, threshold %d", s.level, lowest, threshold)
    return SeriesReport(
        spec=s,
        f=f,
        g=g,
        divergence_free=divergence_free,
        c_f=c_f,
        c_g=c_g,
        obstruction=obstruction,
        threshold=threshold,
        lowest_degree=lowest,
        vanishes_below_threshold=vanishes,
        c_closed_form_ok=c_closed_form_ok,
        tail_identity_ok=tail_identity_ok,
        failures=failures,
    )


def series_levels(h: Poly, c: Poly, top: int) -> List[SeriesReport]:
    """Reports for levels 0..top of the same (h, c)."""
    return [series_verify(SeriesSpec(h, c, level)) for level in range(top + 1)]


def levels_monotone(reports: List[SeriesReport]) -> bool:
    """
    Thresholds strictly increase with the level and every nonzero
    obstruction starts at or above its own threshold.
    """
    thresholds = [r.threshold for r in reports]
    if any(a >= b for a, b in zip(thresholds, thresholds[1:])):
        return False
    return all(r.lowest_degree is None or r.lowest_degree >= r.threshold for r in reports)
