"""
Embedded fixtures from the worked examples. Each fixture is a named
function that raises :class:`FixtureFailed` on a wrong result.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List

from backend.expr import parse_ratfn
from backend.jobs import run_trials
from core.errors import NotCoprime, PClosedError
from core.models.reports import SelftestCase, SelftestModel
from core.poly import Poly
from core.ratfn import RatFn
from derivations.cartier import OneForm, cartier, is_closed, pair, multiplier_form
from derivations.criterion import (
    c_coefficients,
    check_divergence_free,
    coprime_case_check,
    hamiltonian_decompose,
    is_p_closed,
    rhs_obstruction,
    star_certificate,
)
from derivations.derivation import Derivation, brute_power_p, closure_witness
from derivations.monomial import classify_monomial, monomial_obstruction
from derivations.multiplier import divergence, find_multiplier
from derivations.series import SeriesSpec, series_generate, series_verify

logger = logging.getLogger(__name__)


class FixtureFailed(Exception):
    pass


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise FixtureFailed(message)


def _r(text: str, p: int, arity: int = 2) -> RatFn:
    return parse_ratfn(text, p, arity)


def final_example_is_p_closed() -> None:
    f, g = _r("y", 5), _r("x^2", 5)
    report = is_p_closed(f, g)
    _expect(report.p_closed, "y d/dx + x^2 d/dy should be p-closed at p = 5")
    _expect(report.c_f.is_zero and report.c_g.is_zero, "c-coefficients should vanish")
    _expect(report.witness is not None and report.witness.a.is_zero, "D^5 should be 0")
    _expect(coprime_case_check(f, g), "coprime test should accept (y, x^2)")


def one_coefficient_zero_is_p_closed() -> None:
    for p in (2, 3, 5):
        f = _r("x^2*y + 3*y + x", p)
        _expect(is_p_closed(f, RatFn.zero(2, p)).p_closed, f"(f, 0) at p = {p}")
        _expect(is_p_closed(RatFn.zero(2, p), f).p_closed, f"(0, f) at p = {p}")


def wilson_pair_is_not_p_closed() -> None:
    for p in (3, 5, 7):
        f, g = RatFn.one(2, p), RatFn.monomial((p - 1, 0), 2, p)
        _expect(rhs_obstruction(f, g, RatFn.one(2, p)) == -1, f"obstruction of (1, x^{p - 1}) should be -1")
        _expect(not is_p_closed(f, g).p_closed, f"(1, x^{p - 1}) at p = {p}")
        _expect(star_certificate(f, g) is None, "no certificate expected")
        _expect(not coprime_case_check(f, g), "coprime test should reject")


def diagonal_pair() -> None:
    for p in (2, 3, 5, 7):
        f = _r(f"(x-y)^{p - 1}", p)
        _expect(check_divergence_free(f, f), f"(x-y)^{p - 1} pair should be divergence-free")
        _expect(c_coefficients(f, f) == (RatFn.one(2, p), RatFn.one(2, p)), "c_f = c_g = 1")
        _expect(is_p_closed(f, f).p_closed, f"diagonal pair at p = {p}")
        c = star_certificate(f, f)
        _expect(c == f.frobenius().inverse(), "certificate should be (x-y)^(-p(p-1))")
        try:
            coprime_case_check(f, f)
        except NotCoprime:
            continue
        raise FixtureFailed("coprime test accepted a pair with a common factor")


def monomial_classification() -> None:
    _expect(classify_monomial(2, 1, 5).p_closed, "(2, 1) at p = 5")
    for p in (2, 3, 5, 7):
        _expect(not classify_monomial(p - 1, 0, p).p_closed, f"(p-1, 0) at p = {p}")
        _expect(classify_monomial(-1, -1, p).p_closed, f"(-1, -1) at p = {p}")
        _expect(monomial_obstruction(-1, -1, p).is_zero, f"(-1, -1) obstruction at p = {p}")
        _expect(not monomial_obstruction(p - 1, p - 1, p).is_zero, f"(p-1, p-1) obstruction at p = {p}")
        _expect(monomial_obstruction(p - 1, 0, p) == -1, f"(p-1, 0) obstruction at p = {p}")


def multiplier_exists() -> None:
    for p in (2, 3, 5):
        coeffs = (_r("x + y^2", p), _r("x*y", p))
        a = find_multiplier(coeffs)
        _expect(not a.is_zero, "multiplier must be nonzero")
        _expect(divergence([a * f for f in coeffs]).is_zero, f"divergence not killed at p = {p}")


def hamiltonian_example() -> None:
    f, g = _r("x^2", 5), _r("3*x*y", 5)
    dec = hamiltonian_decompose(f, g)
    _expect(dec.h == _r("x^2*y", 5), f"expected h = x^2*y, got {dec.h}")
    _expect(dec.c_f.is_zero and dec.c_g.is_zero, "c-coefficients should vanish")


def cartier_examples() -> None:
    for p in (2, 3, 5):
        dx = OneForm(RatFn.one(2, p), RatFn.zero(2, p))
        _expect(cartier(OneForm(RatFn.monomial((p - 1, 0), 2, p), RatFn.zero(2, p))) == dx, "C(x^(p-1) dx) = dx")
    f, g, a = _r("y", 5), _r("x^2", 5), RatFn.one(2, 5)
    omega = multiplier_form(f, g, a)
    D = Derivation.of(f, g)
    _expect(is_closed(omega), "ag dx - af dy should be closed")
    _expect(pair(omega, D).is_zero, "omega(D) = 0")
    _expect(pair(omega, brute_power_p(D)) == pair(cartier(omega), D).frobenius(), "omega(D^p) = (C omega (D))^p")


def series_example() -> None:
    h, c = _r("x*y", 3).num, Poly.one(2, 3)
    spec = SeriesSpec(h, c, 1)
    f, g = series_generate(spec)
    _expect(f == _r("x + x^3*y^2", 3).num, f"f = {f}")
    _expect(g == _r("2*y + 2*x^2*y^3", 3).num, f"g = {g}")
    report = series_verify(spec)
    _expect(report.ok, "; ".join(report.failures))


def parser_expansion() -> None:
    value = _r("(x-y)^4", 5)
    _expect(str(value) == "x^4 + x^3*y + x^2*y^2 + x*y^3 + y^4", f"got {value}")
    witness = closure_witness(Derivation.of(value, value))
    _expect(witness is not None and witness.a.is_zero, "D^5 = 0 for the diagonal pair at p = 5")


FIXTURES: Dict[str, Callable[[], None]] = {
    fn.__name__: fn
    for fn in (
        final_example_is_p_closed,
        one_coefficient_zero_is_p_closed,
        wilson_pair_is_not_p_closed,
        diagonal_pair,
        monomial_classification,
        multiplier_exists,
        hamiltonian_example,
        cartier_examples,
        series_example,
        parser_expansion,
    )
}


def run_fixture(name: str) -> SelftestCase:
    try:
        FIXTURES[name]()
    except (FixtureFailed, PClosedError) as exc:
        logger.error("selftest %s failed: %s", name, exc)
        return SelftestCase(name=name, ok=False, detail=str(exc))
    return SelftestCase(name=name, ok=True)


def run_selftest(workers: int = 1) -> SelftestModel:
    cases: List[SelftestCase] = run_trials(run_fixture, list(FIXTURES), workers)
    passed = sum(c.ok for c in cases)
    return SelftestModel(passed=passed, failed=len(cases) - passed, cases=cases)
