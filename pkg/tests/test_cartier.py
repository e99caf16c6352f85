import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from core.errors import NotClosed
from core.ratfn import RatFn
from derivations.cartier import OneForm, cartier, exact_form, is_closed, pair, multiplier_form
from derivations.criterion import from_decomposition, rhs_obstruction
from derivations.derivation import Derivation, brute_power_p
from derivations.multiplier import find_multiplier
from strategies import random_ratfn, ratfns


def xy(p):
    return RatFn.var(0, 2, p), RatFn.var(1, 2, p)


def test_is_closed_examples():
    x, y = xy(3)
    assert is_closed(exact_form(x ** 2 * y + y / x))
    assert not is_closed(OneForm(y, RatFn.zero(2, 3)))
    assert is_closed(multiplier_form(y, x ** 2, RatFn.one(2, 3)))


def test_cartier_examples():
    for p in (2, 3, 5, 7):
        x, y = xy(p)
        zero = RatFn.zero(2, p)
        dx, dy = OneForm(RatFn.one(2, p), zero), OneForm(zero, RatFn.one(2, p))
        assert cartier(OneForm(x ** (p - 1), zero)) == dx
        assert cartier(OneForm(zero, y ** (p - 1))) == dy
        assert cartier(exact_form(x * y + x ** 3)).is_zero


def test_cartier_needs_closed_form():
    x, y = xy(5)
    with pytest.raises(NotClosed):
        cartier(OneForm(y, RatFn.zero(2, 5)))


def test_pair_examples():
    x, y = xy(5)
    f, g = y + x, x ** 2
    D = Derivation.of(f, g)
    assert pair(OneForm(RatFn.one(2, 5), RatFn.zero(2, 5)), D) == f
    assert pair(OneForm.zero(5), D).is_zero
    a = RatFn.one(2, 5) + x
    assert pair(multiplier_form(f, g, a), D).is_zero


def test_form_arithmetic():
    x, y = xy(3)
    w = OneForm(x, y)
    assert w + w.scale(RatFn.constant(2, 2, 3)) == OneForm.zero(3)
    assert (w - w).is_zero
    assert str(w) == "(x)*dx + (y)*dy"


def test_exact_and_normalization_corpus():
    rng = random.Random(31)
    for k in range(150):
        p = (2, 3, 5)[k % 3]
        h = random_ratfn(rng, p, deg=3, den_deg=1)
        dh = exact_form(h)
        assert cartier(dh).is_zero
        if not dh.is_zero:
            assert cartier(dh.scale(h ** (p - 1))) == dh


@settings(deadline=None, max_examples=50)
@given(st.data())
def test_p_linearity(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    h = data.draw(ratfns(p, max_deg=3, max_den_deg=1))
    u = data.draw(ratfns(p, max_deg=2, max_den_deg=1))
    x, _ = xy(p)
    w = exact_form(h) + OneForm(x ** (p - 1), RatFn.zero(2, p))
    assert cartier(w.scale(u.frobenius())) == cartier(w).scale(u)


@pytest.mark.timeout(180)
def test_proof_identity_and_consistency():
    rng = random.Random(32)
    for k in range(50):
        p = (2, 3, 5)[k % 3]
        if k % 2:
            h = random_ratfn(rng, p, deg=3, den_deg=1)
            c = RatFn.from_poly(random_ratfn(rng, p, deg=1, den_deg=0).num).frobenius()
            f, g = from_decomposition(h, c, RatFn.zero(2, p))
        else:
            f = random_ratfn(rng, p, deg=2, den_deg=k % 4 // 2)
            g = random_ratfn(rng, p, deg=2, den_deg=k % 4 // 2)
        a = find_multiplier((f, g))
        omega = multiplier_form(f, g, a)
        D = Derivation.of(f, g)
        assert is_closed(omega)
        c_omega = cartier(omega)
        assert pair(omega, brute_power_p(D)) == pair(c_omega, D).frobenius()
        assert -pair(c_omega, D).frobenius() == rhs_obstruction(f, g, a)
