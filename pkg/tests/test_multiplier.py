import random

import pytest

from core.errors import ArityMismatch
from core.ratfn import RatFn
from derivations.multiplier import build_system, divergence, find_multiplier
from strategies import random_ratfn


def test_divergence_free_input_gets_one():
    x, y = RatFn.var(0, 2, 5), RatFn.var(1, 2, 5)
    assert find_multiplier([y, x ** 2]) == 1


def test_known_multiplier_p2():
    # (x, y) at p = 3 has divergence 2; x^-1 y^-1 style multipliers exist
    x, y = RatFn.var(0, 2, 3), RatFn.var(1, 2, 3)
    a = find_multiplier([x, y])
    assert not a.is_zero
    assert a.is_polynomial and a.num.leading_coeff() == 1
    assert divergence([a * x, a * y]).is_zero


def test_system_shape_and_top_row():
    x, y = RatFn.var(0, 2, 3), RatFn.var(1, 2, 3)
    system = build_system([x + y * y, x / (y + 1)])
    assert system.size == 9
    assert all(len(row) == 9 for row in system.matrix)
    assert all(e.is_zero for e in system.top_row())


def test_arity_checked():
    with pytest.raises(ArityMismatch):
        find_multiplier([RatFn.var(0, 2, 3)])
    with pytest.raises(ArityMismatch):
        find_multiplier([])


@pytest.mark.timeout(120)
def test_multiplier_corpus():
    rng = random.Random(21)
    for k in range(100):
        p = (2, 3, 5)[k % 3]
        n = 1 + (k // 3) % 2
        coeffs = [random_ratfn(rng, p, arity=n, deg=2, den_deg=1) for _ in range(n)]
        system = build_system(coeffs)
        assert all(e.is_zero for e in system.top_row())
        a = find_multiplier(coeffs)
        assert not a.is_zero
        assert divergence([a * f for f in coeffs]).is_zero


@pytest.mark.timeout(60)
def test_rational_input_at_p5():
    x, y = RatFn.var(0, 2, 5), RatFn.var(1, 2, 5)
    coeffs = [x ** 2 + 3 * x * y + 4 * y ** 2, (3 * x * y + 4 * x) / y]
    a = find_multiplier(coeffs)
    assert a.is_polynomial and a.num.leading_coeff() == 1
    assert divergence([a * f for f in coeffs]).is_zero


def test_multiplier_is_deterministic():
    rng = random.Random(22)
    for k in range(15):
        p = (2, 3, 5)[k % 3]
        coeffs = [random_ratfn(rng, p, deg=2, den_deg=1) for _ in range(2)]
        copies = [RatFn(f.num, f.den) for f in coeffs]
        assert find_multiplier(coeffs) == find_multiplier(copies)
