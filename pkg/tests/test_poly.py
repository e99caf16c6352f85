import pytest
import sympy
from hypothesis import given, settings
import hypothesis.strategies as st

from core.errors import ArityMismatch, CharacteristicMismatch, NotAPthPower, NotDivisible, ZeroInput
from core.poly import Poly, grlex_key, poly_arith, poly_cofactors, poly_gcd, poly_lcm, variable_names
from strategies import polys

X, Y = sympy.symbols("x y")


def to_sympy(a: Poly) -> sympy.Poly:
    return sympy.Poly.from_dict(dict(a.items()) or {(0, 0): 0}, X, Y, modulus=a.p)


def from_sympy(b: sympy.Poly, p: int) -> Poly:
    return Poly({m: int(c) % p for m, c in b.terms()}, 2, p)


def test_variable_names():
    assert variable_names(1) == ["x"]
    assert variable_names(2) == ["x", "y"]
    assert variable_names(3) == ["x1", "x2", "x3"]


def test_text_is_descending_grlex():
    a = Poly({(0, 1): 1, (3, 0): 2, (1, 1): 1, (0, 0): 4}, 2, 5)
    assert str(a) == "2*x^3 + x*y + y + 4"
    assert str(Poly.zero(2, 5)) == "0"


def test_grlex_key_orders_by_degree_first():
    assert grlex_key((0, 3)) > grlex_key((2, 0))
    assert grlex_key((2, 1)) > grlex_key((1, 2))


def test_coefficients_reduced_and_zeros_dropped():
    a = Poly({(1, 0): 7, (0, 1): 5}, 2, 5)
    assert dict(a.items()) == {(1, 0): 2}


def test_mismatches():
    with pytest.raises(CharacteristicMismatch):
        Poly.one(2, 3) + Poly.one(2, 5)
    with pytest.raises(ArityMismatch):
        Poly.one(2, 3) * Poly.one(1, 3)


def test_binomial_expansion_matches_sympy():
    a = (Poly.var(0, 2, 5) - Poly.var(1, 2, 5)) ** 4
    assert str(a) == "x^4 + x^3*y + x^2*y^2 + x*y^3 + y^4"
    assert a == from_sympy(sympy.Poly((X - Y) ** 4, X, Y, modulus=5), 5)


@given(st.data())
def test_ring_laws(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    a, b, c = (data.draw(polys(p)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    assert poly_arith(a, b, "mul") == b * a


@given(st.data())
def test_derivative_pth_power_vanishes(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    a = data.draw(polys(p))
    for i in (0, 1):
        d = a
        for _ in range(p):
            d = d.derivative(i)
        assert d.is_zero


@given(st.data())
def test_frobenius_is_pth_power(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    a = data.draw(polys(p, max_deg=2, max_terms=3))
    assert a.frobenius() == a ** p
    assert a.frobenius().frobenius_root() == a


def test_frobenius_root_rejects():
    with pytest.raises(NotAPthPower):
        Poly.var(0, 2, 3).frobenius_root()


@given(st.data())
def test_exquo_inverts_multiplication(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    a = data.draw(polys(p))
    b = data.draw(polys(p, nonzero=True))
    assert (a * b).exquo(b) == a


def test_exquo_remainder():
    x, y = Poly.var(0, 2, 5), Poly.var(1, 2, 5)
    with pytest.raises(NotDivisible):
        (x * x + y).exquo(x)
    assert x.divides(x * y)
    assert not x.divides(y)


@settings(deadline=None, max_examples=60)
@given(st.data())
def test_gcd_matches_sympy(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    common = data.draw(polys(p, max_deg=2, max_terms=2, nonzero=True))
    a = common * data.draw(polys(p, max_deg=2, max_terms=3, nonzero=True))
    b = common * data.draw(polys(p, max_deg=2, max_terms=3, nonzero=True))
    ours = poly_gcd(a, b)
    theirs = from_sympy(to_sympy(a).gcd(to_sympy(b)), p)
    assert ours == theirs.monic()
    assert ours.divides(a) and ours.divides(b)


def test_gcd_edge_cases():
    x = Poly.var(0, 2, 3)
    with pytest.raises(ZeroInput):
        poly_gcd(Poly.zero(2, 3), Poly.zero(2, 3))
    assert poly_gcd(x.scale(2), Poly.zero(2, 3)) == x
    assert poly_gcd(Poly.constant(2, 2, 3), x).is_one


def test_cofactors_split_out_the_gcd():
    x, y = Poly.var(0, 2, 5), Poly.var(1, 2, 5)
    common = (x + y).scale(3)
    a, b = common * (x - 1), common * (y * y + 2)
    g, a_rest, b_rest = poly_cofactors(a, b)
    assert g == x + y
    assert g * a_rest == a and g * b_rest == b
    assert poly_gcd(a_rest, b_rest).is_one


def test_lcm():
    x, y = Poly.var(0, 2, 3), Poly.var(1, 2, 3)
    assert poly_lcm(x * y, y * y) == x * y * y
    assert poly_lcm((x + 1).scale(2), x + 1) == x + 1
