"""
Shared generators: hypothesis strategies for property tests and seeded
corpora for the fixed-count suites.
"""

from __future__ import annotations

import random

import hypothesis.strategies as st

from core.field import char_of
from core.poly import Poly
from core.ratfn import RatFn

PRIMES = st.sampled_from([2, 3, 5])


def _exponents(arity: int, max_deg: int):
    return st.lists(st.integers(0, max_deg), min_size=arity, max_size=arity).filter(
        lambda e: sum(e) <= max_deg
    )


@st.composite
def polys(draw, p: int, arity: int = 2, max_deg: int = 3, max_terms: int = 4, nonzero: bool = False):
    terms = draw(
        st.dictionaries(
            _exponents(arity, max_deg).map(tuple),
            st.integers(1, p - 1),
            min_size=1 if nonzero else 0,
            max_size=max_terms,
        )
    )
    return Poly(terms, arity, char_of(p))


@st.composite
def ratfns(draw, p: int, arity: int = 2, max_deg: int = 3, max_den_deg: int = 2, max_terms: int = 3):
    num = draw(polys(p, arity, max_deg, max_terms))
    den = draw(polys(p, arity, max_den_deg, 2, nonzero=True))
    return RatFn(num, den)


@st.composite
def prime_and_ratfn(draw, arity: int = 2, max_deg: int = 3, max_den_deg: int = 2):
    p = draw(PRIMES)
    return p, draw(ratfns(p, arity, max_deg, max_den_deg))


def random_poly(rng: random.Random, p: int, arity: int = 2, deg: int = 3, terms: int = 3) -> Poly:
    out = {}
    for _ in range(rng.randint(1, terms)):
        exps = [0] * arity
        budget = rng.randint(0, deg)
        for _ in range(budget):
            exps[rng.randrange(arity)] += 1
        out[tuple(exps)] = rng.randrange(1, p)
    return Poly(out, arity, char_of(p))


def random_ratfn(rng: random.Random, p: int, arity: int = 2, deg: int = 3, den_deg: int = 1) -> RatFn:
    num = random_poly(rng, p, arity, deg)
    den = random_poly(rng, p, arity, den_deg, terms=2)
    if den.is_zero:
        den = Poly.one(arity, char_of(p))
    return RatFn(num, den)
