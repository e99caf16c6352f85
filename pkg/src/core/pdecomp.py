"""
p-decomposition of elements of K over K^p.

Every b in K has a unique expression b = sum_I b_I x^I over multi-indices
I in [0, p-1]^n with b_I in K^p. Elements of K^p are stored through their
p-th roots, so all K^p-linear algebra reuses ordinary K arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Tuple

from core.errors import ArityMismatch, NotAPthPower, VariableIndexError
from core.field import PrimeChar
from core.poly import Monomial, Poly
from core.ratfn import RatFn, ratfn_normalize

MultiIndex = Tuple[int, ...]  # entries in [0, p-1]


def check_multi_index(index: MultiIndex, arity: int, p: int) -> MultiIndex:
    index = tuple(index)
    if len(index) != arity or any(not 0 <= i <= p - 1 for i in index):
        raise ArityMismatch(f"{index} is not a multi-index in [0, {p - 1}]^{arity}")
    return index


def basis_indices(arity: int, p: int) -> List[MultiIndex]:
    """All of [0, p-1]^n in lexicographic order."""
    return list(itertools.product(range(p), repeat=arity))


@dataclass(frozen=True)
class PDecomp:
    """
    The roots r_I with b = sum_I r_I^p x^I. Zero roots are not stored.
    """

    roots: Mapping[MultiIndex, RatFn]
    arity: int
    char: PrimeChar
    _sorted: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for index, root in self.roots.items():
            check_multi_index(index, self.arity, self.char.p)
            if root.is_zero:
                raise ValueError(f"zero root stored at {index}")
        object.__setattr__(self, "_sorted", tuple(sorted(self.roots)))

    def __iter__(self) -> Iterator[MultiIndex]:
        return iter(self._sorted)

    def root(self, index: MultiIndex) -> RatFn:
        return self.roots.get(tuple(index), RatFn.zero(self.arity, self.char))

    def component(self, index: MultiIndex) -> RatFn:
        """b_I itself, an element of K^p."""
        return self.root(index).frobenius()

    def recompose(self) -> RatFn:
        total = RatFn.zero(self.arity, self.char)
        for index in self._sorted:
            total = total + self.roots[index].frobenius() * RatFn.monomial(index, self.arity, self.char)
        return total


def _split(b: RatFn) -> Tuple[Poly, Poly, Dict[MultiIndex, Dict[Monomial, int]]]:
    """
    Write b = N / D^p with N = num * den^(p-1), D = den, and bucket the terms
    of N by exponents mod p. Bucket I holds the root monomials e // p.
    """
    p = b.p
    if b.den.is_one:
        numer = b.num
    else:
        numer = b.num * b.den ** (p - 1)
    buckets: Dict[MultiIndex, Dict[Monomial, int]] = {}
    for m, c in numer.items():
        index = tuple(e % p for e in m)
        buckets.setdefault(index, {})[tuple(e // p for e in m)] = c
    return numer, b.den, buckets


def p_decompose(b: RatFn) -> PDecomp:
    _, den, buckets = _split(b)
    roots = {}
    for index, terms in buckets.items():
        root_num = Poly._make(terms, b.arity, b.char)
        roots[index] = RatFn.from_poly(root_num) if den.is_one else ratfn_normalize(root_num, den)
    return PDecomp(roots, b.arity, b.char)


def pth_root(b: RatFn) -> RatFn:
    """
    The r with r^p = b. The canonical form of a p-th power is (n^p, d^p),
    so membership in K^p is an exponent check on both parts.
    """
    try:
        return RatFn._make(b.num.frobenius_root(), b.den.frobenius_root())
    except NotAPthPower:
        raise NotAPthPower(f"{b} is not in K^p") from None


def is_pth_power(b: RatFn) -> bool:
    try:
        pth_root(b)
    except NotAPthPower:
        return False
    return True


def fast_iterated_partial(b: RatFn, i: int) -> RatFn:
    """
    The (p-1)-fold partial derivative in variable ``i`` by coefficient
    extraction: only components with I_i = p-1 survive, each scaled by
    (p-1)! = -1, so the result is -sum_{I_i = p-1} b_I x^(I - (p-1) e_i).
    """
    if not 0 <= i < b.arity:
        raise VariableIndexError(f"variable index {i} out of range for arity {b.arity}")
    p = b.p
    _, den, buckets = _split(b)
    out: Dict[Monomial, int] = {}
    for index, terms in buckets.items():
        if index[i] != p - 1:
            continue
        for root_m, c in terms.items():
            m = tuple(p * e + k for e, k in zip(root_m, index))
            m = m[:i] + (m[i] - (p - 1),) + m[i + 1:]
            out[m] = (p - c) % p
    numer = Poly._make(out, b.arity, b.char)
    if den.is_one:
        return RatFn.from_poly(numer)
    return ratfn_normalize(numer, den.frobenius())


def integrate(b: RatFn, i: int) -> RatFn:
    """
    An antiderivative in variable ``i``, term by term on the p-decomposition:
    x^I -> x^(I + e_i) / (I_i + 1). Defined only when no component has
    I_i = p-1, which is exactly the image of d/dx_i.
    """
    if not 0 <= i < b.arity:
        raise VariableIndexError(f"variable index {i} out of range for arity {b.arity}")
    p = b.p
    numer, den, _ = _split(b)
    out: Dict[Monomial, int] = {}
    for m, c in numer.items():
        k = m[i] % p
        if k == p - 1:
            raise NotAPthPower(f"{b} has a component at exponent p-1 in variable {i}; no antiderivative")
        out[m[:i] + (m[i] + 1,) + m[i + 1:]] = c * b.char.inverse(k + 1) % p
    result = Poly._make(out, b.arity, b.char)
    if den.is_one:
        return RatFn.from_poly(result)
    return ratfn_normalize(result, den.frobenius())
