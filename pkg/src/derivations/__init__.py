"""
Derivations of K = F_p(x_1, ..., x_n) and the p-closedness machinery built on
the exact arithmetic in ``core``: brute-force powers, the divergence-free
multiplier, the fast two-variable criterion, the Cartier operator on closed
1-forms, monomial derivations and the truncated power-series family.
"""
