"""
Exact arithmetic over F_p(x_1, ..., x_n): prime fields, sparse polynomials,
canonical rational functions, p-decompositions and kernel solving.

This package knows nothing about derivations or the command line so it can
be reused by the derivation layer, the CLI and the tests alike.
"""
