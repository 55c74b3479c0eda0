"""Exact verification of the discriminant-form, Weil-representation and
Borcherds-weight computations attached to a singular quartic threefold.

The library is organized in layers: exact arithmetic (cyclotomic numbers and
q-series), integral lattices and their finite quadratic modules, the Weil
representation and its theta vectors, the weight-3 obstruction space and
Borcherds weights, additive lifting, restriction of Heegner divisors, and the
projective geometry of the quartic.  The ``igusa`` console script drives the
verification suites; see ``igusa.report`` for the check inventory.
"""

__version__ = "0.1.0"

__all__ = [
    "exact",
    "lattices",
    "fqm",
    "weil",
    "obstruction",
    "lifting",
    "restriction",
    "geometry",
    "report",
    "cli",
]
