"""Exact computations with coordinate ring schemes over finite fields.

Subpackages and modules:

* ``arith``: finite fields, sparse polynomials with layered variables, fractions
* ``skew``: skew polynomials in Frobenius and matrix diagonalization over them
* ``scheme``: coordinate schemes, twists, transports, classification
* ``operator``: B-operators on F_q(t_1, ..., t_m)
* ``prolong``: prolongations, fibers, the equalizer scheme, axiom checks
* ``groebner``: Buchberger's algorithm for membership and elimination
* ``search``: brute-force point enumeration (compiled kernel with a Python fallback)
"""
from .errors import DomainError

__version__ = "0.1.0"

__all__ = ["DomainError", "__version__"]
