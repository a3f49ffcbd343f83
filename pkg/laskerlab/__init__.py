"""
laskerlab

Finite and integer commutative rings, S-relative ideal predicates with
re-checkable certificates, S-primary decompositions and the property suites
that exercise them.
"""

__version__ = "0.1.0"
