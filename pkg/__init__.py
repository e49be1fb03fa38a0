"""
Preprojective Hochschild Cohomology Toolkit.

Exact computations on preprojective algebras of Dynkin quivers of types D and E:
normal forms, Frobenius structure, Hochschild cohomology via the Schofield
resolution, and the cup product on HH*.
"""

__version__ = '0.1.0'
