"""
Exact construction, bi-Hamiltonian reduction and invariants of Poisson pencils
on loop algebras of simple Lie algebras.
"""

__version__ = "1.0.0"
