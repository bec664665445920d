"""Irreducible sl(n+1) modules in Littelmann's monomial basis, restricted to
the abelian subalgebra spanned by ``Y_1, X_2, Y_3, ...``."""

__version__ = "0.1.0"
