"""Exact computer algebra for affine vertex algebras of types B4 and F4 at level -5/2.

Everything is computed over the rationals.  No floating point is used anywhere:
scalars are fractions.Fraction, linear algebra is exact fraction-free or
fraction-tolerant Gaussian elimination, and all module dimensions, singular
vectors and weight classifications come out as exact identities.
"""

__version__ = "0.1.0"
