"""Exact-arithmetic construction and verification of the arithmetic objects
behind a fake projective plane: the division algebra over Q(sqrt(-7)), its
involutions, hermitian forms and level structures, the similitude lattice,
and the Bruhat-Tits building of PGL3(Q2)."""

__version__ = "0.1.0"
