"""Graded commutative-algebra engine: Hilbert coefficients, Koszul
homology, homological degrees and Buchsbaum-Rim multiplicities for
finitely generated graded modules over polynomial rings."""

__version__ = "0.1.0"
