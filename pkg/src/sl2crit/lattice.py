"""Rank-one lattice group algebra: charges p stand for e^{p*alpha}.

The squared length of alpha is 2, which fixes every eigenvalue below.
"""

from __future__ import annotations

from fractions import Fraction


def mul_exp(b, p):
    """Multiplication by e^{b*alpha} on the basis vector e^{p*alpha}."""
    return p + b


def alpha0_eig(p):
    """Eigenvalue of the zero mode alpha(0) = H(0) on e^{p*alpha}."""
    return 2 * p


def lattice_d_eig(p):
    """Eigenvalue of the derivation d on e^{p*alpha}: -(p*alpha, p*alpha)/4."""
    return Fraction(-p * p, 2)
