"""Bosonic Fock space: the polynomial algebra on creation modes H(-n), n > 0.

The central element acts as -2, so annihilation modes act as scaled formal
derivatives: H(m) with m > 0 sends a monomial to -4m times its partial
derivative with respect to the variable H(-m).  The exponential operators
built from these modes are evaluated coefficientwise and eagerly, one
z-power at a time.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .linear import LinearCombination, accumulate

# A Fock monomial is a tuple of positive integer parts, sorted descending;
# part n stands for one factor H(-n).  The empty tuple is the vacuum 1.


def monomial(*parts):
    if any(p < 1 for p in parts):
        raise ValueError("parts must be positive integers")
    return tuple(sorted(parts, reverse=True))


def monomial_degree(mono):
    return sum(mono)


class FockElement(LinearCombination):
    """Finite rational combination of Fock monomials."""


ONE = FockElement.basis(())


@lru_cache(maxsize=None)
def _partitions(n):
    """All partitions of n as descending tuples (cached)."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def _multiplicities(parts):
    mult = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    return mult


def _h_act_monomial(n, mono):
    """H(n) on a single monomial, as a list of (monomial, coeff) pairs."""
    if n == 0:
        raise ValueError("H(0) does not act on the Fock factor")
    if n < 0:
        return [(tuple(sorted(mono + (-n,), reverse=True)), Fraction(1))]
    # H(n), n > 0: -4n times the formal derivative in the part n.
    k = mono.count(n)
    if k == 0:
        return []
    reduced = list(mono)
    reduced.remove(n)
    return [(tuple(reduced), Fraction(-4 * n * k))]


def h_act(n, v):
    """Action of the Heisenberg mode H(n), n != 0, on a Fock element."""
    if n == 0:
        raise ValueError("H(0) does not act on the Fock factor")
    return v.map_basis(lambda mono: _h_act_monomial(n, mono))


@lru_cache(maxsize=None)
def _e_coeff_monomial(sup, sub, k, mono):
    """z^k coefficient of the exponential operator applied to a monomial.

    Returns a tuple of (monomial, coeff) pairs.  sup/sub are '+' or '-',
    naming the superscript and subscript of the operator: subscript '+' is
    the creation exponential exp(∓ sum H(-n)/2n z^n), subscript '-' the
    annihilation exponential exp(± sum H(n)/2n z^-n), with the sign read
    off the superscript.
    """
    if sup not in "+-" or sub not in "+-":
        raise ValueError("sup and sub must be '+' or '-'")
    if sub == "+":
        if k < 0:
            raise ValueError("creation exponential has no negative z-powers")
        sign = -1 if sup == "+" else 1
    else:
        if k > 0:
            raise ValueError("annihilation exponential has no positive z-powers")
        sign = 1 if sup == "+" else -1
    if k == 0:
        return ((mono, Fraction(1)),)

    out = {}
    for parts in _partitions(abs(k)):
        coeff = Fraction(1)
        for part, mult in _multiplicities(parts).items():
            coeff *= Fraction(sign, 2 * part) ** mult
            for i in range(1, mult + 1):
                coeff /= i
        if sub == "+":
            newmono = tuple(sorted(mono + parts, reverse=True))
            accumulate(out, newmono, coeff)
        else:
            # Apply the commuting annihilators H(part) one part at a time.
            current = {mono: coeff}
            for part in parts:
                nxt = {}
                for m2, c2 in current.items():
                    for m3, c3 in _h_act_monomial(part, m2):
                        accumulate(nxt, m3, c2 * c3)
                current = nxt
                if not current:
                    break
            for m2, c2 in current.items():
                accumulate(out, m2, c2)
    return tuple(out.items())


def e_coeff(sup, sub, k, v):
    """Coefficient of z^k of the chosen exponential operator applied to v."""
    return v.map_basis(lambda mono: _e_coeff_monomial(sup, sub, k, mono))


def serialize_monomial(mono):
    return list(mono)


def parse_monomial(data):
    return monomial(*data)
