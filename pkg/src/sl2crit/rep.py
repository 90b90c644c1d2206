"""The level -2 module V = Fock ⊗ restricted wedge ⊗ lattice and the exact
component actions of the affine generators on it.

The raising/lowering fields act through a finite triple sum (creation
exponential coefficient, annihilation exponential coefficient, oscillator
mode).  Every bound in the sums is exact: the annihilation depth is capped
by the Fock degree of the term, the oscillator modes by the term's holes
and the nonnegativity of the creation index, so no heuristic cutoff is
involved.

The lattice z-power reads the charge of the *input* term; this ordering is
what reproduces the ground-truth values of the simple lowering operators
on the two canonical highest weight vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import fock, lattice, wedge
from .linear import LinearCombination, accumulate
from .scalars import HalfInt, format_rational, parse_rational


class State(LinearCombination):
    """Finite rational combination of (Fock monomial, wedge, charge) triples."""


def basis_state(fockmono=(), wedgebasis=wedge.VACUUM, charge=0, coeff=1):
    return State.basis((tuple(fockmono), wedgebasis, charge), coeff)


def v0():
    """Highest weight vector at charge 0: 1 ⊗ vacuum wedge ⊗ e^0."""
    return basis_state()


def v1():
    """Highest weight vector at charge -1: 1 ⊗ vacuum wedge ⊗ e^{-alpha}."""
    return basis_state(charge=-1)


class NotAWeightVector(ValueError):
    """Raised when a state is not a simultaneous h0/h1/d eigenvector."""


@dataclass(frozen=True)
class WeightTriple:
    h0: Fraction
    h1: Fraction
    d: Fraction


def _creatable_a_modes(w, tmin):
    """Doubled modes t with a_act(t/2, w) != 0 and t >= tmin."""
    modes = [t for t in w.holes if t >= tmin]
    t = -3
    while t >= tmin:
        if t not in w.neg:
            modes.append(t)
        t -= 2
    return modes


def _removable_astar_modes(w, tmin):
    """Doubled modes t with astar_act(t/2, w) != 0 and t >= tmin."""
    modes = [-s for s in w.neg if -s >= tmin]
    t = -3
    while t >= tmin:
        if -t not in w.holes:
            modes.append(t)
        t -= 2
    return modes


@lru_cache(maxsize=None)
def _x_basis(m, fockmono, w, p):
    """X(m) on a basis triple; returns ((key, coeff), ...)."""
    out = {}
    fdeg = sum(fockmono)
    for k2 in range(fdeg + 1):
        ann = fock._e_coeff_monomial("+", "-", -k2, fockmono)
        if not ann:
            continue
        # z-exponent balance: k1 - k2 - (t+1)/2 - p = -m with k1 >= 0.
        tmin = 2 * (m - p - k2) - 1
        for t in _creatable_a_modes(w, tmin):
            welem = wedge.a_act(HalfInt(t), w)
            if not welem:
                continue
            k1 = k2 + (t + 1) // 2 + p - m
            for mono1, c1 in ann:
                for mono2, c2 in fock._e_coeff_monomial("+", "+", k1, mono1):
                    for w2, cw in welem:
                        accumulate(out, (mono2, w2, p + 1), c1 * c2 * cw)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _y_basis(m, fockmono, w, p):
    """Y(m) on a basis triple; returns ((key, coeff), ...)."""
    out = {}
    fdeg = sum(fockmono)
    for k2 in range(fdeg + 1):
        ann = fock._e_coeff_monomial("-", "-", -k2, fockmono)
        if not ann:
            continue
        # z-exponent balance: k1 - k2 - (t+1)/2 + p = -m with k1 >= 0.
        tmin = 2 * (m + p - k2) - 1
        for t in _removable_astar_modes(w, tmin):
            welem = wedge.astar_act(HalfInt(t), w)
            if not welem:
                continue
            k1 = k2 + (t + 1) // 2 - p - m
            for mono1, c1 in ann:
                for mono2, c2 in fock._e_coeff_monomial("-", "+", k1, mono1):
                    for w2, cw in welem:
                        accumulate(out, (mono2, w2, p - 1), c1 * c2 * cw)
    return tuple(out.items())


def x_act(m, s):
    return s.map_basis(lambda key: _x_basis(m, *key))


def y_act(m, s):
    return s.map_basis(lambda key: _y_basis(m, *key))


@lru_cache(maxsize=None)
def _h_basis(n, fockmono, w, p):
    if n == 0:
        return (((fockmono, w, p), Fraction(lattice.alpha0_eig(p))),)
    felem = fock.h_act(n, fock.FockElement.basis(fockmono))
    return tuple(((mono, w, p), c) for mono, c in felem)


def h_act_full(n, s):
    """H(n) on V: the Fock Heisenberg for n != 0, the charge eigenvalue 2p
    for n = 0."""
    return s.map_basis(lambda key: _h_basis(n, *key))


def c_act(s):
    return s.scale(-2)


def term_d_eig(fockmono, w, p):
    """d-eigenvalue of a basis triple: -(Fock degree) - (wedge degree)
    - p^2/2."""
    return Fraction(-sum(fockmono)) - w.degree() + lattice.lattice_d_eig(p)


def d_act(s):
    return s.map_basis(lambda key: (((key), term_d_eig(*key)),))


def chevalley_act(g, s):
    table = {
        "e0": lambda t: y_act(1, t),
        "e1": lambda t: x_act(0, t),
        "f0": lambda t: x_act(-1, t),
        "f1": lambda t: y_act(0, t),
        "h0": lambda t: c_act(t) - h_act_full(0, t),
        "h1": lambda t: h_act_full(0, t),
    }
    if g not in table:
        raise ValueError(f"unknown generator {g!r}")
    return table[g](s)


def _eigenvalue(op, s):
    res = op(s)
    key, c = next(iter(s.terms.items()))
    lam = res.coeff(key) / c
    if res != s.scale(lam):
        raise NotAWeightVector("state is not an eigenvector")
    return lam


def weight_of(s):
    """Eigenvalue triple (h0, h1, d) of a simultaneous eigenvector."""
    if not s:
        raise NotAWeightVector("zero state has no weight")
    return WeightTriple(
        h0=_eigenvalue(lambda t: chevalley_act("h0", t), s),
        h1=_eigenvalue(lambda t: chevalley_act("h1", t), s),
        d=_eigenvalue(d_act, s),
    )


def state_to_json(s):
    terms = []
    for (mono, w, p), c in sorted(
            s.terms.items(),
            key=lambda kv: (sum(kv[0][0]) + kv[0][1].degree(), kv[0][2],
                            kv[0][0], kv[0][1].neg, kv[0][1].holes)):
        terms.append({
            "coeff": format_rational(c),
            "fock": fock.serialize_monomial(mono),
            "wedge": wedge.serialize_basis(w),
            "charge": p,
        })
    return {"terms": terms}


def state_from_json(data):
    out = {}
    for term in data["terms"]:
        key = (fock.parse_monomial(term["fock"]),
               wedge.parse_basis(term["wedge"]),
               int(term["charge"]))
        accumulate(out, key, parse_rational(term["coeff"]))
    return State(out)
