"""Restricted semi-infinite wedge space and the Clifford-like oscillators.

A basis vector is a perturbation of the fixed vacuum word
u_{-1/2} ^ u_{3/2} ^ u_{5/2} ^ ... : a finite set of extra negative
factors and a finite set of omitted positive factors ("holes").  The slot
-1/2 is always present and 1/2 always absent; both are protected
automatically because the oscillator scalars (m - 1/2) vanish at the
modes that would touch them.

Indices are stored as doubled values (odd ints).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linear import LinearCombination
from .scalars import HalfInt, contraction_coeff


@dataclass(frozen=True)
class WedgeBasis:
    """Finite encoding of a semi-infinite wedge.

    neg: ascending tuple of doubled indices of the extra included factors,
         each <= -3 (value < -1/2).
    holes: ascending tuple of doubled indices of the omitted positive
         factors, each >= 3 (value > 1/2).
    """

    neg: tuple
    holes: tuple

    def __post_init__(self):
        for t in self.neg:
            if t % 2 == 0 or t > -3:
                raise ValueError(f"bad neg entry {t}/2")
        for t in self.holes:
            if t % 2 == 0 or t < 3:
                raise ValueError(f"bad hole entry {t}/2")
        if tuple(sorted(self.neg)) != self.neg or len(set(self.neg)) != len(self.neg):
            raise ValueError("neg must be strictly ascending")
        if tuple(sorted(self.holes)) != self.holes or len(set(self.holes)) != len(self.holes):
            raise ValueError("holes must be strictly ascending")

    def supports(self, t):
        """Is the doubled index t in the support of this wedge?"""
        if t % 2 == 0:
            return False
        if t < -1:
            return t in self.neg
        if t == -1:
            return True
        if t == 1:
            return False
        return t not in self.holes

    def support_below(self, t):
        """Number of support elements strictly below doubled index t."""
        count = sum(1 for s in self.neg if s < t)
        if t > -1:
            count += 1
        if t > 3:
            count += (t - 3) // 2 if t % 2 else (t - 2) // 2
            count -= sum(1 for s in self.holes if s < t)
        return count

    @property
    def charge(self):
        return len(self.neg) - len(self.holes)

    def degree(self):
        """Nonnegative integer grade: sum of depths of perturbations."""
        return (sum((-t - 1) // 2 for t in self.neg)
                + sum((t - 1) // 2 for t in self.holes))


VACUUM = WedgeBasis((), ())


class WedgeElement(LinearCombination):
    """Finite rational combination of wedge basis vectors."""


def wedge_deg(w):
    return w.degree()


def a_act(m, w):
    """Oscillator A(m): (m - 1/2) u_m ^ w, reordered into canonical form."""
    t = m.twice
    if t % 2 == 0:
        raise ValueError("mode must lie in Z+1/2")
    if t == 1:
        return WedgeElement.zero()
    if w.supports(t):
        return WedgeElement.zero()
    if t > 1 and t not in w.holes:
        return WedgeElement.zero()
    scalar = Fraction(t - 1, 2)
    sign = -1 if w.support_below(t) % 2 else 1
    if t < -1:
        new = WedgeBasis(tuple(sorted(w.neg + (t,))), w.holes)
    else:
        new = WedgeBasis(w.neg, tuple(s for s in w.holes if s != t))
    return WedgeElement.basis(new, sign * scalar)


def astar_act(m, w):
    """Oscillator A*(m): (m - 1/2) times removal of the factor u_{-m}."""
    t = m.twice
    if t % 2 == 0:
        raise ValueError("mode must lie in Z+1/2")
    if t == 1:
        return WedgeElement.zero()
    r = -t  # index being removed
    if not w.supports(r):
        return WedgeElement.zero()
    scalar = Fraction(t - 1, 2)
    sign = -1 if w.support_below(r) % 2 else 1
    if r < -1:
        new = WedgeBasis(tuple(s for s in w.neg if s != r), w.holes)
    else:
        new = WedgeBasis(w.neg, tuple(sorted(w.holes + (r,))))
    return WedgeElement.basis(new, sign * scalar)


_ACTIONS = {"A": a_act, "A*": astar_act}


def apply_mode(kind, m, elem):
    """Linear extension of a_act / astar_act to a WedgeElement."""
    act = _ACTIONS[kind]
    return elem.map_basis(lambda w: act(m, w))


def normal_ordered_pair(akind, m, bkind, n, w):
    """:a(m)b(n): on a basis wedge -- plain composition for m < 0, the
    negated swapped composition for m > 0."""
    if akind not in _ACTIONS or bkind not in _ACTIONS:
        raise ValueError("operator kind must be 'A' or 'A*'")
    if m.twice < 0:
        inner = _ACTIONS[bkind](n, w)
        return apply_mode(akind, m, inner)
    inner = _ACTIONS[akind](m, w)
    return -apply_mode(bkind, n, inner)


def contraction_check(akind, m, bkind, n, w):
    """a(m)b(n) - :a(m)b(n): on a basis wedge; scalar times w when the pair
    is an (A, A*) pair at opposite modes, zero otherwise."""
    plain = apply_mode(akind, m, _ACTIONS[bkind](n, w))
    return plain - normal_ordered_pair(akind, m, bkind, n, w)


def serialize_basis(w):
    return {
        "neg": [str(HalfInt(t)) for t in w.neg],
        "holes": [str(HalfInt(t)) for t in w.holes],
    }


def parse_basis(data):
    neg = tuple(sorted(HalfInt.from_string(s).twice for s in data.get("neg", [])))
    holes = tuple(sorted(HalfInt.from_string(s).twice for s in data.get("holes", [])))
    return WedgeBasis(neg, holes)
