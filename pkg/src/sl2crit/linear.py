"""Finite rational linear combinations over hashable basis keys.

Shared machinery for Fock elements, wedge elements, full states and
vacuum-space states.  Zero coefficients are never stored; equality is
exact.
"""

from __future__ import annotations

from fractions import Fraction


class LinearCombination:
    """Immutable finite map basis-key -> Fraction with vector-space ops."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[key] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def basis(cls, key, coeff=1):
        return cls({key: Fraction(coeff)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coeff(self, key):
        return self.terms.get(key, Fraction(0))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return type(self)(out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) - c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return type(self)(out)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def scale(self, scalar):
        scalar = Fraction(scalar)
        if not scalar:
            return type(self)({})
        return type(self)({k: c * scalar for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def map_basis(self, fn):
        """Apply a linear map given on basis keys: fn(key) -> combination."""
        out = {}
        for key, c in self.terms.items():
            for key2, c2 in fn(key):
                s = out.get(key2, 0) + c * c2
                if s:
                    out[key2] = s
                else:
                    out.pop(key2, None)
        return type(self)(out)

    def __eq__(self, other):
        return type(other) is type(self) and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"{type(self).__name__}(0)"
        parts = [f"{c}*{k!r}" for k, c in sorted(
            self.terms.items(), key=lambda kv: repr(kv[0]))]
        return f"{type(self).__name__}({' + '.join(parts)})"


def accumulate(target, key, coeff):
    """In-place add into a plain dict used as an accumulator."""
    s = target.get(key, 0) + coeff
    if s:
        target[key] = s
    else:
        target.pop(key, None)
