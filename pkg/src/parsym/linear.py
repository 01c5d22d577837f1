"""Free Z-modules on hashable basis keys, shared by all element types.

An element is a finite map key -> nonzero int.  Subclasses fix the basis
product through ``_mul_key`` (all products here send basis elements to
single basis elements, so no signs or expansions appear at this level).
Instances are treated as immutable: operations always build fresh dicts.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LinearCombination:
    __slots__ = ("terms",)

    terms: dict

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data = {}
        for key, coeff in items:
            if coeff:
                data[key] = data.get(key, 0) + coeff
                if not data[key]:
                    del data[key]
        self.terms = data

    @staticmethod
    def _mul_key(left, right):
        raise TypeError("this element type has no product")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, key, coeff: int = 1):
        return cls({key: coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        data = dict(self.terms)
        for key, coeff in other.terms.items():
            value = data.get(key, 0) + coeff
            if value:
                data[key] = value
            else:
                data.pop(key, None)
        out = type(self).__new__(type(self))
        out.terms = data
        return out

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return type(self)()
        out = type(self).__new__(type(self))
        out.terms = {key: scalar * coeff for key, coeff in self.terms.items()}
        return out

    def __mul__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        data: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = self._mul_key(k1, k2)
                value = data.get(key, 0) + c1 * c2
                if value:
                    data[key] = value
                else:
                    del data[key]
        out = type(self).__new__(type(self))
        out.terms = data
        return out

    def coefficient(self, key) -> int:
        return self.terms.get(key, 0)

    def __repr__(self) -> str:
        name = type(self).__name__
        return f"{name}({self.terms!r})"
