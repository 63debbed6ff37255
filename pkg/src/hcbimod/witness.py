"""Witness multisets for chi(u) - psi(u) = sum e^{b u} - sum e^{c u}."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .series import format_scalar, parse_scalar, scalar_key


@dataclass(frozen=True)
class AlgebraicNodes:
    """All roots of an irreducible rational polynomial, each carrying ``weight``."""

    poly: tuple  # descending, monic
    weight: int

    @property
    def degree(self) -> int:
        return len(self.poly) - 1


@dataclass(frozen=True)
class Witness:
    """Reduced witness: B and C are sorted node tuples with B and C disjoint.

    Nodes are plain (the e^{c u} normalization, not e^{(c-1)u}).  Irrational
    nodes are kept as whole Galois orbits in ``algebraic``.
    """

    B: tuple = ()
    C: tuple = ()
    algebraic: tuple = field(default=())

    @classmethod
    def reduced(cls, B, C, algebraic=()):
        cb, cc = Counter(B), Counter(C)
        common = cb & cc
        cb -= common
        cc -= common
        return cls(tuple(sorted(cb.elements(), key=scalar_key)),
                   tuple(sorted(cc.elements(), key=scalar_key)),
                   tuple(sorted(algebraic, key=lambda a: ([str(c) for c in a.poly], a.weight))))

    @property
    def r(self) -> int:
        return len(self.B) + sum(a.weight * a.degree for a in self.algebraic if a.weight > 0)

    @property
    def s(self) -> int:
        return len(self.C) + sum(-a.weight * a.degree for a in self.algebraic if a.weight < 0)

    @property
    def is_empty(self) -> bool:
        return not self.B and not self.C and not self.algebraic

    def to_json(self) -> dict:
        return {
            "B": [format_scalar(b) for b in self.B],
            "C": [format_scalar(c) for c in self.C],
            "algebraic": [{"poly": [format_scalar(c) for c in a.poly], "weight": a.weight}
                          for a in self.algebraic],
        }

    @classmethod
    def from_json(cls, obj: dict, mode: str = "exact") -> "Witness":
        alg = tuple(AlgebraicNodes(tuple(Fraction(c) for c in a["poly"]), int(a["weight"]))
                    for a in obj.get("algebraic", ()))
        return cls.reduced([parse_scalar(b, mode) for b in obj.get("B", ())],
                           [parse_scalar(c, mode) for c in obj.get("C", ())], alg)
