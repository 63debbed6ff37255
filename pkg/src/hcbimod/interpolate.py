"""Finite-rank weight pairs realizing a witness.

Given a witness (B, C) and a character psi, for every rank n > r + s we
build mu^(n) = (b_1..b_r, a_1..a_m, c_s + 1, ..., c_1 + 1), m = n - r - s,
where the middle block a is chosen so that the first m power sums of
mu^(n) equal psi_1..psi_m, and lambda^(n) = mu^(n) + e_1 + ... + e_r -
e_{n-s+1} - ... - e_n.  The middle block is the root multiset of a monic
polynomial obtained from Newton's identities; when that polynomial does not
split over Q it is kept symbolically and every check goes through its power
sums.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
import sympy

from .charcenter import CentralCharacter, Weight
from .errors import HCError, NeedMoreOrders
from .newton import poly_from_power_sums, poly_from_roots, power_sums_from_poly
from .series import DEFAULT_TOL, all_exact, close, format_scalar, promote, scalar_key
from .witness import Witness

_z = sympy.Symbol("z")


@dataclass(frozen=True)
class NodeMultiset:
    """Root multiset of the monic polynomial ``poly`` (descending coefficients).

    ``roots`` holds the exact roots (with repetition) when ``poly`` splits
    over Q, otherwise None; ``approx_roots`` always holds numeric roots.
    """

    poly: tuple
    roots: Optional[tuple] = None
    approx_roots: tuple = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.poly) - 1

    @property
    def explicit(self) -> bool:
        return self.roots is not None

    def power_sums(self, K: int) -> tuple:
        """p_1..p_K straight from the coefficients."""
        return power_sums_from_poly(self.poly, K)[1:]

    @classmethod
    def from_roots(cls, roots) -> "NodeMultiset":
        roots = tuple(sorted((promote(x) for x in roots), key=scalar_key))
        if all_exact(roots):
            return cls(poly_from_roots(roots), roots, tuple(complex(x) for x in roots))
        c = np.poly(np.array([complex(x) for x in roots])) if roots else np.array([1.0])
        return cls(tuple(complex(v) for v in c), None, tuple(complex(x) for x in roots))


def _split_over_q(poly) -> Optional[tuple]:
    if len(poly) == 1:
        return ()
    P = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in poly], _z, domain="QQ")
    _, factors = P.factor_list()
    roots = []
    for f, mult in factors:
        if f.degree() != 1:
            return None
        f = f.monic()
        root = -f.all_coeffs()[1]
        roots.extend([Fraction(int(root.p), int(root.q))] * mult)
    return tuple(sorted(roots))


def powersum_complete(targets: Sequence, fixed: Sequence = ()) -> NodeMultiset:
    """Multiset {x_1..x_m} such that fixed + x has power sums targets_1..targets_m."""
    targets = [promote(v) for v in targets]
    fixed = [promote(v) for v in fixed]
    m = len(targets)
    residual = [targets[k - 1] - sum((v ** k for v in fixed), Fraction(0)) for k in range(1, m + 1)]
    poly = poly_from_power_sums(residual)
    approx_roots = tuple(complex(x) for x in np.roots(np.array([complex(c) for c in poly]))) if m else ()
    if all_exact(poly):
        roots = _split_over_q(poly)
        if roots is not None:
            approx_roots = tuple(complex(x) for x in roots)
        return NodeMultiset(tuple(poly), roots, approx_roots)
    return NodeMultiset(tuple(poly), None, approx_roots)


@dataclass(frozen=True)
class FamilyEntry:
    n: int
    head: tuple  # b_1..b_r
    middle: NodeMultiset  # a_1..a_m
    tail: tuple  # c_s + 1, ..., c_1 + 1

    @property
    def r(self) -> int:
        return len(self.head)

    @property
    def s(self) -> int:
        return len(self.tail)

    @property
    def valid_order(self) -> int:
        return self.n - self.r - self.s

    @property
    def lam_head(self) -> tuple:
        return tuple(b + 1 for b in self.head)

    @property
    def lam_tail(self) -> tuple:
        return tuple(c - 1 for c in self.tail)

    def mu(self) -> Optional[Weight]:
        if not self.middle.explicit:
            return None
        return Weight(self.head + self.middle.roots + self.tail)

    def lam(self) -> Optional[Weight]:
        if not self.middle.explicit:
            return None
        return Weight(self.lam_head + self.middle.roots + self.lam_tail)

    def _power_sums(self, outer, K):
        mid = self.middle.power_sums(K)
        return tuple(sum((v ** k for v in outer), Fraction(0)) + mid[k - 1] for k in range(1, K + 1))

    def mu_power_sums(self, K: int) -> tuple:
        return self._power_sums(self.head + self.tail, K)

    def lam_power_sums(self, K: int) -> tuple:
        return self._power_sums(self.lam_head + self.lam_tail, K)

    def to_json(self) -> dict:
        mid = (self.middle.roots if self.middle.explicit else self.middle.approx_roots)
        out = {
            "n": self.n,
            "lambda": [format_scalar(v) for v in self.lam_head + tuple(mid) + self.lam_tail],
            "mu": [format_scalar(v) for v in self.head + tuple(mid) + self.tail],
            "valid_order": self.valid_order,
        }
        if not self.middle.explicit:
            out["middle_poly"] = [format_scalar(c) for c in self.middle.poly]
        return out


@dataclass(frozen=True)
class WeightFamily:
    r: int
    s: int
    entries: tuple = ()

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "entries": [e.to_json() for e in self.entries]}


def build_weight_family(witness: Witness, psi: CentralCharacter, n_range) -> WeightFamily:
    """One entry per n in ``n_range`` (inclusive pair ``(lo, hi)``) with n > r + s."""
    if witness.algebraic:
        raise HCError("weight families need explicit witness nodes")
    lo, hi = n_range
    B = tuple(witness.B)
    tail = tuple(c + 1 for c in reversed(witness.C))
    r, s = len(B), len(tail)
    fixed = B + tail
    entries = []
    for n in range(max(lo, r + s + 1), hi + 1):
        m = n - r - s
        if psi.order < m:
            raise NeedMoreOrders(m, f"psi is known to order {psi.order}, rank {n} needs {m}")
        middle = powersum_complete(psi.moments.values[:m], fixed)
        entries.append(FamilyEntry(n, B, middle, tail))
    return WeightFamily(r, s, tuple(entries))


@dataclass
class FamilyReport:
    passed: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)  # (n, k, "lambda" | "mu")

    def to_json(self) -> dict:
        return {"status": "pass" if self.passed else "fail", "checked": self.checked,
                "failures": [{"n": n, "k": k, "which": w} for n, k, w in self.failures]}


def verify_weight_family(family: WeightFamily, chi: CentralCharacter, psi: CentralCharacter,
                         tol: float = DEFAULT_TOL) -> FamilyReport:
    """Power sums of lambda^(n), mu^(n) against chi, psi for k <= min(K, n - r - s)."""
    report = FamilyReport()
    for e in family.entries:
        K = min(chi.order, psi.order, e.valid_order)
        lam_p = e.lam_power_sums(K)
        mu_p = e.mu_power_sums(K)
        for k in range(1, K + 1):
            report.checked += 2
            if not close(lam_p[k - 1], chi.moments.values[k - 1], tol):
                report.failures.append((e.n, k, "lambda"))
            if not close(mu_p[k - 1], psi.moments.values[k - 1], tol):
                report.failures.append((e.n, k, "mu"))
    report.passed = not report.failures
    return report
