"""PBW normal forms in U(gl_n).

Generators E_ij are numbered in the fixed PBW order: strictly lower
(i > j) first, then the diagonal, then strictly upper (i < j), each block
in lexicographic order.  A PBW monomial is a non-decreasing tuple of
generator numbers.  Straightening repeatedly rewrites an adjacent inversion
``ab`` as ``ba + [a, b]`` with [E_ij, E_kl] = d_jk E_il - d_li E_kj.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import InvalidGenerator


@lru_cache(maxsize=None)
def generators(n: int) -> tuple:
    """(i, j) pairs (1-based) in PBW order."""
    lower = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i > j]
    diag = [(i, i) for i in range(1, n + 1)]
    upper = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i < j]
    return tuple(lower + diag + upper)


@lru_cache(maxsize=None)
def _index(n: int) -> dict:
    return {g: a for a, g in enumerate(generators(n))}


def n_lower(n: int) -> int:
    return n * (n - 1) // 2


def gen_index(n: int, i: int, j: int) -> int:
    try:
        return _index(n)[(i, j)]
    except KeyError:
        raise InvalidGenerator(f"E_{i}{j} is not a generator of gl_{n}") from None


@lru_cache(maxsize=None)
def _bracket(n: int, a: int, b: int) -> tuple:
    (i, j), (k, l) = generators(n)[a], generators(n)[b]
    out = defaultdict(int)
    if j == k:
        out[gen_index(n, i, l)] += 1
    if l == i:
        out[gen_index(n, k, j)] -= 1
    return tuple((g, c) for g, c in out.items() if c)


@lru_cache(maxsize=None)
def _normal_form(n: int, word: tuple, strategy: str) -> tuple:
    if strategy == "left":
        positions = range(len(word) - 1)
    else:
        positions = range(len(word) - 2, -1, -1)
    for p in positions:
        if word[p] > word[p + 1]:
            break
    else:
        return ((word, Fraction(1)),)
    a, b = word[p], word[p + 1]
    acc = defaultdict(Fraction)
    for mono, c in _normal_form(n, word[:p] + (b, a) + word[p + 2:], strategy):
        acc[mono] += c
    for g, c0 in _bracket(n, a, b):
        for mono, c in _normal_form(n, word[:p] + (g,) + word[p + 2:], strategy):
            acc[mono] += c0 * c
    return tuple(sorted((m, c) for m, c in acc.items() if c))


def normal_form(n: int, word: tuple, strategy: str = "left") -> tuple:
    """Normal form of a word of generator numbers as ((monomial, coeff), ...)."""
    if strategy not in ("left", "right"):
        raise ValueError(f"unknown strategy {strategy!r}")
    return _normal_form(n, tuple(word), strategy)


@dataclass(frozen=True)
class UEAElement:
    """Finite combination of PBW monomials; ``terms`` is sorted, zero-free."""

    n: int
    terms: tuple = ()

    @classmethod
    def from_dict(cls, n: int, d) -> "UEAElement":
        return cls(n, tuple(sorted((m, Fraction(c)) for m, c in d.items() if c)))

    @classmethod
    def scalar(cls, n: int, c) -> "UEAElement":
        return cls.from_dict(n, {(): c})

    @classmethod
    def gen(cls, n: int, i: int, j: int) -> "UEAElement":
        return cls(n, (((gen_index(n, i, j),), Fraction(1)),))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, UEAElement):
            other = UEAElement.scalar(self.n, other)
        d = defaultdict(Fraction, self.terms)
        for m, c in other.terms:
            d[m] += c
        return UEAElement.from_dict(self.n, d)

    __radd__ = __add__

    def __neg__(self):
        return UEAElement(self.n, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, UEAElement):
            other = UEAElement.scalar(self.n, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UEAElement):
            return UEAElement.from_dict(self.n, {m: c * other for m, c in self.terms})
        d = defaultdict(Fraction)
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                for m, c in normal_form(self.n, m1 + m2):
                    d[m] += c1 * c2 * c
        return UEAElement.from_dict(self.n, d)

    def __rmul__(self, c):
        return self * c

    def weight(self, mono) -> tuple:
        w = [0] * self.n
        for g in mono:
            i, j = generators(self.n)[g]
            w[i - 1] += 1
            w[j - 1] -= 1
        return tuple(w)

    def is_weight_preserving(self) -> bool:
        zero = (0,) * self.n
        return all(self.weight(m) == zero for m, _ in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            word = "".join(f"E{i}{j}" for i, j in (generators(self.n)[g] for g in m)) or "1"
            parts.append(f"{c}*{word}")
        return " + ".join(parts)


def straighten(expr: Iterable, n: int, strategy: str = "left") -> UEAElement:
    """PBW normal form of the formal product of generators ``expr`` = [(i, j), ...]."""
    if n < 1:
        raise ValueError("n must be positive")
    word = tuple(gen_index(n, i, j) for i, j in expr)
    return UEAElement.from_dict(n, dict(normal_form(n, word, strategy)))


def rho_norm2(n: int) -> Fraction:
    """<rho, rho> = sum_i ((n + 1 - 2i)/2)^2"""
    return sum((Fraction(n + 1 - 2 * i, 2) ** 2 for i in range(1, n + 1)), Fraction(0))


def casimir2(n: int) -> UEAElement:
    """sum_{i,j} E_ij E_ji + <rho, rho>; acts on M_lambda by sum lambda_i^2."""
    acc = UEAElement.scalar(n, rho_norm2(n))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            acc = acc + straighten([(i, j), (j, i)], n)
    return acc


def commutator(x: UEAElement, y: UEAElement) -> UEAElement:
    return x * y - y * x
