"""Scalars, shift polynomials and the exponential-generating-function algebra.

Two scalar flavours are used throughout the package:

* exact: :class:`fractions.Fraction` (``int`` is accepted and promoted);
* approx: Python ``complex`` with a caller-supplied tolerance.

A central character is stored through its moments ``chi_1 .. chi_K`` (the
index-0 entry is implicit), and its generating function is
``(1/(e^u - 1)) * sum_k chi_k u^k / k!``.  For a *difference* of characters
the implicit zeroth moment is 0, so the division by ``e^u - 1`` is a plain
triangular recurrence; see :func:`divide_by_expm1`.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

Scalar = Union[Fraction, complex]

DEFAULT_TOL = 1e-9

CHARACTER = "character"
DIFFERENCE = "difference"


# -- scalars -----------------------------------------------------------------

def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(values: Iterable) -> bool:
    return all(is_exact(v) for v in values)


def exact(x) -> Fraction:
    """Coerce an int/Fraction/'p/q' string to a Fraction; reject floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


def approx(x) -> complex:
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return complex(float(x[0]), float(x[1]))
    if isinstance(x, str):
        return complex(float(Fraction(x.strip())))
    if isinstance(x, numbers.Number):
        return complex(x)
    raise TypeError(f"not a scalar: {x!r}")


def parse_scalar(x, mode: str = "exact") -> Scalar:
    """Decode the JSON scalar encoding.

    Rationals are strings ``"p/q"`` or ``"p"`` (JSON integers are accepted
    too); approximate scalars are ``[re, im]`` pairs.  In exact mode anything
    that is not a rational raises ``TypeError``; in float mode rationals stay
    exact so the exact kernels can still be used downstream.
    """
    if mode == "exact":
        if isinstance(x, float):
            raise TypeError(f"exact mode rejects float literal {x!r}")
        return exact(x)
    if mode != "float":
        raise ValueError(f"unsupported mode {mode!r}")
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        try:
            return exact(x)
        except ValueError:
            return approx(x)
    return approx(x)


def format_scalar(x):
    """Inverse of :func:`parse_scalar` (canonical reduced ``p/q`` for rationals)."""
    if is_exact(x):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    z = complex(x)
    return [z.real + 0.0, z.imag + 0.0]


def scalar_key(x):
    """Total order used to sort node multisets deterministically."""
    if is_exact(x):
        return (0, Fraction(x), 0.0)
    z = complex(x)
    return (1, z.real, z.imag)


def close(a, b, tol: float = DEFAULT_TOL) -> bool:
    """Exact equality for rationals, max-norm tolerance otherwise."""
    if is_exact(a) and is_exact(b):
        return Fraction(a) == Fraction(b)
    d = complex(a) - complex(b)
    return max(abs(d.real), abs(d.imag)) <= tol


# -- shift polynomials -------------------------------------------------------

def pk_eval(k: int, b):
    """``(b+1)^k - b^k``: the jump of the k-th power sum when one entry b grows by 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return (b + 1) ** k - b ** k


def pbar_eval(k: int, c):
    """``(c-1)^k - c^k``, i.e. ``-pk_eval(k, c - 1)``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return (c - 1) ** k - c ** k


# -- sequences ---------------------------------------------------------------

@dataclass(frozen=True)
class MomentSequence:
    """Moments d_1..d_K; d_0 is implicit (1 for characters, 0 for differences)."""

    values: tuple
    kind: str = DIFFERENCE

    def __post_init__(self):
        if self.kind not in (CHARACTER, DIFFERENCE):
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "values", tuple(promote(v) for v in self.values))

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def exact(self) -> bool:
        return all_exact(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def moment(self, k: int):
        """1-based access; ``moment(0)`` returns the implicit entry."""
        if k == 0:
            return Fraction(1) if self.kind == CHARACTER else Fraction(0)
        return self.values[k - 1]

    def __add__(self, other: "MomentSequence") -> "MomentSequence":
        if self.order != other.order:
            raise ValueError("orders differ")
        return MomentSequence(tuple(a + b for a, b in zip(self.values, other.values)), DIFFERENCE)

    def truncate(self, K: int) -> "MomentSequence":
        return MomentSequence(self.values[:K], self.kind)


@dataclass(frozen=True)
class TaylorSeq:
    """Coefficients of g(u) = sum_j t_j u^j / j!; t_0 is stored explicitly."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(promote(v) for v in self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    @property
    def exact(self) -> bool:
        return all_exact(self.coeffs)


def promote(v):
    if isinstance(v, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, (Fraction, complex)):
        return v
    if isinstance(v, float):
        return complex(v)
    if isinstance(v, str):
        return Fraction(v)
    return v


def moments_from_witness(B: Iterable, C: Iterable, K: int) -> MomentSequence:
    """d_k = sum_{b in B} P_k(b) - sum_{c in C} P_k(c), k = 1..K.

    This is the moment sequence of ``(e^u - 1)(sum e^{bu} - sum e^{cu})``.
    """
    if K < 1:
        raise ValueError("K must be positive")
    B = [promote(b) for b in B]
    C = [promote(c) for c in C]
    values = []
    for k in range(1, K + 1):
        values.append(sum((pk_eval(k, b) for b in B), Fraction(0))
                      - sum((pk_eval(k, c) for c in C), Fraction(0)))
    return MomentSequence(tuple(values), DIFFERENCE)


def divide_by_expm1(d: MomentSequence) -> TaylorSeq:
    """Solve d_k = sum_{j<k} C(k, j) t_j for t_0..t_{K-1}.

    Multiplying g(u) = sum t_j u^j/j! by (e^u - 1) gives the series whose
    k-th EGF coefficient is that binomial sum, so this undoes the formal
    1/(e^u - 1) factor of a character difference.
    """
    if d.kind != DIFFERENCE:
        raise ValueError("divide_by_expm1 needs a difference sequence (implicit d_0 = 0)")
    t: list = []
    for k in range(1, d.order + 1):
        acc = d.values[k - 1]
        for j in range(k - 1):
            acc = acc - comb(k, j) * t[j]
        t.append(acc / k)
    return TaylorSeq(tuple(t))


def multiply_by_expm1(t: Sequence) -> MomentSequence:
    """Inverse of :func:`divide_by_expm1`."""
    t = [promote(x) for x in t]
    values = []
    for k in range(1, len(t) + 1):
        values.append(sum((comb(k, j) * t[j] for j in range(k)), Fraction(0)))
    return MomentSequence(tuple(values), DIFFERENCE)


def signed_power_sums(B: Iterable, C: Iterable, N: int) -> tuple:
    """t_j = sum_B b^j - sum_C c^j for j < N (0^0 = 1)."""
    B = [promote(b) for b in B]
    C = [promote(c) for c in C]
    return tuple(sum((b ** j for b in B), Fraction(0)) - sum((c ** j for c in C), Fraction(0))
                 for j in range(N))
