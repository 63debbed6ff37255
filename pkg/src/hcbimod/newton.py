"""Newton's identities between power sums and monic polynomials.

Polynomials are coefficient tuples in descending order, leading 1 first:
``(1, -3, 2)`` is z^2 - 3z + 2.
"""
from __future__ import annotations

from fractions import Fraction


def poly_from_power_sums(p):
    """Monic polynomial whose root multiset has power sums p_1..p_m."""
    p = [Fraction(x) if isinstance(x, int) else x for x in p]
    m = len(p)
    e = [Fraction(1)]
    for k in range(1, m + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            term = e[k - i] * p[i - 1]
            acc = acc + term if i % 2 == 1 else acc - term
        e.append(acc / k)
    return tuple(e[k] if k % 2 == 0 else -e[k] for k in range(m + 1))


def power_sums_from_poly(coeffs, K: int):
    """Power sums p_0..p_K of the roots of a monic polynomial, no root finding."""
    coeffs = tuple(coeffs)
    if coeffs[0] != 1:
        raise ValueError("polynomial must be monic")
    m = len(coeffs) - 1
    a = coeffs[1:]
    p = [Fraction(m)]
    for k in range(1, K + 1):
        acc = k * a[k - 1] if k <= m else Fraction(0)
        for i in range(1, min(k - 1, m) + 1):
            acc = acc + a[i - 1] * p[k - i]
        p.append(-acc)
    return tuple(p)


def poly_from_roots(roots):
    c = [Fraction(1)]
    for x in roots:
        c = [a - x * b for a, b in zip(c + [Fraction(0)], [Fraction(0)] + c)]
    return tuple(c)
