"""Recover chi(u) - psi(u) as a signed integer exponential polynomial.

After dividing the moment difference by (e^u - 1) the target is a sequence
t_j = sum_x n_x x^j with integer weights n_x.  Such a sequence satisfies the
linear recurrence whose characteristic polynomial q has the nodes x as
simple roots, so the pipeline is: minimal recurrence (Hankel system) ->
square-free test -> per-factor weights -> witness.

On the exact path q is factored over the rationals.  Integer weights are
fixed by every field automorphism, so all roots of one irreducible factor f
share a weight m_f; it is read off from the partial fraction
sum_x n_x/(z - x) = R(z)/q(z) as the constant R/q' mod f.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np
import sympy

from .charcenter import CentralCharacter, character_difference
from .errors import (HCError, NeedMoreOrders, NonIntegerWeight, NotPureExponential,
                     RankExceedsBound)
from .linalg import rank as exact_rank, solve
from .newton import power_sums_from_poly
from .series import (DEFAULT_TOL, MomentSequence, TaylorSeq, divide_by_expm1,
                     moments_from_witness, multiply_by_expm1)
from .witness import AlgebraicNodes, Witness

NONZERO_WITNESS = "NONZERO_WITNESS"
NO_WITNESS_WITHIN_BOUND = "NO_WITNESS_WITHIN_BOUND"
NOT_EXPONENTIAL_FORM = "NOT_EXPONENTIAL_FORM"
INCONCLUSIVE = "INCONCLUSIVE"

_z = sympy.Symbol("z")


@dataclass(frozen=True)
class PronyKernel:
    """Minimal annihilating recurrence of a sequence.

    ``q`` is monic, descending coefficients; ``rank`` is None when no
    recurrence of degree <= ``bound`` annihilates the whole sequence.
    """

    rank: Optional[int]
    q: tuple
    square_free: bool
    bound: int
    length: int
    exact: bool
    rank_profile: tuple = ()

    @property
    def exceeds_bound(self) -> bool:
        return self.rank is None


@dataclass(frozen=True)
class ExponentialPolynomial:
    """sum_x n_x e^{x u}.

    ``exact_terms``: (irreducible monic rational polynomial, weight) pairs;
    every root of the polynomial carries the weight.
    ``approx_terms``: (complex node, weight) pairs.
    """

    exact_terms: tuple = ()
    approx_terms: tuple = ()

    @property
    def node_count(self) -> int:
        return sum(len(f) - 1 for f, _ in self.exact_terms) + len(self.approx_terms)

    def taylor(self, N: int) -> tuple:
        """t_0..t_{N-1}; exact terms use Newton power sums, no root extraction."""
        out = [Fraction(0)] * N
        for f, m in self.exact_terms:
            p = power_sums_from_poly(f, N - 1)
            for j in range(N):
                out[j] += m * p[j]
        for x, m in self.approx_terms:
            for j in range(N):
                out[j] = out[j] + m * x ** j
        return tuple(out)


# -- minimal recurrence ------------------------------------------------------

def _as_sequence(t):
    return t.coeffs if isinstance(t, TaylorSeq) else tuple(TaylorSeq(tuple(t)).coeffs)


def _sympy_poly(desc):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in desc], _z, domain="QQ")


def _from_sympy(poly) -> tuple:
    return tuple(Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs())


def _exact_square_free(q) -> bool:
    if len(q) <= 2:
        return True
    p = _sympy_poly(q)
    return p.gcd(p.diff(_z)).degree() == 0


def hankel_rank_profile(t) -> tuple:
    """Exact ranks of the leading square Hankel matrices [t_{i+j}]_{i,j<k}."""
    N = len(t)
    return tuple(exact_rank([[t[i + j] for j in range(k)] for i in range(k)])
                 for k in range(1, (N + 1) // 2 + 1))


def hankel_rank_and_recurrence(t, L: int, tol: float = DEFAULT_TOL) -> PronyKernel:
    """Minimal monic q of degree <= L with sum_a q_a t_{m+a} = 0 on the whole sequence.

    Needs at least 2L terms so that a recurrence of degree rho <= L is
    pinned down by the Hankel system.  Exact sequences are solved over the
    rationals; anything else goes through an SVD on a rescaled sequence.
    """
    t = _as_sequence(t)
    N = len(t)
    if L < 0:
        raise ValueError("L must be non-negative")
    if N < 2 * L:
        raise NeedMoreOrders(2 * L)
    if all(isinstance(v, Fraction) for v in t):
        return _exact_kernel(t, L)
    return _approx_kernel(t, L, tol)


def _exact_kernel(t, L):
    N = len(t)
    profile = hankel_rank_profile(t)
    for rho in range(L + 1):
        if rho == 0:
            if all(v == 0 for v in t):
                return PronyKernel(0, (Fraction(1),), True, L, N, True, profile)
            continue
        a = [[t[m + i] for i in range(rho)] for m in range(N - rho)]
        b = [-t[m + rho] for m in range(N - rho)]
        sol = solve(a, b)
        if sol is not None:
            q = (Fraction(1),) + tuple(reversed(sol))
            return PronyKernel(rho, q, _exact_square_free(q), L, N, True, profile)
    return PronyKernel(None, (), False, L, N, True, profile)


def _node_scale(x) -> float:
    mags = [abs(x[j]) ** (1.0 / j) for j in range(1, len(x)) if abs(x[j]) > 0]
    return max([1.0] + mags)


def _approx_kernel(t, L, tol):
    x = np.array([complex(v) for v in t])
    N = len(x)
    s = _node_scale(x)
    y = x / s ** np.arange(N)
    H = np.array([[y[m + a] for a in range(L + 1)] for m in range(N - L)])
    sv = np.linalg.svd(H, compute_uv=False)
    profile = []
    for k in range(1, (N + 1) // 2 + 1):
        Hk = np.array([[y[i + j] for j in range(k)] for i in range(k)])
        profile.append(int(np.linalg.matrix_rank(Hk, tol=tol * max(1.0, np.abs(Hk).max()))))
    if sv[0] <= tol:
        return PronyKernel(0, (1 + 0j,), True, L, N, False, tuple(profile))
    rho = int(np.sum(sv > tol * sv[0]))
    if rho > L:
        return PronyKernel(None, (), False, L, N, False, tuple(profile))
    A = np.array([[y[m + a] for a in range(rho)] for m in range(N - rho)])
    b = -np.array([y[m + rho] for m in range(N - rho)])
    sol, *_ = np.linalg.lstsq(A, b, rcond=None)
    # undo the node scaling: q(z) = s^rho * qs(z / s)
    q_asc = [sol[a] * s ** (rho - a) for a in range(rho)] + [1 + 0j]
    q = tuple(complex(c) for c in reversed(q_asc))
    roots = np.roots(q) if rho else np.array([])
    sep = min((abs(u - v) for i, u in enumerate(roots) for v in roots[i + 1:]), default=np.inf)
    return PronyKernel(rho, q, bool(sep > np.sqrt(tol) * s), L, N, False, tuple(profile))


# -- recovery ----------------------------------------------------------------

def recover_exponential_polynomial(t, L: int, tol: float = DEFAULT_TOL,
                                   method: Optional[str] = None,
                                   kernel: Optional[PronyKernel] = None) -> ExponentialPolynomial:
    """Integer-weight exponential polynomial reproducing ``t``.

    ``method`` is ``"exact"`` (factor q over Q; needs rational data) or
    ``"approx"`` (numeric roots, Vandermonde weights, rounding, residual
    test).  Default: exact iff the sequence is rational.
    """
    t = _as_sequence(t)
    if kernel is None:
        kernel = hankel_rank_and_recurrence(t, L, tol)
    if method is None:
        method = "exact" if kernel.exact else "approx"
    if kernel.exceeds_bound:
        raise RankExceedsBound(f"no recurrence of degree <= {L} over {kernel.length} terms")
    if not kernel.square_free:
        raise NotPureExponential("repeated recurrence root: polynomial coefficient present")
    if kernel.rank == 0:
        return ExponentialPolynomial()
    if method == "exact":
        if not kernel.exact:
            raise HCError("exact recovery needs an exact kernel")
        return _recover_exact(t, kernel)
    if method == "approx":
        return _recover_approx(t, kernel, tol)
    raise ValueError(f"unknown method {method!r}")


def _residue_numerator(q_desc, t):
    """R(z) with R/q = sum_j t_j z^{-j-1} + O(z^{-rho-1}), ascending coefficients."""
    qa = list(reversed(q_desc))
    rho = len(qa) - 1
    return [sum((qa[e + 1 + j] * t[j] for j in range(rho - e)), type(t[0])(0))
            for e in range(rho)]


def _recover_exact(t, kernel):
    q = _sympy_poly(kernel.q)
    dq = q.diff(_z)
    R = _sympy_poly(tuple(reversed(_residue_numerator(kernel.q, t))) or (Fraction(0),))
    _, factors = q.factor_list()
    terms = []
    for f, mult in factors:
        f = f.monic()
        w = (R * dq.invert(f)).rem(f)
        if w.degree() > 0:
            raise NonIntegerWeight(f"weight is not constant on the roots of {f.as_expr()}")
        c = w.LC() if not w.is_zero else sympy.Integer(0)
        if c.q != 1:
            raise NonIntegerWeight(f"weight {c} on the roots of {f.as_expr()} is not an integer")
        m = int(c)
        if m == 0 or not (R - m * dq).rem(f).is_zero:
            raise HCError("inconsistent partial-fraction data")
        terms.append((_from_sympy(f), m))
    terms.sort(key=lambda fm: (len(fm[0]), [float(c) for c in fm[0]], fm[0]))
    ep = ExponentialPolynomial(exact_terms=tuple(terms))
    if ep.taylor(len(t)) != tuple(t):
        raise HCError("recovered exponential polynomial does not reproduce the input")
    return ep


def _eval_gauss(coeffs, xr, xi):
    """Horner evaluation of a rational polynomial at xr + i*xi, exactly."""
    ar, ai = Fraction(0), Fraction(0)
    for c in coeffs:
        ar, ai = ar * xr - ai * xi + c, ar * xi + ai * xr
    return ar, ai


def _polish(q, x, steps=6):
    """Newton steps for a root of q.  Rational q is evaluated exactly at the
    binary value of x so the step is limited only by float rounding of x."""
    if all(isinstance(c, Fraction) for c in q):
        deg = len(q) - 1
        dq = [c * (deg - i) for i, c in enumerate(q[:-1])]
        for _ in range(steps):
            xr, xi = Fraction(x.real), Fraction(x.imag)
            fr, fi = _eval_gauss(q, xr, xi)
            gr, gi = _eval_gauss(dq, xr, xi)
            den = gr * gr + gi * gi
            if den == 0:
                break
            step = complex(float((fr * gr + fi * gi) / den), float((fi * gr - fr * gi) / den))
            x = x - step
            if abs(step) <= 1e-17 * max(1.0, abs(x)):
                break
        return x
    qc = np.array(q, dtype=complex)
    dqc = np.polyder(qc)
    for _ in range(steps):
        g = np.polyval(dqc, x)
        if g == 0:
            break
        x = x - np.polyval(qc, x) / g
    return complex(x)


def _residual(t, nodes, weights):
    worst = 0.0
    for j, tj in enumerate(t):
        fit = sum(m * x ** j for x, m in zip(nodes, weights))
        scale = 1.0 + sum(abs(m) * abs(x) ** j for x, m in zip(nodes, weights))
        worst = max(worst, abs(complex(tj) - fit) / scale)
    return worst


def _recover_approx(t, kernel, tol):
    q = kernel.q
    nodes = [_polish(q, complex(x)) for x in np.roots(np.array([complex(c) for c in q]))]
    N = len(t)
    tv = np.array([complex(v) for v in t])
    V = np.array([[x ** j for x in nodes] for j in range(N)])
    row = np.maximum(1.0, np.abs(V).max(axis=1))
    w, *_ = np.linalg.lstsq(V / row[:, None], tv / row, rcond=None)
    weights = [int(round(z.real)) for z in w]
    if any(m == 0 for m in weights):
        raise NonIntegerWeight("a fitted weight rounds to zero")
    res = _residual(t, nodes, weights)
    if res > tol:
        raise NonIntegerWeight(f"integer-rounded weights leave residual {res:.3g} > {tol:g}")
    terms = sorted(zip(nodes, weights), key=lambda xm: (xm[0].real, xm[0].imag))
    return ExponentialPolynomial(approx_terms=tuple(terms))


def witness_from_exponential_polynomial(ep: ExponentialPolynomial) -> Witness:
    """Positive weights populate B, negative weights C, with multiplicity |m|."""
    B, C, alg = [], [], []
    for f, m in ep.exact_terms:
        if len(f) == 2:
            (B if m > 0 else C).extend([-f[1]] * abs(m))
        else:
            alg.append(AlgebraicNodes(tuple(f), m))
    for x, m in ep.approx_terms:
        (B if m > 0 else C).extend([x] * abs(m))
    return Witness.reduced(B, C, alg)


# -- decision ----------------------------------------------------------------

@dataclass(frozen=True)
class Decision:
    status: str
    witness: Optional[Witness]
    verified_order: int
    rank: Optional[int]
    rank_profile: tuple = ()
    detail: str = ""
    exponential: Optional[ExponentialPolynomial] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "verified_order": self.verified_order,
            "rank": self.rank,
            "diagnostics": {"rank_profile": list(self.rank_profile), "detail": self.detail},
        }


def decide_nonvanishing(chi: CentralCharacter, psi: CentralCharacter, L: int,
                        mode: str = "exact", tol: float = DEFAULT_TOL) -> Decision:
    """Is chi(u) - psi(u) a signed sum of at most L distinct exponentials?

    The answer certifies the condition at every supplied order K, not for
    all k; ``verified_order`` records K.
    """
    return decide_difference(character_difference(chi, psi), L, mode, tol)


def decide_difference(d: MomentSequence, L: int, mode: str = "exact",
                      tol: float = DEFAULT_TOL) -> Decision:
    if mode not in ("exact", "float"):
        raise ValueError(f"unsupported mode {mode!r}")
    if mode == "exact" and not d.exact:
        raise HCError("exact mode requires rational moments")
    K = d.order
    if K < 2 * L + 1:
        return Decision(INCONCLUSIVE, None, 0, None,
                        detail=f"order {K} below the required {2 * L + 1}")
    t = divide_by_expm1(d).coeffs
    kernel = hankel_rank_and_recurrence(t, L, tol)
    if kernel.exceeds_bound:
        return Decision(NO_WITNESS_WITHIN_BOUND, None, K, None, kernel.rank_profile,
                        f"Hankel rank exceeds {L}")
    method = "exact" if mode == "exact" else "approx"
    try:
        ep = recover_exponential_polynomial(t, L, tol, method=method, kernel=kernel)
    except (NotPureExponential, NonIntegerWeight) as exc:
        return Decision(NOT_EXPONENTIAL_FORM, None, K, kernel.rank, kernel.rank_profile, str(exc))
    witness = witness_from_exponential_polynomial(ep)
    _verify(d, ep, witness, tol)
    return Decision(NONZERO_WITNESS, witness, K, kernel.rank, kernel.rank_profile,
                    exponential=ep)


def _verify(d, ep, witness, tol):
    K = d.order
    if ep.approx_terms:
        recon = multiply_by_expm1(ep.taylor(K)).values
        scale = 1.0 + max(abs(complex(v)) for v in d.values)
        if any(abs(complex(a) - complex(b)) > tol * scale for a, b in zip(recon, d.values)):
            raise HCError("witness does not reproduce the moments")
        return
    if multiply_by_expm1(ep.taylor(K)) != d:
        raise HCError("witness does not reproduce the moments")
    if not witness.algebraic and moments_from_witness(witness.B, witness.C, K) != d:
        raise HCError("witness does not reproduce the moments")


__all__ = [
    "PronyKernel", "ExponentialPolynomial", "Decision",
    "hankel_rank_and_recurrence", "recover_exponential_polynomial",
    "witness_from_exponential_polynomial", "decide_nonvanishing", "decide_difference",
    "NONZERO_WITNESS", "NO_WITNESS_WITHIN_BOUND", "NOT_EXPONENTIAL_FORM", "INCONCLUSIVE",
]
