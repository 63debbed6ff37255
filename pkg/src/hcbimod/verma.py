"""Truncated Verma modules, the split Casimir on M_lambda (x) V and V*, and
weight bookkeeping for S^r V (x) S^s V*.

M_lambda has highest weight ``lambda - rho``.  Its basis is the PBW
monomials in the lowering generators applied to the highest-weight vector.
Truncation is by height (sum of i - j over the factors E_ij), which keeps
every weight space whole, so weight-preserving operators act on each block
exactly.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import linalg
from .charcenter import Weight, rho
from .errors import NonGenericWeight
from .series import format_scalar
from .uea import UEAElement, casimir2, commutator, generators, n_lower, normal_form

V = "V"
V_DUAL = "V*"


def _weight_of(n, mono) -> tuple:
    w = [0] * n
    for g in mono:
        i, j = generators(n)[g]
        w[i - 1] += 1
        w[j - 1] -= 1
    return tuple(w)


@lru_cache(maxsize=None)
def lowering_monomials(n: int, max_height: int) -> tuple:
    """Non-decreasing words in the lowering generators with height <= max_height."""
    heights = [i - j for i, j in generators(n)[:n_lower(n)]]
    out = []

    def grow(prefix, start, h):
        out.append(prefix)
        for g in range(start, len(heights)):
            if h + heights[g] <= max_height:
                grow(prefix + (g,), g, h + heights[g])

    grow((), 0, 0)
    return tuple(out)


@lru_cache(maxsize=None)
def _by_weight(n: int, max_height: int) -> dict:
    groups = defaultdict(list)
    for m in lowering_monomials(n, max_height):
        groups[_weight_of(n, m)].append(m)
    return {w: tuple(ms) for w, ms in groups.items()}


def kostant_count(n: int, beta: tuple) -> int:
    """Number of PBW lowering monomials of weight beta (beta <= 0 in dominance)."""
    h = sum((i + 1) * b for i, b in enumerate(beta))  # height of -beta
    if h < 0 or sum(beta) != 0:
        return 0
    return len(_by_weight(n, h).get(tuple(beta), ()))


# -- Verma module action -----------------------------------------------------

class VermaModule:
    """Action of U(gl_n) on M_lambda through PBW straightening."""

    def __init__(self, lam):
        self.lam = lam if isinstance(lam, Weight) else Weight(tuple(lam))
        self.n = self.lam.n
        self.hw = tuple(a - b for a, b in zip(self.lam.entries, rho(self.n)))
        self._cache = {}

    def apply_word(self, word: tuple, mono: tuple) -> dict:
        """word . (mono v) as {lowering monomial: coeff}."""
        key = (word, mono)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        nl, n = n_lower(self.n), self.n
        out = defaultdict(Fraction)
        for m, c in normal_form(n, word + mono):
            k = 0
            while k < len(m) and m[k] < nl:
                k += 1
            rest = m[k:]
            if any(g >= nl + n for g in rest):
                continue
            for g in rest:
                c = c * self.hw[g - nl]
            if c:
                out[m[:k]] += c
        out = {m: c for m, c in out.items() if c}
        self._cache[key] = out
        return out

    def apply(self, x: UEAElement, vec: dict) -> dict:
        out = defaultdict(Fraction)
        for mono, a in vec.items():
            for word, c in x.terms:
                for m, b in self.apply_word(word, mono).items():
                    out[m] += a * c * b
        return {m: c for m, c in out.items() if c}


@dataclass
class BlockOperator:
    """Exact matrices per weight block (columns = images of basis vectors).

    ``graded`` is False when the operator was not weight preserving; then a
    single block keyed ``None`` holds the full truncated matrix, with
    components leaving the truncation dropped.
    """

    blocks: dict
    graded: bool = True

    def items(self):
        return self.blocks.items()


def _matrix(basis, images):
    index = {b: a for a, b in enumerate(basis)}
    mat = [[Fraction(0)] * len(basis) for _ in basis]
    for col, img in enumerate(images):
        for b, c in img.items():
            if b in index:
                mat[index[b]][col] = c
    return mat


def verma_action(lam, D: int, x: UEAElement) -> BlockOperator:
    """Matrix of x on the height-<=D truncation of M_lambda."""
    module = VermaModule(lam)
    n = module.n
    if x.n != n:
        raise ValueError("rank mismatch")
    if D < 0:
        raise ValueError("depth must be non-negative")
    if x.is_weight_preserving():
        blocks = {}
        for w, basis in sorted(_by_weight(n, D).items()):
            images = [module.apply(x, {m: Fraction(1)}) for m in basis]
            blocks[w] = (basis, _matrix(basis, images))
        return BlockOperator(blocks, True)
    basis = lowering_monomials(n, D)
    images = [module.apply(x, {m: Fraction(1)}) for m in basis]
    return BlockOperator({None: (basis, _matrix(basis, images))}, False)


# -- tensor products with V and V* ------------------------------------------

class TensorModule:
    """M_lambda (x) V or M_lambda (x) V*; basis vectors are (monomial, k)."""

    def __init__(self, lam, factor: str):
        if factor not in (V, V_DUAL):
            raise ValueError(f"factor must be {V!r} or {V_DUAL!r}")
        self.verma = VermaModule(lam)
        self.n = self.verma.n
        self.factor = factor
        self.sign = 1 if factor == V else -1

    def _gen_on_factor(self, g, k):
        i, j = generators(self.n)[g]
        if self.factor == V:
            return [(i, Fraction(1))] if j == k else []
        return [(j, Fraction(-1))] if i == k else []

    def apply_gen(self, g: int, vec: dict) -> dict:
        out = defaultdict(Fraction)
        for (m, k), a in vec.items():
            for m2, c in self.verma.apply_word((g,), m).items():
                out[(m2, k)] += a * c
            for k2, c in self._gen_on_factor(g, k):
                out[(m, k2)] += a * c
        return {b: c for b, c in out.items() if c}

    def apply_coproduct(self, x: UEAElement, vec: dict) -> dict:
        """Delta(x) via E -> E (x) 1 + 1 (x) E, word by word."""
        out = defaultdict(Fraction)
        for word, c in x.terms:
            cur = dict(vec)
            for g in reversed(word):
                cur = self.apply_gen(g, cur)
            for b, a in cur.items():
                out[b] += c * a
        return {b: c for b, c in out.items() if c}

    def apply_left(self, x: UEAElement, vec: dict) -> dict:
        """x (x) 1"""
        out = defaultdict(Fraction)
        for (m, k), a in vec.items():
            for m2, c in self.verma.apply(x, {m: Fraction(1)}).items():
                out[(m2, k)] += a * c
        return {b: c for b, c in out.items() if c}

    def offset(self, k: int) -> tuple:
        return tuple(self.sign if i == k - 1 else 0 for i in range(self.n))

    def blocks(self, D: int) -> dict:
        """Total-weight blocks seeded by monomials of height <= D, each completed."""
        n = self.n
        pool = _by_weight(n, D + n - 1)
        seeds = set()
        for w in _by_weight(n, D):
            for k in range(1, n + 1):
                seeds.add(tuple(a + b for a, b in zip(w, self.offset(k))))
        out = {}
        for total in sorted(seeds):
            basis = []
            for k in range(1, n + 1):
                beta = tuple(a - b for a, b in zip(total, self.offset(k)))
                basis.extend((m, k) for m in pool.get(beta, ()))
            out[total] = tuple(basis)
        return out


@dataclass
class OmegaData:
    """Per block: basis, Omega, and Delta(C_2) - C_2 (x) 1."""

    factor: str
    blocks: dict = field(default_factory=dict)


def _omega_data(lam, D: int, factor: str) -> OmegaData:
    tm = TensorModule(lam, factor)
    c2 = casimir2(tm.n)
    data = OmegaData(factor)
    for total, basis in tm.blocks(D).items():
        delta = _matrix(basis, [tm.apply_coproduct(c2, {b: Fraction(1)}) for b in basis])
        left = _matrix(basis, [tm.apply_left(c2, {b: Fraction(1)}) for b in basis])
        jump = linalg.sub(delta, left)
        omega = linalg.scale(linalg.shift(jump, -1), Fraction(tm.sign, 2))
        data.blocks[total] = (basis, omega, jump)
    return data


def omega_operator(lam, D: int, factor: str = V) -> BlockOperator:
    """Omega = (Delta(C_2) - C_2 (x) 1 - 1)/2 on M_lambda (x) V; the negative of
    that on M_lambda (x) V*, so that both have eigenvalue lambda_l on the
    summand M_{lambda +- e_l}."""
    data = _omega_data(lam, D, factor)
    return BlockOperator({w: (b, om) for w, (b, om, _) in data.blocks.items()}, True)


def _report(check, lam, D, ok, detail, **extra):
    out = {"check": check, "n": len(lam), "lambda": [format_scalar(v) for v in lam],
           "depth": D, "status": "pass" if ok else "fail", "detail": detail}
    out.update(extra)
    return out


def omega_spectrum_check(lam, D: int, factor: str = V) -> dict:
    """prod_l (Omega - lambda_l) = 0 blockwise, trace/dimension match the Verma
    filtration, and Delta(C_2) - C_2 (x) 1 equals P_2(Omega) (V) or
    Pbar_2(Omega) (V*)."""
    lam = lam if isinstance(lam, Weight) else Weight(tuple(lam))
    if not lam.is_generic():
        raise NonGenericWeight(f"{list(lam.entries)} has repeated entries")
    n = lam.n
    data = _omega_data(lam, D, factor)
    sign = 1 if factor == V else -1
    problems = []
    eigen = set()
    for total, (basis, omega, jump) in data.blocks.items():
        dim = len(basis)
        ann = linalg.identity(dim)
        for l in lam.entries:
            ann = linalg.matmul(ann, linalg.shift(omega, -l))
        if not linalg.is_zero(ann):
            problems.append({"block": list(total), "failed": "annihilator"})
        # the summand M_{lambda + sign e_l} contains this total weight with
        # multiplicity = number of lowering monomials of weight total - sign e_l
        mult = [kostant_count(n, tuple(t - (sign if i == l else 0) for i, t in enumerate(total)))
                for l in range(n)]
        if sum(mult) != dim:
            problems.append({"block": list(total), "failed": "dimension"})
        expected = sum((m * lam[l] for l, m in enumerate(mult)), Fraction(0))
        if linalg.trace(omega) != expected:
            problems.append({"block": list(total), "failed": "trace"})
        # (Omega + 1)^2 - Omega^2 for V, (Omega - 1)^2 - Omega^2 for V*
        p2 = linalg.sub(linalg.matmul(linalg.shift(omega, sign), linalg.shift(omega, sign)),
                        linalg.matmul(omega, omega))
        if p2 != jump:
            problems.append({"block": list(total), "failed": "P2 identity"})
        for l, m in enumerate(mult):
            if m:
                eigen.add(lam[l])
    return _report("omega-" + ("V" if factor == V else "Vdual"), lam, D, not problems,
                   problems or f"{len(data.blocks)} blocks",
                   eigenvalues=[format_scalar(v) for v in sorted(eigen)])


def casimir_check(lam, D: int) -> dict:
    """casimir2(n) commutes with every generator and is sum lambda_i^2 on the truncation."""
    lam = lam if isinstance(lam, Weight) else Weight(tuple(lam))
    n = lam.n
    c2 = casimir2(n)
    problems = []
    for i, j in generators(n):
        if not commutator(c2, UEAElement.gen(n, i, j)).is_zero():
            problems.append({"failed": "central", "generator": [i, j]})
    value = lam.power_sum(2)
    for w, (basis, mat) in verma_action(lam, D, c2).items():
        if not linalg.is_scalar(mat, value):
            problems.append({"failed": "scalar", "block": list(w)})
    return _report("casimir", lam, D, not problems, problems or "central, scalar",
                   eigenvalue=format_scalar(value))


# -- weights of S^r V (x) S^s V* ---------------------------------------------

SYMMETRIC = "symmetric"
EXTERIOR = "exterior"


def tensor_weight_multiset(n: int, r: int, s: int, kind: str = SYMMETRIC) -> Counter:
    """Weights of S^r V (x) S^s V* (or Lambda^r V (x) Lambda^s V*) with multiplicity."""
    if n < 1:
        raise ValueError("n must be positive")
    pick = {SYMMETRIC: itertools.combinations_with_replacement,
            EXTERIOR: itertools.combinations}[kind]
    ups = Counter()
    for idx in pick(range(n), r):
        w = [0] * n
        for i in idx:
            w[i] += 1
        ups[tuple(w)] += 1
    downs = Counter()
    for idx in pick(range(n), s):
        w = [0] * n
        for i in idx:
            w[i] -= 1
        downs[tuple(w)] += 1
    out = Counter()
    for a, ca in ups.items():
        for b, cb in downs.items():
            out[tuple(x + y for x, y in zip(a, b))] += ca * cb
    return out


def dominates(a, b) -> bool:
    """a - b is a non-negative combination of positive roots e_i - e_j (i < j)."""
    acc = 0
    for x, y in zip(a, b):
        acc += x - y
        if acc < 0:
            return False
    return acc == 0


def maximal_weight(weights) -> Optional[tuple]:
    """The element dominating every other one, or None."""
    weights = list(weights)
    cand = max(weights)  # lexicographic max is the only possible candidate
    return cand if all(dominates(cand, w) for w in weights) else None


def is_dominant(w) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def witness_weight_check(lam, mu, r: int, s: int, module: str = SYMMETRIC) -> bool:
    """lambda - mu is dominant integral and is the maximal weight of the module
    (S^r V (x) S^s V* by default, Lambda^r V (x) Lambda^s V* with
    ``module="exterior"``)."""
    lam = tuple(lam)
    mu = tuple(mu)
    if len(lam) != len(mu):
        raise ValueError("rank mismatch")
    diff = tuple(Fraction(a) - Fraction(b) for a, b in zip(lam, mu))
    if any(d.denominator != 1 for d in diff):
        return False
    diff = tuple(int(d) for d in diff)
    if not is_dominant(diff):
        return False
    n = len(lam)
    if module == EXTERIOR and (r > n or s > n):
        return False
    return diff == maximal_weight(tensor_weight_multiset(n, r, s, module))
