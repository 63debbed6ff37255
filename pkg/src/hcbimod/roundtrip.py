"""Random witness round-trips through the decision procedure."""
from __future__ import annotations

import random
from fractions import Fraction

from .charcenter import CentralCharacter
from .expsum import NONZERO_WITNESS, decide_nonvanishing
from .series import DEFAULT_TOL, moments_from_witness
from .witness import Witness


def small_rationals(bound: int = 5) -> list:
    """All p/q with |p| <= bound, 1 <= q <= bound, sorted."""
    return sorted({Fraction(p, q) for p in range(-bound, bound + 1) for q in range(1, bound + 1)})


def random_witness(rng: random.Random, max_size: int = 4, bound: int = 5,
                   nonempty: bool = True) -> Witness:
    """Reduced witness with |B|, |C| <= max_size and nodes p/q, |p|, q <= bound."""
    pool = small_rationals(bound)
    while True:
        B = [rng.choice(pool) for _ in range(rng.randint(0, max_size))]
        C = [rng.choice(pool) for _ in range(rng.randint(0, max_size))]
        if set(B) & set(C) or (nonempty and not B and not C):
            continue
        return Witness.reduced(B, C)


def roundtrip_case(w: Witness, mode: str = "exact", tol: float = DEFAULT_TOL):
    """Decide chi against psi = 0 where chi - psi are the moments of ``w``,
    at order 2(r+s)+2 with L = r+s."""
    L = w.r + w.s
    d = moments_from_witness(w.B, w.C, 2 * L + 2)
    chi = CentralCharacter.from_moments(d.values)
    psi = CentralCharacter.from_moments([0] * d.order)
    return decide_nonvanishing(chi, psi, L, mode, tol)


def matches(w: Witness, decision, tol: float = DEFAULT_TOL) -> bool:
    """Exact witnesses must coincide; float ones must agree node-by-node within tol."""
    if decision.status != NONZERO_WITNESS:
        return False
    got = decision.witness
    if len(got.B) != len(w.B) or len(got.C) != len(w.C) or got.algebraic:
        return False
    if any(isinstance(x, complex) for x in got.B + got.C):
        return all(abs(complex(a) - complex(b)) <= tol
                   for a, b in zip(got.B + got.C, w.B + w.C))
    return got.B == w.B and got.C == w.C


def run_roundtrip(trials: int = 200, seed: int = 0, mode: str = "exact",
                  max_size: int = 4, bound: int = 5, tol: float = DEFAULT_TOL) -> dict:
    rng = random.Random(seed)
    failures = []
    for i in range(trials):
        w = random_witness(rng, max_size, bound)
        dec = roundtrip_case(w, mode, tol)
        if not matches(w, dec, tol):
            failures.append({"case": i, "input": w.to_json(), "status": dec.status})
    return {"check": "roundtrip", "mode": mode, "seed": seed, "trials": trials,
            "passed": trials - len(failures), "status": "pass" if not failures else "fail",
            "failures": failures}
