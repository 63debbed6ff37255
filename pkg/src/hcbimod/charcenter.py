"""Central characters of gl_n read off from Verma highest weights.

The Verma module M_lambda has highest weight ``lambda - rho``, so the
central element C_k acts on it by the plain power sum sum_i lambda_i^k and
the Weyl group acts on ``lambda`` by permutations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import OrderMismatch, RankTooSmall
from .series import (CHARACTER, DIFFERENCE, MomentSequence, promote, format_scalar,
                     parse_scalar, pbar_eval, pk_eval)
from .witness import Witness


@dataclass(frozen=True)
class Weight:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(promote(x) for x in self.entries))
        if not self.entries:
            raise ValueError("a weight needs rank n >= 1")

    @classmethod
    def of(cls, *entries) -> "Weight":
        return cls(tuple(entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def is_generic(self) -> bool:
        """Pairwise-distinct entries: trivial stabilizer in the Weyl group."""
        return len(set(self.entries)) == len(self.entries)

    def shifted(self, r: int, s: int) -> "Weight":
        """mu + e_1 + ... + e_r - e_{n-s+1} - ... - e_n"""
        n = self.n
        if r + s > n:
            raise RankTooSmall(f"r + s = {r + s} exceeds rank {n}")
        out = list(self.entries)
        for i in range(r):
            out[i] += 1
        for i in range(n - s, n):
            out[i] -= 1
        return Weight(tuple(out))

    def power_sum(self, k: int):
        return sum((x ** k for x in self.entries), Fraction(0))


def rho(n: int) -> tuple:
    """Half sum of positive roots: ((n-1)/2, (n-3)/2, ..., (1-n)/2)."""
    return tuple(Fraction(n + 1 - 2 * i, 2) for i in range(1, n + 1))


@dataclass(frozen=True)
class CentralCharacter:
    moments: MomentSequence
    origin: Optional[Weight] = None
    n: Optional[int] = None
    t: object = None  # rank parameter; informational only

    def __post_init__(self):
        if self.moments.kind != CHARACTER:
            raise ValueError("a central character needs a character-kind moment sequence")

    @classmethod
    def from_moments(cls, values: Sequence, **kw) -> "CentralCharacter":
        return cls(MomentSequence(tuple(values), CHARACTER), **kw)

    @property
    def order(self) -> int:
        return self.moments.order

    def to_json(self) -> dict:
        out = {"moments": [format_scalar(v) for v in self.moments.values]}
        if self.origin is not None:
            out["origin"] = [format_scalar(v) for v in self.origin]
        if self.n is not None:
            out["n"] = self.n
        if self.t is not None:
            out["t"] = format_scalar(self.t)
        return out

    @classmethod
    def from_json(cls, obj: dict, mode: str = "exact") -> "CentralCharacter":
        origin = obj.get("origin")
        t = obj.get("t")
        return cls.from_moments(
            [parse_scalar(v, mode) for v in obj["moments"]],
            origin=Weight(tuple(parse_scalar(v, mode) for v in origin)) if origin is not None else None,
            n=obj.get("n"),
            t=parse_scalar(t, "float" if mode == "float" else "exact") if t is not None else None,
        )


def character_from_weight(lam, K: int) -> CentralCharacter:
    if K < 1:
        raise ValueError("K must be positive")
    if not isinstance(lam, Weight):
        lam = Weight(tuple(lam))
    return CentralCharacter.from_moments([lam.power_sum(k) for k in range(1, K + 1)],
                                         origin=lam, n=lam.n)


def character_difference(chi: CentralCharacter, psi: CentralCharacter) -> MomentSequence:
    if chi.order != psi.order:
        raise OrderMismatch(f"orders differ: {chi.order} vs {psi.order}")
    return MomentSequence(tuple(a - b for a, b in zip(chi.moments.values, psi.moments.values)),
                          DIFFERENCE)


def lemma9_difference(mu, r: int, s: int, K: int):
    """Closed form of chi - psi for lambda = mu + e_1..e_r - e_{n-s+1}..e_n.

    Returns the moment difference and the reduced witness with
    B = {mu_1..mu_r} and C = {mu_j - 1 : j > n - s}.
    """
    if not isinstance(mu, Weight):
        mu = Weight(tuple(mu))
    n = mu.n
    if r < 0 or s < 0:
        raise ValueError("r and s must be non-negative")
    if r + s > n:
        raise RankTooSmall(f"r + s = {r + s} exceeds rank {n}")
    if K < 1:
        raise ValueError("K must be positive")
    head = mu.entries[:r]
    tail = mu.entries[n - s:]
    values = tuple(sum((pk_eval(k, b) for b in head), Fraction(0))
                   + sum((pbar_eval(k, c) for c in tail), Fraction(0))
                   for k in range(1, K + 1))
    return MomentSequence(values, DIFFERENCE), Witness.reduced(head, [c - 1 for c in tail])
