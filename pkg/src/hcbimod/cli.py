"""Command-line front end: JSON in, JSON out.

Exit status: 0 definitive answer, 2 INCONCLUSIVE, 1 input or internal error
(including a failed oracle or verification).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .charcenter import CentralCharacter, Weight, character_from_weight, lemma9_difference
from .errors import HCError, NeedMoreOrders
from .expsum import INCONCLUSIVE, decide_difference, decide_nonvanishing
from .interpolate import build_weight_family, verify_weight_family
from .roundtrip import run_roundtrip
from .series import (DEFAULT_TOL, DIFFERENCE, MomentSequence, format_scalar,
                     moments_from_witness, parse_scalar)
from .verma import V, V_DUAL, casimir_check, omega_spectrum_check
from .witness import Witness

COMMANDS = ("decide", "family", "lemma9", "oracle-omega", "oracle-casimir", "roundtrip")

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


@dataclass
class JobConfig:
    command: str
    mode: str = "exact"
    order: int = 14
    max_nodes: int = 6
    tol: float = DEFAULT_TOL
    n_range: Optional[tuple] = None
    data: Optional[dict] = None


def parse_n_range(text: str) -> tuple:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("expected a..b")
    return int(lo), int(hi)


def _load(args) -> Optional[dict]:
    if args.data is not None:
        return json.loads(args.data)
    if args.input is None:
        return None
    if args.input == "-":
        return json.load(sys.stdin)
    with open(args.input) as fh:
        return json.load(fh)


def _truncate(values, K, explicit):
    if explicit and len(values) < K:
        raise NeedMoreOrders(K, f"--order {K} requested but only {len(values)} moments supplied")
    return values[:K]


def _run_decide(cfg: JobConfig, explicit_order: bool):
    data = cfg.data or {}
    K = cfg.order
    if "difference" in data:
        vals = [parse_scalar(v, cfg.mode) for v in data["difference"]]
        d = MomentSequence(tuple(_truncate(vals, K, explicit_order)), DIFFERENCE)
        dec = decide_difference(d, cfg.max_nodes, cfg.mode, cfg.tol)
    elif "chi" in data and "psi" in data:
        chi, psi = (CentralCharacter.from_json(data[key], cfg.mode) for key in ("chi", "psi"))
        chi, psi = (CentralCharacter.from_moments(_truncate(c.moments.values, K, explicit_order),
                                                  origin=c.origin, n=c.n, t=c.t)
                    for c in (chi, psi))
        dec = decide_nonvanishing(chi, psi, cfg.max_nodes, cfg.mode, cfg.tol)
    else:
        raise HCError('decide expects {"chi": .., "psi": ..} or {"difference": [..]}')
    code = EXIT_INCONCLUSIVE if dec.status == INCONCLUSIVE else EXIT_OK
    return dec.to_json(), code


def _psi_for_family(obj, mode, order):
    if "moments" in obj:
        return CentralCharacter.from_json(obj, mode)
    if "weight" in obj:
        return character_from_weight(Weight(tuple(parse_scalar(v, mode) for v in obj["weight"])), order)
    raise HCError('psi needs "moments" or "weight"')


def _run_family(cfg: JobConfig):
    data = cfg.data or {}
    witness = Witness.from_json(data["witness"], cfg.mode)
    r, s = witness.r, witness.s
    lo, hi = cfg.n_range or (r + s + 1, r + s + 8)
    psi = _psi_for_family(data["psi"], cfg.mode, max(hi - r - s, 1))
    diff = moments_from_witness(witness.B, witness.C, psi.order)
    chi = CentralCharacter.from_moments([a + b for a, b in zip(psi.moments.values, diff.values)])
    family = build_weight_family(witness, psi, (lo, hi))
    report = verify_weight_family(family, chi, psi, cfg.tol)
    out = {"family": family.to_json(), "verification": report.to_json()}
    return out, EXIT_OK if report.passed else EXIT_ERROR


def _run_lemma9(cfg: JobConfig):
    data = cfg.data or {}
    mu = Weight(tuple(parse_scalar(v, cfg.mode) for v in data["mu"]))
    d, w = lemma9_difference(mu, int(data.get("r", 0)), int(data.get("s", 0)), cfg.order)
    return {"moments": [format_scalar(v) for v in d.values], "witness": w.to_json()}, EXIT_OK


def _oracle_weight(data):
    return Weight(tuple(parse_scalar(v, "exact") for v in data["lambda"])), int(data.get("depth", 2))


def _run_oracle_omega(cfg: JobConfig):
    data = cfg.data or {}
    lam, D = _oracle_weight(data)
    factors = [data["factor"]] if "factor" in data else [V, V_DUAL]
    reports = [omega_spectrum_check(lam, D, f) for f in factors]
    return reports, EXIT_OK if all(r["status"] == "pass" for r in reports) else EXIT_ERROR


def _run_oracle_casimir(cfg: JobConfig):
    lam, D = _oracle_weight(cfg.data or {})
    rep = casimir_check(lam, D)
    return [rep], EXIT_OK if rep["status"] == "pass" else EXIT_ERROR


def _run_roundtrip(cfg: JobConfig):
    data = cfg.data or {}
    out = run_roundtrip(trials=int(data.get("trials", 200)), seed=int(data.get("seed", 0)),
                        mode=cfg.mode, max_size=int(data.get("max_size", 4)),
                        bound=int(data.get("bound", 5)), tol=cfg.tol)
    return out, EXIT_OK if out["status"] == "pass" else EXIT_ERROR


def run(cfg: JobConfig, explicit_order: bool = False):
    """Execute one job; returns (JSON-able payload, exit code)."""
    if cfg.mode not in ("exact", "float"):
        raise HCError(f"unsupported mode {cfg.mode!r}")
    if cfg.command == "decide":
        return _run_decide(cfg, explicit_order)
    if cfg.command == "family":
        return _run_family(cfg)
    if cfg.command == "lemma9":
        return _run_lemma9(cfg)
    if cfg.command == "oracle-omega":
        return _run_oracle_omega(cfg)
    if cfg.command == "oracle-casimir":
        return _run_oracle_casimir(cfg)
    if cfg.command == "roundtrip":
        return _run_roundtrip(cfg)
    raise HCError(f"unknown command {cfg.command!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hcbimod",
        description="Decide whether chi(u) - psi(u) is a signed sum of exponentials, "
                    "build finite-rank weight families, and run enveloping-algebra oracles.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--order", type=int, default=None,
                        help="truncation order K (default 14)")
    parser.add_argument("--max-nodes", type=int, default=6, help="node bound L (default 6)")
    parser.add_argument("--mode", choices=("exact", "float"), default="exact")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL)
    parser.add_argument("--n-range", type=parse_n_range, default=None, metavar="A..B",
                        help="ranks for `family` (default r+s+1..r+s+8)")
    parser.add_argument("--input", default=None, metavar="FILE|-", help="JSON input file")
    parser.add_argument("--data", default=None, metavar="JSON", help="inline JSON input")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = JobConfig(args.command, args.mode, args.order if args.order is not None else 14,
                        args.max_nodes, args.tol, args.n_range, _load(args))
        payload, code = run(cfg, explicit_order=args.order is not None)
    except (HCError, TypeError, KeyError, ValueError, OSError) as exc:
        # json.JSONDecodeError is a ValueError
        print(f"hcbimod: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
