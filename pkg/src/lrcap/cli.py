"""``lrcap`` command line: capacity queries, curves, verification, simulation, coset tables.

Exit codes: 0 success, 1 check or I/O failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .blockstats import local_code_bsc_mi
from .capacity import (
    cap_bec_hamming_rho3_lower,
    cap_bec_lrc,
    cap_bec_rho_converse,
    cap_bsc_hamming_rho3_lower,
    bsc_bound_gaps,
    cap_bsc_lrc_bounds,
    cap_general_bounds,
)
from .codes import coset_weight_table, hamming_code, single_parity_code
from .errors import DomainError
from .experiments import bec_decode_success_rate, estimate_L_I, rank_success_rate
from .infofn import bsc_capacity
from .verify import run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CurveRow:
    p: float
    shannon_capacity: float
    lrc_exact: float | None = None
    lrc_lower: float | None = None
    lrc_upper: float | None = None


def p_grid(p_min: float, p_max: float, p_step: float, hi: float) -> list[float]:
    if not p_step > 0:
        raise UsageError("--p-step must be positive")
    if not 0.0 <= p_min <= p_max <= hi:
        raise UsageError(f"need 0 <= p-min <= p-max <= {hi}")
    n = int((p_max - p_min) / p_step + 1e-9)
    return [round(p_min + i * p_step, 12) for i in range(n + 1)]


def curve_rows(channel: str, r: int, ps: list[float]) -> list[CurveRow]:
    rows = []
    for p in ps:
        if channel == "bec":
            rows.append(CurveRow(p, 1.0 - p, lrc_exact=cap_bec_lrc(p, r).value))
        else:
            lo, up = cap_bsc_lrc_bounds(p, r)
            rows.append(CurveRow(p, bsc_capacity(p), lrc_lower=lo.value, lrc_upper=up.value))
    return rows


def curves_csv(channel: str, rows: list[CurveRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if channel == "bec":
        w.writerow(["p", "shannon", "lrc_exact"])
        for row in rows:
            w.writerow([f"{row.p:.6f}", f"{row.shannon_capacity:.6f}", f"{row.lrc_exact:.6f}"])
    else:
        w.writerow(["p", "shannon", "lrc_lower", "lrc_upper"])
        for row in rows:
            w.writerow([f"{row.p:.6f}", f"{row.shannon_capacity:.6f}",
                        f"{row.lrc_lower:.6f}", f"{row.lrc_upper:.6f}"])
    return buf.getvalue()


def capacity_query(channel: str, r: int, rho: int = 2, p: float | None = None,
                   capw: float | None = None) -> dict:
    if r < 1:
        raise UsageError("--r must be >= 1")
    if rho < 2:
        raise UsageError("--rho must be >= 2")
    if channel == "general":
        if capw is None:
            raise UsageError("--capw is required for --channel general")
        if not 0.0 <= capw <= 1.0:
            raise UsageError("--capw must lie in [0, 1]")
        if rho != 2:
            raise UsageError("general-channel bounds exist only for rho = 2")
        lo, up = cap_general_bounds(capw, r)
        return {"channel": channel, "capw": capw, "r": r, "rho": rho, "shannon": capw,
                "lower": lo.value, "upper": up.value,
                "gap_lower": capw - up.value, "gap_upper": capw - lo.value}
    if p is None:
        raise UsageError("--p is required")
    out: dict = {"channel": channel, "p": p, "r": r, "rho": rho}
    if channel == "bec":
        if not 0.0 <= p <= 1.0:
            raise UsageError("--p must lie in [0, 1] for the BEC")
        shannon = 1.0 - p
        out["shannon"] = shannon
        if rho == 2:
            exact = cap_bec_lrc(p, r).value
            out.update(exact=exact, gap=shannon - exact)
            return out
        up = cap_bec_rho_converse(p, rho, r).value
        out.update(upper=up, gap_lower=shannon - up)
        if rho == 3:
            lo = cap_bec_hamming_rho3_lower(p, r).value
            out.update(lower=lo, gap_upper=shannon - lo)
        return out
    if channel == "bsc":
        if not 0.0 <= p <= 0.5:
            raise UsageError("--p must lie in [0, 0.5] for the BSC")
        shannon = bsc_capacity(p)
        out["shannon"] = shannon
        if rho == 2:
            lo, up = cap_bsc_lrc_bounds(p, r)
            gap_lo, gap_up = bsc_bound_gaps(p, r)
            out.update(lower=lo.value, upper=up.value, gap_lower=gap_lo, gap_upper=gap_up)
            return out
        if rho == 3:
            lo = cap_bsc_hamming_rho3_lower(p, r).value
            out.update(lower=lo, gap_upper=shannon - lo)
            return out
        raise UsageError("no BSC bound is available for rho > 3")
    raise UsageError(f"unknown channel {channel!r}")


def cmd_capacity(args) -> int:
    res = capacity_query(args.channel, args.r, args.rho, args.p, args.capw)
    print(json.dumps(res))
    return EXIT_OK


def cmd_curves(args) -> int:
    hi = 1.0 if args.channel == "bec" else 0.5
    p_max = hi if args.p_max is None else args.p_max
    ps = p_grid(args.p_min, p_max, args.p_step, hi)
    if args.r < 1:
        raise UsageError("--r must be >= 1")
    text = curves_csv(args.channel, curve_rows(args.channel, args.r, ps))
    if args.out == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"lrcap: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_r < 1 or args.max_r > 12:
        raise UsageError("--max-r must be in [1, 12]")
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    results = run_checks(args.max_r, args.tol, args.seed)
    for res in results:
        print(res.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_simulate(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.what == "l-i":
        rep = estimate_L_I(args.n, args.r, args.p, args.trials, args.seed)
    elif args.what == "rank":
        rep = rank_success_rate(args.n, args.k, args.r, args.p, args.trials, args.seed)
    else:
        rep = bec_decode_success_rate(args.n, args.k, args.r, args.p, args.trials, args.seed)
    print(rep.to_json())
    return EXIT_OK


def cmd_cosets(args) -> int:
    if args.code == "parity":
        if args.r is None:
            raise UsageError("--r is required for --code parity")
        code = single_parity_code(args.r)
    else:
        if args.m is None:
            raise UsageError("--m is required for --code hamming")
        code = hamming_code(args.m)
    if args.p is not None and not 0.0 <= args.p <= 0.5:
        raise UsageError("--p must lie in [0, 0.5]")
    table = coset_weight_table(code)
    print(f"code {code.name}  delta={table.delta}  k_loc={table.k_loc}  cosets={table.n_cosets}")
    header = "coset " + " ".join(f"A_{w}" for w in range(table.delta + 1))
    values = table.enumerator_values(args.p) if args.p is not None else None
    if values is not None:
        header += "  A(1-p,p)"
    print(header)
    for i in range(table.n_cosets):
        line = f"{i:<5} " + " ".join(str(int(c)) for c in table.counts[i])
        if values is not None:
            line += f"  {values[i]:.6f}"
        print(line)
    if values is not None:
        print(f"sum {float(values.sum()):.6f}")
        print(f"mi {local_code_bsc_mi(code, args.p):.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lrcap", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("capacity", help="capacity value or bounds as JSON")
    c.add_argument("--channel", choices=["bec", "bsc", "general"], required=True)
    c.add_argument("--p", type=float)
    c.add_argument("--capw", type=float, help="Shannon capacity of the channel (general)")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--rho", type=int, default=2)
    c.set_defaults(func=cmd_capacity)

    c = sub.add_parser("curves", help="capacity curves as CSV")
    c.add_argument("--channel", choices=["bec", "bsc"], required=True)
    c.add_argument("--r", type=int, default=2)
    c.add_argument("--p-min", type=float, default=0.0)
    c.add_argument("--p-max", type=float, default=None)
    c.add_argument("--p-step", type=float, default=0.01)
    c.add_argument("--out", required=True, help="output path, or - for stdout")
    c.set_defaults(func=cmd_curves)

    c = sub.add_parser("verify", help="run closed-form vs oracle checks")
    c.add_argument("--max-r", type=int, default=8)
    c.add_argument("--tol", type=float, default=1e-9)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("simulate", help="Monte Carlo experiments (JSON TrialReport)")
    c.add_argument("what", choices=["l-i", "rank", "decode"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--p", type=float, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--trials", type=int, default=1000)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_simulate)

    c = sub.add_parser("cosets", help="coset weight table of a local code")
    c.add_argument("--code", choices=["parity", "hamming"], required=True)
    c.add_argument("--r", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--p", type=float)
    c.set_defaults(func=cmd_cosets)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "simulate" and args.what in ("rank", "decode") and args.k is None:
        parser.error("--k is required for simulate rank/decode")
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"lrcap {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
