"""Command line entry point: ``qtbounds {bounds,sweep,examples,ratios}``.

Exit status: 0 on success, 1 when a golden example fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Sequence

from .concat import jensen_bound
from .gf import prime_power
from .golden import run_worked_examples
from .harness import default_ranges, rate_ratios, rows_to_csv, summarize, sweep
from .lally import lally_bound
from .linalg import DEFAULT_ENUM_BUDGET, BudgetExceeded
from .qtcode import exact_min_distance
from .specfile import SpecError, load_spec
from .spectral import FAMILIES, EigenData, spectral_bounds

EXIT_OK, EXIT_GOLDEN, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _jsonable(x):
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        if x.is_integer():
            return int(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _families(text: str) -> list[str]:
    fams = [f.strip().lower() for f in text.split(",") if f.strip()]
    bad = [f for f in fams if f not in FAMILIES]
    if bad or not fams:
        raise InputError(f"unknown families {bad}; choose from {','.join(FAMILIES)}")
    return fams


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _ranges(args) -> list[tuple[int, int, int, int, int]]:
    try:
        prime_power(args.q)
    except ValueError as e:
        raise InputError(str(e)) from None
    ms = _int_list(args.m) if args.m else None
    ells = _int_list(args.ell)
    rs = _int_list(args.r) if args.r else None
    try:
        tups = default_ranges(args.q, args.lam, ms, ells)
    except ValueError as e:
        raise InputError(str(e)) from None
    if not tups:
        raise InputError(f"no default m values for q = {args.q}; pass --m")
    if rs is not None:
        tups = [t for t in tups if t[3] in rs]
    if not 0 < args.lam < args.q:
        raise InputError(f"lambda = {args.lam} is not a nonzero element of F_{args.q}")
    return tups


def cmd_bounds(args) -> int:
    try:
        c = load_spec(args.spec)
    except (OSError, SpecError, ValueError) as e:
        raise InputError(str(e)) from None
    fams = _families(args.families)
    out = {"q": c.q, "m": c.m, "lambda": c.tower.lam, "ell": c.ell, "r": len(c.gens), "n": c.length, "dim": c.dim}
    if c.is_full():
        out["note"] = "full space: d = 1, no eigenvalues"
        out["d"] = 1
    else:
        try:
            out["d"] = exact_min_distance(c, budget=args.enum_budget)
        except BudgetExceeded:
            out["d"] = None
        data = EigenData(c)
        out["eigenvalues"] = list(data.sp.eigenvalues.indices)
        try:
            reps = spectral_bounds(c, fams, subset_cap=args.subset_cap, data=data)
        except ValueError as e:
            raise InputError(str(e)) from None
        out["d_Spec"] = {
            f: {"value": r.value, "P": list(r.subset.indices), "d_P": r.d_P, "eigencode_d": r.eigencode_dist}
            for f, r in reps.items()
        }
        out["d_J"] = jensen_bound(c).value
        out["d_L"] = lally_bound(c).value
    json.dump(_jsonable(out), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def _run_sweep(args):
    return sweep(
        _ranges(args),
        args.count,
        seed=args.seed,
        families=_families(args.families),
        subset_cap=args.subset_cap,
        enum_budget=args.enum_budget,
        jobs=args.jobs,
    )


def _open_out(path):
    return sys.stdout if path in (None, "-") else open(path, "w", newline="", encoding="utf-8")


def cmd_sweep(args) -> int:
    rows = _run_sweep(args)
    fh = _open_out(args.out)
    try:
        rows_to_csv(rows, fh)
    finally:
        if fh is not sys.stdout:
            fh.close()
    summary = summarize(rows).as_dict()
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as f:
            json.dump(summary, f, indent=2)
            f.write("\n")
    else:
        print(json.dumps(summary), file=sys.stderr)
    return EXIT_OK


def cmd_ratios(args) -> int:
    rows = _run_sweep(args)
    table = rate_ratios(rows, args.buckets)
    fh = _open_out(args.out)
    try:
        w = csv.writer(fh, lineterminator="\n")
        cols = ["rate_lo", "rate_hi", "count", "mean_L", "mean_S", "mean_J"]
        w.writerow(cols)
        for t in table:
            w.writerow([f"{t[k]:.6f}" if isinstance(t[k], float) else t[k] for k in cols])
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_examples(args) -> int:
    results = run_worked_examples()
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}")
        for d in r.diffs:
            print(f"      {d}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_GOLDEN


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qtbounds", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--families", default="bu", help="comma list from " + ",".join(FAMILIES))
    common.add_argument("--subset-cap", type=int, default=None, help="largest eigenvalue subset size for b1")
    common.add_argument("--enum-budget", type=int, default=DEFAULT_ENUM_BUDGET, help="work limit for exact distance")
    sub = ap.add_subparsers(dest="cmd", required=True)

    b = sub.add_parser("bounds", parents=[common], help="report all bounds for one code")
    b.add_argument("spec", help="JSON code description")
    b.set_defaults(families="b1,b2,b3,b4,bu")
    b.set_defaults(func=cmd_bounds)

    rand = argparse.ArgumentParser(add_help=False, parents=[common])
    rand.add_argument("--q", type=int, default=2)
    rand.add_argument("--lambda", dest="lam", type=int, default=1)
    rand.add_argument("--m", default=None, help="e.g. 3,5,7 (default: the table values for q)")
    rand.add_argument("--ell", default="2-6")
    rand.add_argument("--r", default=None, help="restrict r (default 1..ell)")
    rand.add_argument("--count", type=int, default=50, help="codes per (m, ell, r)")
    rand.add_argument("--seed", type=int, default=0)
    rand.add_argument("--jobs", type=int, default=1)
    rand.add_argument("--out", default="-")

    s = sub.add_parser("sweep", parents=[rand], help="random comparison, CSV rows")
    s.add_argument("--summary", default=None, help="write the JSON summary here instead of stderr")
    s.set_defaults(func=cmd_sweep)

    r = sub.add_parser("ratios", parents=[rand], help="mean d_X/d per rate bucket")
    r.add_argument("--buckets", type=int, default=10)
    r.set_defaults(func=cmd_ratios)

    e = sub.add_parser("examples", help="recompute the worked examples")
    e.set_defaults(func=cmd_examples)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
