"""Command-line front end.

Strings live on disk as raw byte files (symbol value = byte + 1). Runs
emit one JSON record per decision so results can be collected and
compared across modes and parameter grids.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import asdict
from pathlib import Path

import numpy as np

from . import (ByteString, GapVerdict, HashConfig, OpCounters, gap_match,
               gap_wave, gen_large_side, gen_periodic, gen_planted,
               load_instance, save_instance)
from .instances import Instance
from .one_sided import OneSidedIndex, OneSidedOracle
from .strings import edit_distance_at_most, edit_distance_exact

RECORD_SCHEMA = 1


def _default_seed(args_seed):
    if args_seed is not None:
        return args_seed
    env = os.environ.get("GAPEDIT_SEED")
    return int(env) if env else None


def _read_string(path: str, sigma: int) -> ByteString:
    return ByteString.from_bytes(Path(path).read_bytes(), sigma)


def _emit(record: dict, path: str | None) -> None:
    line = json.dumps(record)
    if path:
        with open(path, "a") as f:
            f.write(line + "\n")
    print(line)


def _warn_params(n: int, k: int) -> None:
    if k * k > n:
        print(f"warning: k={k} exceeds sqrt(n)={math.isqrt(n)}; the gap "
              f"thresholds may leave no LARGE regime at this length",
              file=sys.stderr)


def cmd_gen(args) -> int:
    seed = _default_seed(args.seed)
    if args.periodic:
        s = gen_periodic(args.n, args.sigma, args.periodic, seed=seed,
                         corrupt=args.corrupt)
        t = gen_periodic(args.n, args.sigma, args.periodic, seed=seed,
                         corrupt=args.corrupt + args.edits)
        inst = Instance(s, t, "periodic", seed=seed)
    elif args.label == "small":
        inst = gen_planted(args.n, args.sigma, args.edits, seed=seed,
                           compute_exact=args.exact)
    else:
        inst = gen_large_side(args.n, args.sigma, args.threshold, seed=seed)
    save_instance(inst, Path(args.out))
    _emit({"schema": RECORD_SCHEMA, "command": "gen", "out": args.out,
           "n": args.n, "sigma": args.sigma, "label": inst.label,
           "seed": inst.seed, "planted_edits": inst.planted_edits,
           "threshold": inst.threshold, "exact_ed": inst.exact_ed},
          args.record)
    return 0


def cmd_exact(args) -> int:
    a = _read_string(args.a, args.sigma)
    b = _read_string(args.b, args.sigma)
    t0 = time.perf_counter()
    if args.at_most is not None:
        ok = edit_distance_at_most(a, b, args.at_most)
        rec = {"at_most": args.at_most, "within": bool(ok)}
    else:
        rec = {"distance": edit_distance_exact(a, b)}
    rec.update({"schema": RECORD_SCHEMA, "command": "exact",
                "n": len(a), "m": len(b),
                "seconds": round(time.perf_counter() - t0, 6)})
    _emit(rec, args.record)
    return 0


def cmd_gap(args) -> int:
    a = _read_string(args.a, args.sigma)
    b = _read_string(args.b, args.sigma)
    seed = _default_seed(args.seed)
    _warn_params(len(b), args.k)
    t0 = time.perf_counter()
    verdict, counters = gap_match(a, b, args.k, mode=args.mode, seed=seed)
    _emit({"schema": RECORD_SCHEMA, "command": "gap", "mode": args.mode,
           "n": len(b), "k": args.k, "seed": seed,
           "verdict": verdict.value, "counters": asdict(counters),
           "seconds": round(time.perf_counter() - t0, 6)}, args.record)
    return 0


def cmd_wave(args) -> int:
    a = _read_string(args.a, args.sigma)
    b = _read_string(args.b, args.sigma)
    seed = _default_seed(args.seed)
    _warn_params(len(b), args.k)
    t0 = time.perf_counter()
    verdict, counters = gap_wave(a, b, args.k, args.ell, args.mode, seed=seed)
    _emit({"schema": RECORD_SCHEMA, "command": "wave", "mode": args.mode,
           "n": len(b), "k": args.k, "ell": args.ell, "seed": seed,
           "verdict": verdict.value, "counters": asdict(counters),
           "seconds": round(time.perf_counter() - t0, 6)}, args.record)
    return 0


def cmd_bench(args) -> int:
    seed = _default_seed(args.seed)
    root = np.random.SeedSequence(seed)
    for n in args.ns:
        for k in args.ks:
            child_seeds = root.spawn(args.trials)
            agg = OpCounters()
            t0 = time.perf_counter()
            verdicts = []
            for t in range(args.trials):
                s = int(child_seeds[t].generate_state(1)[0])
                inst = gen_planted(n, args.sigma, k, seed=s)
                verdict, counters = gap_match(inst.a, inst.b, k,
                                              mode=args.mode, seed=s)
                agg.merge(counters)
                verdicts.append(verdict.value)
            _emit({"schema": RECORD_SCHEMA, "command": "bench",
                   "mode": args.mode, "n": n, "k": k,
                   "trials": args.trials,
                   "small": verdicts.count("small"),
                   "counters": asdict(agg),
                   "seconds": round(time.perf_counter() - t0, 6)},
                  args.record)
    return 0


def cmd_selftest(args) -> int:
    seed = _default_seed(args.seed) or 0
    failures = []

    def check(name, cond):
        print(f"{'ok' if cond else 'FAIL'}  {name}")
        if not cond:
            failures.append(name)

    inst = gen_planted(256, 8, 4, seed=seed)
    big = gen_large_side(256, 64, 200, seed=seed)
    for mode in ("exact", "noprep", "onesided", "twosided"):
        v, _ = gap_match(inst.a, inst.b, 4, mode=mode, seed=seed)
        check(f"gap {mode} small", v == GapVerdict.SMALL)
        v, _ = gap_match(big.a, big.b, 2, mode=mode, seed=seed)
        check(f"gap {mode} large", v == GapVerdict.LARGE)
    wv = gen_planted(256, 8, 9, seed=seed + 1)
    for mode in ("exact", "noprep", "onesided", "twosided"):
        v, _ = gap_wave(wv.a, wv.b, 9, 3, mode, seed=seed)
        check(f"wave {mode} small", v == GapVerdict.SMALL)

    # corrupted index files must be rejected, not silently used
    import tempfile
    with tempfile.TemporaryDirectory() as td:
        cfg = HashConfig.from_seed(seed)
        idx = OneSidedIndex.preprocess(inst.a, 4, cfg)
        p = Path(td) / "x.1s"
        idx.save(p)
        raw = bytearray(p.read_bytes())
        raw[0] ^= 0xFF
        p.write_bytes(bytes(raw))
        try:
            OneSidedIndex.load(p)
            check("corrupt index rejected", False)
        except ValueError:
            check("corrupt index rejected", True)

    # fault injection: a degenerate hash (x = 1) must be caught by
    # disagreement with the brute-force referee on some query
    from .strings import max_k_alignment_bruteforce
    bad_cfg = HashConfig(x=1)
    bad = OneSidedOracle(OneSidedIndex.preprocess(inst.a, 4, bad_cfg), inst.b)
    mismatch = any(bad(i) != max_k_alignment_bruteforce(inst.a, inst.b, i, 4)
                   for i in range(1, 257))
    check("degenerate hash detected", mismatch)

    print("selftest:", "FAIL" if failures else "ok")
    return 1 if failures else 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="gapedit",
        description="sublinear gap edit distance decisions")
    ap.add_argument("--record", help="append JSON run records to this file")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a test instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--sigma", type=int, default=256)
    g.add_argument("--label", choices=["small", "large"], default="small")
    g.add_argument("--edits", type=int, default=0)
    g.add_argument("--threshold", type=int, default=0)
    g.add_argument("--periodic", type=int, default=0,
                   help="make a periodic pair with this period instead")
    g.add_argument("--corrupt", type=int, default=0)
    g.add_argument("--exact", action="store_true",
                   help="also record the exact distance")
    g.add_argument("--seed", type=int)
    g.add_argument("--out", required=True, help="output path stem")
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("exact", help="exact edit distance")
    e.add_argument("a")
    e.add_argument("b")
    e.add_argument("--sigma", type=int, default=256)
    e.add_argument("--at-most", type=int, dest="at_most")
    e.set_defaults(func=cmd_exact)

    p = sub.add_parser("gap", help="k vs 40k^2 gap decision")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", default="noprep",
                   choices=["exact", "noprep", "onesided", "twosided"])
    p.add_argument("--sigma", type=int, default=256)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_gap)

    w = sub.add_parser("wave", help="k vs 10kl gap decision")
    w.add_argument("a")
    w.add_argument("b")
    w.add_argument("--k", type=int, required=True)
    w.add_argument("--ell", type=int, required=True)
    w.add_argument("--mode", default="noprep",
                   choices=["exact", "noprep", "onesided", "twosided"])
    w.add_argument("--sigma", type=int, default=256)
    w.add_argument("--seed", type=int)
    w.set_defaults(func=cmd_wave)

    b = sub.add_parser("bench", help="counter scaling over a grid")
    b.add_argument("--mode", default="noprep",
                   choices=["exact", "noprep", "onesided", "twosided"])
    b.add_argument("--ns", type=int, nargs="+", required=True)
    b.add_argument("--ks", type=int, nargs="+", required=True)
    b.add_argument("--trials", type=int, default=3)
    b.add_argument("--sigma", type=int, default=16)
    b.add_argument("--seed", type=int)
    b.set_defaults(func=cmd_bench)

    s = sub.add_parser("selftest", help="quick end-to-end checks")
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_selftest)

    args = ap.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
