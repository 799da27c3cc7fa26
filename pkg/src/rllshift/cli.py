"""Command-line surface: enumerate | measure | lambda | sample | dims | gamma-check | verify.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage error.
Rational p ("num/den") keeps computations exact; decimal p switches the
affected computations to float mode.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import dimension, markov, measure, univoque, verify, words

SCHEMA = 1


def _parse_p(text: str):
    """'num/den' -> Fraction (exact mode); decimal -> float (float mode)."""
    if "/" in text:
        return Fraction(text)
    value = float(text)
    if value == Fraction(text) and "." not in text and "e" not in text.lower():
        return Fraction(text)
    return value


def _format_value(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return repr(float(v))


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_enumerate(args) -> int:
    if args.count_only:
        record = {
            "schema": SCHEMA,
            "m": args.m,
            "n": args.n,
            "count": words.count_words(args.m, args.n),
        }
        _emit(args, json.dumps(record))
        return 0
    listing = words.enumerate_words(args.m, args.n)
    _emit(args, "\n".join(w.symbols for w in listing))
    return 0


def cmd_measure(args) -> int:
    meas = measure.bernoulli(args.m, _parse_p(args.p), args.mode)
    if args.k:
        value = measure.pullback_cylinder(meas, args.w, args.k)
    else:
        value = measure.mu_recursive(meas, args.w).value
    record = {
        "schema": SCHEMA,
        "m": args.m,
        "p": _format_value(meas.p),
        "w": args.w,
        "k": args.k,
        "mu": _format_value(value),
        "mode": meas.mode,
    }
    _emit(args, json.dumps(record))
    return 0


def cmd_lambda(args) -> int:
    p = _parse_p(args.p)
    closed = measure.lambda0_closed(args.m, p)
    chain = markov.build_chain(args.m, Fraction(p))
    pi0 = markov.digit_mass(markov.stationary(chain), 0)
    meas = measure.bernoulli(args.m, p)
    ces = measure.cesaro_lambda(meas, "0", args.n)
    record = {
        "schema": SCHEMA,
        "m": args.m,
        "p": _format_value(p),
        "n": args.n,
        "closed_form": _format_value(closed),
        "stationary": _format_value(pi0),
        "cesaro": repr(ces),
    }
    _emit(args, json.dumps(record))
    return 0


def cmd_sample(args) -> int:
    chain = markov.build_chain(args.m, float(_parse_p(args.p)))
    run = markov.sample(chain, args.n, args.seed)
    q = float(_parse_p(args.q)) if args.q else float(chain.p)
    freq = run.frequency_series()
    local = markov.empirical_local_dimension(run, q)
    lines = ["n,freq0,local_dim"]
    for i in range(args.stride - 1, run.n, args.stride):
        lines.append(f"{i + 1},{freq[i]!r},{local[i]!r}")
    summary = {
        "schema": SCHEMA,
        "m": args.m,
        "p": float(chain.p),
        "q": q,
        "seed": args.seed,
        "n": args.n,
        "freq0_final": run.freq0(),
        "local_dim_final": float(local[-1]),
    }
    if args.format == "json":
        _emit(args, json.dumps(summary))
    else:
        _emit(args, "\n".join(lines) + "\n" + json.dumps(summary))
    return 0


def _parse_range(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def cmd_dims(args) -> int:
    ms = _parse_range(args.m)
    ps = [float(_parse_p(x)) for x in args.p.split(",")]
    lines = ["m,p,q,bound,entropy,topo_dim"]
    for m in ms:
        for p in ps:
            prof = dimension.profile(m, p)
            q = "" if prof.q is None else repr(prof.q)
            bound = "" if prof.lower_bound is None else repr(prof.lower_bound)
            lines.append(
                f"{m},{p!r},{q},{bound},{prof.entropy!r},{prof.topo_dim!r}"
            )
    _emit(args, "\n".join(lines))
    return 0


def cmd_gamma(args) -> int:
    if args.periodic:
        pre, _, per = args.periodic.partition(":")
        seq = univoque.EventuallyPeriodicSequence(pre, per)
        verdict = univoque.gamma_check_periodic(seq, args.variant)
    else:
        verdict = univoque.gamma_check_prefix(args.w, args.depth)
    record = {
        "schema": SCHEMA,
        "status": verdict.status,
        "k": verdict.k,
        "position": verdict.position,
        "equality_flags": list(verdict.equality_flags),
    }
    _emit(args, json.dumps(record))
    return 0


def cmd_verify(args) -> int:
    results = verify.run_suite(quick=args.quick)
    _emit(args, verify.format_report(results))
    return 0 if all(r.passed for _, r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rllshift")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", default=None, help="write output to a file")

    sp = sub.add_parser("enumerate", help="admissible words of a given length")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--count-only", action="store_true")
    common(sp)
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("measure", help="cylinder measure or its shift pullback")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--mode", choices=("exact", "float"), default=None)
    common(sp)
    sp.set_defaults(fn=cmd_measure)

    sp = sub.add_parser("lambda", help="invariant mass of [0], three ways")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--n", type=int, default=10_000)
    common(sp)
    sp.set_defaults(fn=cmd_lambda)

    sp = sub.add_parser("sample", help="seeded path with frequency/local-dim series")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--q", default=None, help="evaluate the measure at this parameter")
    sp.add_argument("--stride", type=int, default=1000)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    common(sp)
    sp.set_defaults(fn=cmd_sample)

    sp = sub.add_parser("dims", help="dimension profile table over an (m,p) grid")
    sp.add_argument("--m", required=True, help="single value, list, or lo:hi")
    sp.add_argument("--p", required=True, help="comma-separated values")
    common(sp)
    sp.set_defaults(fn=cmd_dims)

    sp = sub.add_parser("gamma-check", help="univoque-condition verdicts")
    sp.add_argument("--w", default=None, help="finite '0'/'1' window")
    sp.add_argument("--depth", type=int, default=100)
    sp.add_argument("--periodic", default=None, help="preperiod:period")
    sp.add_argument("--variant", choices=("strict", "weak"), default="strict")
    common(sp)
    sp.set_defaults(fn=cmd_gamma)

    sp = sub.add_parser("verify", help="run the full verification suite")
    sp.add_argument("--quick", action="store_true")
    sp.add_argument(
        "--workers",
        type=int,
        default=1,
        help="accepted for interface stability; output is worker-count independent",
    )
    common(sp)
    sp.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gamma-check" and not (args.w or args.periodic):
        parser.error("gamma-check needs --w or --periodic")
    try:
        return args.fn(args)
    except (ValueError, words.CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
