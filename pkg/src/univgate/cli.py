"""Command-line front end.

Exit codes: 0 universal / success, 1 input or usage error, 2 conjectured
non-universal, 3 inconclusive, 4 verify-paper had failing claims.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from univgate.classifier import Verdict, classify
from univgate.gateio import GateParseError, GateValidationError, emit_gate, parse_gate
from univgate.sampling import PreconditionError, haar_random_unitary, neighborhood_probe, streams, survey
from univgate.synthesis import ResourceError, synthesize, trotter_commutator, trotter_sum
from univgate.verify import CLAIMS, run_claims

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NON_UNIVERSAL = 2
EXIT_INCONCLUSIVE = 3
EXIT_CLAIMS_FAILED = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


class Output:
    """Human text goes to stdout in text mode and to stderr in json mode."""

    def __init__(self, fmt: str):
        self.json = fmt == "json"

    def say(self, text: str = "") -> None:
        print(text, file=sys.stderr if self.json else sys.stdout)

    def emit(self, doc: dict) -> None:
        if self.json:
            json.dump(doc, sys.stdout, indent=2, default=_jsonable)
            sys.stdout.write("\n")


def _jsonable(x):
    if isinstance(x, np.generic):
        return x.item()
    if isinstance(x, complex):
        return [x.real, x.imag]
    raise TypeError(f"not JSON serializable: {type(x).__name__}")


def load_gate(source: str) -> np.ndarray:
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            source = fh.read()
    return parse_gate(source)


def _matrix_json(u) -> list:
    return [[[z.real, z.imag] for z in row] for row in np.asarray(u)]


def cmd_check(args, out: Output) -> int:
    u = load_gate(args.gate)
    rep = classify(u)
    out.say(f"verdict:            {rep.verdict.value}")
    out.say(f"closure dimension:  {rep.closure_dimension} (traceless {rep.traceless_dimension})")
    out.say(f"sigma16/sigma1:     {rep.scheme_sv_ratio:.3e} (rank {rep.scheme_rank}"
            f"{', borderline' if rep.scheme_borderline else ''})")
    out.say(f"classical:          {rep.classical} (permutation: {rep.permutation})")
    out.say(f"local:              {rep.local}")
    out.say("eigenphases:")
    ep = rep.eigenphases
    for ph, ok, (p, q) in zip(ep.phases, ep.rational_flags, ep.approximations):
        tag = f"rational, {p}/{q} pi" if ok else "irrational (q <= 1000)"
        out.say(f"  {ph:+.12f}  {tag}")
    out.emit({"command": "check", "report": rep.to_dict()})
    if rep.verdict.is_universal:
        return EXIT_OK
    if rep.verdict.is_non_universal:
        return EXIT_NON_UNIVERSAL
    return EXIT_INCONCLUSIVE


def cmd_synthesize(args, out: Output) -> int:
    gate = load_gate(args.gate)
    if args.target == "random":
        target = haar_random_unitary(streams(args.seed, 1)[0])
    else:
        target = load_gate(args.target)
    res = synthesize(target, gate, args.depth, phase_invariant=args.phase_invariant)
    out.say(f"seed: {args.seed}")
    out.say(f"depth: {args.depth}")
    out.say(f"word: {res.best_word.letters or '(empty)'} (length {len(res.best_word)})")
    out.say(f"distance: {res.achieved_distance:.12g}")
    out.emit({
        "command": "synthesize",
        "seed": args.seed,
        "depth": args.depth,
        "phase_invariant": args.phase_invariant,
        "word": res.best_word.letters,
        "distance": res.achieved_distance,
        "target": _matrix_json(target),
        "realized": _matrix_json(res.best_word.realized),
    })
    return EXIT_OK


def cmd_sample(args, out: Output) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    res = survey(args.n, args.seed)
    out.say(f"seed: {args.seed}")
    out.say(f"samples: {res.n_samples}")
    out.say(f"UniversalByScheme: {res.n_universal_by_scheme} ({res.fraction_by_scheme:.4f})")
    out.say(f"any universal verdict: {res.n_universal} ({res.fraction_universal:.4f})")
    out.say("sigma16/sigma1 histogram (log10 bucket start: count):")
    for i, c in enumerate(res.sv_ratio_histogram):
        out.say(f"  {-12 + 0.6 * i:6.1f}: {c}")
    out.emit({"command": "sample", **res.to_dict()})
    return EXIT_OK


def cmd_probe(args, out: Output) -> int:
    u = load_gate(args.gate)
    frac = neighborhood_probe(u, args.radius, args.n, args.seed)
    out.say(f"seed: {args.seed}")
    out.say(f"radius {args.radius:g}, {args.n} perturbations: universal fraction {frac:.4f}")
    out.emit({"command": "probe", "seed": args.seed, "radius": args.radius, "n": args.n,
              "fraction_universal": frac})
    return EXIT_OK


def cmd_verify_paper(args, out: Output) -> int:
    unknown = set(args.skip) - set(CLAIMS)
    if unknown:
        raise UsageError(f"unknown claim(s) for --skip: {', '.join(sorted(unknown))}")
    out.say(f"seed: {args.seed}")
    claims = run_claims(args.seed, skip=set(args.skip))
    for c in claims:
        out.say(f"[{'PASS' if c.passed else 'FAIL'}] {c.name:14s} measured={c.measured} "
                f"threshold: {c.threshold} ({c.seconds:.2f}s){'  ' + c.detail if c.detail else ''}")
    ok = all(c.passed for c in claims)
    out.say(f"{sum(c.passed for c in claims)}/{len(claims)} claims pass")
    out.emit({"command": "verify-paper", "seed": args.seed, "pass": ok,
              "claims": [c.to_dict() for c in claims]})
    return EXIT_OK if ok else EXIT_CLAIMS_FAILED


def _int_list(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("grid values must be positive integers")
    return values


def cmd_demo_trotter(args, out: Output) -> int:
    from univgate.sampling import random_direction

    rng = streams(args.seed, 1)[0]
    p, q = random_direction(rng), random_direction(rng)
    rows = []
    prev = None
    for n in args.n:
        e_sum = trotter_sum(p, q, 1, 1, n)[1]
        e_comm = trotter_commutator(p, q, n)[1]
        row = {"n": n, "sum_error": e_sum, "commutator_error": e_comm,
               "sum_ratio": None, "commutator_ratio": None}
        if prev is not None:
            row["sum_ratio"] = e_sum / prev["sum_error"]
            row["commutator_ratio"] = e_comm / prev["commutator_error"]
        rows.append(row)
        prev = row
    out.say(f"seed: {args.seed}")
    out.say(f"{'n':>8} {'sum error':>12} {'ratio':>7} {'comm error':>12} {'ratio':>7}")
    fmt = lambda r: "" if r is None else f"{r:.3f}"
    for r in rows:
        out.say(f"{r['n']:>8} {r['sum_error']:12.4e} {fmt(r['sum_ratio']):>7} "
                f"{r['commutator_error']:12.4e} {fmt(r['commutator_ratio']):>7}")
    out.emit({"command": "demo-trotter", "seed": args.seed, "rows": rows})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=42)

    parser = _Parser(prog="univgate", description="Universality checks for two-qubit gates.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="classify a gate")
    p.add_argument("--gate", required=True, help="gate spec or path to a gate file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("synthesize", parents=[common], help="approximate a target by U/TUT words")
    p.add_argument("--gate", required=True)
    p.add_argument("--target", default="random", help="'random' (seeded Haar) or a gate spec/file")
    p.add_argument("--depth", type=int, default=16)
    p.add_argument("--phase-invariant", action="store_true")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("sample", parents=[common], help="classify seeded Haar-random gates")
    p.add_argument("--n", type=int, default=1000)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("probe", parents=[common], help="perturb a universal gate's generator")
    p.add_argument("--gate", required=True)
    p.add_argument("--radius", type=float, default=1e-3)
    p.add_argument("--n", type=int, default=200)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("verify-paper", parents=[common], help="run the built-in claim suite")
    p.add_argument("--skip", action="append", default=[], metavar="CLAIM",
                   help=f"skip a claim (repeatable): {', '.join(CLAIMS)}")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("demo-trotter", parents=[common], help="product-formula error table")
    p.add_argument("--n", type=_int_list, default=[64, 128, 256])
    p.set_defaults(func=cmd_demo_trotter)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"univgate: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = Output(args.output)
    try:
        return args.func(args, out)
    except (UsageError, GateParseError, GateValidationError, PreconditionError,
            ResourceError, OSError) as exc:
        print(f"univgate: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
