"""Command-line front end.

Subcommands: info, systole, loops, verify-batch, gen, oracle, growth.
All outputs are deterministic functions of the arguments; seeds are echoed
into emitted documents.  Exact values print as fraction strings with a float
approximation alongside.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import certify, generators, graph, homology, loops, oracle
from .graph import GraphError, format_length
from .systole import check_bst_bound, systole


def _fmt(q: Fraction) -> str:
    return f"{format_length(q)} (~{float(q):.6g})"


def _load(path: str) -> graph.MetricGraph:
    try:
        return graph.load(path)
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc


def cmd_info(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    b = g.betti()
    print(f"vertices: {g.num_vertices}")
    print(f"edges: {len(g.edges)}")
    print(f"components: {g.num_components}")
    print(f"betti: {b}")
    print(f"total_length: {_fmt(g.total_length())}")
    if b < 1 or not g.is_connected:
        print("systole: absent (forest or disconnected)")
        return 0
    cyc = systole(g)
    print(f"systole: {_fmt(cyc.length)}")
    print(f"systolic_cycle_edges: {sorted(set(cyc.loop.edge_ids()))}")
    if b >= 2:
        holds, lhs, rhs = check_bst_bound(g)
        verdict = "holds" if holds else "VIOLATED"
        print(f"bst_bound: sys_normalized {_fmt(lhs)} <= 4*log(b+1) = {rhs:.6g}: {verdict}")
    return 0


def cmd_systole(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    cyc = systole(g)
    print(f"systole: {_fmt(cyc.length)}")
    print(f"base: {cyc.loop.base}")
    steps = [[eid, 1 if fwd else -1] for eid, fwd in cyc.loop.steps]
    print(f"steps: {steps}")
    return 0


def cmd_loops(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    if args.n < 1:
        raise GraphError("--n must be at least 1")
    cert = loops.independent_based_loops(g, args.n)
    doc = certify.certificate_document(g, cert)
    parsed = certify.parse_certificate(doc)
    ok, reasons = certify.verify_certificate(g, parsed)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
        print(f"certificate written to {args.out}")
    else:
        sys.stdout.write(doc)
    if not ok:
        for reason in reasons:
            print(f"verification failure: {reason}", file=sys.stderr)
        return 1
    print(
        f"verified: n={cert.n} base={cert.base} branch={cert.branch} "
        f"max_length={max(float(lp.length) for lp in cert.loops):.6g} "
        f"bound={cert.bound:.6g}",
        file=sys.stderr,
    )
    return 0


def _policy_values(b: int, policy: Sequence[str]) -> list[int]:
    values: set[int] = set()
    for item in policy:
        if item == "one":
            values.add(1)
        elif item == "logb":
            values.add(math.floor(math.log(b)))
        elif item == "half":
            values.add(-(-b // 2))
        elif item == "betti":
            values.add(b)
        else:
            values.add(int(item))
    return sorted(v for v in values if 1 <= v <= b)


DEFAULT_POLICY = ("one", "logb", "half", "betti")


def cmd_verify_batch(args: argparse.Namespace) -> int:
    if args.count < 0:
        raise GraphError("--count must be non-negative")
    if not 2 <= args.b_min <= args.b_max:
        raise GraphError("need 2 <= --b-min <= --b-max")
    policy = args.n_policy or list(DEFAULT_POLICY)
    import random

    rng = random.Random(args.seed)
    failures = []
    max_ratio = 0.0
    rows = []
    for idx in range(args.count):
        b = rng.randint(args.b_min, args.b_max)
        v = rng.randint(1, 3 * b)
        law = "unit" if rng.random() < 0.5 else ("uniform", 0.1, 2.0)
        instance_seed = rng.randrange(2**32)
        g = generators.gen_random(v, b, instance_seed, law)
        g, _scale = g.normalize()
        for n in _policy_values(b, policy):
            cert = loops.independent_based_loops(g, n)
            meta = {
                "instance": idx,
                "prng": generators.PRNG_ID,
                "generator": {
                    "kind": "random",
                    "v": v,
                    "b": b,
                    "seed": instance_seed,
                    "law": "unit" if law == "unit" else "uniform:0.1:2.0",
                },
                "normalized": True,
                "n": n,
            }
            doc = certify.certificate_document(g, cert, metadata=meta)
            ok, reasons = certify.verify_certificate(g, certify.parse_certificate(doc))
            ratio = max(float(lp.length) for lp in cert.loops) / cert.bound
            max_ratio = max(max_ratio, ratio)
            status = "pass" if ok else "FAIL"
            rows.append((idx, b, n, cert.branch, ratio, status))
            if not ok:
                failures.append((idx, instance_seed, n, reasons))
            if args.out_dir:
                os.makedirs(args.out_dir, exist_ok=True)
                name = f"certificate_{idx:04d}_n{n}.json"
                with open(os.path.join(args.out_dir, name), "w", encoding="utf-8") as fh:
                    fh.write(doc)
    print(f"{'instance':>8} {'b':>4} {'n':>4} {'branch':>9} {'len/bound':>10} {'status':>6}")
    for idx, b, n, branch, ratio, status in rows:
        print(f"{idx:>8} {b:>4} {n:>4} {branch:>9} {ratio:>10.4f} {status:>6}")
    print(f"instances: {args.count}  certificates: {len(rows)}  max length/bound: {max_ratio:.4f}")
    if failures:
        for idx, seed, n, reasons in failures:
            print(
                f"FAILURE instance={idx} seed={seed} n={n}: {'; '.join(reasons)}",
                file=sys.stderr,
            )
        return 1
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "star":
        params = generators.StarParams(
            m=args.m,
            p=args.p,
            L=graph.parse_length(args.L),
            l=graph.parse_length(args.l),
        )
        g = generators.gen_star(params)
    elif args.kind == "bouquet":
        g = generators.gen_bouquet(args.b, args.lengths)
    else:
        law = _parse_law(args.law)
        g = generators.gen_random(args.v, args.b, args.seed, law)
    doc = graph.to_document(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
        print(f"graph written to {args.out} (betti {g.betti()}, length {_fmt(g.total_length())})")
    else:
        sys.stdout.write(doc)
    return 0


def _parse_law(text: str) -> generators.LengthLaw:
    if text == "unit":
        return "unit"
    if text.startswith("uniform:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise GraphError("uniform law syntax: uniform:LO:HI")
        return ("uniform", float(parts[1]), float(parts[2]))
    raise GraphError(f"unknown length law {text!r}")


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    if args.oracle_op == "systole":
        value = oracle.brute_systole(g, max_edges=args.max_edges)
        print(f"brute_systole: {_fmt(value)}")
        return 0
    budget = graph.parse_length(args.budget)
    if args.base is not None:
        r, witnesses = oracle.max_rank_under_budget(g, args.base, budget)
        base = args.base
    else:
        r, base = oracle.best_base_rank(g, budget)
        _r, witnesses = oracle.max_rank_under_budget(g, base, budget)
    print(f"rank: {r}")
    print(f"base: {base}")
    for i, lp in enumerate(witnesses):
        steps = [[eid, 1 if fwd else -1] for eid, fwd in lp.steps]
        print(f"witness {i}: length {_fmt(lp.length)} steps {steps}")
    return 0


def cmd_growth(args: argparse.Namespace) -> int:
    value = homology.free_ball_size(args.rank, args.radius)
    print(f"free_ball_size(rank={args.rank}, radius={args.radius}) = {value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgt",
        description="Exact systoles and short homologically independent based loops on metric graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="summary: v, e, b, length, systole, BST bound")
    p.add_argument("graph")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("systole", help="exact systole and a realizing cycle")
    p.add_argument("graph")
    p.set_defaults(func=cmd_systole)

    p = sub.add_parser("loops", help="n independent based loops with certificate")
    p.add_argument("graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_loops)

    p = sub.add_parser("verify-batch", help="generate, certify and re-verify random instances")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--b-min", type=int, default=2)
    p.add_argument("--b-max", type=int, default=64)
    p.add_argument("--n-policy", nargs="*", help="any of: one logb half betti, or integers")
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_verify_batch)

    p = sub.add_parser("gen", help="emit a generated graph document")
    gensub = p.add_subparsers(dest="kind", required=True)
    star = gensub.add_parser("star")
    star.add_argument("--m", type=int, required=True)
    star.add_argument("--p", type=int, required=True)
    star.add_argument("--L", required=True)
    star.add_argument("--l", required=True)
    star.add_argument("--out")
    star.set_defaults(func=cmd_gen)
    bouquet = gensub.add_parser("bouquet")
    bouquet.add_argument("--b", type=int, required=True)
    bouquet.add_argument("--lengths", nargs="+", required=True)
    bouquet.add_argument("--out")
    bouquet.set_defaults(func=cmd_gen)
    rnd = gensub.add_parser("random")
    rnd.add_argument("--v", type=int, required=True)
    rnd.add_argument("--b", type=int, required=True)
    rnd.add_argument("--seed", type=int, required=True)
    rnd.add_argument("--law", default="unit")
    rnd.add_argument("--out")
    rnd.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force checks at desk scale")
    osub = p.add_subparsers(dest="oracle_op", required=True)
    osys = osub.add_parser("systole")
    osys.add_argument("graph")
    osys.add_argument("--max-edges", type=int, default=oracle.DEFAULT_BRUTE_EDGE_LIMIT)
    osys.set_defaults(func=cmd_oracle)
    orank = osub.add_parser("rank")
    orank.add_argument("graph")
    orank.add_argument("--budget", required=True)
    orank.add_argument("--base", type=int)
    orank.set_defaults(func=cmd_oracle)

    p = sub.add_parser("growth", help="free-group ball size")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=cmd_growth)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except oracle.OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
