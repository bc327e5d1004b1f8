"""Command-line front end: every capability as a subcommand.

Exit codes: 0 completed, 1 usage or input error, 2 counterexample found
(search) or fact violation (lemmas stress/scan).  Rationals on the
command line are exact `p/q` strings; decimal input is rejected because
the interesting boundaries are razor-thin.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from fractions import Fraction
from typing import Optional

from . import constructions, frontier, lemmas, search
from .audit import audit_bigindeg, audit_bigset
from .digraph import (
    BipartiteDigraph,
    Side,
    VertexRef,
    backward_layers,
    compliance_profile,
    forward_layers,
    girth,
    is_compliant,
)
from .errors import BipgirthError
from .io import parse_edge_list, to_dot, to_edge_list

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a p/q rational (decimals are rejected)")
    return Fraction(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _write_out(text: str, path: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load(path: str) -> BipartiteDigraph:
    with open(path) as fh:
        g = parse_edge_list(fh.read())
    return g


def _emit_graph(g, args) -> int:
    text = to_dot(g) if args.format == "dot" else to_edge_list(g)
    _write_out(text, args.out)
    return 0


def _cmd_construct(args) -> int:
    which = args.family
    if which == "layered":
        g = constructions.layered_cycle(args.k, args.t)
    elif which == "circulant":
        g = constructions.circulant(args.k, args.s, args.t)
    elif which == "offset":
        spec = constructions.OffsetSpec(
            args.n,
            frozenset(int(x) for x in args.out_offsets.split(",")),
            frozenset(int(y) for y in args.in_offsets.split(",")))
        g = constructions.offset_circulant(spec)
    elif which == "ch-reduce":
        h = _load(args.file)
        g = constructions.ch_reduce(h)
    else:
        g = constructions.random_compliant(args.na, args.nb, args.alpha,
                                           args.beta, seed=args.seed)
    return _emit_graph(g, args)


def _cmd_girth(args) -> int:
    gr = girth(_load(args.file))
    if gr is None:
        print("acyclic")
    else:
        print(f"girth {gr.length}")
        print("cycle " + " ".join(str(v) for v in gr.cycle))
    return 0


def _cmd_layers(args) -> int:
    g = _load(args.file)
    v = VertexRef.parse(args.vertex)
    fn = backward_layers if args.backward else forward_layers
    profile = fn(g, v, args.max)
    for i in range(args.max + 1):
        members = " ".join(str(u) for u in sorted(
            profile.layers[i], key=lambda u: (u.side.value, u.index)))
        print(f"{i}: {members}")
    return 0


def _cmd_comply(args) -> int:
    g = _load(args.file)
    a, b = compliance_profile(g)
    print(f"profile {a} {b}")
    print(f"compliant {str(is_compliant(g, args.alpha, args.beta)).lower()}")
    return 0


def _cmd_classify(args) -> int:
    p = frontier.AlphaBeta(args.alpha, args.beta)
    v = frontier.classify(args.k, p)
    if v.status is frontier.Status.GOOD:
        print(f"GOOD rule=({v.rule})")
    elif v.status is frontier.Status.BAD:
        print(f"BAD witness=({v.witness})")
    else:
        print("UNKNOWN")
    return 0


def _cmd_region(args) -> int:
    if args.format == "svg":
        text = frontier.region_svg(args.k, args.resolution)
    else:
        text = frontier.region_csv(args.k, args.resolution)
    _write_out(text, args.out)
    return 0


def _cmd_search(args) -> int:
    mode = "randomized" if args.mode == "random" else args.mode
    cfg = search.SearchConfig(
        n_a=args.na, n_b=args.nb, k=args.k, alpha=args.alpha, beta=args.beta,
        mode=mode, eulerian=args.eulerian, seed=args.seed,
        node_limit=args.node_limit, thread_hint=args.threads)
    report = search.find_counterexample(cfg)
    print(json.dumps(report.to_json_dict(), indent=2))
    return 2 if report.status is search.SearchStatus.FoundCounterexample else 0


def _fact_entry(fact_id: str) -> dict:
    t0 = time.perf_counter()
    rep = lemmas.fact_scan(fact_id)
    return {
        "fact_id": rep.fact_id,
        "holds": rep.holds_everywhere,
        "margin_min": None if rep.margin_min is None else str(rep.margin_min),
        "grid_step": str(rep.grid_step),
        "wall_time_ms": round((time.perf_counter() - t0) * 1000, 3),
    }


def _cmd_lemmas(args) -> int:
    if args.stress:
        rng = random.Random(args.seed)
        t0 = time.perf_counter()
        violations = 0
        for case in "abc":
            for _ in range(args.count):
                inst = lemmas.random_newineq_instance(case, rng)
                bound = lemmas.newineq_bound(inst, case)
                if lemmas.newineq_min_oracle(inst, 10, rounds=2) < float(bound) - 1e-9:
                    violations += 1
        out = {"stress": args.stress, "count": args.count, "seed": args.seed,
               "violations": violations,
               "wall_time_ms": round((time.perf_counter() - t0) * 1000, 3)}
        print(json.dumps(out, indent=2))
        return 2 if violations else 0
    ids = [args.fact] if args.fact else lemmas.all_fact_ids()
    entries = [_fact_entry(i) for i in ids]
    print(json.dumps(entries, indent=2))
    return 2 if any(not e["holds"] for e in entries) else 0


def _cmd_audit(args) -> int:
    g = _load(args.file)
    if args.which == "bigset":
        report = audit_bigset(g, args.k, args.alpha, args.beta, args.delta,
                              VertexRef.parse(args.vertex), horizon=args.horizon)
        out = {"kind": report.kind, "passed": report.passed,
               "detail": report.detail,
               "entries": [{"i": e.i, "branch": e.branch,
                            "layer_size": e.layer_size, "star_size": e.star_size}
                           for e in report.entries]}
    elif args.which == "bigindeg":
        report = audit_bigindeg(g, args.alpha, args.beta)
        out = {"kind": report.kind, "passed": report.passed,
               "detail": report.detail}
    else:
        # bells: R = S = all B-to-A edges, parameters measured from g
        edges = [(t, h) for t, h in g.edges() if t.side is Side.B]
        beta = min(m.bit_count() for m in g.a_out) / Fraction(g.b_size)
        a_min = min(Fraction(m.bit_count(), g.a_size) for m in g.b_out)
        params = lemmas.IneqParams(x=Fraction(0), y=Fraction(1), beta=beta,
                                   gamma=Fraction(0), lam=a_min, mu=beta)
        y_all = [VertexRef(Side.B, j) for j in range(g.b_size)]
        rep = lemmas.bellsandwhistles_check(g, edges, edges, params, [], y_all)
        out = {"kind": "bells", "hypotheses_held": rep.hypotheses_held,
               "conclusion_held": rep.conclusion_held,
               "lhs": str(rep.lhs), "rhs": str(rep.rhs)}
    print(json.dumps(out, indent=2))
    return 0


def build_parser() -> _Parser:
    top = _Parser(prog="bipgirth",
                  description="bipartite digraph girth toolkit")
    sub = top.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="emit a digraph from a family")
    fam = pc.add_subparsers(dest="family", required=True)
    for name in ("layered", "circulant", "offset", "ch-reduce", "random"):
        fp = fam.add_parser(name)
        fp.add_argument("--out", default="-")
        fp.add_argument("--format", choices=["edge-list", "dot"],
                        default="edge-list")
        if name == "layered":
            fp.add_argument("--k", type=int, required=True)
            fp.add_argument("--t", type=int, required=True)
        elif name == "circulant":
            fp.add_argument("--k", type=int, required=True)
            fp.add_argument("--s", type=int, required=True)
            fp.add_argument("--t", type=int, required=True)
        elif name == "offset":
            fp.add_argument("--n", type=int, required=True)
            fp.add_argument("--out-offsets", required=True,
                            help="comma-separated residues for A->B")
            fp.add_argument("--in-offsets", required=True,
                            help="comma-separated residues for B->A")
        elif name == "ch-reduce":
            fp.add_argument("file", help="general digraph edge-list file")
        else:
            fp.add_argument("--na", type=int, required=True)
            fp.add_argument("--nb", type=int, required=True)
            fp.add_argument("--alpha", type=parse_rational, required=True)
            fp.add_argument("--beta", type=parse_rational, required=True)
            fp.add_argument("--seed", type=int, default=0)
    pc.set_defaults(fn=_cmd_construct)

    pg = sub.add_parser("girth", help="shortest directed cycle")
    pg.add_argument("file")
    pg.set_defaults(fn=_cmd_girth)

    pl = sub.add_parser("layers", help="distance layers from a vertex")
    pl.add_argument("file")
    pl.add_argument("--vertex", required=True)
    pl.add_argument("--max", type=int, default=8)
    pl.add_argument("--backward", action="store_true")
    pl.set_defaults(fn=_cmd_layers)

    pm = sub.add_parser("comply", help="compliance profile and check")
    pm.add_argument("file")
    pm.add_argument("--alpha", type=parse_rational, required=True)
    pm.add_argument("--beta", type=parse_rational, required=True)
    pm.set_defaults(fn=_cmd_comply)

    pk = sub.add_parser("classify", help="good/bad/unknown verdict")
    pk.add_argument("--k", type=int, required=True)
    pk.add_argument("--alpha", type=parse_rational, required=True)
    pk.add_argument("--beta", type=parse_rational, required=True)
    pk.set_defaults(fn=_cmd_classify)

    pr = sub.add_parser("region", help="classified grid as CSV or SVG")
    pr.add_argument("--k", type=int, required=True)
    pr.add_argument("--resolution", type=int, required=True)
    pr.add_argument("--format", choices=["csv", "svg"], default="csv")
    pr.add_argument("--out", default="-")
    pr.set_defaults(fn=_cmd_region)

    ps = sub.add_parser("search", help="counterexample search (JSON report)")
    ps.add_argument("--k", type=int, required=True)
    ps.add_argument("--na", type=int, required=True)
    ps.add_argument("--nb", type=int, required=True)
    ps.add_argument("--alpha", type=parse_rational, required=True)
    ps.add_argument("--beta", type=parse_rational, required=True)
    ps.add_argument("--eulerian", action="store_true")
    ps.add_argument("--mode", choices=["exhaustive", "random"],
                    default="exhaustive")
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--node-limit", type=int, default=search.DEFAULT_NODE_LIMIT)
    ps.add_argument("--threads", type=int, default=None,
                    help="accepted for compatibility; runs are sequential")
    ps.set_defaults(fn=_cmd_search)

    pf = sub.add_parser("lemmas", help="fact scans and stress suites (JSON)")
    group = pf.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true")
    group.add_argument("--fact")
    group.add_argument("--stress", choices=["newineq"])
    pf.add_argument("--count", type=int, default=1000)
    pf.add_argument("--seed", type=int, default=7)
    pf.set_defaults(fn=_cmd_lemmas)

    pa = sub.add_parser("audit", help="replay a proved dichotomy on a digraph")
    pa.add_argument("which", choices=["bigset", "bigindeg", "bells"])
    pa.add_argument("file")
    pa.add_argument("--k", type=int)
    pa.add_argument("--alpha", type=parse_rational)
    pa.add_argument("--beta", type=parse_rational)
    pa.add_argument("--delta", type=parse_rational)
    pa.add_argument("--vertex")
    pa.add_argument("--horizon", type=int, default=None)
    pa.set_defaults(fn=_cmd_audit)

    return top


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    if args.command == "audit" and args.which == "bigset":
        missing = [f for f in ("k", "alpha", "beta", "delta", "vertex")
                   if getattr(args, f) is None]
        if missing:
            print(f"error: audit bigset requires --{', --'.join(missing)}",
                  file=sys.stderr)
            return 1
    if args.command == "audit" and args.which == "bigindeg":
        if args.alpha is None or args.beta is None:
            print("error: audit bigindeg requires --alpha and --beta",
                  file=sys.stderr)
            return 1
    try:
        return args.fn(args)
    except (BipgirthError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
