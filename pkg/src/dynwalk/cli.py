"""Command-line front end.

Exit codes: 0 success, 1 walk rejected by verify, 2 parse or usage error,
3 unmet premise / oracle bounds / generation failure, 4 internal violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import oracle
from .errors import (
    BadParameters,
    BoundsExceeded,
    GenerationFailed,
    InternalProofViolation,
    MalformedWalk,
    PreconditionFailed,
    UnknownId,
)
from .fixtures import sample_graph
from .generators import PROFILES, gen_glued_complete, gen_random, parse_profile
from .io import (
    ParseError,
    dump_json,
    ecm_to_dict,
    graph_to_dict,
    load_graph,
    load_walk,
    to_dot,
    walk_to_dict,
)
from .model import verify_walk
from .pc import pair_colored_k4, pc_corollary_checks, pc_corollary_construct, pc_hamiltonian
from .structure import hypothesis_report
from .theorems import GOALS

EXIT_OK, EXIT_REJECTED, EXIT_PARSE, EXIT_PREMISE, EXIT_INTERNAL = 0, 1, 2, 3, 4

PC_HAM = "pc-ham"
PC_COR = "pc-cor"
FIND_GOALS = tuple(GOALS) + (PC_HAM, PC_COR)
NEEDS_D = ("long-cycle", "path-or-cycle")

# CLI target name -> (oracle target, negate the answer)
ORACLE_TARGETS = {
    "h-cycle-through": ("h-cycle-through", False),
    "no-h-cycle-through": ("h-cycle-through", True),
    "longest-dyn-cycle": ("longest-dynamic-h-cycle", False),
    "longest-h-cycle": ("longest-h-cycle", False),
    "longest-h-path": ("longest-h-path", False),
    "ham-h-cycle": ("hamiltonian-h-cycle", False),
    "ham-dyn-cycle": ("hamiltonian-dynamic-h-cycle", False),
    "spanning-trail": ("spanning-closed-dynamic-h-trail", False),
    "enumerate": ("enumerate-dynamic-h-cycles", False),
}


def _out(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    loaded = load_graph(args.graph)
    report = hypothesis_report(loaded.graph)
    pc = pc_corollary_checks(loaded.ecm) if loaded.ecm is not None else None
    if args.json:
        data = report.to_dict()
        if pc is not None:
            data["pc"] = pc.to_dict()
        print(json.dumps(data, indent=2))
        return EXIT_OK
    print(f"vertices: {report.n}")
    for r in report.vertices:
        shape = f"complete {r.k}-partite" if r.multipartite else f"not multipartite, witness {r.witness}"
        print(f"  {r.vertex}: G_u {shape}, dynamic degree {r.dynamic_degree}")
    edges = ", ".join(f"{u}{v}" for u, v in report.dynamic_edges) or "none"
    print(f"dynamic edges: {edges}")
    print(f"G_dym connected: {report.dym_connected}; all dynamic degrees even: {report.all_dynamic_degrees_even}")
    if report.ore_min_pair:
        print(f"least non-dynamic degree sum: {report.ore_min_sum} at {report.ore_min_pair}")
    if not report.parts_consistent:
        u, v = report.parts_counterexample
        print(f"warning: E_{u}{v} is dynamic but holds no two edges in different parts")
    if report.max_cycle_d is not None:
        print(f"long-cycle applies with d = {report.max_cycle_d}")
    print(f"applicable: {', '.join(report.applicable) or 'none'}")
    if report.premises_only:
        print(f"premises hold (no construction): {', '.join(report.premises_only)}")
    if pc is not None:
        print(
            f"edge-colored view: two colors everywhere {pc.two_colors_everywhere}, "
            f"three colors somewhere {pc.some_three_colors}, least pair sum {pc.min_pair_sum}"
        )
        print(f"  degree-sum corollary {pc.ore_applies}, minimum-degree corollary {pc.dirac_applies}, "
              f"color-degree premise {pc.degree_premise}")
        if pc.dropped:
            print(f"  dropped same-colored parallel edges: {', '.join(pc.dropped)}")
    return EXIT_OK


def cmd_find(args) -> int:
    loaded = load_graph(args.graph)
    goal = args.goal
    if goal in (PC_HAM, PC_COR):
        if loaded.ecm is None:
            raise BadParameters(f"goal {goal} needs a graph with a complete pattern")
        result = pc_hamiltonian(loaded.ecm) if goal == PC_HAM else pc_corollary_construct(loaded.ecm)
    elif goal in NEEDS_D:
        if args.d is None:
            raise BadParameters(f"goal {goal} needs -d")
        result = GOALS[goal](loaded.graph, args.d)
    else:
        result = GOALS[goal](loaded.graph)
    _out(dump_json(walk_to_dict(result.walk)), args.output)
    print(result.summary(), file=sys.stderr if not args.output else sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    loaded = load_graph(args.graph)
    walk = load_walk(args.walk)
    c = verify_walk(loaded.graph, walk)
    if args.json:
        print(json.dumps({
            "kind": c.kind,
            "is_dynamic_h_walk": c.is_dynamic_h_walk,
            "is_h_walk": c.is_h_walk,
            "is_trail": c.is_trail,
            "is_path": c.is_path,
            "is_cycle": c.is_cycle,
            "closed": c.closed,
            "length": c.length,
            "changes": c.changes,
            "vertices_visited": c.vertices_visited,
            "first_violation": c.first_violation,
        }, indent=2))
    else:
        print(c.summary())
    return EXIT_OK if c.is_dynamic_h_walk else EXIT_REJECTED


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise BadParameters(f"{what} must be an integer, got {text!r}") from None


def cmd_gen(args) -> int:
    family, params = args.family, args.params
    if family in ("glued-k2", "glued-k3"):
        if len(params) != 1:
            raise BadParameters(f"{family} takes one parameter n")
        m = 2 if family == "glued-k2" else 3
        n = _int(params[0], "n")
        try:
            graph = gen_glued_complete(n, m)
        except BadParameters as exc:
            raise GenerationFailed(str(exc)) from None
        data = graph_to_dict(graph)
    elif family == "random":
        if len(params) != 3:
            raise BadParameters("random takes PROFILE N SEED")
        parse_profile(params[0])
        data = graph_to_dict(gen_random(_int(params[1], "n"), _int(params[2], "seed"), params[0]))
    elif family == "pc-k4":
        data = ecm_to_dict(pair_colored_k4())
    elif family == "sample":
        data = graph_to_dict(sample_graph())
    else:
        raise BadParameters(f"unknown family {family!r}")
    _out(dump_json(data), args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    loaded = load_graph(args.graph)
    name, *rest = args.target
    if name not in ORACLE_TARGETS:
        raise BadParameters(f"unknown target {name!r}; choose from {', '.join(ORACLE_TARGETS)}")
    target, negate = ORACLE_TARGETS[name]
    vertex = rest[0] if rest else args.vertex
    query = oracle.OracleQuery(
        target, vertex=vertex, min_len=args.min_len or 0, max_len=args.max_len, max_n=args.max_n
    )
    answer = oracle.oracle_solve(loaded.graph, query)
    if negate:
        answer = not answer
    if target == "enumerate-dynamic-h-cycles":
        shown = [walk_to_dict(w) for w in answer] if args.json else [str(w) for w in answer]
    else:
        shown = answer
    if args.json:
        print(json.dumps({"target": name, "vertex": vertex, "answer": shown}))
    elif isinstance(shown, list):
        for line in shown:
            print(line)
        print(f"{len(shown)} cycle(s)")
    else:
        print(json.dumps(shown))
    return EXIT_OK


def cmd_dot(args) -> int:
    loaded = load_graph(args.graph)
    walk = load_walk(args.walk) if args.walk else None
    _out(to_dot(loaded.graph, walk), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dynwalk", description="Dynamic H-walks in H-colored multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report structure and which constructions apply")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("find", help="construct a walk, trail or cycle")
    p.add_argument("graph")
    p.add_argument("--goal", required=True, choices=FIND_GOALS)
    p.add_argument("-d", type=int, help="degree parameter for long-cycle and path-or-cycle")
    p.add_argument("-o", "--output", help="write the walk here instead of stdout")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("verify", help="classify a walk file against a graph")
    p.add_argument("graph")
    p.add_argument("walk")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write an instance: glued-k2 N | glued-k3 N | random PROFILE N SEED | pc-k4 | sample")
    p.add_argument("family", choices=("glued-k2", "glued-k3", "random", "pc-k4", "sample"))
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.epilog = f"profiles: {', '.join(PROFILES)} (long-cycle and path-or-cycle take :d)"
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="exhaustive answers on small graphs")
    p.add_argument("graph")
    p.add_argument("--target", nargs="+", required=True, metavar="TARGET",
                   help=f"one of {', '.join(ORACLE_TARGETS)}, optionally followed by a vertex")
    p.add_argument("--vertex")
    p.add_argument("--min-len", type=int)
    p.add_argument("--max-len", type=int)
    p.add_argument("--max-n", type=int, help="vertex cap (default 10 or $DYNWALK_ORACLE_MAX_N)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("dot", help="export a graph (and optionally a walk) as dot text")
    p.add_argument("graph")
    p.add_argument("--walk")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, MalformedWalk, BadParameters, UnknownId, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionFailed, BoundsExceeded, GenerationFailed) as exc:
        witness = getattr(exc, "witness", None)
        extra = f" (witness: {witness})" if witness is not None else ""
        print(f"error: {exc}{extra}", file=sys.stderr)
        return EXIT_PREMISE
    except InternalProofViolation as exc:
        print(f"internal violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
