"""Command line driver.

Exit codes: 0 ok, 1 verification failed, 2 bad input or usage, 3 internal
invariant violated.  Errors are reported on stderr as ``error <kind> <message>``.
"""
from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from . import fileio
from .cubic import solve_cubic
from .errors import GraphError, InternalInvariant
from .general import solve_general
from .generators import GeneratorSpec, generate
from .irregularity import a_from_profile
from .multigraph import SpanningSubgraph, regularity
from .oracle import oracle_best, oracle_state_exists, predicate_box
from .strength import verify_distinct, weighting_from_subgraph

OK, FAILED, BAD_INPUT, INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _initial(g, spec: str) -> SpanningSubgraph:
    if spec == "empty":
        return SpanningSubgraph(g)
    if spec == "full":
        return SpanningSubgraph.full(g)
    if spec.startswith("random:"):
        rng = np.random.default_rng(int(spec[7:]))
        pick = rng.random(g.num_edge_ids) < 0.5
        return SpanningSubgraph(g, [e for e in g.live_edges() if pick[e]])
    raise UsageError(f"unknown --init {spec!r}")


def _holds(h: SpanningSubgraph, expect: str) -> bool:
    d = h.d
    a = a_from_profile(h.profile(), h.host.n_alive)
    lo, hi = predicate_box(expect, d, h.host.n_alive)
    return all(l <= x <= u for x, l, u in zip(a, lo, hi))


def cmd_solve(args) -> int:
    g = fileio.read_graph(args.input)
    if args.algo == "cubic":
        if args.init != "empty":
            raise UsageError("the cubic solver builds its own starting subgraph; drop --init")
        h, stats = solve_cubic(g)
        print(f"ops {stats.ops} toggles {stats.toggles} bucket_updates {stats.bucket_updates}")
    else:
        h, rep = solve_general(g, initial=_initial(g, args.init))
        print(f"improvements {rep.improvement_count} typeA {rep.type_a_count} typeB {rep.type_b_count}")
    fileio.write_subgraph(h, args.output)
    sys.stdout.write(fileio.format_report(h))
    return OK


def cmd_verify(args) -> int:
    g = fileio.read_graph(args.graph)
    h = fileio.read_subgraph(args.subgraph, g)
    sys.stdout.write(fileio.format_report(h))
    if args.expect_state is None:
        return OK
    ok = _holds(h, args.expect_state)
    print(f"expect {args.expect_state} {'ok' if ok else 'violated'}")
    return OK if ok else FAILED


def cmd_gen(args) -> int:
    params = {k: v for k, v in (("n", args.n), ("d", args.d), ("k", args.k), ("s", args.s)) if v is not None}
    if args.base is not None:
        params["base"] = fileio.read_graph(args.base)
    g = generate(GeneratorSpec(args.family, params, args.seed))
    fileio.write_graph(g, args.out)
    print(f"n {g.num_vertices} m {g.num_edge_ids} d {regularity(g)}")
    return OK


def cmd_oracle(args) -> int:
    g = fileio.read_graph(args.input)
    if args.predicate is None:
        r = oracle_best(g)
        print(f"best {r.best_scaled_inf_norm}")
        print(f"scale {regularity(g) + 1}")
        print(f"count {r.subgraph_count}")
        print("witness " + " ".join(map(str, sorted(r.witness))))
        return OK
    w = oracle_state_exists(g, args.predicate)
    if w is None:
        print("witness none")
        return FAILED
    print("witness " + " ".join(map(str, sorted(w))))
    return OK


def cmd_bench(args) -> int:
    from .generators import random_regular

    if args.algo != "cubic":
        raise UsageError("only --algo cubic is benchmarked")
    try:
        sizes = [int(x) for x in args.sizes.split(",") if x]
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}") from None
    print("n,seed,seconds,toggles,bucket_updates")
    for n in sizes:
        for seed in range(args.seeds):
            g = random_regular(n, 3, seed)
            t0 = time.perf_counter()
            _, st = solve_cubic(g)
            dt = time.perf_counter() - t0
            print(f"{n},{seed},{dt:.6f},{st.toggles},{st.bucket_updates}", flush=True)
    return OK


def cmd_strength(args) -> int:
    from .generators import doubled_graph

    base = fileio.read_graph(args.base)
    blow = doubled_graph(base, args.s)
    h = fileio.read_subgraph(args.subgraph, blow)
    w = weighting_from_subgraph(base, args.s, h)
    for e, x in enumerate(w.weights):
        print(f"w {e} {x}")
    for v, x in enumerate(w.weighted_degrees):
        print(f"wdeg {v} {x}")
    rep = verify_distinct(w, h)
    print(f"distinct {'yes' if rep.distinct else 'no'}")
    for x, vs in sorted(rep.duplicates.items()):
        print(f"dup {x} " + " ".join(map(str, vs)))
    return OK if rep.distinct else FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="irregsub", description="Irregular spanning subgraphs of regular multigraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute a subgraph")
    s.add_argument("--algo", choices=("general", "cubic"), required=True)
    s.add_argument("--input", required=True)
    s.add_argument("--init", default="empty", help="empty, full or random:SEED (general only)")
    s.add_argument("--output", required=True)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="report a subgraph and check a predicate")
    s.add_argument("--graph", required=True)
    s.add_argument("--subgraph", required=True)
    s.add_argument("--expect-state", help="state0, state1, state2, proper, norm:K or distinct")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="write a generated multigraph")
    s.add_argument("--family", required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--d", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--s", type=int)
    s.add_argument("--base", help="graph file for the doubled family")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("oracle", help="exhaustive search over all subgraphs")
    s.add_argument("--input", required=True)
    s.add_argument("--predicate", help="state0, state1, state2, proper, norm:K or distinct")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("bench", help="time the cubic solver on random graphs (CSV)")
    s.add_argument("--algo", default="cubic")
    s.add_argument("--sizes", required=True)
    s.add_argument("--seeds", type=int, default=3)
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("strength", help="edge weighting from a subgraph of the blow-up")
    s.add_argument("--base", required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--subgraph", required=True)
    s.set_defaults(func=cmd_strength)
    return p


def _fail(code: int, kind: str, msg) -> int:
    print(f"error {kind} {msg}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInvariant as exc:
        return _fail(INTERNAL, type(exc).__name__, exc)
    except (GraphError, UsageError, ValueError, OSError) as exc:
        return _fail(BAD_INPUT, type(exc).__name__, exc)


if __name__ == "__main__":
    sys.exit(main())
