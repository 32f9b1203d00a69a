"""Command-line interface.

Subcommands: ``essential`` (compute an essential graph), ``equivalent``
(test two DAGs), ``select`` (run a target-selection strategy), ``simulate``
(run the oracle experiment harness), ``verify`` (brute-force check suites).
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .errors import GraphError
from .equivalence import TargetFamily, EssentialGraph, essential_graph, i_markov_equivalent
from .simulate import STRATEGIES, ExperimentConfig, run_experiment, write_csv_outputs
from . import strategies, textio, verify


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="actdag",
                                     description="Active learning of causal DAGs "
                                                 "from interventions (oracle case).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ess = sub.add_parser("essential", help="essential graph of a DAG under a target family")
    p_ess.add_argument("--graph", required=True, help="DAG file")
    p_ess.add_argument("--family", required=True, help="target family file")

    p_eq = sub.add_parser("equivalent", help="test two DAGs for interventional equivalence")
    p_eq.add_argument("--d1", required=True)
    p_eq.add_argument("--d2", required=True)
    p_eq.add_argument("--family", required=True)

    p_sel = sub.add_parser("select", help="propose the next intervention target")
    p_sel.add_argument("--strategy", required=True,
                       choices=["opt-single", "opt-unb", "max-nb", "rand", "rand-adv",
                                "separating"])
    p_sel.add_argument("--graph", required=True, help="essential graph file")
    p_sel.add_argument("--family", required=True)
    p_sel.add_argument("--seed", type=int, default=0)
    p_sel.add_argument("--floor-h", action="store_true",
                       help="round the color half down instead of up")
    p_sel.add_argument("--strict-alg3", action="store_true",
                       help="include line-less chain components in the set target")

    p_sim = sub.add_parser("simulate", help="run the oracle simulation experiment")
    p_sim.add_argument("--p", type=int, required=True)
    p_sim.add_argument("--dags", type=int, required=True)
    p_sim.add_argument("--strategies", default="opt-single,opt-unb,max-nb,rand,rand-adv")
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--max-steps", type=int, default=1000)
    p_sim.add_argument("--expected-degree", type=float, default=3.0)
    p_sim.add_argument("--out", required=True, help="output directory for CSV files")

    p_ver = sub.add_parser("verify", help="run the brute-force verification suites")
    p_ver.add_argument("--p", type=int, required=True, help="max vertex count")
    p_ver.add_argument("--random", type=int, default=100,
                       help="random corpus instances for p >= 6")
    p_ver.add_argument("--seed", type=int, default=20260825)
    return parser


def _load(graph_path: str, family_path: str) -> tuple:
    g = textio.read_graph(graph_path)
    fam = textio.read_family(family_path, g.p)
    return g, fam


def _cmd_essential(args) -> int:
    g, fam = _load(args.graph, args.family)
    ess = essential_graph(g, fam)
    sys.stdout.write(textio.format_graph(ess.graph))
    return 0


def _cmd_equivalent(args) -> int:
    d1 = textio.read_graph(args.d1)
    d2 = textio.read_graph(args.d2)
    fam = textio.read_family(args.family, d1.p)
    print("true" if i_markov_equivalent(d1, d2, fam) else "false")
    return 0


def _cmd_select(args) -> int:
    g, fam = _load(args.graph, args.family)
    ess = EssentialGraph(g, fam)
    rng = np.random.default_rng(args.seed)
    if args.strategy == "separating":
        targets = strategies.separating_targets(ess)
        print(json.dumps({"kind": "target-list",
                          "targets": [sorted(t) for t in targets]}))
        return 0
    if args.strategy == "opt-single":
        proposal = strategies.opt_single(ess)
    elif args.strategy == "opt-unb":
        proposal = strategies.opt_unb(ess, floor_h=args.floor_h, strict=args.strict_alg3)
    else:
        proposal = STRATEGIES[args.strategy](ess, rng)
    print(json.dumps({"kind": proposal.kind,
                      "vertices": sorted(proposal.vertices),
                      "score": proposal.score}))
    return 0


def _cmd_simulate(args) -> int:
    cfg = ExperimentConfig(p=args.p, n_dags=args.dags,
                           strategies=tuple(s.strip() for s in args.strategies.split(",")),
                           expected_degree=args.expected_degree,
                           seed=args.seed, max_steps=args.max_steps)
    result = run_experiment(cfg)
    for path in write_csv_outputs(result, args.out):
        print(path)
    return 0


def _cmd_verify(args) -> int:
    ok = verify.run_suite(args.p, n_random=args.random, seed=args.seed)
    print("ALL CHECKS PASSED" if ok else "CHECK FAILURES")
    return 0 if ok else 1


_DISPATCH = {
    "essential": _cmd_essential,
    "equivalent": _cmd_equivalent,
    "select": _cmd_select,
    "simulate": _cmd_simulate,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _DISPATCH[args.command](args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
