"""Brute-force verification suites.

Each check recomputes a result by exhaustive enumeration and compares it to
the fast implementation; the CLI ``verify`` subcommand runs them over a
corpus and prints a pass/fail report.
"""

from __future__ import annotations

import itertools
import math
from typing import Callable, Iterable

import numpy as np

from .corpus import random_covering_family, standard_corpus
from .equivalence import (
    EssentialGraph,
    TargetFamily,
    enumerate_equivalence_class,
    essential_graph,
    refine,
)
from .pdag import PartiallyDirectedGraph, clique_number
from .strategies import opt_single, opt_unb, separating_targets


def orientation_union(dags: Iterable[PartiallyDirectedGraph]) -> PartiallyDirectedGraph:
    """Combine a class of DAGs: an edge is an arrow iff it points the same
    way in every member, otherwise a line."""
    dags = list(dags)
    p = dags[0].p
    counts: dict[tuple[int, int], int] = {}
    for d in dags:
        for a, b in d.arrows():
            counts[(a, b)] = counts.get((a, b), 0) + 1
    n = len(dags)
    arrows = [e for e, c in counts.items() if c == n and (e[1], e[0]) not in counts]
    lines = sorted({(min(a, b), max(a, b)) for (a, b), c in counts.items()
                    if c < n or (b, a) in counts})
    return PartiallyDirectedGraph(p, arrows=arrows, lines=lines)


def check_essential_vs_enumeration(g: PartiallyDirectedGraph, family: TargetFamily) -> bool:
    """essential_graph must equal the orientation-union of the full class,
    for every member as the input DAG."""
    ess = essential_graph_from_skeleton(g, family)
    members = enumerate_equivalence_class(ess)
    union = orientation_union(members)
    if union != ess.graph:
        return False
    return all(essential_graph(d, family).graph == ess.graph for d in members)


def essential_graph_from_skeleton(g: PartiallyDirectedGraph,
                                  family: TargetFamily) -> EssentialGraph:
    """Observational-style essential graph of an undirected chordal skeleton
    under a family: orient along ascending vertex order (a valid DAG) and
    reduce."""
    from .pdag import lex_bfs, orient_by_ordering

    d = orient_by_ordering(g, lex_bfs(g))
    return essential_graph(d, family)


def brute_force_opt_single(g: EssentialGraph) -> tuple[int, int] | None:
    """Minimax by enumeration: for each candidate vertex, the worst-case
    remaining line count over every DAG of the class; returns (vertex,
    score) with smallest-index tie-break, or None if fully directed."""
    if g.graph.num_lines == 0:
        return None
    members = enumerate_equivalence_class(g)
    best = None
    for v in range(1, g.p + 1):
        if not g.graph.neighbors(v):
            continue
        fam = g.family.with_target({v})
        worst = max(essential_graph(d, fam).graph.num_lines for d in members)
        if best is None or worst < best[1]:
            best = (v, worst)
    return best


def check_opt_single_minimax(g: EssentialGraph) -> bool:
    expect = brute_force_opt_single(g)
    got = opt_single(g)
    if expect is None:
        return got.kind == "none"
    return (got.kind == "single-vertex" and got.vertices == frozenset({expect[0]})
            and got.score == expect[1])


def check_halving_bound(g: EssentialGraph) -> bool:
    """The set-strategy target halves the clique number for every DAG of the
    class."""
    proposal = opt_unb(g)
    if proposal.kind == "none":
        return g.graph.num_lines == 0
    omega = clique_number(g.graph)
    bound = (omega + 1) // 2
    for d in enumerate_equivalence_class(g):
        fam = g.family.with_target(proposal.vertices)
        if clique_number(essential_graph(d, fam).graph) > bound:
            return False
    return True


def check_halving_tightness(g: EssentialGraph) -> bool:
    """No single target does better in the worst case: every candidate
    target leaves some DAG with clique number >= ceil(omega/2)."""
    omega = clique_number(g.graph)
    bound = (omega + 1) // 2
    members = enumerate_equivalence_class(g)
    verts = list(range(1, g.p + 1))
    for r in range(len(verts) + 1):
        for cand in itertools.combinations(verts, r):
            try:
                fam = g.family.with_target(cand)
            except Exception:
                continue
            worst = max(clique_number(essential_graph(d, fam).graph) for d in members)
            if worst < bound:
                return False
    return True


def check_iterated_halving(g: EssentialGraph, true_dag: PartiallyDirectedGraph) -> bool:
    """Iterating the set strategy fully directs the graph within
    ceil(log2 omega) refinements."""
    omega = clique_number(g.graph)
    limit = max(0, math.ceil(math.log2(omega))) if omega > 1 else 0
    cur = g
    steps = 0
    while cur.graph.num_lines > 0:
        proposal = opt_unb(cur)
        if proposal.kind == "none":
            return False
        cur = refine(cur, proposal.vertices, true_dag)
        steps += 1
        if steps > limit:
            return False
    return True


def check_separating(g: EssentialGraph, true_dag: PartiallyDirectedGraph) -> bool:
    """The one-shot construction emits exactly ceil(log2 omega) targets and
    adding them all fully directs the graph."""
    omega = clique_number(g.graph)
    targets = separating_targets(g)
    expect_k = max(1, math.ceil(math.log2(omega))) if omega > 1 else 0
    if len(targets) != expect_k:
        return False
    cur = g
    for t in targets:
        cur = refine(cur, t, true_dag)
    return cur.graph.num_lines == 0


def run_suite(max_p: int, n_random: int = 100, seed: int = 20260825,
              report: Callable[[str], None] = print) -> bool:
    """Run every check over the corpus; prints one line per check."""
    rng = np.random.default_rng(seed)
    corpus = standard_corpus(max_p, rng=rng, n_random=n_random)
    ok_all = True

    def run(name: str, fn: Callable[[], bool]) -> None:
        nonlocal ok_all
        ok = fn()
        ok_all &= ok
        report(f"{'PASS' if ok else 'FAIL'}  {name}")

    small = [g for g in corpus if g.p <= min(max_p, 5)]
    run("essential graph equals class orientation-union",
        lambda: all(check_essential_vs_enumeration(g, random_covering_family(g.p, rng))
                    for g in small))
    mid = [g for g in corpus if g.p <= min(max_p, 6)]
    run("single-vertex strategy matches brute-force minimax",
        lambda: all(check_opt_single_minimax(
            essential_graph_from_skeleton(g, TargetFamily.observational(g.p)))
            for g in mid))
    run("set strategy halves the clique number",
        lambda: all(check_halving_bound(
            essential_graph_from_skeleton(g, TargetFamily.observational(g.p)))
            for g in mid))
    small_t = [g for g in corpus if g.p <= min(max_p, 4)]
    run("halving bound is tight over all candidate targets",
        lambda: all(check_halving_tightness(
            essential_graph_from_skeleton(g, TargetFamily.observational(g.p)))
            for g in small_t))

    def iterated() -> bool:
        from .pdag import lex_bfs, orient_by_ordering
        for g in corpus:
            d = orient_by_ordering(g, lex_bfs(g))
            e = essential_graph(d, TargetFamily.observational(g.p))
            if not check_iterated_halving(e, d):
                return False
            if not check_separating(e, d):
                return False
        return True

    run("iterated halving and one-shot separation reach full orientation", iterated)
    return ok_all
