"""Oracle-case simulation harness: random DAG generation, active-learning
loops, survival statistics (targets used, variables intervened), structural
Hamming distance traces, and CSV output."""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass, field
from typing import Callable, IO, Sequence

import numpy as np

from .equivalence import EssentialGraph, TargetFamily, essential_graph, refine
from .errors import GraphError
from .pdag import PartiallyDirectedGraph
from . import strategies

Strategy = Callable[[EssentialGraph, np.random.Generator], strategies.TargetProposal]

STRATEGIES: dict[str, Strategy] = {
    "opt-single": lambda g, rng: strategies.opt_single(g),
    "opt-unb": lambda g, rng: strategies.opt_unb(g),
    "max-nb": strategies.max_nb,
    "rand": strategies.rand,
    "rand-adv": strategies.rand_adv,
}


@dataclass(frozen=True)
class ExperimentConfig:
    p: int
    n_dags: int
    strategies: tuple[str, ...] = ("opt-single", "opt-unb", "max-nb", "rand", "rand-adv")
    expected_degree: float = 3.0
    seed: int = 0
    max_steps: int = 1000

    def __post_init__(self):
        if self.p < 1:
            raise GraphError("p must be >= 1")
        if not 0 <= self.expected_degree < self.p:
            raise GraphError("expected_degree must lie in [0, p)")
        if self.n_dags < 1:
            raise GraphError("n_dags must be >= 1")
        for s in self.strategies:
            if s not in STRATEGIES:
                raise GraphError(f"unknown strategy {s!r}")


@dataclass
class SurvivalRecord:
    dag_id: int
    strategy: str
    T: int
    V: int
    shd_trace: list[int]
    censored: bool = False


@dataclass
class SurvivalCurve:
    grid: list[float]
    survival: list[float]
    lo95: list[float]
    hi95: list[float]


def random_dag(p: int, expected_degree: float, rng: np.random.Generator) -> PartiallyDirectedGraph:
    """DAG with a uniformly random topological order and each vertex pair
    linked independently with probability expected_degree / (p - 1)."""
    if p < 1 or not 0 <= expected_degree < p:
        raise GraphError("need p >= 1 and 0 <= expected_degree < p")
    perm = rng.permutation(p) + 1
    q = expected_degree / (p - 1) if p > 1 else 0.0
    arrows = []
    pos = {int(v): i for i, v in enumerate(perm)}
    for a in range(1, p + 1):
        for b in range(a + 1, p + 1):
            if rng.random() < q:
                arrows.append((a, b) if pos[a] < pos[b] else (b, a))
    return PartiallyDirectedGraph(p, arrows=arrows)


def shd(g: PartiallyDirectedGraph, d: PartiallyDirectedGraph) -> int:
    """Structural Hamming distance: skeleton false positives and negatives,
    plus shared skeleton edges whose marks differ (line vs. arrow, or
    opposing arrows)."""
    if g.p != d.p:
        raise GraphError("vertex-count mismatch")
    sg = {frozenset(e) for e in g.arrows()} | {frozenset(e) for e in g.lines()}
    sd = {frozenset(e) for e in d.arrows()} | {frozenset(e) for e in d.lines()}
    total = len(sg ^ sd)
    for e in sg & sd:
        a, b = sorted(e)
        if (g.has_arrow(a, b), g.has_arrow(b, a)) != (d.has_arrow(a, b), d.has_arrow(b, a)):
            total += 1
    return total


def oracle_run(true_dag: PartiallyDirectedGraph, strategy: str,
               rng: np.random.Generator, max_steps: int = 1000) -> SurvivalRecord:
    """Active-learning loop with exact equivalence classes: start at the
    observational essential graph, let the strategy pick targets, refine
    until fully directed.  A run hitting max_steps is right-censored (only
    the uniform baseline can repeat useless targets)."""
    propose = STRATEGIES[strategy]
    g = essential_graph(true_dag, TargetFamily.observational(true_dag.p))
    trace = [shd(g.graph, true_dag)]
    T = V = 0
    censored = False
    while g.graph.num_lines > 0:
        if T >= max_steps:
            censored = True
            break
        proposal = propose(g, rng)
        if proposal.kind == "none":
            break
        T += 1
        V += len(proposal.vertices)
        g = refine(g, proposal.vertices, true_dag)
        trace.append(shd(g.graph, true_dag))
    return SurvivalRecord(dag_id=-1, strategy=strategy, T=T, V=V,
                          shd_trace=trace, censored=censored)


def kaplan_meier(times: Sequence[tuple[float, bool]]) -> SurvivalCurve:
    """Product-limit survival estimator with Greenwood 95% bands.

    ``times`` holds (value, censored) pairs; with no censoring the estimate
    equals the empirical survival function.
    """
    if not times:
        raise GraphError("kaplan_meier needs at least one observation")
    events = sorted(times)
    grid: list[float] = []
    surv: list[float] = []
    lo: list[float] = []
    hi: list[float] = []
    s = 1.0
    green = 0.0
    at_risk = len(events)
    i = 0
    while i < len(events):
        t = events[i][0]
        d = 0
        c = 0
        while i < len(events) and events[i][0] == t:
            if events[i][1]:
                c += 1
            else:
                d += 1
            i += 1
        if d > 0:
            s *= 1.0 - d / at_risk
            if at_risk > d:
                green += d / (at_risk * (at_risk - d))
            grid.append(float(t))
            surv.append(s)
            if s > 0.0:
                se = s * math.sqrt(green)
                lo.append(max(0.0, s - 1.96 * se))
                hi.append(min(1.0, s + 1.96 * se))
            else:
                lo.append(0.0)
                hi.append(0.0)
        at_risk -= d + c
    if not grid or grid[0] > 0.0:
        grid.insert(0, 0.0)
        surv.insert(0, 1.0)
        lo.insert(0, 1.0)
        hi.insert(0, 1.0)
    return SurvivalCurve(grid=grid, survival=surv, lo95=lo, hi95=hi)


def run_experiment(cfg: ExperimentConfig) -> dict:
    """Run every strategy on the same n_dags random DAGs (paired streams).

    Returns records plus survival curves for targets (T) and intervened
    variables (V) and the mean per-true-edge distance trace, all
    deterministic given cfg.
    """
    root = np.random.SeedSequence(cfg.seed)
    dag_streams, strat_streams = root.spawn(2)
    records: list[SurvivalRecord] = []
    dag_children = dag_streams.spawn(cfg.n_dags)
    strat_children = strat_streams.spawn(cfg.n_dags)
    dags = []
    for i in range(cfg.n_dags):
        dags.append(random_dag(cfg.p, cfg.expected_degree,
                               np.random.default_rng(dag_children[i])))
    for i, d in enumerate(dags):
        per_strategy = strat_children[i].spawn(len(cfg.strategies))
        for j, name in enumerate(cfg.strategies):
            rec = oracle_run(d, name, np.random.default_rng(per_strategy[j]),
                             max_steps=cfg.max_steps)
            rec.dag_id = i
            records.append(rec)
    curves_T: dict[str, SurvivalCurve] = {}
    curves_V: dict[str, SurvivalCurve] = {}
    shd_traces: dict[str, list[float]] = {}
    edge_counts = [dags[i].num_arrows for i in range(cfg.n_dags)]
    for name in cfg.strategies:
        rs = [r for r in records if r.strategy == name]
        curves_T[name] = kaplan_meier([(r.T, r.censored) for r in rs])
        curves_V[name] = kaplan_meier([(r.V, r.censored) for r in rs])
        max_len = max(len(r.shd_trace) for r in rs)
        means = []
        for step in range(max_len):
            vals = []
            for r in rs:
                v = r.shd_trace[min(step, len(r.shd_trace) - 1)]
                e = edge_counts[r.dag_id]
                vals.append(v / e if e else 0.0)
            means.append(sum(vals) / len(vals))
        shd_traces[name] = means
    return {"records": records, "survival_T": curves_T, "survival_V": curves_V,
            "shd_trace": shd_traces}


def _open_w(path: str) -> IO[str]:
    return open(path, "w", encoding="utf-8", newline="")


def write_csv_outputs(result: dict, out_dir: str) -> list[str]:
    """records.csv, survival_T.csv, survival_V.csv, shd_trace.csv (RFC-4180,
    LF line endings)."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []

    path = os.path.join(out_dir, "records.csv")
    with _open_w(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["dag_id", "strategy", "T", "V", "censored"])
        for r in result["records"]:
            w.writerow([r.dag_id, r.strategy, r.T, r.V, int(r.censored)])
    paths.append(path)

    for key, fname in (("survival_T", "survival_T.csv"), ("survival_V", "survival_V.csv")):
        path = os.path.join(out_dir, fname)
        with _open_w(path) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["strategy", "t", "S", "lo95", "hi95"])
            for name, curve in result[key].items():
                for t, s, lo, hi in zip(curve.grid, curve.survival, curve.lo95, curve.hi95):
                    w.writerow([name, f"{t:g}", f"{s:.10g}", f"{lo:.10g}", f"{hi:.10g}"])
        paths.append(path)

    path = os.path.join(out_dir, "shd_trace.csv")
    with _open_w(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["strategy", "step", "mean_shd_per_edge"])
        for name, means in result["shd_trace"].items():
            for step, m in enumerate(means):
                w.writerow([name, step, f"{m:.10g}"])
    paths.append(path)
    return paths
