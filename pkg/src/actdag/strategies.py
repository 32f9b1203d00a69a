"""Intervention-target selection strategies.

Optimal single-vertex selection (minimax over the equivalence class), the
clique-halving vertex-set selection, the one-shot separating construction,
and the three baselines (most line-neighbors, uniform, uniform-over-active).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .equivalence import EssentialGraph, TargetFamily, essential_graph
from .errors import GraphError, NotChordalError
from . import kernels
from .pdag import (
    PartiallyDirectedGraph,
    chain_components,
    lex_bfs,
    neighbor_cliques,
    orient_by_ordering,
)


@dataclass(frozen=True)
class TargetProposal:
    """A proposed intervention target.

    ``kind`` is "single-vertex", "vertex-set", or "none"; ``score`` is the
    worst-case objective value (remaining line count for the single-vertex
    strategy, the halved clique-number bound for the set strategy, absent for
    baselines).
    """

    kind: str
    vertices: frozenset[int] = field(default_factory=frozenset)
    score: int | None = None

    def __post_init__(self):
        if self.kind not in ("single-vertex", "vertex-set", "none"):
            raise GraphError(f"bad proposal kind {self.kind!r}")
        if (self.kind == "none") != (not self.vertices):
            raise GraphError("kind 'none' requires (and implies) no vertices")


_NONE = TargetProposal(kind="none")


def opt_single_scores(g: EssentialGraph) -> dict[int, int]:
    """Worst-case remaining line count for every candidate vertex.

    For a candidate v: over every clique C of line-neighbors of v (including
    the empty one), orient v's chain component along LexBFS seeded with
    (C, v), form the essential graph of that orientation under the family
    {empty, {v}}, and count the lines left graph-wide.  Vertices without
    line-neighbors keep the current line count unchanged.
    """
    graph = g.graph
    xi0 = graph.num_lines
    comps = chain_components(graph)
    scores: dict[int, int] = {}
    for v in range(1, graph.p + 1):
        if not graph.neighbors(v):
            scores[v] = xi0
            continue
        comp = comps.component_of(v)
        sub = PartiallyDirectedGraph(graph.p, lines=graph.restricted(comp).lines())
        fam = TargetFamily(graph.p, [(), (v,)])
        worst = 0
        for clique in neighbor_cliques(graph, v):
            sigma = lex_bfs(sub, prefix=tuple(sorted(clique)) + (v,))
            oriented = orient_by_ordering(sub, sigma)
            eta = essential_graph(oriented, fam).graph.num_arrows
            worst = max(worst, xi0 - eta)
        scores[v] = worst
    return scores


def opt_single(g: EssentialGraph) -> TargetProposal:
    """Single-vertex target minimizing the worst-case remaining line count;
    ties broken by smallest vertex index."""
    if g.graph.num_lines == 0:
        return _NONE
    scores = opt_single_scores(g)
    candidates = [v for v in scores if g.graph.neighbors(v)]
    best = min(candidates, key=lambda v: (scores[v], v))
    return TargetProposal(kind="single-vertex", vertices=frozenset({best}),
                          score=scores[best])


def _component_coloring(indptr: np.ndarray, indices: np.ndarray,
                        p: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """LexBFS + greedy coloring + component labels + per-component max color
    (all 0-based CSR).  Raises NotChordalError if any component fails the
    perfect-elimination check."""
    order = np.arange(p, dtype=np.int32)
    sigma = kernels.lex_bfs_csr(indptr, indices, order)
    if not kernels.check_peo_csr(indptr, indices, sigma):
        raise NotChordalError("graph has a non-chordal chain component")
    colors = kernels.greedy_color_csr(indptr, indices, sigma)
    labels, ncomp = kernels.components_csr(indptr, indices)
    omega = np.zeros(ncomp, dtype=np.int64)
    np.maximum.at(omega, labels, colors)
    return sigma, colors, labels, omega


def _balance(colors: np.ndarray, labels: np.ndarray, omega: np.ndarray,
             active: np.ndarray) -> np.ndarray:
    """Relabel colors within each component so color classes come in
    ascending size order (heuristic for smaller targets)."""
    colors = colors.copy()
    for c in np.flatnonzero(active):
        mask = labels == c
        cc = colors[mask]
        sizes = np.bincount(cc, minlength=int(omega[c]) + 1)[1:]
        ranks = np.empty(len(sizes), dtype=np.int64)
        ranks[np.argsort(sizes, kind="stable")] = np.arange(1, len(sizes) + 1)
        colors[mask] = ranks[cc - 1]
    return colors


def opt_unb_csr(indptr: np.ndarray, indices: np.ndarray, *, floor_h: bool = False,
                strict: bool = False, balance_colors: bool = False) -> tuple[np.ndarray, int]:
    """Clique-halving target on an undirected 0-based CSR graph.

    Returns (sorted 0-based target vertices, max clique number over
    components with at least one edge; 1 if there are none).
    """
    p = len(indptr) - 1
    _, colors, labels, omega = _component_coloring(indptr, indices, p)
    deg = np.diff(indptr)
    active = np.zeros(len(omega), dtype=bool)
    np.logical_or.at(active, labels, deg > 0)
    if balance_colors:
        colors = _balance(colors, labels, omega, active)
    h = omega // 2 if floor_h else (omega + 1) // 2
    pick = colors <= h[labels]
    if not strict:
        pick &= deg > 0
    omega_max = int(omega[active].max()) if active.any() else 1
    return np.flatnonzero(pick).astype(np.int64), omega_max


def opt_unb(g: EssentialGraph, *, floor_h: bool = False, strict: bool = False,
            balance_colors: bool = False) -> TargetProposal:
    """Vertex-set target halving the clique number of every chain component.

    Per component: color greedily along a LexBFS ordering, then intervene on
    the vertices of the first half of the colors.  Components without lines
    are skipped unless ``strict``; ``floor_h`` rounds the half down instead
    of up; ``balance_colors`` relabels colors by ascending class size first.
    """
    if g.graph.num_lines == 0:
        return _NONE
    indptr, indices = g.graph.lines_csr()
    target, omega = opt_unb_csr(indptr, indices, floor_h=floor_h, strict=strict,
                                balance_colors=balance_colors)
    return TargetProposal(kind="vertex-set",
                          vertices=frozenset(int(v) + 1 for v in target),
                          score=(omega + 1) // 2)


def separating_targets(g: EssentialGraph) -> list[frozenset[int]]:
    """k = ceil(log2 omega) targets that jointly orient every line: target j
    holds the vertices whose (color - 1) has binary bit j set."""
    if g.graph.num_lines == 0:
        return []
    indptr, indices = g.graph.lines_csr()
    _, colors, labels, omega = _component_coloring(indptr, indices, g.p)
    deg = np.diff(indptr)
    omega_max = int(omega[np.unique(labels[deg > 0])].max())
    k = max(1, math.ceil(math.log2(omega_max)))
    code = colors.astype(np.int64) - 1
    out = []
    for j in range(k):
        members = np.flatnonzero((code >> j) & 1)
        out.append(frozenset(int(v) + 1 for v in members))
    return out


def max_nb(g: EssentialGraph, rng: np.random.Generator) -> TargetProposal:
    """Single vertex with the most line-neighbors; ties uniform at random."""
    degs = {v: len(g.graph.neighbors(v)) for v in range(1, g.p + 1)}
    top = max(degs.values())
    if top == 0:
        return _NONE
    best = sorted(v for v, d in degs.items() if d == top)
    v = best[rng.integers(len(best))]
    return TargetProposal(kind="single-vertex", vertices=frozenset({int(v)}))


def rand(g: EssentialGraph, rng: np.random.Generator) -> TargetProposal:
    """Uniform single vertex over all of 1..p, even on a directed graph."""
    v = int(rng.integers(1, g.p + 1))
    return TargetProposal(kind="single-vertex", vertices=frozenset({v}))


def rand_adv(g: EssentialGraph, rng: np.random.Generator) -> TargetProposal:
    """Uniform single vertex over vertices with at least one line."""
    active = [v for v in range(1, g.p + 1) if g.graph.neighbors(v)]
    if not active:
        return _NONE
    v = active[rng.integers(len(active))]
    return TargetProposal(kind="single-vertex", vertices=frozenset({int(v)}))
