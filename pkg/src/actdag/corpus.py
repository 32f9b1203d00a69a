"""Graph corpora for the verification suites: exhaustive connected chordal
skeletons for small p, and seeded random chordal instances for larger p."""

from __future__ import annotations

import itertools

import numpy as np

from .equivalence import TargetFamily
from .errors import GraphError
from .pdag import PartiallyDirectedGraph, chain_components, is_chordal


def connected_chordal_graphs(p: int) -> list[PartiallyDirectedGraph]:
    """All connected chordal undirected graphs on vertices 1..p (labeled),
    by filtering every edge subset.  Practical for p <= 5."""
    if p < 1:
        raise GraphError("p must be >= 1")
    if p > 6:
        raise GraphError("exhaustive enumeration is limited to p <= 6")
    pairs = list(itertools.combinations(range(1, p + 1), 2))
    out = []
    for mask in range(1 << len(pairs)):
        lines = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = PartiallyDirectedGraph(p, lines=lines)
        if len(chain_components(g)) != 1:
            continue
        if is_chordal(g):
            out.append(g)
    return out


def random_connected_chordal(p: int, rng: np.random.Generator,
                             extra_edges: int | None = None) -> PartiallyDirectedGraph:
    """Random connected chordal graph by incremental clique attachment.

    Each new vertex is joined to a random subset of a clique of the graph
    built so far (always at least one vertex, keeping it connected), which
    preserves chordality.  ``extra_edges`` tunes density: expected extra
    neighbors drawn per vertex beyond the mandatory one (default ~1).
    """
    if p < 1:
        raise GraphError("p must be >= 1")
    lines: list[tuple[int, int]] = []
    # clique_of[v]: a clique containing v at the time v was inserted.
    clique_of: list[frozenset[int]] = [frozenset()] * (p + 1)
    clique_of[1] = frozenset({1})
    budget = p - 1 if extra_edges is None else extra_edges
    for v in range(2, p + 1):
        anchor = int(rng.integers(1, v))
        base = sorted(clique_of[anchor] | {anchor})
        want = 1 + int(rng.binomial(len(base) - 1, min(1.0, budget / max(1, p - 1))))
        chosen = sorted(rng.choice(base, size=min(want, len(base)), replace=False).tolist())
        if anchor not in chosen:
            chosen[0] = anchor
        chosen = sorted(set(int(c) for c in chosen))
        for u in chosen:
            lines.append((u, v))
        clique_of[v] = frozenset(chosen) | {v}
    return PartiallyDirectedGraph(p, lines=lines)


def random_chordal_csr(p: int, avg_extra: float,
                       rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Large random chordal graph directly in CSR form (0-based).

    Vertex v attaches to a uniformly random earlier vertex u plus a random
    subset of the clique recorded for u, giving roughly (1 + avg_extra) * p
    edges.  Cliques are kept small (bounded) so the construction stays
    O(p) overall.
    """
    if p < 1:
        raise GraphError("p must be >= 1")
    edges_a = []
    edges_b = []
    clique_of: list[tuple[int, ...]] = [()] * p
    for v in range(1, p):
        u = int(rng.integers(v))
        base = (u,) + clique_of[u]
        k = min(len(base), 1 + rng.binomial(len(base) - 1, min(1.0, avg_extra))
                if len(base) > 1 else 1)
        chosen = base[:k]
        for w in chosen:
            edges_a.append(w)
            edges_b.append(v)
        # Cap the recorded clique so degree (and cost) stays bounded.
        clique_of[v] = chosen[:4]
    a = np.array(edges_a + edges_b, dtype=np.int64)
    b = np.array(edges_b + edges_a, dtype=np.int64)
    order = np.lexsort((b, a))
    a, b = a[order], b[order]
    indptr = np.zeros(p + 1, dtype=np.int64)
    np.add.at(indptr, a + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr, b.astype(np.int32)


def random_covering_family(p: int, rng: np.random.Generator,
                           max_targets: int = 3) -> TargetFamily:
    """Random family of at most max_targets targets, always including the
    empty target so the covering property holds."""
    targets: list[frozenset[int]] = [frozenset()]
    n_extra = int(rng.integers(0, max_targets))
    for _ in range(n_extra):
        size = int(rng.integers(1, max(2, p // 2 + 1)))
        targets.append(frozenset(int(v) + 1 for v in
                                 rng.choice(p, size=min(size, p), replace=False)))
    return TargetFamily(p, targets)


def standard_corpus(max_p: int, rng: np.random.Generator | None = None,
                    n_random: int = 500) -> list[PartiallyDirectedGraph]:
    """Exhaustive connected chordal graphs for p <= min(max_p, 5) plus
    seeded random chordal instances for 6 <= p <= max_p."""
    out: list[PartiallyDirectedGraph] = []
    for p in range(2, min(max_p, 5) + 1):
        out.extend(connected_chordal_graphs(p))
    if max_p >= 6:
        if rng is None:
            rng = np.random.default_rng(20260825)
        sizes = list(range(6, max_p + 1))
        for i in range(n_random):
            p = sizes[i % len(sizes)]
            out.append(random_connected_chordal(p, rng))
    return out
