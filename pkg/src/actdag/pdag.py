"""Partially directed graphs and the chordal-graph machinery.

Vertices are the integers 1..p.  An edge is either an arrow ``a -> b`` or a
line ``a -- b``.  Graphs are treated as immutable values: every operation
returns a new graph, and the accessor sets must not be mutated by callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .errors import GraphError, NotChordalError

_EMPTY: frozenset[int] = frozenset()

Ordering = tuple[int, ...]
Coloring = dict[int, int]


class PartiallyDirectedGraph:
    """Graph on [1..p] with arrows and lines, dual adjacency per vertex."""

    __slots__ = ("p", "_pa", "_ch", "_nb", "_key", "_lcsr")

    def __init__(self, p: int, arrows: Iterable[tuple[int, int]] = (),
                 lines: Iterable[tuple[int, int]] = ()):
        if p < 0:
            raise GraphError(f"vertex count must be >= 0, got {p}")
        self.p = p
        pa: dict[int, set[int]] = {}
        ch: dict[int, set[int]] = {}
        nb: dict[int, set[int]] = {}
        for a, b in arrows:
            self._check_pair(a, b)
            pa.setdefault(b, set()).add(a)
            ch.setdefault(a, set()).add(b)
        for a, b in lines:
            self._check_pair(a, b)
            nb.setdefault(a, set()).add(b)
            nb.setdefault(b, set()).add(a)
        for b, parents in pa.items():
            bad = parents & nb.get(b, set())
            if bad:
                raise GraphError(f"edge between {bad.pop()} and {b} is both arrow and line")
            bad = parents & ch.get(b, set())
            if bad:
                raise GraphError(f"edge between {bad.pop()} and {b} given in both directions; "
                                 "use a line")
        self._pa = pa
        self._ch = ch
        self._nb = nb
        self._key: frozenset[tuple[int, int]] | None = None
        self._lcsr: tuple[np.ndarray, np.ndarray] | None = None

    def _check_pair(self, a: int, b: int) -> None:
        if a == b:
            raise GraphError(f"self-loop at vertex {a}")
        if not (1 <= a <= self.p and 1 <= b <= self.p):
            raise GraphError(f"edge ({a}, {b}) out of range 1..{self.p}")

    @classmethod
    def from_pairs(cls, p: int, pairs: Iterable[tuple[int, int]]) -> "PartiallyDirectedGraph":
        """Build from ordered pairs; a pair present in both directions is a line."""
        pairs = set(pairs)
        arrows = [(a, b) for a, b in pairs if (b, a) not in pairs]
        lines = [(a, b) for a, b in pairs if (b, a) in pairs and a < b]
        return cls(p, arrows, lines)

    # -- queries ---------------------------------------------------------

    def parents(self, v: int) -> frozenset[int] | set[int]:
        return self._pa.get(v, _EMPTY)

    def children(self, v: int) -> frozenset[int] | set[int]:
        return self._ch.get(v, _EMPTY)

    def neighbors(self, v: int) -> frozenset[int] | set[int]:
        """Line-neighbours of v."""
        return self._nb.get(v, _EMPTY)

    def has_arrow(self, a: int, b: int) -> bool:
        return b in self._ch.get(a, _EMPTY)

    def has_line(self, a: int, b: int) -> bool:
        return b in self._nb.get(a, _EMPTY)

    def adjacent(self, a: int, b: int) -> bool:
        return (b in self._nb.get(a, _EMPTY) or b in self._ch.get(a, _EMPTY)
                or b in self._pa.get(a, _EMPTY))

    def arrows(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a, kids in self._ch.items() for b in kids)

    def lines(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a, nbs in self._nb.items() for b in nbs if a < b)

    @property
    def num_arrows(self) -> int:
        return sum(len(s) for s in self._ch.values())

    @property
    def num_lines(self) -> int:
        return sum(len(s) for s in self._nb.values()) // 2

    def edge_pairs(self) -> frozenset[tuple[int, int]]:
        """The edge set E as ordered pairs (lines appear in both directions)."""
        if self._key is None:
            pairs = set()
            for a, kids in self._ch.items():
                pairs.update((a, b) for b in kids)
            for a, nbs in self._nb.items():
                pairs.update((a, b) for b in nbs)
            self._key = frozenset(pairs)
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartiallyDirectedGraph):
            return NotImplemented
        return self.p == other.p and self.edge_pairs() == other.edge_pairs()

    def __hash__(self) -> int:
        return hash((self.p, self.edge_pairs()))

    def __repr__(self) -> str:
        return (f"PartiallyDirectedGraph(p={self.p}, "
                f"arrows={self.arrows()}, lines={self.lines()})")

    # -- predicates ------------------------------------------------------

    def is_undirected(self) -> bool:
        return not self._ch

    def is_dag(self) -> bool:
        return not self._nb and not self._has_directed_cycle()

    def is_chain_graph(self) -> bool:
        """True iff the graph contains no directed cycle."""
        return not self._has_directed_cycle()

    def _has_directed_cycle(self) -> bool:
        # A directed cycle exists iff an arrow joins two vertices of the same
        # line-connected component, or the component digraph has a cycle.
        labels, count = _line_components(self)
        comp_edges: set[tuple[int, int]] = set()
        for a, kids in self._ch.items():
            for b in kids:
                if labels[a] == labels[b]:
                    return True
                comp_edges.add((labels[a], labels[b]))
        # Kahn's algorithm on the component digraph.
        indeg = [0] * count
        succ: dict[int, list[int]] = {}
        for x, y in comp_edges:
            indeg[y] += 1
            succ.setdefault(x, []).append(y)
        queue = [c for c in range(count) if indeg[c] == 0]
        seen = 0
        while queue:
            c = queue.pop()
            seen += 1
            for d in succ.get(c, ()):
                indeg[d] -= 1
                if indeg[d] == 0:
                    queue.append(d)
        return seen != count

    # -- derived graphs --------------------------------------------------

    def restricted(self, vertices: Iterable[int]) -> "PartiallyDirectedGraph":
        """Keep only edges with both endpoints in ``vertices`` (p unchanged)."""
        keep = set(vertices)
        arrows = [(a, b) for a, b in self.arrows() if a in keep and b in keep]
        lines = [(a, b) for a, b in self.lines() if a in keep and b in keep]
        return PartiallyDirectedGraph(self.p, arrows, lines)

    def lines_csr(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR (indptr, indices) of the undirected part, 0-based; cached."""
        if self._lcsr is None:
            self._lcsr = _build_lines_csr(self.p, self._nb)
        return self._lcsr


def _build_lines_csr(p: int, nb: dict[int, set[int]]) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(p + 1, dtype=np.int64)
    for v, nbs in nb.items():
        indptr[v] = len(nbs)
    np.cumsum(indptr, out=indptr)
    indices = np.empty(int(indptr[-1]), dtype=np.int32)
    fill = indptr[:-1].copy()
    for v, nbs in nb.items():
        k = int(fill[v - 1])
        for w in sorted(nbs):
            indices[k] = w - 1
            k += 1
    return indptr, indices


def _line_components(g: PartiallyDirectedGraph) -> tuple[dict[int, int], int]:
    """Labels of line-connected components over all of [1..p]."""
    labels: dict[int, int] = {}
    count = 0
    for s in range(1, g.p + 1):
        if s in labels:
            continue
        labels[s] = count
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in labels:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return labels, count


@dataclass(frozen=True)
class ChainComponentPartition:
    """Partition of [1..p] into line-connected components."""

    components: tuple[frozenset[int], ...]

    def component_of(self, v: int) -> frozenset[int]:
        for comp in self.components:
            if v in comp:
                return comp
        raise GraphError(f"vertex {v} not covered by the partition")

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)


# -- operations ----------------------------------------------------------


def skeleton(g: PartiallyDirectedGraph) -> PartiallyDirectedGraph:
    """Replace every arrow by a line."""
    lines = set(g.lines())
    lines.update((min(a, b), max(a, b)) for a, b in g.arrows())
    return PartiallyDirectedGraph(g.p, lines=sorted(lines))


def v_structures(g: PartiallyDirectedGraph) -> set[tuple[int, int, int]]:
    """All induced colliders a -> b <- c, reported once with a < c."""
    out = set()
    for b in range(1, g.p + 1):
        pa = sorted(g.parents(b))
        for i, a in enumerate(pa):
            for c in pa[i + 1:]:
                if not g.adjacent(a, c):
                    out.add((a, b, c))
    return out


def chain_components(g: PartiallyDirectedGraph) -> ChainComponentPartition:
    """Line-connected components; singletons for vertices without lines."""
    labels, count = _line_components(g)
    groups: list[set[int]] = [set() for _ in range(count)]
    for v, c in labels.items():
        groups[c].add(v)
    comps = tuple(frozenset(s) for s in sorted(groups, key=min))
    return ChainComponentPartition(comps)


def _require_undirected(g: PartiallyDirectedGraph) -> None:
    if not g.is_undirected():
        raise GraphError("operation requires an undirected graph")


def _input_order(g: PartiallyDirectedGraph, prefix: Iterable[int]) -> np.ndarray:
    prefix = list(prefix)
    seen = set()
    for v in prefix:
        if not (1 <= v <= g.p):
            raise GraphError(f"prefix vertex {v} out of range 1..{g.p}")
        if v in seen:
            raise GraphError(f"duplicate prefix vertex {v}")
        seen.add(v)
    rest = [v for v in range(1, g.p + 1) if v not in seen]
    return np.array([v - 1 for v in prefix + rest], dtype=np.int32)


def lex_bfs(g: PartiallyDirectedGraph, prefix: Iterable[int] = ()) -> Ordering:
    """Lexicographic BFS on an undirected graph, seeded with ``prefix``.

    The input ordering is the prefix followed by the remaining vertices in
    ascending index order; label ties are broken by input-ordering position.
    If the prefix is a clique, the output starts with it unchanged.
    """
    _require_undirected(g)
    indptr, indices = g.lines_csr()
    out = kernels.lex_bfs_csr(indptr, indices, _input_order(g, prefix))
    return tuple(int(v) + 1 for v in out)


def is_perfect_elimination_ordering(g: PartiallyDirectedGraph, sigma: Iterable[int]) -> bool:
    """True iff every vertex's earlier-ordered neighbours form a clique."""
    _require_undirected(g)
    sigma = list(sigma)
    if sorted(sigma) != list(range(1, g.p + 1)):
        raise GraphError("ordering is not a permutation of 1..p")
    indptr, indices = g.lines_csr()
    return bool(kernels.check_peo_csr(indptr, indices,
                                      np.array([v - 1 for v in sigma], dtype=np.int32)))


def is_chordal(g: PartiallyDirectedGraph) -> bool:
    """Rose's characterization: a LexBFS ordering is a PEO iff chordal."""
    return is_perfect_elimination_ordering(g, lex_bfs(g))


def greedy_coloring(g: PartiallyDirectedGraph, sigma: Iterable[int]) -> Coloring:
    """Greedy coloring along sigma: each vertex gets the least color unused
    among its earlier-ordered neighbours."""
    _require_undirected(g)
    sigma = list(sigma)
    if sorted(sigma) != list(range(1, g.p + 1)):
        raise GraphError("ordering is not a permutation of 1..p")
    indptr, indices = g.lines_csr()
    colors = kernels.greedy_color_csr(indptr, indices,
                                      np.array([v - 1 for v in sigma], dtype=np.int32))
    return {v: int(colors[v - 1]) for v in range(1, g.p + 1)}


def is_proper_coloring(g: PartiallyDirectedGraph, coloring: Coloring) -> bool:
    return all(coloring[a] != coloring[b] for a, b in g.lines())


def clique_number(g: PartiallyDirectedGraph) -> int:
    """Max clique size over chain components (1 for a graph without lines).

    Valid because chain components of essential graphs are chordal, where the
    greedy-coloring maximum along a LexBFS ordering equals the clique number.
    Raises NotChordalError on a non-chordal chain component.
    """
    indptr, indices = g.lines_csr()
    order = np.arange(g.p, dtype=np.int32)
    sigma = kernels.lex_bfs_csr(indptr, indices, order)
    if not kernels.check_peo_csr(indptr, indices, sigma):
        raise NotChordalError("graph has a non-chordal chain component")
    colors = kernels.greedy_color_csr(indptr, indices, sigma)
    return int(colors.max()) if len(colors) else 1


def neighbor_cliques(g: PartiallyDirectedGraph, v: int) -> list[frozenset[int]]:
    """All subsets of the line-neighbours of v that are cliques, including
    the empty set.  Output-sensitive recursive extension; worst case
    exponential in deg(v)."""
    nbs = sorted(g.neighbors(v))
    out: list[frozenset[int]] = []

    def extend(base: list[int], candidates: list[int]) -> None:
        out.append(frozenset(base))
        for i, u in enumerate(candidates):
            rest = [w for w in candidates[i + 1:] if g.has_line(u, w)]
            extend(base + [u], rest)

    extend([], nbs)
    return out


def orient_by_ordering(g: PartiallyDirectedGraph, sigma: Iterable[int]) -> PartiallyDirectedGraph:
    """Orient every line a -- b as a -> b iff a precedes b in sigma."""
    _require_undirected(g)
    sigma = list(sigma)
    if sorted(sigma) != list(range(1, g.p + 1)):
        raise GraphError("ordering is not a permutation of 1..p")
    pos = {v: i for i, v in enumerate(sigma)}
    arrows = [(a, b) if pos[a] < pos[b] else (b, a) for a, b in g.lines()]
    return PartiallyDirectedGraph(g.p, arrows=arrows)
