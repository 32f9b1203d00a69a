"""Interventional Markov equivalence: intervention graphs, the equivalence
test, strong protection, essential graphs, refinement, and the brute-force
class enumeration used as a test oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import CoveringError, GraphError, NotInClassError
from .pdag import (
    PartiallyDirectedGraph,
    chain_components,
    is_chordal,
    lex_bfs,
    orient_by_ordering,
    skeleton,
    v_structures,
)

ENUMERATION_BOUND = 8


class TargetFamily:
    """A set of intervention targets (vertex subsets) on [1..p].

    Construction enforces the covering property: every vertex must be left
    un-intervened by at least one target.
    """

    __slots__ = ("p", "targets")

    def __init__(self, p: int, targets: Iterable[Iterable[int]]):
        self.p = p
        tset = set()
        for t in targets:
            t = frozenset(t)
            for v in t:
                if not (1 <= v <= p):
                    raise GraphError(f"target vertex {v} out of range 1..{p}")
            tset.add(t)
        if not tset:
            raise CoveringError("family of targets is empty")
        for v in range(1, p + 1):
            if all(v in t for t in tset):
                raise CoveringError(f"vertex {v} is intervened in every target")
        self.targets = frozenset(tset)

    @classmethod
    def observational(cls, p: int) -> "TargetFamily":
        return cls(p, [()])

    def with_target(self, target: Iterable[int]) -> "TargetFamily":
        return TargetFamily(self.p, list(self.targets) + [frozenset(target)])

    def splits(self, a: int, b: int) -> bool:
        """True iff some target contains exactly one of a, b."""
        return any((a in t) != (b in t) for t in self.targets)

    def __iter__(self):
        return iter(sorted(self.targets, key=lambda t: (len(t), sorted(t))))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TargetFamily):
            return NotImplemented
        return self.p == other.p and self.targets == other.targets

    def __hash__(self) -> int:
        return hash((self.p, self.targets))

    def __repr__(self) -> str:
        parts = ",".join("{" + ",".join(map(str, sorted(t))) + "}" for t in self)
        return f"TargetFamily(p={self.p}, targets=[{parts}])"


@dataclass(frozen=True)
class EssentialGraph:
    """An interventional essential graph together with its target family."""

    graph: PartiallyDirectedGraph
    family: TargetFamily

    @property
    def p(self) -> int:
        return self.graph.p


def intervention_graph(d: PartiallyDirectedGraph, target: Iterable[int]) -> PartiallyDirectedGraph:
    """Remove every arrow whose head lies in the intervention target."""
    if not d.is_dag():
        raise GraphError("intervention_graph requires a DAG")
    target = set(target)
    return PartiallyDirectedGraph(d.p, arrows=[(a, b) for a, b in d.arrows() if b not in target])


def _skeleton_pairs(d: PartiallyDirectedGraph) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(e) for e in d.arrows()) | frozenset(frozenset(e) for e in d.lines())


def i_markov_equivalent(d1: PartiallyDirectedGraph, d2: PartiallyDirectedGraph,
                        family: TargetFamily) -> bool:
    """Same skeleton, same v-structures, and same intervention-graph
    skeletons for every target in the family."""
    if d1.p != d2.p or d1.p != family.p:
        raise GraphError("vertex-count mismatch")
    if not (d1.is_dag() and d2.is_dag()):
        raise GraphError("i_markov_equivalent requires DAGs")
    if _skeleton_pairs(d1) != _skeleton_pairs(d2):
        return False
    if v_structures(d1) != v_structures(d2):
        return False
    for target in family:
        s1 = frozenset(frozenset((a, b)) for a, b in d1.arrows() if b not in target)
        s2 = frozenset(frozenset((a, b)) for a, b in d2.arrows() if b not in target)
        if s1 != s2:
            return False
    return True


class _MutableState:
    """Working copy of a graph during the essential-graph fixpoint sweep."""

    __slots__ = ("pa", "ch", "nb")

    def __init__(self, d: PartiallyDirectedGraph):
        self.pa: dict[int, set[int]] = {}
        self.ch: dict[int, set[int]] = {}
        self.nb: dict[int, set[int]] = {}
        for a, b in d.arrows():
            self.pa.setdefault(b, set()).add(a)
            self.ch.setdefault(a, set()).add(b)
        for a, b in d.lines():
            self.nb.setdefault(a, set()).add(b)
            self.nb.setdefault(b, set()).add(a)

    def adjacent(self, a: int, b: int) -> bool:
        return (b in self.nb.get(a, ()) or b in self.ch.get(a, ())
                or b in self.pa.get(a, ()))

    def demote(self, a: int, b: int) -> None:
        self.ch[a].discard(b)
        self.pa[b].discard(a)
        self.nb.setdefault(a, set()).add(b)
        self.nb.setdefault(b, set()).add(a)


def _protected(s: _MutableState, a: int, b: int, family: TargetFamily) -> bool:
    if family.splits(a, b):
        return True
    # (a): c -> a -> b with c, b non-adjacent.
    for c in s.pa.get(a, ()):
        if not s.adjacent(c, b):
            return True
    # (b): a -> b <- c with a, c non-adjacent.
    for c in s.pa.get(b, ()):
        if c != a and not s.adjacent(c, a):
            return True
    # (c): a -> c -> b (fully directed triangle with a -> b).
    for c in s.ch.get(a, ()):
        if c != b and c in s.pa.get(b, ()):
            return True
    # (d): a -- c1, a -- c2, c1 -> b, c2 -> b with c1, c2 non-adjacent.
    candidates = sorted(s.nb.get(a, set()) & s.pa.get(b, set()))
    for i, c1 in enumerate(candidates):
        for c2 in candidates[i + 1:]:
            if not s.adjacent(c1, c2):
                return True
    return False


def is_strongly_protected(g: PartiallyDirectedGraph, arrow: tuple[int, int],
                          family: TargetFamily) -> bool:
    """Strong protection of an arrow: a target separates its endpoints, or
    the arrow sits in one of the four protecting induced configurations."""
    a, b = arrow
    if not g.has_arrow(a, b):
        raise GraphError(f"({a}, {b}) is not an arrow of the graph")
    return _protected(_MutableState(g), a, b, family)


def essential_graph(d: PartiallyDirectedGraph, family: TargetFamily) -> EssentialGraph:
    """The essential graph of a DAG under a family of targets.

    Fixpoint construction: starting from the fully oriented DAG, each sweep
    evaluates strong protection against the state at the start of the sweep
    and demotes every unprotected arrow to a line, until stable.
    """
    if not d.is_dag():
        raise GraphError("essential_graph requires a DAG")
    if d.p != family.p:
        raise GraphError("vertex-count mismatch")
    state = _MutableState(d)
    arrows = set(d.arrows())
    while True:
        demote = [(a, b) for a, b in arrows if not _protected(state, a, b, family)]
        if not demote:
            break
        for a, b in demote:
            state.demote(a, b)
            arrows.discard((a, b))
    lines = sorted((a, b) for a, nbs in state.nb.items() for b in nbs if a < b)
    graph = PartiallyDirectedGraph(d.p, arrows=sorted(arrows), lines=lines)
    return EssentialGraph(graph, family)


def representative(g: EssentialGraph) -> PartiallyDirectedGraph:
    """One member of the equivalence class: orient each chain component by a
    LexBFS (perfect elimination) ordering and keep the essential arrows."""
    arrows = list(g.graph.arrows())
    for comp in chain_components(g.graph):
        if len(comp) == 1:
            continue
        sub = g.graph.restricted(comp)
        sub = PartiallyDirectedGraph(g.p, lines=sub.lines())
        sigma = lex_bfs(sub, prefix=())
        arrows.extend(orient_by_ordering(sub, sigma).arrows())
    return PartiallyDirectedGraph(g.p, arrows=arrows)


def _component_orientations(g: PartiallyDirectedGraph, comp: frozenset[int]) -> list[frozenset[tuple[int, int]]]:
    """All acyclic orientations of a chain component's lines that create no
    v-structure inside the component."""
    verts = sorted(comp)
    lines = [(a, b) for a, b in g.lines() if a in comp and b in comp]
    seen: set[frozenset[tuple[int, int]]] = set()
    out: list[frozenset[tuple[int, int]]] = []
    for perm in itertools.permutations(verts):
        pos = {v: i for i, v in enumerate(perm)}
        arrows = frozenset((a, b) if pos[a] < pos[b] else (b, a) for a, b in lines)
        if arrows in seen:
            continue
        seen.add(arrows)
        pa: dict[int, list[int]] = {}
        for a, b in arrows:
            pa.setdefault(b, []).append(a)
        adjacent = {frozenset(e) for e in lines}
        ok = True
        for b, parents in pa.items():
            for i, x in enumerate(parents):
                for y in parents[i + 1:]:
                    if frozenset((x, y)) not in adjacent:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(arrows)
    return out


def enumerate_equivalence_class(g: EssentialGraph,
                                bound: int = ENUMERATION_BOUND) -> list[PartiallyDirectedGraph]:
    """All DAGs of the equivalence class, by brute force (test oracle).

    Orients each chain component independently over its collider-free acyclic
    orientations, combines them, and keeps the combinations that are
    equivalent to a known representative under the family.
    """
    if g.p > bound:
        raise GraphError(f"enumeration limited to p <= {bound}, got p={g.p}")
    base = list(g.graph.arrows())
    comps = [c for c in chain_components(g.graph) if len(c) > 1]
    per_comp = [_component_orientations(g.graph, c) for c in comps]
    rep = representative(g)
    out = []
    for choice in itertools.product(*per_comp):
        arrows = list(base)
        for arrowset in choice:
            arrows.extend(sorted(arrowset))
        cand = PartiallyDirectedGraph(g.p, arrows=arrows)
        if i_markov_equivalent(cand, rep, g.family):
            out.append(cand)
    out.sort(key=lambda d: sorted(d.arrows()))
    return out


def refine(g: EssentialGraph, new_target: Iterable[int],
           true_dag: PartiallyDirectedGraph, cross_check: bool = False) -> EssentialGraph:
    """Essential graph after adding one intervention target.

    Fast path: each chain component is refined in isolation as an
    observational essential graph of the true DAG restricted to it, under the
    two-target family {empty, target within the component}; essential arrows
    are untouched.  With ``cross_check`` the result is verified against the
    full recomputation on the enlarged family.
    """
    new_target = frozenset(new_target)
    if _skeleton_pairs(true_dag) != _skeleton_pairs(g.graph):
        raise NotInClassError("true DAG has a different skeleton than the class")
    for a, b in g.graph.arrows():
        if not true_dag.has_arrow(a, b):
            raise NotInClassError(f"essential arrow {a}->{b} is not in the true DAG")
    family = g.family.with_target(new_target)
    arrows = list(g.graph.arrows())
    lines: list[tuple[int, int]] = []
    for comp in chain_components(g.graph):
        if len(comp) == 1:
            continue
        sub_dag = true_dag.restricted(comp)
        sub_family = TargetFamily(g.p, [(), new_target & comp])
        sub_ess = essential_graph(sub_dag, sub_family).graph
        arrows.extend(sub_ess.arrows())
        lines.extend(sub_ess.lines())
    result = EssentialGraph(PartiallyDirectedGraph(g.p, arrows=arrows, lines=lines), family)
    if cross_check:
        slow = essential_graph(true_dag, family)
        if slow.graph != result.graph:
            raise AssertionError("component-wise refinement disagrees with full recomputation")
    return result


# -- standalone validity checkers (used by tests and `verify`) -----------


def essential_conditions(g: PartiallyDirectedGraph, family: TargetFamily) -> dict[str, bool]:
    """The five characterizing conditions of a valid essential graph."""
    chain = g.is_chain_graph()
    chordal = all(
        len(c) == 1 or is_chordal(PartiallyDirectedGraph(g.p, lines=g.restricted(c).lines()))
        for c in chain_components(g)
    )
    no_flag = True
    for a, b in g.arrows():
        for c in g.neighbors(b):
            if c != a and not g.adjacent(a, c):
                no_flag = False
    no_split_line = all(not family.splits(a, b) for a, b in g.lines())
    protected = all(is_strongly_protected(g, (a, b), family) for a, b in g.arrows())
    return {
        "chain_graph": chain,
        "chordal_components": chordal,
        "no_induced_arrow_line_flag": no_flag,
        "no_line_split_by_target": no_split_line,
        "arrows_strongly_protected": protected,
    }


def is_valid_essential_graph(g: PartiallyDirectedGraph, family: TargetFamily) -> bool:
    return all(essential_conditions(g, family).values())
