import pytest

from actdag.errors import GraphError, NotChordalError
from actdag.pdag import (
    PartiallyDirectedGraph as PDG,
    chain_components,
    clique_number,
    greedy_coloring,
    is_chordal,
    is_perfect_elimination_ordering,
    is_proper_coloring,
    lex_bfs,
    neighbor_cliques,
    orient_by_ordering,
    skeleton,
    v_structures,
)


def diamond_dag():
    return PDG(4, arrows=[(1, 2), (1, 3), (2, 4), (3, 4)])


def tree9():
    return PDG(9, lines=[(1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (5, 7), (5, 8), (5, 9)])


def dense5():
    return PDG(5, lines=[(1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)])


class TestConstruction:
    def test_basic_accessors(self):
        g = PDG(4, arrows=[(1, 2)], lines=[(2, 3)])
        assert g.parents(2) == {1}
        assert g.children(1) == {2}
        assert g.neighbors(2) == {3}
        assert g.has_arrow(1, 2) and not g.has_arrow(2, 1)
        assert g.has_line(2, 3) and g.has_line(3, 2)
        assert g.adjacent(1, 2) and g.adjacent(3, 2) and not g.adjacent(1, 3)
        assert g.num_arrows == 1 and g.num_lines == 1

    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            PDG(3, arrows=[(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            PDG(3, arrows=[(1, 4)])
        with pytest.raises(GraphError):
            PDG(3, lines=[(0, 2)])

    def test_rejects_conflicting_marks(self):
        with pytest.raises(GraphError):
            PDG(3, arrows=[(1, 2)], lines=[(1, 2)])
        with pytest.raises(GraphError):
            PDG(3, arrows=[(1, 2), (2, 1)])

    def test_from_pairs_detects_lines(self):
        g = PDG.from_pairs(3, [(1, 2), (2, 1), (2, 3)])
        assert g.has_line(1, 2) and g.has_arrow(2, 3)

    def test_equality_and_hash(self):
        a = PDG(3, arrows=[(1, 2)], lines=[(2, 3)])
        b = PDG(3, arrows=[(1, 2)], lines=[(3, 2)])
        assert a == b and hash(a) == hash(b)
        assert a != PDG(3, arrows=[(2, 1)], lines=[(2, 3)])

    def test_restricted_keeps_vertex_count(self):
        g = diamond_dag().restricted({1, 2, 4})
        assert g.p == 4
        assert sorted(g.arrows()) == [(1, 2), (2, 4)]


class TestPredicates:
    def test_is_dag(self):
        assert diamond_dag().is_dag()
        assert not PDG(3, arrows=[(1, 2), (2, 3), (3, 1)]).is_dag()
        assert not PDG(3, arrows=[(1, 2)], lines=[(2, 3)]).is_dag()

    def test_is_chain_graph(self):
        assert PDG(3, arrows=[(1, 2)], lines=[(2, 3)]).is_chain_graph()
        # Directed cycle through a line is still a forbidden semi-directed cycle.
        assert not PDG(3, arrows=[(1, 2), (2, 3)], lines=[(1, 3)]).is_chain_graph()

    def test_is_undirected(self):
        assert tree9().is_undirected()
        assert not diamond_dag().is_undirected()


class TestSkeletonAndVStructures:
    def test_skeleton(self):
        s = skeleton(diamond_dag())
        assert s.is_undirected()
        assert sorted(s.lines()) == [(1, 2), (1, 3), (2, 4), (3, 4)]

    def test_v_structures(self):
        assert v_structures(diamond_dag()) == {(2, 4, 3)}
        chain = PDG(3, arrows=[(1, 2), (2, 3)])
        assert v_structures(chain) == set()
        # Shielded collider is not a v-structure.
        shielded = PDG(3, arrows=[(1, 3), (2, 3), (1, 2)])
        assert v_structures(shielded) == set()


class TestChainComponents:
    def test_partition(self):
        g = PDG(4, arrows=[(2, 4), (3, 4)], lines=[(1, 2), (1, 3)])
        comps = sorted(sorted(c) for c in chain_components(g))
        assert comps == [[1, 2, 3], [4]]

    def test_component_of(self):
        parts = chain_components(tree9())
        assert parts.component_of(1) == frozenset(range(1, 10))


class TestLexBFS:
    def test_clique_prefix_preserved(self):
        k3 = PDG(3, lines=[(1, 2), (1, 3), (2, 3)])
        assert lex_bfs(k3, prefix=(3, 1)) == (3, 1, 2)

    def test_default_order(self):
        assert lex_bfs(dense5()) == (1, 2, 3, 4, 5)

    def test_requires_undirected(self):
        with pytest.raises(GraphError):
            lex_bfs(diamond_dag())

    def test_bad_prefix(self):
        with pytest.raises(GraphError):
            lex_bfs(tree9(), prefix=(1, 1))
        with pytest.raises(GraphError):
            lex_bfs(tree9(), prefix=(10,))


class TestChordality:
    def test_tree_is_chordal(self):
        assert is_chordal(tree9())

    def test_c4_not_chordal(self):
        c4 = PDG(4, lines=[(1, 2), (2, 3), (3, 4), (1, 4)])
        assert not is_chordal(c4)
        assert not is_perfect_elimination_ordering(c4, (1, 2, 4, 3))

    def test_peo_examples(self):
        assert is_perfect_elimination_ordering(tree9(), (5, 3, 2, 1, 4, 6, 7, 8, 9))
        assert is_perfect_elimination_ordering(dense5(), lex_bfs(dense5()))


class TestColoring:
    def test_dense5_coloring(self):
        sigma = lex_bfs(dense5())
        colors = greedy_coloring(dense5(), sigma)
        assert colors == {1: 1, 2: 2, 3: 1, 4: 3, 5: 4}
        assert is_proper_coloring(dense5(), colors)

    def test_clique_number(self):
        assert clique_number(dense5()) == 4
        assert clique_number(tree9()) == 2
        assert clique_number(PDG(3)) == 1
        assert clique_number(diamond_dag()) == 1  # no lines at all

    def test_clique_number_rejects_non_chordal(self):
        c4 = PDG(4, lines=[(1, 2), (2, 3), (3, 4), (1, 4)])
        with pytest.raises(NotChordalError):
            clique_number(c4)


class TestNeighborCliques:
    def test_includes_empty(self):
        cliques = neighbor_cliques(dense5(), 1)
        assert sorted(sorted(c) for c in cliques) == [[], [2]]

    def test_triangle_neighborhood(self):
        cliques = neighbor_cliques(dense5(), 5)
        got = sorted(sorted(c) for c in cliques)
        assert got == [[], [2], [2, 3], [2, 3, 4], [2, 4], [3], [3, 4], [4]]


class TestOrientByOrdering:
    def test_matches_reference_orientation(self):
        oriented = orient_by_ordering(dense5(), (2, 3, 5, 4, 1))
        assert sorted(oriented.arrows()) == [(2, 1), (2, 3), (2, 4), (2, 5),
                                             (3, 4), (3, 5), (5, 4)]

    def test_result_is_dag(self):
        oriented = orient_by_ordering(tree9(), lex_bfs(tree9()))
        assert oriented.is_dag()
