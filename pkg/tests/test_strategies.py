import collections

import numpy as np
import pytest

from actdag.corpus import connected_chordal_graphs, random_connected_chordal
from actdag.equivalence import EssentialGraph, TargetFamily, essential_graph, refine
from actdag.errors import NotChordalError
from actdag.pdag import PartiallyDirectedGraph as PDG, clique_number, lex_bfs, orient_by_ordering
from actdag.strategies import (
    max_nb,
    opt_single,
    opt_single_scores,
    opt_unb,
    opt_unb_csr,
    rand,
    rand_adv,
    separating_targets,
)
from actdag.verify import brute_force_opt_single


def obs(graph):
    return EssentialGraph(graph, TargetFamily.observational(graph.p))


def tree9():
    return obs(PDG(9, lines=[(1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (5, 7), (5, 8), (5, 9)]))


def tree9_dag():
    return PDG(9, arrows=[(2, 1), (3, 2), (3, 4), (3, 5), (5, 6), (5, 7), (5, 8), (5, 9)])


def dense5():
    return obs(PDG(5, lines=[(1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]))


def dense5_dag():
    return PDG(5, arrows=[(2, 1), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (5, 4)])


def fully_directed():
    return obs(PDG(3, arrows=[(1, 3), (2, 3)]))


class TestOptSingle:
    def test_tree_first_round(self):
        scores = opt_single_scores(tree9())
        assert [scores[v] for v in range(1, 10)] == [7, 6, 4, 7, 3, 7, 7, 7, 7]
        p = opt_single(tree9())
        assert p.vertices == frozenset({5}) and p.score == 3

    def test_tree_iterated_sequence(self):
        d = tree9_dag()
        g = tree9()
        picks = []
        while g.graph.num_lines:
            p = opt_single(g)
            picks.append(min(p.vertices))
            g = refine(g, p.vertices, d)
        assert picks == [5, 2, 3]

    def test_tree_later_rounds(self):
        d = tree9_dag()
        g2 = refine(tree9(), {5}, d)
        s2 = opt_single_scores(g2)
        assert [s2[v] for v in range(1, 10)] == [2, 1, 1, 2, 3, 3, 3, 3, 3]
        g3 = refine(g2, {2}, d)
        s3 = opt_single_scores(g3)
        assert [s3[v] for v in range(1, 10)] == [1, 1, 0, 0, 1, 1, 1, 1, 1]

    def test_fully_directed(self):
        assert opt_single(fully_directed()).kind == "none"

    def test_single_line_tie_break(self):
        g = obs(PDG(2, lines=[(1, 2)]))
        p = opt_single(g)
        assert p.vertices == frozenset({1}) and p.score == 0

    def test_matches_brute_force_on_small_corpus(self):
        for p in range(2, 5):
            for skel in connected_chordal_graphs(p):
                g = obs(skel)
                expect = brute_force_opt_single(g)
                got = opt_single(g)
                assert got.vertices == frozenset({expect[0]})
                assert got.score == expect[1]


class TestOptUnb:
    def test_dense5_first_target(self):
        p = opt_unb(dense5())
        assert p.vertices == frozenset({1, 2, 3}) and p.score == 2

    def test_dense5_second_target(self):
        mid = refine(dense5(), {1, 2, 3}, dense5_dag())
        assert sorted(mid.graph.arrows()) == [(2, 4), (2, 5), (3, 4), (3, 5)]
        assert sorted(mid.graph.lines()) == [(1, 2), (2, 3), (4, 5)]
        p = opt_unb(mid)
        assert p.vertices == frozenset({1, 3, 4})

    def test_reaches_identifiability_in_log_omega(self):
        g = dense5()
        d = dense5_dag()
        steps = 0
        while g.graph.num_lines:
            g = refine(g, opt_unb(g).vertices, d)
            steps += 1
        assert steps == 2  # ceil(log2(4))

    def test_fully_directed(self):
        assert opt_unb(fully_directed()).kind == "none"

    def test_skips_line_less_components(self):
        g = obs(PDG(4, lines=[(1, 2)]))
        assert opt_unb(g).vertices == frozenset({1})
        assert opt_unb(g, strict=True).vertices == frozenset({1, 3, 4})

    def test_floor_variant(self):
        # Triangle: omega=3, ceil half = 2 colors, floor half = 1 color.
        tri = obs(PDG(3, lines=[(1, 2), (1, 3), (2, 3)]))
        assert opt_unb(tri).vertices == frozenset({1, 2})
        assert opt_unb(tri, floor_h=True).vertices == frozenset({1})

    def test_balance_colors_prefers_small_classes(self):
        # Path 1-2-3: greedy puts the two endpoints in color 1; balancing
        # relabels so the singleton class {2} comes first.
        path = obs(PDG(3, lines=[(1, 2), (2, 3)]))
        assert opt_unb(path).vertices == frozenset({1, 3})
        assert opt_unb(path, balance_colors=True).vertices == frozenset({2})

    def test_halves_clique_number(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            skel = random_connected_chordal(7, rng)
            g = obs(skel)
            d = orient_by_ordering(skel, lex_bfs(skel))
            omega = clique_number(skel)
            refined = refine(g, opt_unb(g).vertices, d)
            assert clique_number(refined.graph) <= (omega + 1) // 2

    def test_rejects_non_chordal(self):
        c4 = obs(PDG(4, lines=[(1, 2), (2, 3), (3, 4), (1, 4)]))
        with pytest.raises(NotChordalError):
            opt_unb(c4)

    def test_csr_path_matches_object_path(self):
        rng = np.random.default_rng(6)
        for _ in range(10):
            skel = random_connected_chordal(20, rng)
            g = obs(skel)
            indptr, indices = skel.lines_csr()
            target, omega = opt_unb_csr(indptr, indices)
            assert frozenset(int(v) + 1 for v in target) == opt_unb(g).vertices
            assert omega == clique_number(skel)


class TestSeparatingTargets:
    def test_dense5_two_targets(self):
        targets = separating_targets(dense5())
        assert len(targets) == 2
        for a, b in dense5().graph.lines():
            assert any((a in t) != (b in t) for t in targets)

    def test_tree_single_target(self):
        targets = separating_targets(tree9())
        assert len(targets) == 1
        for a, b in tree9().graph.lines():
            assert (a in targets[0]) != (b in targets[0])

    def test_fully_directed_empty(self):
        assert separating_targets(fully_directed()) == []

    def test_joint_addition_identifies(self):
        rng = np.random.default_rng(8)
        for _ in range(10):
            skel = random_connected_chordal(8, rng)
            d = orient_by_ordering(skel, lex_bfs(skel))
            g = obs(skel)
            for t in separating_targets(g):
                g = refine(g, t, d)
            assert g.graph.num_lines == 0


class TestBaselines:
    def test_max_nb_unique(self):
        rng = np.random.default_rng(0)
        assert max_nb(tree9(), rng).vertices == frozenset({5})
        star = obs(PDG(4, lines=[(2, 1), (2, 3), (2, 4)]))
        assert max_nb(star, rng).vertices == frozenset({2})

    def test_max_nb_tie_randomized(self):
        g = obs(PDG(2, lines=[(1, 2)]))
        rng = np.random.default_rng(1)
        seen = {min(max_nb(g, rng).vertices) for _ in range(50)}
        assert seen == {1, 2}

    def test_rand_uniform_over_all(self):
        g = fully_directed()
        rng = np.random.default_rng(2)
        counts = collections.Counter(min(rand(g, rng).vertices) for _ in range(3000))
        assert set(counts) == {1, 2, 3}
        assert all(abs(c / 3000 - 1 / 3) < 0.05 for c in counts.values())

    def test_rand_adv_only_active(self):
        g = obs(PDG(4, arrows=[(2, 4), (3, 4)], lines=[(1, 3)]))
        rng = np.random.default_rng(3)
        seen = {min(rand_adv(g, rng).vertices) for _ in range(50)}
        assert seen == {1, 3}

    def test_none_on_directed(self):
        rng = np.random.default_rng(4)
        assert max_nb(fully_directed(), rng).kind == "none"
        assert rand_adv(fully_directed(), rng).kind == "none"
        assert rand(fully_directed(), rng).kind == "single-vertex"
