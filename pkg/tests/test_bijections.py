"""Path/tree bijection, label transport, and statistic permutation."""

from itertools import permutations

import pytest
from hypothesis import given

from peakmod import (
    ArityMismatchError,
    EmptyPathError,
    FamilySpec,
    LatticePath,
    PositionalTree,
    e_vector,
    gen_k_dyck,
    gen_trees,
    histogram,
    path_to_labeled_tree,
    path_to_tree,
    permute_statistics,
    stat_vector,
    tree_to_json,
    tree_to_path,
)
from peakmod.statistics import PLAIN

from conftest import K2, dyck, k_dyck_paths

FIG1_TREE_JSON = {
    "label": "r",
    "1": {"label": "p0_2",
          "1": {"label": "p0_1"},
          "3": {"label": "dd_1", "2": {"label": "p1_1"}}},
    "2": {"label": "p1_3",
          "2": {"label": "p1_2"},
          "3": {"label": "dd_2", "1": {"label": "p0_3"}}},
    "3": {"label": "dd_3"},
}


class TestPathToTree:
    def test_empty(self):
        assert path_to_tree(LatticePath(K2)) is None

    def test_example(self, example_path):
        t = path_to_tree(example_path)
        assert t.node_count() == 10
        assert e_vector(t) == (3, 3, 3)

    def test_chain(self):
        t = path_to_tree(dyck("uuduuduud"))
        assert e_vector(t) == (2, 0, 0)
        node, depth = t, 0
        while node.children:
            assert [pos for pos, _ in node.children] == [1]
            node = node.children[0][1]
            depth += 1
        assert depth == 2

    @given(k_dyck_paths())
    def test_node_count_is_down_size(self, path):
        tree = path_to_tree(path)
        count = tree.node_count() if tree is not None else 0
        assert count == path.down_size

    @given(k_dyck_paths())
    def test_statistic_transport(self, path):
        tree = path_to_tree(path)
        assert stat_vector(path).key() == e_vector(tree, path.spec.k + 1)


class TestLabeledTree:
    def test_example_matches_figure(self, example_path):
        assert tree_to_json(path_to_labeled_tree(example_path)) == \
            FIG1_TREE_JSON

    def test_single_node(self):
        t = path_to_labeled_tree(dyck("uud"))
        assert t.children == () and t.label.display() == "r"

    def test_descent_chain(self):
        # the root closes over the whole path, so the later double descent
        # labels the child and the earlier one the grandchild
        t = path_to_labeled_tree(dyck("uuuuuuddd"))
        assert t.label.display() == "r"
        (pos, child), = t.children
        assert (pos, child.label.display()) == (3, "d_2")
        (pos, grand), = child.children
        assert (pos, grand.label.display()) == (3, "d_1")

    def test_empty_rejected(self):
        with pytest.raises(EmptyPathError):
            path_to_labeled_tree(LatticePath(K2))

    @given(k_dyck_paths(max_n=4))
    def test_labels_sit_at_matching_positions(self, path):
        if path.is_empty():
            return
        k = path.spec.k
        tree = path_to_labeled_tree(path)
        assert tree.strip_labels() == path_to_tree(path)
        assert tree.label.kind == "r"
        stack = [tree]
        while stack:
            node = stack.pop()
            for pos, child in node.children:
                if pos <= k:
                    assert child.label.kind == "peak"
                    assert child.label.residue == pos - 1
                else:
                    assert child.label.kind == "dd"
                stack.append(child)


class TestTreeToPath:
    def test_empty(self):
        assert tree_to_path(None, 2).is_empty()

    def test_example_round_trip(self, example_path):
        assert tree_to_path(path_to_tree(example_path), 2) == example_path

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            tree_to_path(PositionalTree(4), 2)

    def test_all_small_trees_round_trip(self):
        for k in (1, 2):
            for n in range(6):
                for t in gen_trees(k + 1, n):
                    assert path_to_tree(tree_to_path(t, k)) == t

    @given(k_dyck_paths())
    def test_all_paths_round_trip(self, path):
        assert tree_to_path(path_to_tree(path), path.spec.k) == path


class TestDeepStructures:
    def test_chain_beyond_default_recursion_limit(self):
        # chain paths nest the recursion as deep as the down-size
        import sys

        n = sys.getrecursionlimit() + 300
        from peakmod.core import DOWN, UP

        path = LatticePath(FamilySpec(2), (UP, UP, DOWN) * n)
        tree = path_to_tree(path)
        assert tree.node_count() == n
        assert e_vector(tree, 3) == stat_vector(path).key()
        assert tree_to_path(tree, 2) == path
        from peakmod import permute_subtrees
        assert e_vector(permute_subtrees(tree, (3, 2, 1))) == (0, 0, n - 1)


class TestPermuteStatistics:
    def test_identity(self, example_path):
        assert permute_statistics(example_path, (1, 2, 3)) == example_path

    def test_dyck_swap_matches_involution_distribution(self):
        # swapping the two statistic slots redistributes (pk, dd) exactly
        # like the classical involution does
        for n in range(7):
            paths = list(gen_k_dyck(1, n))
            swapped = histogram(
                (permute_statistics(p, (2, 1)) for p in paths), PLAIN)
            base = histogram(paths, PLAIN)
            assert swapped == base
            for p in paths:
                v = stat_vector(p).key()
                w = stat_vector(permute_statistics(p, (2, 1))).key()
                assert (v[1], v[0]) == w

    def test_figure_tally_slot_swap(self):
        paths = list(gen_k_dyck(2, 3))
        base = histogram(paths, PLAIN)
        image = histogram(
            (permute_statistics(p, (3, 2, 1)) for p in paths), PLAIN)
        assert image == base
        for p in paths:
            old = stat_vector(p).key()
            new = stat_vector(permute_statistics(p, (3, 2, 1))).key()
            assert new == (old[2], old[1], old[0])

    def test_bijective_per_family(self):
        for k, n in ((1, 5), (2, 4), (3, 3)):
            paths = list(gen_k_dyck(k, n))
            for sigma in permutations(range(1, k + 2)):
                images = {permute_statistics(p, sigma) for p in paths}
                assert len(images) == len(paths)

    def test_composition(self):
        sigma, tau = (3, 1, 2), (2, 3, 1)
        composed = tuple(sigma[tau[i] - 1] for i in range(3))
        for p in gen_k_dyck(2, 4):
            assert permute_statistics(permute_statistics(p, tau), sigma) == \
                permute_statistics(p, composed)
