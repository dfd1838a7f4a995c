"""The recursive bijection between k-Dyck paths and (k+1)-ary trees.

A nonempty path splits around its final down-step as P_0 u ... u P_k d;
the tree of P puts the tree of the i-fold cyclic shift of P_i at child
position i+1.  One node is created per down-step, and the statistic vector
(pk_0, ..., pk_{k-1}, dd) of the path becomes the position-count vector
(e_1, ..., e_{k+1}) of the tree.

The labeled variant transports the feature labels of the original path
onto tree nodes: the root takes the rightmost peak's label, child i+1
(i < k) takes the label of the rightmost peak of part P_i, and child k+1
takes the label of the vertex closing part P_k, which is a double descent
whenever P_k is nonempty.  Provenance tags on down-steps carry the labels
through the block moves of the cyclic shifts.
"""

from __future__ import annotations

from typing import Sequence

from .core import (
    DOWN,
    UP,
    ArityMismatchError,
    EmptyPathError,
    FamilySpec,
    LatticePath,
    PositionalTree,
    Step,
    recursion_headroom,
)
from .statistics import label_features
from .transforms import (
    _kappa_items,
    _last_step_split,
    _require_pure,
    check_permutation,
)


def path_to_tree(path: LatticePath) -> PositionalTree | None:
    """Map a pure k-Dyck path to its (k+1)-ary tree (None when empty)."""
    _require_pure(path, "path_to_tree")
    k = path.spec.k
    arity = k + 1

    def build(items: list[Step]) -> PositionalTree | None:
        if not items:
            return None
        parts, _d, suffix = _last_step_split(items, k)
        if suffix:
            raise ValueError("unexpected level steps")
        children = []
        for i, part in enumerate(parts):
            if part:
                sub = build(_kappa_items(part, k, i))
                children.append((i + 1, sub))
        return PositionalTree(arity, tuple(children))

    with recursion_headroom(path.down_size):
        return build(list(path.steps))


def path_to_labeled_tree(path: LatticePath) -> PositionalTree:
    """Like :func:`path_to_tree`, with original feature labels on nodes."""
    if path.is_empty():
        raise EmptyPathError("cannot label the tree of an empty path")
    _require_pure(path, "path_to_labeled_tree")
    k = path.spec.k
    arity = k + 1
    # labels keyed by the down-step whose left endpoint carries the feature
    by_down = {i + 1: lab for i, lab in label_features(path).items()}

    def step_of(item: tuple[Step, int]) -> Step:
        return item[0]

    def rightmost_peak_down(items: list[tuple[Step, int]]) -> int:
        for j in range(len(items) - 1, 0, -1):
            if items[j][0].kind == "d" and items[j - 1][0].kind == "u":
                return items[j][1]
        raise EmptyPathError("path has no peak")

    def build(items: list[tuple[Step, int]], label_tag: int) -> PositionalTree:
        parts, d_item, _suffix = _last_step_split(items, k, step_of)
        children = []
        for i, part in enumerate(parts):
            if not part:
                continue
            if i < k:
                shifted = _kappa_items(part, k, i, step_of)
                child = build(shifted, rightmost_peak_down(shifted))
            else:
                child = build(part, d_item[1])
            children.append((i + 1, child))
        return PositionalTree(arity, tuple(children), by_down[label_tag])

    tagged = [(s, i) for i, s in enumerate(path.steps)]
    with recursion_headroom(path.down_size):
        return build(tagged, rightmost_peak_down(tagged))


def tree_to_path(tree: PositionalTree | None, k: int) -> LatticePath:
    """Inverse of :func:`path_to_tree` for trees of arity k+1.

    Child i+1 contributes the (k-i)-fold cyclic shift of its own path,
    undoing the i-fold shift applied on the way in.
    """
    spec = FamilySpec(k)
    if tree is None:
        return LatticePath(spec)
    if tree.arity != k + 1:
        raise ArityMismatchError(
            f"tree arity {tree.arity} does not match k+1 = {k + 1}")

    def build(node: PositionalTree | None) -> list[Step]:
        if node is None:
            return []
        steps: list[Step] = []
        for i in range(k + 1):
            part = build(node.child(i + 1))
            steps.extend(_kappa_items(part, k, (k - i) % k))
            if i < k:
                steps.append(UP)
        steps.append(DOWN)
        return steps

    with recursion_headroom(tree.node_count()):
        return LatticePath(spec, tuple(build(tree)))


def permute_statistics(path: LatticePath,
                       sigma: Sequence[int]) -> LatticePath:
    """The path whose statistic vector is the sigma-rearrangement of P's.

    Slot i <= k holds pk_{i-1} and slot k+1 holds dd; the value in slot i
    moves to slot sigma(i).  Realized by permuting subtrees of the tree
    image, so it is a bijection on each family and composes like the
    underlying permutations.
    """
    from .transforms import permute_subtrees

    k = path.spec.k
    sig = check_permutation(sigma, k + 1)
    tree = path_to_tree(path)
    if tree is None:
        return path
    return tree_to_path(permute_subtrees(tree, sig), k)
