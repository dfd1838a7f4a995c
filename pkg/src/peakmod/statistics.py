"""Peak and double-descent statistics, in plain, weak, and starred variants.

A peak is a ``ud`` block; its height is the height of the vertex between
the two steps.  A double descent is a ``dd`` block.  The weak variants
admit level steps: ``ud``, ``u l``, and a level step opening the path are
weak peaks, while ``dd`` and ``l d`` are weak double descents.  Plain and
weak statistics exclude the rightmost (weak) peak; the starred variants
count it too, which is the right bookkeeping for ballot paths.

Residue classes are heights reduced modulo k, so a statistic vector has k
peak counters plus one double-descent counter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    EmptyPathError,
    LatticePath,
    NodeLabel,
    PositionalTree,
    dd_label,
    height_profile,
    peak_label,
    rightmost_label,
)

PLAIN = "plain"
WEAK = "weak"
PLAIN_STARRED = "plain_starred"
WEAK_STARRED = "weak_starred"
VARIANTS = (PLAIN, WEAK, PLAIN_STARRED, WEAK_STARRED)


@dataclass(frozen=True)
class StatVector:
    """Counts (pk_0, ..., pk_{k-1}, dd) for one of the four variants."""

    k: int
    variant: str
    pk: tuple[int, ...]
    dd: int

    def key(self) -> tuple[int, ...]:
        """The (k+1)-tuple used as a histogram / monomial exponent key."""
        return self.pk + (self.dd,)

    def total_peaks(self) -> int:
        return sum(self.pk)

    def to_json(self) -> dict:
        return {"k": self.k, "variant": self.variant,
                "pk": list(self.pk), "dd": self.dd}


def peaks(path: LatticePath) -> list[tuple[int, int]]:
    """All ``ud`` blocks as (index of the up-step, height between them)."""
    steps = path.steps
    heights = height_profile(path)
    out = []
    for i in range(len(steps) - 1):
        if steps[i].kind == "u" and steps[i + 1].kind == "d":
            out.append((i, heights[i + 1]))
    return out


def double_descents(path: LatticePath) -> list[int]:
    """Indices of the first step of every ``dd`` block."""
    steps = path.steps
    return [i for i in range(len(steps) - 1)
            if steps[i].kind == "d" and steps[i + 1].kind == "d"]


def weak_peaks(path: LatticePath) -> list[tuple[int, int]]:
    """Weak peaks as (block start index, height of the peak vertex).

    Blocks ``ud`` and ``u l`` qualify, as does a level step that opens the
    path (its height is then the start height).
    """
    steps = path.steps
    heights = height_profile(path)
    out = []
    if steps and steps[0].kind == "l":
        out.append((0, heights[0]))
    for i in range(len(steps) - 1):
        if steps[i].kind == "u" and steps[i + 1].kind in ("d", "l"):
            out.append((i, heights[i + 1]))
    return out


def weak_double_descents(path: LatticePath) -> list[int]:
    """Indices of the first step of every ``dd`` or ``l d`` block."""
    steps = path.steps
    return [i for i in range(len(steps) - 1)
            if steps[i].kind in ("d", "l") and steps[i + 1].kind == "d"]


def stat_vector(path: LatticePath, variant: str = PLAIN) -> StatVector:
    """The joint statistic vector of ``path`` under the given variant.

    On level-free paths the weak variants coincide with the plain ones.
    The non-starred variants drop the rightmost (weak) peak, which is the
    one with the largest step index.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    k = path.spec.k
    if variant in (PLAIN, PLAIN_STARRED):
        pts = peaks(path)
        dd = len(double_descents(path))
    else:
        pts = weak_peaks(path)
        dd = len(weak_double_descents(path))
    if variant in (PLAIN, WEAK) and pts:
        pts = pts[:-1]
    pk = [0] * k
    for _, h in pts:
        pk[h % k] += 1
    return StatVector(k, variant, tuple(pk), dd)


def label_features(path: LatticePath) -> dict[int, NodeLabel]:
    """Label every peak and double descent of a nonempty pure k-Dyck path.

    Keys are block start indices (the up-step of a peak, the first down of
    a double descent).  The rightmost peak gets ``r``; the j-th remaining
    peak at height i mod k, read left to right, gets ``i_j``; the j-th
    double descent gets ``d_j``.
    """
    if path.is_empty():
        raise EmptyPathError("cannot label an empty path")
    if path.spec.has_levels or any(s.kind == "l" for s in path.steps):
        raise ValueError("feature labels are defined on pure k-Dyck paths")
    k = path.spec.k
    pts = peaks(path)
    labels: dict[int, NodeLabel] = {}
    ordinals = [0] * k
    for i, h in pts[:-1]:
        res = h % k
        ordinals[res] += 1
        labels[i] = peak_label(res, ordinals[res])
    labels[pts[-1][0]] = rightmost_label()
    for j, i in enumerate(double_descents(path), start=1):
        labels[i] = dd_label(j)
    return labels


def e_vector(tree: PositionalTree | None, arity: int | None = None
             ) -> tuple[int, ...]:
    """Counts (e_1, ..., e_m): how many nodes sit at each child position."""
    if tree is None:
        if arity is None:
            raise ValueError("arity required for the empty tree")
        return (0,) * arity
    m = tree.arity
    if arity is not None and arity != m:
        raise ValueError(f"arity mismatch: tree has {m}, requested {arity}")
    counts = [0] * m
    for node in tree.iter_nodes():
        for pos, _ in node.children:
            counts[pos - 1] += 1
    return tuple(counts)
