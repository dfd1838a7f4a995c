"""Liftings, canonical decompositions, the cyclic shift, and related maps.

Every nonempty pure k-Dyck path Q whose maximal trailing down-run has
length n splits uniquely as

    Q = Q_0 u Q_1 u ... Q_{kn-1} u d^n,

where block Q_j is itself a k-Dyck path sitting at height j.  The cyclic
shift rotates the blocks inside each window of k consecutive slots; its
k-th power is the identity.  The other decomposition peels the final
down-step instead:

    P = P_0 u P_1 u ... u P_k d L,

with L a (possibly empty) run of trailing level steps, or P = L alone when
the path consists of level steps only.  Ballot paths ending at height m
split at the m last up-steps leaving heights 0..m-1 for good.

The splitting helpers work on plain step items as well as on tagged
(step, provenance) pairs; the labeled path-to-tree map relies on that to
carry original feature identities through block moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

from .core import (
    DOWN,
    UP,
    BadPermutationError,
    EmptyPathError,
    FamilySpec,
    LatticePath,
    PositionalTree,
    Step,
    WrongEndHeightError,
    WrongKError,
    recursion_headroom,
    step_rise,
)

T = TypeVar("T")


def _ident(x: Step) -> Step:
    return x


# ---------------------------------------------------------------------------
# index-level splitting helpers (shared with the bijection module)
# ---------------------------------------------------------------------------

def _profile(items: Sequence[T], k: int, start: int,
             step_of: Callable[[T], Step]) -> list[int]:
    h = start
    out = [h]
    for it in items:
        h += step_rise(step_of(it), k)
        out.append(h)
    return out


def _trailing_downs(items: Sequence[T], step_of: Callable[[T], Step]) -> int:
    n = 0
    for it in reversed(items):
        if step_of(it).kind != "d":
            break
        n += 1
    return n


def _last_up_positions(items: Sequence[T], k: int, start: int, count: int,
                       step_of: Callable[[T], Step]) -> list[int]:
    """Index of the last up-step leaving height start+j, for j in 0..count-1."""
    heights = _profile(items, k, start, step_of)
    last: dict[int, int] = {}
    for idx, it in enumerate(items):
        if step_of(it).kind == "u":
            last[heights[idx]] = idx
    try:
        return [last[start + j] for j in range(count)]
    except KeyError as exc:
        raise ValueError(f"no up-step leaves height {exc.args[0]}") from exc


def _right_peak_split(items: Sequence[T], k: int,
                      step_of: Callable[[T], Step] = _ident
                      ) -> tuple[int, list[T], list[list[T]], list[T]]:
    """Split into (n, separator ups, blocks, trailing down-run)."""
    n = _trailing_downs(items, step_of)
    if n == 0:
        raise EmptyPathError("path has no trailing down-run")
    body = list(items[: len(items) - n])
    seps = _last_up_positions(body, k, 0, k * n, step_of)
    blocks = []
    prev = -1
    for p in seps:
        blocks.append(body[prev + 1: p])
        prev = p
    if prev != len(body) - 1:
        raise ValueError("malformed path: steps remain after the last block")
    return n, [body[p] for p in seps], blocks, list(items[len(items) - n:])


def _kappa_items(items: Sequence[T], k: int, power: int,
                 step_of: Callable[[T], Step] = _ident) -> list[T]:
    """Apply the cyclic shift ``power`` times by the direct slot formula."""
    if not items:
        return []
    i = power % k
    if i == 0:
        return list(items)
    n, seps, blocks, suffix = _right_peak_split(items, k, step_of)
    out: list[T] = []
    for j in range(k * n):
        src = j + k - i if (j % k) < i else j - i
        out.extend(blocks[src])
        out.append(seps[j])
    out.extend(suffix)
    return out


def _last_step_split(items: Sequence[T], k: int,
                     step_of: Callable[[T], Step] = _ident
                     ) -> tuple[list[list[T]] | None, T | None, list[T]]:
    """Split as (parts P_0..P_k, final down item, trailing level run).

    Returns (None, None, L) in the degenerate all-level (or empty) case.
    """
    t = len(items)
    while t > 0 and step_of(items[t - 1]).kind == "l":
        t -= 1
    suffix = list(items[t:])
    if t == 0:
        return None, None, suffix
    d_item = items[t - 1]
    if step_of(d_item).kind != "d":
        raise ValueError("malformed path: expected a down-step before the "
                         "level suffix")
    body = list(items[: t - 1])
    seps = _last_up_positions(body, k, 0, k, step_of)
    parts = []
    prev = -1
    for p in seps:
        parts.append(body[prev + 1: p])
        prev = p
    parts.append(body[prev + 1:])
    return parts, d_item, suffix


def _ballot_split(items: Sequence[T], k: int, m: int, start: int,
                  step_of: Callable[[T], Step] = _ident) -> list[list[T]]:
    """Split a path ending m above its start at the m last-passage ups."""
    if m == 0:
        return [list(items)]
    seps = _last_up_positions(items, k, start, m, step_of)
    parts = []
    prev = -1
    for p in seps:
        parts.append(list(items[prev + 1: p]))
        prev = p
    parts.append(list(items[prev + 1:]))
    return parts


def _require_pure(path: LatticePath, op: str) -> None:
    if any(s.kind == "l" for s in path.steps):
        raise ValueError(f"{op} requires a pure k-Dyck path without level "
                         "steps")
    if path.spec.end_height != 0:
        raise WrongEndHeightError(
            f"{op} requires a path returning to its start height")


def _pure_spec(k: int) -> FamilySpec:
    return FamilySpec(k)


# ---------------------------------------------------------------------------
# lifting
# ---------------------------------------------------------------------------

def lift(path: LatticePath, amount: int) -> LatticePath:
    """The same step sequence started ``amount`` units higher."""
    if amount < 0:
        raise ValueError("lift amount must be >= 0")
    return LatticePath(path.spec, path.steps, path.start_height + amount)


# ---------------------------------------------------------------------------
# decompositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RightPeakDecomposition:
    """Blocks Q_0..Q_{kn-1} plus the trailing down-run length n."""

    k: int
    blocks: tuple[LatticePath, ...]
    suffix_downs: int

    def reassemble(self) -> LatticePath:
        steps: list[Step] = []
        for block in self.blocks:
            steps.extend(block.steps)
            steps.append(UP)
        steps.extend([DOWN] * self.suffix_downs)
        return LatticePath(_pure_spec(self.k), tuple(steps))


def right_peak_decompose(path: LatticePath) -> RightPeakDecomposition:
    """Split a nonempty pure k-Dyck path around its trailing down-run."""
    if path.is_empty():
        raise EmptyPathError("cannot decompose the empty path")
    _require_pure(path, "right_peak_decompose")
    k = path.spec.k
    n, _seps, blocks, _suffix = _right_peak_split(list(path.steps), k)
    spec = _pure_spec(k)
    return RightPeakDecomposition(
        k, tuple(LatticePath(spec, tuple(b)) for b in blocks), n)


@dataclass(frozen=True)
class LastStepDecomposition:
    """Parts P_0..P_k around the final down-step, plus the level suffix.

    ``parts`` is None exactly when the path consists of level steps only
    (then the whole path is the suffix).
    """

    spec: FamilySpec
    parts: tuple[LatticePath, ...] | None
    level_suffix: tuple[Step, ...]

    @property
    def is_level_only(self) -> bool:
        return self.parts is None

    def reassemble(self) -> LatticePath:
        steps: list[Step] = []
        if self.parts is not None:
            k = self.spec.k
            for i, part in enumerate(self.parts):
                steps.extend(part.steps)
                if i < k:
                    steps.append(UP)
            steps.append(DOWN)
        steps.extend(self.level_suffix)
        return LatticePath(self.spec, tuple(steps))


def last_step_decompose(path: LatticePath) -> LastStepDecomposition:
    """Split around the last down-step: P = P_0 u P_1 u ... u P_k d L."""
    if path.spec.end_height != 0:
        raise WrongEndHeightError(
            "last-step decomposition needs a height-0 family")
    k = path.spec.k
    parts, _d, suffix = _last_step_split(list(path.steps), k)
    spec = FamilySpec(k, dict(path.spec.levels))
    if parts is None:
        return LastStepDecomposition(spec, None, tuple(suffix))
    return LastStepDecomposition(
        spec,
        tuple(LatticePath(spec, tuple(p)) for p in parts),
        tuple(suffix))


@dataclass(frozen=True)
class BallotDecomposition:
    """Parts P_0..P_m of a ballot path, P_i sitting at height i."""

    spec: FamilySpec
    end_height: int
    parts: tuple[LatticePath, ...]

    def reassemble(self) -> LatticePath:
        steps: list[Step] = []
        for i, part in enumerate(self.parts):
            steps.extend(part.steps)
            if i < self.end_height:
                steps.append(UP)
        return LatticePath(self.spec, tuple(steps))


def ballot_decompose(path: LatticePath,
                     m: int | None = None) -> BallotDecomposition:
    """Split a ballot path at the m last up-steps through heights 0..m-1."""
    if m is None:
        m = path.spec.end_height
    elif m != path.spec.end_height:
        raise WrongEndHeightError(
            f"path ends {path.spec.end_height} above its start, not {m}")
    k = path.spec.k
    part_items = _ballot_split(list(path.steps), k, m, path.start_height)
    part_spec = FamilySpec(k, dict(path.spec.levels))
    return BallotDecomposition(
        path.spec, m,
        tuple(LatticePath(part_spec, tuple(p)) for p in part_items))


# ---------------------------------------------------------------------------
# cyclic shift
# ---------------------------------------------------------------------------

def cyclic_shift(path: LatticePath, power: int = 1) -> LatticePath:
    """Rotate the right-peak blocks within each window of k slots.

    Slot j of the result holds block j+k-i when j mod k < i and block j-i
    otherwise (i = power mod k), so the power-k shift is the identity.  The
    empty path is fixed.  Acts on the underlying step sequence; a nonzero
    start height is carried through unchanged.
    """
    if power < 0:
        raise ValueError("power must be >= 0")
    _require_pure(path, "cyclic_shift")
    k = path.spec.k
    new_steps = _kappa_items(list(path.steps), k, power)
    return LatticePath(path.spec, tuple(new_steps), path.start_height)


# ---------------------------------------------------------------------------
# the peak/double-descent exchange on ordinary Dyck paths
# ---------------------------------------------------------------------------

def deutsch_involution(path: LatticePath) -> LatticePath:
    """Deutsch's involution on Dyck paths (k = 1 only).

    Recursively maps P_0 u P_1 d to eta(P_1) u eta(P_0) d, exchanging the
    peak and double-descent counts.
    """
    if path.spec.k != 1:
        raise WrongKError("the involution is defined for k = 1")
    _require_pure(path, "deutsch_involution")

    def build(items: list[Step]) -> list[Step]:
        if not items:
            return []
        parts, _d, suffix = _last_step_split(items, 1)
        if suffix:
            raise ValueError("unexpected level steps")
        p0, p1 = parts
        return build(p1) + [UP] + build(p0) + [DOWN]

    with recursion_headroom(path.down_size):
        steps = build(list(path.steps))
    return LatticePath(path.spec, tuple(steps), path.start_height)


# ---------------------------------------------------------------------------
# subtree permutation
# ---------------------------------------------------------------------------

def check_permutation(sigma: Sequence[int], m: int) -> tuple[int, ...]:
    """Validate sigma as images of 1..m and return it as a tuple."""
    sig = tuple(int(x) for x in sigma)
    if len(sig) != m or sorted(sig) != list(range(1, m + 1)):
        raise BadPermutationError(
            f"{list(sigma)} is not a permutation of 1..{m}")
    return sig


def permute_subtrees(tree: PositionalTree | None,
                     sigma: Sequence[int]) -> PositionalTree | None:
    """Move every child from position i to position sigma(i), recursively."""
    if tree is None:
        return None
    sig = check_permutation(sigma, tree.arity)

    def rec(node: PositionalTree) -> PositionalTree:
        return PositionalTree(
            node.arity,
            tuple((sig[pos - 1], rec(child))
                  for pos, child in node.children),
            node.label)

    with recursion_headroom(tree.node_count()):
        return rec(tree)
