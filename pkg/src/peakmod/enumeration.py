"""Exhaustive generation of path families and positional trees.

These generators are the brute-force oracle behind every identity in the
package: depth-first backtracking over step choices with height pruning,
yielding each object exactly once in a deterministic order (up-steps
before down-steps before level steps sorted by run-length and color).

A hard cap guards against runaway requests; generators raise
:class:`ResourceLimitError` instead of exhausting memory.  The default cap
is 10**7 objects and can be overridden per call or through the
PEAKMOD_MAX_OBJECTS environment variable.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import DOWN, UP, FamilySpec, LatticePath, PositionalTree, Step
from .statistics import PLAIN, VARIANTS, stat_vector

DEFAULT_MAX_OBJECTS = 10 ** 7
ENV_MAX_OBJECTS = "PEAKMOD_MAX_OBJECTS"


class ResourceLimitError(RuntimeError):
    """The configured object cap was exceeded."""


def resolve_cap(max_objects: int | None) -> int:
    if max_objects is not None:
        return max_objects
    env = os.environ.get(ENV_MAX_OBJECTS)
    if env is not None:
        return int(env)
    return DEFAULT_MAX_OBJECTS


class _Budget:
    __slots__ = ("cap", "used")

    def __init__(self, cap: int):
        self.cap = cap
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.cap:
            raise ResourceLimitError(
                f"object cap {self.cap} exceeded (set {ENV_MAX_OBJECTS} or "
                "pass max_objects to raise it)")


def gen_k_dyck(k: int, n: int,
               max_objects: int | None = None) -> Iterator[LatticePath]:
    """All pure k-Dyck paths of down-size n, in lexicographic order (u < d)."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    yield from _gen_updown(FamilySpec(k), k * n, n, _Budget(resolve_cap(max_objects)))


def gen_ballot(k: int, m: int, n: int,
               max_objects: int | None = None) -> Iterator[LatticePath]:
    """All (k, m)-ballot paths of down-size n (k*n + m ups, ending at m).

    Level-bearing ballot families are enumerated by total length instead;
    see :func:`gen_kac` with a spec whose end_height is m.
    """
    if k < 1 or m < 0 or n < 0:
        raise ValueError("need k >= 1, m >= 0, n >= 0")
    spec = FamilySpec(k, end_height=m)
    yield from _gen_updown(spec, k * n + m, n, _Budget(resolve_cap(max_objects)))


def _gen_updown(spec: FamilySpec, ups: int, downs: int,
                budget: _Budget) -> Iterator[LatticePath]:
    k = spec.k
    prefix: list[Step] = []

    def rec(u_left: int, d_left: int, h: int) -> Iterator[LatticePath]:
        if u_left == 0 and d_left == 0:
            budget.tick()
            yield LatticePath(spec, tuple(prefix))
            return
        if u_left:
            prefix.append(UP)
            yield from rec(u_left - 1, d_left, h + 1)
            prefix.pop()
        if d_left and h >= k:
            prefix.append(DOWN)
            yield from rec(u_left, d_left - 1, h - k)
            prefix.pop()

    yield from rec(ups, downs, 0)


def gen_kac(spec: FamilySpec, length: int,
            max_objects: int | None = None) -> Iterator[LatticePath]:
    """All paths of the given family with total length |P| = length.

    Up and down steps have length 1 and a level step of run-length a has
    length a.  Works for end_height 0 and for ballot-style end heights.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    budget = _Budget(resolve_cap(max_objects))
    k = spec.k
    m = spec.end_height
    levels = list(spec.level_steps())
    prefix: list[Step] = []

    def rec(rem: int, h: int) -> Iterator[LatticePath]:
        if rem == 0:
            if h == m:
                budget.tick()
                yield LatticePath(spec, tuple(prefix))
            return
        # reachability: heights move by +1 (u), -k (d), or 0 per unit length
        if h + rem < m or h - k * rem > m:
            return
        prefix.append(UP)
        yield from rec(rem - 1, h + 1)
        prefix.pop()
        if h >= k:
            prefix.append(DOWN)
            yield from rec(rem - 1, h - k)
            prefix.pop()
        for step in levels:
            if step.length <= rem:
                prefix.append(step)
                yield from rec(rem - step.length, h)
                prefix.pop()

    yield from rec(length, 0)


def gen_trees(arity: int, n: int,
              max_objects: int | None = None
              ) -> Iterator[PositionalTree | None]:
    """All positional trees of the given arity on n nodes.

    Yields None for n = 0 (the empty tree).  The count matches the number
    of (arity-1)-Dyck paths of down-size n.
    """
    if arity < 1 or n < 0:
        raise ValueError("need arity >= 1 and n >= 0")
    budget = _Budget(resolve_cap(max_objects))

    def rec(nodes: int) -> Iterator[PositionalTree | None]:
        if nodes == 0:
            yield None
            return
        for sizes in _compositions(nodes - 1, arity):
            options = [list(rec(s)) for s in sizes]
            yield from _assemble(options, 0, [])

    def _assemble(options, idx, chosen):
        if idx == len(options):
            children = tuple((i + 1, t) for i, t in enumerate(chosen)
                             if t is not None)
            yield PositionalTree(arity, children)
            return
        for t in options[idx]:
            chosen.append(t)
            yield from _assemble(options, idx + 1, chosen)
            chosen.pop()

    for tree in rec(n):
        budget.tick()
        yield tree


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# histograms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Histogram:
    """Exact multiset of statistic tuples with arbitrary-precision counts."""

    variant: str
    k: int | None
    counts: dict[tuple[int, ...], int]
    total: int

    def entries(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.counts.items())

    def permuted(self, sigma: Iterable[int]) -> "Histogram":
        """Move the value in coordinate i to coordinate sigma(i) (1-based)."""
        sig = [int(x) for x in sigma]
        new: dict[tuple[int, ...], int] = {}
        for key, c in self.counts.items():
            out = [0] * len(key)
            for i, v in enumerate(key):
                out[sig[i] - 1] = v
            new[tuple(out)] = new.get(tuple(out), 0) + c
        return Histogram(self.variant, self.k, new, self.total)

    def marginal(self, coord: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for key, c in self.counts.items():
            out[key[coord]] = out.get(key[coord], 0) + c
        return out

    def to_json(self) -> dict:
        return {"total": self.total,
                "entries": [{"stats": list(k), "count": c}
                            for k, c in self.entries()]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Histogram):
            return NotImplemented
        return self.counts == other.counts and self.total == other.total


def histogram(paths: Iterable[LatticePath], variant: str = PLAIN) -> Histogram:
    """Tally the statistic vectors of a homogeneous path stream."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    counts: Counter = Counter()
    k = None
    total = 0
    for p in paths:
        k = p.spec.k
        counts[stat_vector(p, variant).key()] += 1
        total += 1
    return Histogram(variant, k, dict(counts), total)


def histogram_from_keys(keys: Iterable[tuple[int, ...]],
                        variant: str = PLAIN,
                        k: int | None = None) -> Histogram:
    """Build a histogram directly from statistic tuples (tree e-vectors,
    precomputed keys, and the like)."""
    counts: Counter = Counter()
    total = 0
    for key in keys:
        counts[tuple(key)] += 1
        total += 1
    return Histogram(variant, k, dict(counts), total)
