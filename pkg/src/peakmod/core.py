"""Data model for generalized lattice paths and positional trees.

A path is a sequence of steps drawn from three kinds:

  * ``u``       an up-step (1, 1),
  * ``d``       a down-step (1, -k) for the family parameter k,
  * ``l<a>_<b>`` a level step (a, 0) of run-length a in color b.

A :class:`FamilySpec` fixes k, the allowed level steps with their color
counts, and the target end height m.  The classical families are special
cases: pure k-Dyck paths (no level steps, m = 0), colored Motzkin and
Schroder paths (level steps of length 1 resp. 2, m = 0), and ballot paths
(m > 0).  Paths may start at a nonzero height; validation always checks
nonnegativity of every prefix height from the actual start.

Trees here are "positional" m-ary trees: every child occupies an explicit
slot in 1..m and slots may be skipped.  The empty tree (zero nodes) is
represented by ``None`` throughout the package.
"""

from __future__ import annotations

import sys
from collections.abc import Mapping
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


@contextmanager
def recursion_headroom(depth: int):
    """Temporarily raise the interpreter recursion limit if needed.

    Tree and bijection recursions nest as deep as the structure itself;
    callers size the headroom from a known count (down-size, node count).
    """
    need = depth * 2 + 200
    old = sys.getrecursionlimit()
    if need > old:
        sys.setrecursionlimit(need)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


# ---------------------------------------------------------------------------
# errors
# ---------------------------------------------------------------------------

class PathError(ValueError):
    """Base class for path construction and parsing failures."""


class NegativeHeightError(PathError):
    """Some prefix of the path dips below height zero."""


class WrongEndHeightError(PathError):
    """The path does not end at start_height + spec.end_height."""


class IllegalStepError(PathError):
    """A step is not in the alphabet permitted by the family spec."""


class EmptyPathError(PathError):
    """The operation requires a nonempty path."""


class WrongKError(PathError):
    """The operation is only defined for a specific k."""


class ParseError(PathError):
    """Malformed path text.  Carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class TreeError(ValueError):
    """Base class for positional-tree failures."""


class DuplicatePositionError(TreeError):
    """Two children of one node claim the same position."""


class PositionOutOfRangeError(TreeError):
    """A child position lies outside 1..arity."""


class ArityMismatchError(TreeError):
    """The tree arity does not match the requested operation."""


class BadPermutationError(ValueError):
    """The given sequence is not a permutation of 1..m."""


# ---------------------------------------------------------------------------
# steps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Step:
    """A single step: kind is 'u', 'd', or 'l' (level).

    For level steps ``length`` is the horizontal run-length a >= 1 and
    ``color`` is the 1-based color index b.  Up and down steps always have
    length 1 and color 0.
    """

    kind: str
    length: int = 1
    color: int = 0

    def token(self) -> str:
        if self.kind == "l":
            return f"l{self.length}_{self.color}"
        return self.kind

    def sort_key(self) -> tuple:
        # canonical order: u < d < level steps by (length, color)
        if self.kind == "u":
            return (0,)
        if self.kind == "d":
            return (1,)
        return (2, self.length, self.color)


UP = Step("u")
DOWN = Step("d")

_LEVEL_CACHE: dict[tuple[int, int], Step] = {}


def level(a: int, b: int) -> Step:
    """The level step of run-length ``a`` in color ``b``."""
    try:
        return _LEVEL_CACHE[a, b]
    except KeyError:
        s = _LEVEL_CACHE[a, b] = Step("l", a, b)
        return s


def step_rise(step: Step, k: int) -> int:
    """Height change contributed by ``step`` in a family with parameter k."""
    if step.kind == "u":
        return 1
    if step.kind == "d":
        return -k
    return 0


# ---------------------------------------------------------------------------
# family specification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """Parameters of a path family.

    ``k`` is the down-step drop, ``levels`` maps run-length a to its color
    count c_a (the empty map forbids level steps entirely and gives pure
    k-Dyck / ballot paths), and ``end_height`` is the target height m >= 0
    relative to the start (0 for Dyck-like families).
    """

    k: int
    levels: Mapping[int, int] | Sequence[tuple[int, int]] = ()
    end_height: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.end_height < 0:
            raise ValueError(f"end_height must be >= 0, got {self.end_height}")
        if isinstance(self.levels, Mapping):
            items = sorted(self.levels.items())
        else:
            items = sorted((int(a), int(c)) for a, c in self.levels)
        for a, c in items:
            if a < 1:
                raise ValueError(f"level run-length must be >= 1, got {a}")
            if c < 1:
                raise ValueError(f"color count must be >= 1, got c_{a} = {c}")
        if len({a for a, _ in items}) != len(items):
            raise ValueError("duplicate level run-length")
        object.__setattr__(self, "levels", tuple(items))

    @property
    def has_levels(self) -> bool:
        return bool(self.levels)

    @property
    def ell(self) -> int:
        """The quotient in end_height = ell*k + residue."""
        return self.end_height // self.k

    @property
    def residue(self) -> int:
        """The remainder in end_height = ell*k + residue."""
        return self.end_height % self.k

    def color_count(self, a: int) -> int:
        for length, c in self.levels:
            if length == a:
                return c
        return 0

    def level_steps(self) -> Iterator[Step]:
        """All allowed level steps in canonical (a, b) order."""
        for a, c in self.levels:
            for b in range(1, c + 1):
                yield level(a, b)

    def check_step(self, step: Step) -> None:
        if step.kind in ("u", "d"):
            return
        c = self.color_count(step.length)
        if c == 0:
            raise IllegalStepError(
                f"level run-length {step.length} not allowed by this family")
        if not 1 <= step.color <= c:
            raise IllegalStepError(
                f"color {step.color} out of range 1..{c} "
                f"for level run-length {step.length}")


# ---------------------------------------------------------------------------
# lattice paths
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticePath:
    """A validated step sequence within a family.

    Construction validates everything: steps must be legal for the spec,
    every prefix height (from ``start_height``) must be nonnegative, and
    the final height must equal start_height + spec.end_height.
    """

    spec: FamilySpec
    steps: tuple[Step, ...] = ()
    start_height: int = 0

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.start_height < 0:
            raise NegativeHeightError(
                f"start height {self.start_height} is negative")
        k = self.spec.k
        h = self.start_height
        for idx, s in enumerate(self.steps):
            self.spec.check_step(s)
            h += step_rise(s, k)
            if h < 0:
                raise NegativeHeightError(
                    f"height {h} after step {idx} is negative")
        want = self.start_height + self.spec.end_height
        if h != want:
            raise WrongEndHeightError(
                f"path ends at height {h}, expected {want}")

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def down_size(self) -> int:
        """Number of down-steps (the size parameter n)."""
        return sum(1 for s in self.steps if s.kind == "d")

    @property
    def up_count(self) -> int:
        return sum(1 for s in self.steps if s.kind == "u")

    @property
    def path_length(self) -> int:
        """Total length |P|: ups and downs count 1, a level step counts a."""
        return sum(s.length for s in self.steps)

    @property
    def end_height(self) -> int:
        return self.start_height + self.spec.end_height

    def is_empty(self) -> bool:
        return not self.steps

    def text(self) -> str:
        return render_path(self)

    def __str__(self) -> str:
        return render_path(self)


def validate(spec: FamilySpec, steps: Iterable[Step],
             start_height: int = 0) -> LatticePath:
    """Validate ``steps`` against ``spec`` and return the path value."""
    return LatticePath(spec, tuple(steps), start_height)


def height_profile(path: LatticePath) -> list[int]:
    """Heights at each lattice vertex, starting with the start height.

    The result has one more entry than the path has steps; a level step
    contributes a single constant-height transition regardless of its
    run-length.
    """
    k = path.spec.k
    h = path.start_height
    out = [h]
    for s in path.steps:
        h += step_rise(s, k)
        out.append(h)
    return out


# ---------------------------------------------------------------------------
# path text format
# ---------------------------------------------------------------------------

def parse_steps(text: str) -> list[Step]:
    """Parse the token grammar  u | d | l<INT>_<INT>  (whitespace ignored)."""
    steps = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "u":
            steps.append(UP)
            i += 1
        elif c == "d":
            steps.append(DOWN)
            i += 1
        elif c == "l":
            i += 1
            a, i = _parse_int(text, i, "level run-length")
            if i >= n or text[i] != "_":
                raise ParseError("expected '_' after level run-length", i)
            b, i = _parse_int(text, i + 1, "level color")
            steps.append(level(a, b))
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    return steps


def _parse_int(text: str, i: int, what: str) -> tuple[int, int]:
    j = i
    while j < len(text) and text[j].isdigit():
        j += 1
    if j == i:
        raise ParseError(f"expected digits for {what}", i)
    return int(text[i:j]), j


def parse_path(text: str, spec: FamilySpec,
               start_height: int = 0) -> LatticePath:
    """Parse and validate a path from its text form."""
    return validate(spec, parse_steps(text), start_height)


def render_path(path: LatticePath) -> str:
    """Canonical text form: tokens concatenated without whitespace."""
    return "".join(s.token() for s in path.steps)


# ---------------------------------------------------------------------------
# node labels
# ---------------------------------------------------------------------------

LABEL_RIGHTMOST = "r"
LABEL_PEAK = "peak"
LABEL_DD = "dd"


@dataclass(frozen=True)
class NodeLabel:
    """Label of a path feature: the rightmost peak, the j-th non-rightmost
    peak in residue class i, or the j-th double descent."""

    kind: str
    residue: int | None = None
    ordinal: int | None = None

    def __post_init__(self):
        if self.kind not in (LABEL_RIGHTMOST, LABEL_PEAK, LABEL_DD):
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.kind == LABEL_PEAK and (self.residue is None
                                        or self.ordinal is None):
            raise ValueError("peak labels need residue and ordinal")
        if self.kind == LABEL_DD and self.ordinal is None:
            raise ValueError("double-descent labels need an ordinal")

    def json_str(self) -> str:
        """Wire form: "r", "p<i>_<j>", or "dd_<j>"."""
        if self.kind == LABEL_RIGHTMOST:
            return "r"
        if self.kind == LABEL_PEAK:
            return f"p{self.residue}_{self.ordinal}"
        return f"dd_{self.ordinal}"

    def display(self) -> str:
        """Figure form: "r", "<i>_<j>", or "d_<j>"."""
        if self.kind == LABEL_RIGHTMOST:
            return "r"
        if self.kind == LABEL_PEAK:
            return f"{self.residue}_{self.ordinal}"
        return f"d_{self.ordinal}"

    @classmethod
    def parse(cls, text: str) -> "NodeLabel":
        if text == "r":
            return cls(LABEL_RIGHTMOST)
        if text.startswith("dd_"):
            return cls(LABEL_DD, ordinal=int(text[3:]))
        if text.startswith("p"):
            body = text[1:]
            i, _, j = body.partition("_")
            if i.isdigit() and j.isdigit():
                return cls(LABEL_PEAK, residue=int(i), ordinal=int(j))
        raise TreeError(f"unrecognized node label {text!r}")


def rightmost_label() -> NodeLabel:
    return NodeLabel(LABEL_RIGHTMOST)


def peak_label(residue: int, ordinal: int) -> NodeLabel:
    return NodeLabel(LABEL_PEAK, residue=residue, ordinal=ordinal)


def dd_label(ordinal: int) -> NodeLabel:
    return NodeLabel(LABEL_DD, ordinal=ordinal)


# ---------------------------------------------------------------------------
# positional trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PositionalTree:
    """A nonempty rooted tree whose children occupy explicit slots 1..arity.

    ``children`` holds (position, subtree) pairs, kept sorted by position.
    The empty tree is represented by ``None`` wherever a tree is optional.
    """

    arity: int
    children: tuple[tuple[int, "PositionalTree"], ...] = ()
    label: NodeLabel | None = None

    def __post_init__(self):
        if self.arity < 1:
            raise TreeError(f"arity must be >= 1, got {self.arity}")
        kids = tuple(sorted(self.children, key=lambda pc: pc[0]))
        seen = set()
        for pos, child in kids:
            if not 1 <= pos <= self.arity:
                raise PositionOutOfRangeError(
                    f"child position {pos} outside 1..{self.arity}")
            if pos in seen:
                raise DuplicatePositionError(f"duplicate child position {pos}")
            seen.add(pos)
            if child.arity != self.arity:
                raise ArityMismatchError(
                    f"child arity {child.arity} != parent arity {self.arity}")
        object.__setattr__(self, "children", kids)

    def child(self, pos: int) -> "PositionalTree | None":
        for p, c in self.children:
            if p == pos:
                return c
        return None

    def node_count(self) -> int:
        return sum(1 for _ in self.iter_nodes())

    def iter_nodes(self) -> Iterator["PositionalTree"]:
        """Preorder traversal, children in position order.

        Iterative, so arbitrarily deep trees are fine.
        """
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(c for _, c in reversed(node.children))

    def strip_labels(self) -> "PositionalTree":
        with recursion_headroom(self.node_count()):
            return self._strip_labels()

    def _strip_labels(self) -> "PositionalTree":
        return PositionalTree(
            self.arity,
            tuple((p, c._strip_labels()) for p, c in self.children))


def tree_node_count(tree: PositionalTree | None) -> int:
    return 0 if tree is None else tree.node_count()


def tree_to_json(tree: PositionalTree | None):
    """Nested-object form: position strings map to child objects, with an
    optional "label" entry.  The empty tree serializes to ``None``."""
    if tree is None:
        return None
    obj: dict = {}
    if tree.label is not None:
        obj["label"] = tree.label.json_str()
    for pos, child in tree.children:
        obj[str(pos)] = tree_to_json(child)
    return obj


def tree_from_json(obj, arity: int) -> PositionalTree | None:
    """Inverse of :func:`tree_to_json`."""
    if obj is None:
        return None
    if not isinstance(obj, dict):
        raise TreeError(f"expected an object, got {type(obj).__name__}")
    label = None
    children = []
    for key, value in obj.items():
        if key == "label":
            label = NodeLabel.parse(value)
            continue
        if not key.isdigit():
            raise TreeError(f"bad child position key {key!r}")
        pos = int(key)
        if not 1 <= pos <= arity:
            raise PositionOutOfRangeError(
                f"child position {pos} outside 1..{arity}")
        children.append((pos, tree_from_json(value, arity)))
    return PositionalTree(arity, tuple(children), label)


def tree_from_json_text(text: str, arity: int) -> PositionalTree | None:
    """Parse the JSON text form, rejecting duplicate position keys."""
    import json

    def no_dup_pairs(pairs):
        keys = [k for k, _ in pairs]
        if len(set(keys)) != len(keys):
            raise DuplicatePositionError(
                f"duplicate key among {sorted(keys)}")
        return dict(pairs)

    try:
        obj = json.loads(text, object_pairs_hook=no_dup_pairs)
    except DuplicatePositionError:
        raise
    except ValueError as exc:
        raise TreeError(f"bad tree JSON: {exc}") from exc
    return tree_from_json(obj, arity)
