"""Machine-checkable property suites behind the ``verify`` CLI command.

Each suite replays one group of the package's identities at configurable
desk-scale bounds and reports every failed comparison with its inputs.
The suites add no logic of their own: they drive the enumeration oracle
against the transforms, bijections, closed forms, and series solvers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable

from .bijections import (
    path_to_labeled_tree,
    path_to_tree,
    permute_statistics,
    tree_to_path,
)
from .core import (
    LABEL_DD,
    LABEL_PEAK,
    LABEL_RIGHTMOST,
    FamilySpec,
    LatticePath,
    parse_path,
    tree_to_json,
)
from .counting import (
    count_ballot_joint,
    count_joint,
    count_marginal,
    count_pk,
    fuss_catalan,
    lagrange_coefficient,
    narayana,
    solve_f,
    solve_f_kac,
    solve_g,
    solve_g_kac,
)
from .enumeration import (
    gen_ballot,
    gen_k_dyck,
    gen_kac,
    gen_trees,
    histogram,
)
from .statistics import (
    PLAIN,
    PLAIN_STARRED,
    WEAK,
    WEAK_STARRED,
    e_vector,
    stat_vector,
)
from .transforms import ballot_decompose, cyclic_shift, deutsch_involution

MOTZKIN = FamilySpec(1, {1: 1})
SCHROEDER = FamilySpec(1, {2: 1})


@dataclass
class VerifyReport:
    suite: str
    params: dict
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, ok: bool, inputs=None,
               expected=None, got=None) -> None:
        self.checks += 1
        if not ok:
            self.failures.append({
                "check": name,
                "inputs": inputs,
                "expected": repr(expected),
                "got": repr(got),
            })

    def expect(self, name: str, expected, got, inputs=None) -> None:
        self.record(name, expected == got, inputs, expected, got)

    def to_json(self) -> dict:
        return {"suite": self.suite, "params": self.params,
                "checks": self.checks, "failures": self.failures,
                "ok": self.ok}

    def summary_lines(self) -> list[str]:
        lines = [f"suite {self.suite}: {self.checks} checks, "
                 f"{len(self.failures)} failures"]
        for f in self.failures:
            lines.append(f"  FAIL {f['check']} inputs={f['inputs']} "
                         f"expected={f['expected']} got={f['got']}")
        return lines


# ---------------------------------------------------------------------------
# figures
# ---------------------------------------------------------------------------

FIG2_TALLY = {(0, 0, 2): 1, (0, 1, 1): 3, (1, 0, 1): 3,
              (1, 1, 0): 3, (0, 2, 0): 1, (2, 0, 0): 1}
FIG3_TALLY = {(0, 0): 2, (0, 1): 5, (1, 0): 5,
              (1, 1): 7, (2, 0): 1, (0, 2): 1}

EXAMPLE_BLOCK = "uuduuuuududd"
EXAMPLE_BLOCK_SHIFTED = "uuuduuuduudd"
EXAMPLE_PATH = EXAMPLE_BLOCK + "u" + EXAMPLE_BLOCK + "u" + "uud" + "d"

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


def verify_figures() -> VerifyReport:
    rep = VerifyReport("figures", {})
    h2 = histogram(gen_k_dyck(2, 3), PLAIN)
    rep.expect("2-dyck down-size-3 tally", FIG2_TALLY, h2.counts)
    rep.expect("2-dyck down-size-3 total", 12, h2.total)
    h3 = histogram(gen_kac(MOTZKIN, 5), WEAK)
    rep.expect("motzkin length-5 tally", FIG3_TALLY, h3.counts)
    rep.expect("motzkin length-5 total", 21, h3.total)

    spec = FamilySpec(2)
    block = parse_path(EXAMPLE_BLOCK, spec)
    rep.expect("cyclic shift of the example block",
               EXAMPLE_BLOCK_SHIFTED, cyclic_shift(block).text(),
               inputs=EXAMPLE_BLOCK)
    big = parse_path(EXAMPLE_PATH, spec)
    tree = path_to_tree(big)
    rep.expect("example tree size", 10, tree.node_count())
    rep.expect("example tree position counts", (3, 3, 3), e_vector(tree))
    rep.expect("example labeled tree", FIG1_TREE_JSON,
               tree_to_json(path_to_labeled_tree(big)))
    rep.expect("example tree inverts", big, tree_to_path(tree, 2))
    return rep


# ---------------------------------------------------------------------------
# joint equidistribution
# ---------------------------------------------------------------------------

def verify_equidistribution(k: int = 2, max_n: int = 5,
                            weak_max_len: int = 8) -> VerifyReport:
    rep = VerifyReport("equidistribution",
                       {"k": k, "max_n": max_n,
                        "weak_max_len": weak_max_len})
    for n in range(max_n + 1):
        paths = list(gen_k_dyck(k, n))
        hist = histogram(paths, PLAIN)
        for sigma in permutations(range(1, k + 2)):
            rep.record(f"histogram invariance n={n} sigma={sigma}",
                       hist.permuted(sigma) == hist,
                       inputs={"k": k, "n": n, "sigma": sigma})
            bad = None
            images = set()
            for p in paths:
                q = permute_statistics(p, sigma)
                images.add(q)
                old, new = stat_vector(p).key(), stat_vector(q).key()
                if any(new[sigma[i] - 1] != old[i] for i in range(k + 1)):
                    bad = (p.text(), old, new)
                    break
            rep.record(f"statistic rearrangement n={n} sigma={sigma}",
                       bad is None and len(images) == len(paths),
                       inputs={"k": k, "n": n, "sigma": sigma,
                               "witness": bad})
    for spec, name in ((MOTZKIN, "motzkin"), (SCHROEDER, "schroeder")):
        for length in range(weak_max_len + 1):
            hist = histogram(gen_kac(spec, length), WEAK)
            for sigma in permutations(range(1, spec.k + 2)):
                rep.record(
                    f"weak invariance {name} len={length} sigma={sigma}",
                    hist.permuted(sigma) == hist,
                    inputs={"family": name, "length": length,
                            "sigma": sigma})
    return rep


# ---------------------------------------------------------------------------
# path/tree bijection
# ---------------------------------------------------------------------------

def verify_bijection(max_k: int = 3, max_n: int = 5,
                     max_nodes: int = 5) -> VerifyReport:
    rep = VerifyReport("bijection", {"max_k": max_k, "max_n": max_n,
                                     "max_nodes": max_nodes})
    for k in range(1, max_k + 1):
        for n in range(max_n + 1):
            bad_round = bad_stats = None
            count = 0
            for p in gen_k_dyck(k, n):
                count += 1
                tree = path_to_tree(p)
                if tree_to_path(tree, k) != p:
                    bad_round = p.text()
                    break
                if stat_vector(p).key() != e_vector(tree, k + 1):
                    bad_stats = p.text()
                    break
                if n and not _labels_agree(p, k):
                    bad_stats = p.text() + " (labels)"
                    break
            rep.record(f"path round trip k={k} n={n}", bad_round is None,
                       inputs={"k": k, "n": n, "witness": bad_round})
            rep.record(f"statistic transport k={k} n={n}", bad_stats is None,
                       inputs={"k": k, "n": n, "witness": bad_stats})
            trees = sum(1 for _ in gen_trees(k + 1, n))
            rep.expect(f"family sizes match k={k} n={n}", count, trees,
                       inputs={"k": k, "n": n})
    for arity in range(2, max_k + 2):
        k = arity - 1
        for n in range(max_nodes + 1):
            bad = None
            for t in gen_trees(arity, n):
                if path_to_tree(tree_to_path(t, k)) != t:
                    bad = tree_to_json(t)
                    break
            rep.record(f"tree round trip arity={arity} n={n}", bad is None,
                       inputs={"arity": arity, "n": n, "witness": bad})
    return rep


def _labels_agree(path: LatticePath, k: int) -> bool:
    """Every node at position i+1 carries a residue-i peak label (i < k)
    or a double-descent label (i = k); the root is the unique r."""
    tree = path_to_labeled_tree(path)
    if tree.strip_labels() != path_to_tree(path):
        return False
    if tree.label.kind != LABEL_RIGHTMOST:
        return False
    stack = [tree]
    while stack:
        node = stack.pop()
        for pos, child in node.children:
            lab = child.label
            if pos <= k:
                if lab.kind != LABEL_PEAK or lab.residue != pos - 1:
                    return False
            elif lab.kind != LABEL_DD:
                return False
            stack.append(child)
    return True


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _feature_vectors(n: int, slots: int) -> Iterable[tuple[int, ...]]:
    """All nonnegative integer vectors of the given length summing to n."""
    if slots == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _feature_vectors(n - first, slots - 1):
            yield (first,) + rest


def verify_closed_forms(max_k: int = 3, max_n: int = 5) -> VerifyReport:
    rep = VerifyReport("closed-forms", {"max_k": max_k, "max_n": max_n})
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            hist = histogram(gen_k_dyck(k, n), PLAIN)
            rep.expect(f"family size k={k} n={n}",
                       fuss_catalan(k, n), hist.total)
            for r in _feature_vectors(n - 1, k + 1):
                want = hist.counts.get(r, 0)
                rep.expect(f"joint count k={k} n={n} r={r}", want,
                           count_joint(k, n, r), inputs={"r": r})
                rep.expect(f"reversion route k={k} n={n} r={r}", want,
                           lagrange_coefficient(k, n, r), inputs={"r": r})
            dd_marginal = hist.marginal(k)
            pk0_marginal = hist.marginal(0)
            for r in range(n):
                rep.expect(f"marginal k={k} n={n} r={r}",
                           pk0_marginal.get(r, 0), count_marginal(k, n, r))
                rep.expect(f"marginal reversal k={k} n={n} r={r}",
                           count_marginal(k, n, r),
                           count_pk(k, n, n - 1 - r))
                total_peaks = dd_marginal.get(n - 1 - r, 0)
                rep.expect(f"peak-total count k={k} n={n} r={r}",
                           total_peaks, count_pk(k, n, r))
    for n in range(1, max_n + 1):
        peak_hist: dict[int, int] = {}
        for p in gen_k_dyck(1, n):
            t = stat_vector(p).total_peaks() + 1
            peak_hist[t] = peak_hist.get(t, 0) + 1
        for r in range(1, n + 1):
            rep.expect(f"narayana n={n} r={r}", peak_hist.get(r, 0),
                       narayana(n, r))
    return rep


# ---------------------------------------------------------------------------
# series engine
# ---------------------------------------------------------------------------

def _all_marker_permutations(nm: int):
    return permutations(range(nm))


def verify_series(max_k: int = 2, max_n: int = 5, weak_max_len: int = 8,
                  ballot_max_m: int = 3, ballot_max_n: int = 4
                  ) -> VerifyReport:
    rep = VerifyReport("series", {
        "max_k": max_k, "max_n": max_n, "weak_max_len": weak_max_len,
        "ballot_max_m": ballot_max_m, "ballot_max_n": ballot_max_n})
    for k in range(1, max_k + 1):
        f = solve_f(k, max_n)
        rep.expect(f"empty-path coefficient k={k}", {}, f.coefficient(0))
        for n in range(max_n + 1):
            hist = histogram(gen_k_dyck(k, n), PLAIN)
            want = {key: c for key, c in hist.counts.items()} if n else {}
            rep.expect(f"series vs enumeration k={k} n={n}", want,
                       f.coefficient(n))
        for sigma in _all_marker_permutations(k + 1):
            rep.record(f"series marker symmetry k={k} sigma={sigma}",
                       f.permute_markers(sigma) == f,
                       inputs={"k": k, "sigma": sigma})
    for spec, name in ((MOTZKIN, "motzkin"), (SCHROEDER, "schroeder")):
        f = solve_f_kac(spec, weak_max_len)
        for length in range(weak_max_len + 1):
            hist = histogram(gen_kac(spec, length), WEAK)
            want = hist.counts if length else {}
            rep.expect(f"weak series vs enumeration {name} len={length}",
                       want, f.coefficient(length))
        for sigma in _all_marker_permutations(spec.k + 1):
            rep.record(f"weak series symmetry {name} sigma={sigma}",
                       f.permute_markers(sigma) == f,
                       inputs={"family": name, "sigma": sigma})
    for k in range(1, max_k + 1):
        for m in range(ballot_max_m + 1):
            g = solve_g(k, m, ballot_max_n)
            for n in range(ballot_max_n + 1):
                hist = histogram(gen_ballot(k, m, n), PLAIN_STARRED)
                rep.expect(f"ballot series k={k} m={m} n={n}",
                           hist.counts, g.coefficient(n))
            _check_grouped_symmetry(rep, g, k, m, f"ballot series k={k} m={m}")
        levels = FamilySpec(k, {1: 1})
        for m in range(min(ballot_max_m, 2) + 1):
            order = min(weak_max_len, 6)
            g = solve_g_kac(levels, m, order)
            spec_m = FamilySpec(k, {1: 1}, end_height=m)
            for length in range(order + 1):
                hist = histogram(gen_kac(spec_m, length), WEAK_STARRED)
                rep.expect(f"level ballot series k={k} m={m} len={length}",
                           hist.counts, g.coefficient(length))
            _check_grouped_symmetry(rep, g, k, m,
                                    f"level ballot series k={k} m={m}")
    return rep


def _check_grouped_symmetry(rep: VerifyReport, series, k: int, m: int,
                            name: str) -> None:
    """Symmetry within marker groups 0..r and r+1..k-1 (dd marker fixed)."""
    r = m % k
    for group in (range(r + 1), range(r + 1, k)):
        group = list(group)
        for perm in permutations(group):
            sigma = list(range(k + 1))
            for a, b in zip(group, perm):
                sigma[a] = b
            rep.record(f"{name} group symmetry sigma={tuple(sigma)}",
                       series.permute_markers(sigma) == series,
                       inputs={"sigma": sigma})


# ---------------------------------------------------------------------------
# ballot identities
# ---------------------------------------------------------------------------

def verify_ballot(max_k: int = 3, max_m: int = 4, max_n: int = 4,
                  identity_max_n: int = 3) -> VerifyReport:
    rep = VerifyReport("ballot", {"max_k": max_k, "max_m": max_m,
                                  "max_n": max_n,
                                  "identity_max_n": identity_max_n})
    for k in range(1, max_k + 1):
        for m in range(max_m + 1):
            ell, r = divmod(m, k)
            for n in range(1, max_n + 1):
                hist = histogram(gen_ballot(k, m, n), PLAIN_STARRED)
                for s in _feature_vectors(n, k + 1):
                    rep.expect(
                        f"ballot closed form k={k} m={m} n={n} s={s}",
                        hist.counts.get(s, 0),
                        count_ballot_joint(k, ell, r, n, s),
                        inputs={"s": s})
            for n in range(identity_max_n + 1):
                bad = None
                for p in gen_ballot(k, m, n):
                    if not _ballot_identity_holds(p, k, m, ell, r):
                        bad = p.text()
                        break
                rep.record(f"residue recursion k={k} m={m} n={n}",
                           bad is None,
                           inputs={"k": k, "m": m, "n": n, "witness": bad})
    return rep


def _ballot_identity_holds(path: LatticePath, k: int, m: int,
                           ell: int, r: int) -> bool:
    """Starred counts split over the ballot parts: shifted plain counts
    plus one for each nonempty part whose floor sits in the residue class."""
    dec = ballot_decompose(path)
    if dec.reassemble() != path:
        return False
    starred = stat_vector(path, PLAIN_STARRED).pk
    for i in range(k):
        total = 0
        for j, part in enumerate(dec.parts):
            total += stat_vector(cyclic_shift(part, j), PLAIN).pk[i]
        top = ell if i <= r else ell - 1
        total += sum(1 for j in range(top + 1)
                     if not dec.parts[k * j + i].is_empty())
        if total != starred[i]:
            return False
    return True


# ---------------------------------------------------------------------------
# peak/double-descent exchange and Narayana reversal
# ---------------------------------------------------------------------------

def verify_involution(max_semilength: int = 8,
                      narayana_max_n: int = 10) -> VerifyReport:
    rep = VerifyReport("involution", {"max_semilength": max_semilength,
                                      "narayana_max_n": narayana_max_n})
    for n in range(max_semilength + 1):
        bad = None
        for p in gen_k_dyck(1, n):
            q = deutsch_involution(p)
            sp, sq = stat_vector(p), stat_vector(q)
            if deutsch_involution(q) != p or \
                    (sp.pk[0], sp.dd) != (sq.dd, sq.pk[0]):
                bad = p.text()
                break
        rep.record(f"involution exchanges counts n={n}", bad is None,
                   inputs={"n": n, "witness": bad})
    for n in range(1, narayana_max_n + 1):
        hist = histogram(gen_k_dyck(1, n), PLAIN)
        pk_m = hist.marginal(0)
        dd_m = hist.marginal(1)
        rep.record(f"peak/dd reversal n={n}",
                   all(pk_m.get(r, 0) == dd_m.get(n - 1 - r, 0)
                       for r in range(n)),
                   inputs={"n": n})
        rep.record(f"narayana symmetry n={n}",
                   all(narayana(n, r) == narayana(n, n + 1 - r)
                       for r in range(1, n + 1)),
                   inputs={"n": n})
    return rep


SUITES = {
    "figures": verify_figures,
    "equidistribution": verify_equidistribution,
    "bijection": verify_bijection,
    "closed-forms": verify_closed_forms,
    "series": verify_series,
    "ballot": verify_ballot,
    "involution": verify_involution,
}
