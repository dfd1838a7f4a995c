"""Closed-form counts and the truncated generating-function engine.

Everything here is exact: counts are Python integers, intermediate
divisions run through :class:`fractions.Fraction`, and a failed
integrality assertion raises rather than rounding.  Series live in
:class:`TruncSeries`: power series in x truncated at a fixed order whose
coefficients are sparse multivariate polynomials in the markers
q_0..q_k (q_i marks peaks in residue class i, q_k marks double descents).

The master series f for pure k-Dyck paths solves

    f = x * (q_0 f + 1)(q_1 f + 1) ... (q_k f + 1),

with x tracking down-size.  The level-step generalization tracks total
length and satisfies

    f = c_A(x) (f + 1) + x^(k+1) * prod_i (q_i f + 1),

where c_A(x) sums c_a x^a over the allowed level run-lengths.  Ballot
families ending at height m = ell*k + r multiply out

    g = (prod_{i<=r} (q_i f + 1))^(ell+1) * (prod_{r<i<k} (q_i f + 1))^ell,

optionally with an x^m prefactor when x tracks length.  Fixed-point
iteration solves the equations; the positive x-valuation of every
right-hand side makes coefficients through order N exact after N+1
rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .core import FamilySpec


class NonIntegerResultError(ArithmeticError):
    """A count formula failed to produce an integer (an internal bug)."""


def _exact_int(value: Fraction, context: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResultError(f"{context} evaluated to {value}")
    return value.numerator


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def fuss_catalan(k: int, n: int) -> int:
    """Number of k-Dyck paths of down-size n: C((k+1)n, n) / (kn + 1)."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    return _exact_int(Fraction(comb((k + 1) * n, n), k * n + 1),
                      f"fuss_catalan({k}, {n})")


def count_joint(k: int, n: int, r: Sequence[int]) -> int:
    """Paths of down-size n with statistic vector r = (r_0, ..., r_k).

    Zero unless the entries sum to n - 1 (each down-step except the one
    after the rightmost peak carries exactly one feature); otherwise
    (1/n) * prod_i C(n, r_i).
    """
    r = tuple(int(x) for x in r)
    _check_joint_args(k, n, r)
    if sum(r) != n - 1:
        return 0
    num = 1
    for ri in r:
        num *= comb(n, ri)
    return _exact_int(Fraction(num, n), f"count_joint({k}, {n}, {r})")


def _check_joint_args(k: int, n: int, r: tuple[int, ...]) -> None:
    if k < 1:
        raise ValueError("need k >= 1")
    if n < 1:
        raise ValueError("need n >= 1")
    if len(r) != k + 1:
        raise ValueError(f"statistic vector needs {k + 1} entries, "
                         f"got {len(r)}")
    if any(x < 0 for x in r):
        raise ValueError("statistic entries must be >= 0")


def count_marginal(k: int, n: int, r: int) -> int:
    """Paths of down-size n on which one fixed statistic equals r:
    (1/n) C(n, r) C(kn, n-1-r)."""
    if n < 1 or not 0 <= r <= n - 1:
        raise ValueError("need n >= 1 and 0 <= r <= n-1")
    return _exact_int(Fraction(comb(n, r) * comb(k * n, n - 1 - r), n),
                      f"count_marginal({k}, {n}, {r})")


def count_pk(k: int, n: int, r: int) -> int:
    """Paths of down-size n with r non-rightmost peaks, i.e. r+1 peaks in
    total: (1/n) C(n, r+1) C(kn, r).  Reversal partner of
    :func:`count_marginal`: count_pk(k, n, n-1-r) == count_marginal(k, n, r).
    """
    if n < 1 or not 0 <= r <= n - 1:
        raise ValueError("need n >= 1 and 0 <= r <= n-1")
    return _exact_int(Fraction(comb(n, r + 1) * comb(k * n, r), n),
                      f"count_pk({k}, {n}, {r})")


def narayana(n: int, r: int) -> int:
    """Dyck paths of semilength n with exactly r peaks:
    (1/n) C(n, r) C(n, r-1)."""
    if n < 1 or not 1 <= r <= n:
        raise ValueError("need n >= 1 and 1 <= r <= n")
    return _exact_int(Fraction(comb(n, r) * comb(n, r - 1), n),
                      f"narayana({n}, {r})")


def count_ballot_joint(k: int, ell: int, r: int, n: int,
                       s: Sequence[int]) -> int:
    """Ballot paths ending at height ell*k + r with starred statistics s.

    s = (s_0, ..., s_{k-1}, s_k) where s_i counts all peaks in residue
    class i (rightmost included) and s_k the double descents; the entries
    must sum to n.  Evaluates, in exact rationals,

        (1/n) [ (ell+1)/(n+ell+1) * sum_{i<=r} s_i
                + ell/(n+ell)     * sum_{i>r}  s_i ]
        * prod_{i<=r} C(n+ell+1, s_i)
        * prod_{r<i<k} C(n+ell, s_i) * C(n, s_k).
    """
    s = tuple(int(x) for x in s)
    if k < 1 or ell < 0 or not 0 <= r <= k - 1:
        raise ValueError("need k >= 1, ell >= 0, 0 <= r <= k-1")
    if len(s) != k + 1 or any(x < 0 for x in s):
        raise ValueError(f"statistic vector needs {k + 1} entries >= 0")
    if n == 0:
        return 1 if all(x == 0 for x in s) else 0
    if n < 0:
        raise ValueError("need n >= 0")
    if sum(s) != n:
        return 0
    low = sum(s[i] for i in range(r + 1))
    high = sum(s[i] for i in range(r + 1, k))
    bracket = (Fraction(ell + 1, n + ell + 1) * low
               + Fraction(ell, n + ell) * high)
    prod = 1
    for i in range(r + 1):
        prod *= comb(n + ell + 1, s[i])
    for i in range(r + 1, k):
        prod *= comb(n + ell, s[i])
    prod *= comb(n, s[k])
    return _exact_int(Fraction(1, n) * bracket * prod,
                      f"count_ballot_joint({k}, {ell}, {r}, {n}, {s})")


def lagrange_coefficient(k: int, n: int, r: Sequence[int]) -> int:
    """Independent route to :func:`count_joint` via series reversion.

    Expands (prod_i (q_i f + 1))^n as a polynomial in f and the markers
    and reads off (1/n) times the coefficient of f^(n-1) prod q_i^(r_i).
    """
    r = tuple(int(x) for x in r)
    _check_joint_args(k, n, r)
    # variables: exponent tuples (e_f, e_0, ..., e_k)
    nvars = k + 2
    base: dict[tuple[int, ...], int] = {(0,) * nvars: 1}
    for i in range(k + 1):
        term = [0] * nvars
        term[0] = 1
        term[i + 1] = 1
        factor = {tuple(term): 1, (0,) * nvars: 1}
        base = _poly_mul(base, factor)
    power = {(0,) * nvars: 1}
    for _ in range(n):
        power = _poly_mul(power, base)
    target = (n - 1,) + r
    return _exact_int(Fraction(power.get(target, 0), n),
                      f"lagrange_coefficient({k}, {n}, {r})")


# ---------------------------------------------------------------------------
# sparse multivariate polynomials (exponent-tuple keyed)
# ---------------------------------------------------------------------------

def _poly_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for e, c in q.items():
        nc = out.get(e, 0) + c
        if nc:
            out[e] = nc
        else:
            out.pop(e, None)
    return out


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            nc = out.get(e, 0) + c1 * c2
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
    return out


def _poly_bump(p: dict, i: int) -> dict:
    """Multiply by the single marker q_i."""
    out = {}
    for e, c in p.items():
        e2 = list(e)
        e2[i] += 1
        out[tuple(e2)] = c
    return out


def _poly_str(p: dict, nmarkers: int) -> str:
    if not p:
        return "0"
    parts = []
    for e in sorted(p, reverse=True):
        c = p[e]
        factors = [str(c)]
        for i, exp in enumerate(e):
            if exp == 1:
                factors.append(f"q{i}")
            elif exp > 1:
                factors.append(f"q{i}^{exp}")
        parts.append("*".join(factors))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------------

class TruncSeries:
    """Power series in x mod x^(order+1) with marker-polynomial coefficients.

    Coefficient polynomials are dicts from exponent tuples (one slot per
    marker) to integers; instances are never mutated after construction.
    """

    __slots__ = ("order", "nmarkers", "coeffs")

    def __init__(self, order: int, nmarkers: int,
                 coeffs: Sequence[dict] | None = None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        self.nmarkers = nmarkers
        if coeffs is None:
            coeffs = [{} for _ in range(order + 1)]
        self.coeffs = tuple(dict(c) for c in coeffs)

    # construction helpers ---------------------------------------------------

    @classmethod
    def zero(cls, order: int, nmarkers: int) -> "TruncSeries":
        return cls(order, nmarkers)

    @classmethod
    def one(cls, order: int, nmarkers: int) -> "TruncSeries":
        coeffs = [{} for _ in range(order + 1)]
        coeffs[0] = {(0,) * nmarkers: 1}
        return cls(order, nmarkers, coeffs)

    @classmethod
    def x_power(cls, j: int, order: int, nmarkers: int,
                scale: int = 1) -> "TruncSeries":
        coeffs = [{} for _ in range(order + 1)]
        if j <= order and scale:
            coeffs[j] = {(0,) * nmarkers: scale}
        return cls(order, nmarkers, coeffs)

    # arithmetic ---------------------------------------------------------------

    def _like(self, coeffs) -> "TruncSeries":
        return TruncSeries(self.order, self.nmarkers, coeffs)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return self._like([_poly_add(a, b)
                           for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        out = [{} for _ in range(self.order + 1)]
        for da, pa in enumerate(self.coeffs):
            if not pa:
                continue
            for db in range(self.order + 1 - da):
                pb = other.coeffs[db]
                if not pb:
                    continue
                out[da + db] = _poly_add(out[da + db], _poly_mul(pa, pb))
        return self._like(out)

    def _check(self, other: "TruncSeries") -> None:
        if (self.order, self.nmarkers) != (other.order, other.nmarkers):
            raise ValueError("series shape mismatch")

    def plus_one(self) -> "TruncSeries":
        return self + TruncSeries.one(self.order, self.nmarkers)

    def mul_marker(self, i: int) -> "TruncSeries":
        return self._like([_poly_bump(p, i) for p in self.coeffs])

    def mul_x(self, j: int) -> "TruncSeries":
        out = [{} for _ in range(self.order + 1)]
        for d, p in enumerate(self.coeffs):
            if d + j <= self.order:
                out[d + j] = dict(p)
        return self._like(out)

    def pow(self, e: int) -> "TruncSeries":
        out = TruncSeries.one(self.order, self.nmarkers)
        for _ in range(e):
            out = out * self
        return out

    # queries --------------------------------------------------------------

    def coefficient(self, n: int) -> dict:
        return dict(self.coeffs[n])

    def at_ones(self) -> list[int]:
        """Total count per x-degree (all markers specialized to 1)."""
        return [sum(p.values()) for p in self.coeffs]

    def permute_markers(self, sigma: Sequence[int]) -> "TruncSeries":
        """Move marker i to slot sigma[i] (0-based images)."""
        sig = list(sigma)
        if sorted(sig) != list(range(self.nmarkers)):
            raise ValueError(f"{sigma} is not a permutation of the markers")
        out = []
        for p in self.coeffs:
            q = {}
            for e, c in p.items():
                e2 = [0] * self.nmarkers
                for i, v in enumerate(e):
                    e2[sig[i]] = v
                q[tuple(e2)] = c
            out.append(q)
        return self._like(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.order == other.order
                and self.nmarkers == other.nmarkers
                and self.coeffs == other.coeffs)

    __hash__ = None

    # output -----------------------------------------------------------------

    def dump_lines(self) -> list[str]:
        return [f"x^{d}: {_poly_str(p, self.nmarkers)}"
                for d, p in enumerate(self.coeffs)]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "markers": self.nmarkers,
            "coefficients": [
                {"x": d,
                 "terms": [{"exponents": list(e), "coefficient": p[e]}
                           for e in sorted(p, reverse=True)]}
                for d, p in enumerate(self.coeffs)],
        }


# ---------------------------------------------------------------------------
# functional equation solvers
# ---------------------------------------------------------------------------

def _marked_product(f: TruncSeries, indices: Iterable[int]) -> TruncSeries:
    """prod over i of (q_i f + 1)."""
    out = TruncSeries.one(f.order, f.nmarkers)
    for i in indices:
        out = out * f.mul_marker(i).plus_one()
    return out


def solve_f(k: int, order: int) -> TruncSeries:
    """Joint generating series of pure k-Dyck paths by down-size.

    The x^n coefficient is the generating polynomial of
    (pk_0, ..., pk_{k-1}, dd) over paths of down-size n; the constant term
    vanishes because only nonempty paths are counted.
    """
    nm = k + 1
    f = TruncSeries.zero(order, nm)
    for _ in range(order + 1):
        nf = _marked_product(f, range(k + 1)).mul_x(1)
        if nf == f:
            break
        f = nf
    return f


def solve_f_kac(spec: FamilySpec, order: int) -> TruncSeries:
    """Joint generating series of level-bearing paths by total length.

    The x^L coefficient is the generating polynomial of the weak
    statistics (wpk_0, ..., wpk_{k-1}, wdd) over paths of length L, and is
    symmetric in all k+1 markers.
    """
    k = spec.k
    nm = k + 1
    c_a = TruncSeries.zero(order, nm)
    for a, c in spec.levels:
        c_a = c_a + TruncSeries.x_power(a, order, nm, scale=c)
    f = TruncSeries.zero(order, nm)
    for _ in range(order + 1):
        nf = (c_a * f.plus_one()
              + _marked_product(f, range(k + 1)).mul_x(k + 1))
        if nf == f:
            break
        f = nf
    return f


def _ballot_product(f: TruncSeries, k: int, m: int) -> TruncSeries:
    ell, r = divmod(m, k)
    low = _marked_product(f, range(r + 1))
    high = _marked_product(f, range(r + 1, k))
    return low.pow(ell + 1) * high.pow(ell)


def solve_g(k: int, m: int, order: int) -> TruncSeries:
    """Starred-statistic series of (k, m)-ballot paths by down-size.

    Coefficients are symmetric in q_0..q_r and in q_{r+1}..q_{k-1}, where
    r = m mod k.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    return _ballot_product(solve_f(k, order), k, m)


def solve_g_kac(spec: FamilySpec, m: int, order: int) -> TruncSeries:
    """Weak starred series of level-bearing ballot paths by total length."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return _ballot_product(solve_f_kac(spec, order), spec.k, m).mul_x(m)
