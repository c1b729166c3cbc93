"""Distributions on the dual code viewed as local testers.

A tester is a probability distribution on dual codewords; it rejects a
received word v when the sampled dual word has odd overlap with v.
Rejection depends only on the coset of v, which is what makes smoothness
and soundness computable from the coset table.

Probabilities are exact Fractions by default; floats are accepted and
propagate with a 1e-12 tolerance on the normalization check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .codes import CosetTable, LinearCode, coset_table, dual_words
from .f2core import BitVec, fwht
from . import simplex

_SPARSE_CONV_BUDGET = 250_000
_DIRECT_REJ_BUDGET = 2_000_000

INF = float("inf")


class PremiseViolated(Exception):
    """The covering-radius boost was called outside its theorem premise."""


class NoValidTester(Exception):
    """No tester can reject anything (the dual code is trivial)."""


@dataclass(frozen=True)
class Tester:
    code: LinearCode
    support: tuple[tuple[BitVec, Fraction], ...]

    def __post_init__(self) -> None:
        seen = set()
        total = 0
        exact = True
        for word, prob in self.support:
            if word.n != self.code.n:
                raise ValueError("support word length mismatch")
            if not self.code.is_dual_word(word):
                raise ValueError(f"{word} is not a dual codeword")
            if word.word in seen:
                raise ValueError("duplicate support word")
            seen.add(word.word)
            if prob < 0:
                raise ValueError("negative probability")
            if not isinstance(prob, (Fraction, int)):
                exact = False
            total = total + prob
        object.__setattr__(self, "_exact", exact)
        if exact:
            if total != 1:
                raise ValueError(f"probabilities sum to {total}, not 1")
        elif abs(total - 1) > 1e-12:
            raise ValueError(f"probabilities sum to {total}, not 1")

    @property
    def exact(self) -> bool:
        return self._exact


def make_tester(code: LinearCode, items: Sequence[tuple[BitVec, Fraction]]) -> Tester:
    """Build a tester, merging duplicate words and dropping zero masses."""
    acc: dict[int, Fraction] = {}
    order: list[int] = []
    for word, prob in items:
        if word.word not in acc:
            acc[word.word] = prob
            order.append(word.word)
        else:
            acc[word.word] += prob
    support = tuple(
        (BitVec(w, code.n), acc[w]) for w in order if acc[w] != 0
    )
    return Tester(code, support)


def point_mass_on_zero(code: LinearCode) -> Tester:
    return Tester(code, ((BitVec.zero(code.n), Fraction(1)),))


def uniform_tester(code: LinearCode, words: Sequence[BitVec]) -> Tester:
    p = Fraction(1, len(words))
    return make_tester(code, [(w, p) for w in words])


def diluted_tester(tester: Tester, mass: Fraction) -> Tester:
    """Keep `mass` of the tester and put the rest on the zero word."""
    items = [(w, p * mass) for w, p in tester.support]
    items.append((BitVec.zero(tester.code.n), 1 - mass))
    return make_tester(tester.code, items)


def rej(tester: Tester, v: BitVec):
    """Rejection probability of v: mass of dual words with odd overlap."""
    if v.n != tester.code.n:
        raise ValueError("length mismatch")
    total = Fraction(0) if tester.exact else 0.0
    for word, prob in tester.support:
        if (word.word & v.word).bit_count() & 1:
            total += prob
    return total


def smoothness(tester: Tester):
    """Max over coordinates of the probability of querying that coordinate."""
    n = tester.code.n
    best = Fraction(0) if tester.exact else 0.0
    for i in range(n):
        mask = 1 << i
        p = sum((prob for word, prob in tester.support if word.word & mask),
                Fraction(0) if tester.exact else 0.0)
        if p > best:
            best = p
    return best


def rej_on_cosets(tester: Tester, table: CosetTable, method: str = "auto") -> list:
    """Rejection probability per coset, indexed by packed syndrome.

    "direct" sums the support against each coset leader; "wht" pushes the
    distribution to dual coordinates and reads (1 - lambda)/2 off the
    Walsh-Hadamard transform.  Both are exact for rational testers; the
    equality of the two is the eigenvalue identity, which the test suite
    checks with the direct path only.
    """
    code = tester.code
    size = 1 << code.h
    if method == "auto":
        method = "direct" if len(tester.support) * size <= _DIRECT_REJ_BUDGET else "wht"
    if method == "direct":
        if tester.exact:
            # Accumulate integer numerators over a common denominator;
            # still a literal sum of the support against each leader.
            den = math.lcm(*(Fraction(p).denominator for _, p in tester.support))
            nums = [(w.word, (Fraction(p) * den).numerator) for w, p in tester.support]
            out = []
            for s in range(size):
                leader = table.leader_word[s]
                acc = 0
                for w, num in nums:
                    if (w & leader).bit_count() & 1:
                        acc += num
                out.append(Fraction(acc, den))
            return out
        out = []
        for s in range(size):
            leader = table.leader_word[s]
            acc = 0.0
            for word, prob in tester.support:
                if (word.word & leader).bit_count() & 1:
                    acc += prob
            out.append(acc)
        return out
    if method != "wht":
        raise ValueError("method must be auto, direct or wht")
    dense = [Fraction(0) if tester.exact else 0.0] * size
    for word, prob in tester.support:
        dense[code.dual_coords(word)] += prob
    lam = fwht(dense)
    half = Fraction(1, 2) if tester.exact else 0.5
    return [(1 - l) * half for l in lam]


@dataclass(frozen=True)
class TesterReport:
    epsilon: Fraction
    delta: Fraction
    ratio: Fraction
    cap: int | None = None

    def __post_init__(self) -> None:
        slack = 0 if isinstance(self.delta, Fraction) else 1e-12
        if self.delta > self.epsilon + slack:
            raise ValueError("soundness exceeded smoothness; tester math is broken")


def soundness(tester: Tester, table: CosetTable, cap: int | None = None,
              method: str = "auto") -> TesterReport:
    """Smoothness, (optionally capped) soundness and their ratio."""
    eps = smoothness(tester)
    size = 1 << tester.code.h
    if size == 1:
        # Trivial dual code: nothing is ever rejected.
        return TesterReport(epsilon=eps, delta=Fraction(0), ratio=INF, cap=cap)
    rejs = rej_on_cosets(tester, table, method=method)
    delta = None
    for s in range(1, size):
        d = table.leader_weight[s]
        if cap is not None:
            d = min(d, cap)
        val = rejs[s] / d
        if delta is None or val < delta:
            delta = val
    ratio = eps / delta if delta else INF
    report = TesterReport(epsilon=eps, delta=delta, ratio=ratio, cap=cap)
    if cap is None and table.covering_radius >= 1:
        if delta * table.covering_radius > 1:
            raise ValueError("soundness exceeds 1/covering-radius; tester math is broken")
    return report


def boost(tester: Tester, ell: int) -> Tester:
    """ell-fold XOR convolution of the tester with itself.

    Small supports are convolved explicitly; larger ones go through the
    dense dual-coordinate representation (transform, ell-th power,
    inverse transform), which is exact for rational testers and never
    exceeds 2^(n-k) entries.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if ell == 1:
        return tester
    code = tester.code
    size = 1 << code.h
    cost = len(tester.support) * min(len(tester.support) ** (ell - 1), size) * ell
    if cost <= _SPARSE_CONV_BUDGET:
        return _boost_convolve(tester, ell)
    dense = [Fraction(0) if tester.exact else 0.0] * size
    for word, prob in tester.support:
        dense[code.dual_coords(word)] += prob
    lam = fwht(dense)
    powed = [l**ell for l in lam]
    back = fwht(powed)
    support = []
    for x, mass in enumerate(back):
        mass = mass / size
        if mass:
            support.append((code.word_from_dual_coords(x), mass))
    return make_tester(code, support)


def _boost_convolve(tester: Tester, ell: int) -> Tester:
    """Explicit sparse convolution (also the test oracle for boost)."""
    code = tester.code
    acc = {word.word: prob for word, prob in tester.support}
    for _ in range(ell - 1):
        nxt: dict[int, Fraction] = {}
        for w1, p1 in acc.items():
            for word2, p2 in tester.support:
                w = w1 ^ word2.word
                nxt[w] = nxt.get(w, 0) + p1 * p2
        acc = nxt
    support = [(BitVec(w, code.n), p) for w, p in sorted(acc.items())]
    return make_tester(code, support)


def covradius_boost(tester: Tester, table: CosetTable, c) -> Tester:
    """Boost a tester with ratio at most c to the covering-radius regime.

    Returns the input when its soundness already beats 1/(16 c t);
    otherwise returns the floor(1/(4 t epsilon))-fold boost, whose report
    is guaranteed to satisfy epsilon' <= 1/(4t) and delta' >= 1/(16 c t).
    """
    report = soundness(tester, table)
    eps, delta = report.epsilon, report.delta
    if eps == 0:
        raise PremiseViolated("vacuous tester (epsilon = 0) cannot be boosted")
    if delta < eps / c:
        raise PremiseViolated(f"delta {delta} below epsilon/c = {eps / c}")
    t = table.covering_radius
    if t == 0:
        return tester
    if not isinstance(c, float):
        c = Fraction(c)
    bound = 1 / (16 * c * t)
    if delta > bound:
        return tester
    ell = math.floor(1 / (4 * t * eps))
    boosted = boost(tester, ell)
    new = soundness(boosted, table)
    if not (new.epsilon * 4 * t <= 1 and new.delta >= bound):
        raise AssertionError(
            f"covering-radius theorem violated: eps'={new.epsilon} delta'={new.delta}"
        )
    return boosted


# ---------------------------------------------------------------------------
# LP-optimal tester


@dataclass
class OptimalCertificate:
    """Exact primal/dual pair certifying the minimum smoothness/soundness ratio."""

    ratio: Fraction
    weights: dict[int, Fraction]      # dual-coordinate -> LP weight
    dual_coordinate_prices: list[Fraction]   # y_i, one per code coordinate
    dual_coset_prices: dict[int, Fraction]   # u_s, one per nonzero syndrome
    primal_feasible: bool
    dual_feasible: bool
    objectives_match: bool

    @property
    def verified(self) -> bool:
        return self.primal_feasible and self.dual_feasible and self.objectives_match


def _lp_data(code: LinearCode, table: CosetTable):
    """Constraint data shared by the primal LP and its dual.

    Variables are indexed by nonzero dual words (in dual coordinates);
    reject[s] lists which variables reject the coset with syndrome s,
    covers[i] lists which variables query coordinate i.
    """
    h, n = code.h, code.n
    size = 1 << h
    reject: list[list[int]] = [[] for _ in range(size)]
    covers: list[list[int]] = [[] for _ in range(n)]
    word_at = [code.word_from_dual_coords(x).word for x in range(size)]
    for x in range(1, size):
        w = word_at[x]
        for i in range(n):
            if (w >> i) & 1:
                covers[i].append(x)
        for s in range(1, size):
            if (w & table.leader_word[s]).bit_count() & 1:
                reject[s].append(x)
    return word_at, covers, reject


def optimal_tester(code: LinearCode, table: CosetTable) -> tuple[Tester, Fraction]:
    """Minimum-ratio tester via the exact LP; returns (tester, ratio).

    LP: nonnegative weights w on nonzero dual words, every nonzero coset
    must collect rejection weight at least its leader weight, minimize
    the maximum per-coordinate coverage.  The optimum equals the least
    distortion of any L1 embedding of the coset graph.
    """
    if code.h == 0:
        raise NoValidTester("the dual code is {0}; no coset can be rejected")
    if code.h > 14:
        raise ValueError("LP gate is n - k <= 14")
    sol, word_at, covers, reject = _solve_primal(code, table)
    nvars = (1 << code.h) - 1
    z = sol.x[0]
    weights = {x + 1: sol.x[1 + x] for x in range(nvars) if sol.x[1 + x] != 0}
    total = sum(weights.values())
    support = [
        (BitVec(word_at[x], code.n), w / total) for x, w in sorted(weights.items())
    ]
    tester = make_tester(code, support)
    return tester, z


def _solve_primal(code: LinearCode, table: CosetTable):
    word_at, covers, reject = _lp_data(code, table)
    size = 1 << code.h
    nvars = size - 1
    ncols = 1 + nvars  # z, then one weight per nonzero dual coordinate
    rows = []
    rhs = []
    # z - sum_{words querying i} w >= 0
    for i in range(code.n):
        row = [Fraction(0)] * ncols
        row[0] = Fraction(1)
        for x in covers[i]:
            row[x] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(0))
    # sum_{words rejecting coset s} w >= leader_weight[s]
    for s in range(1, size):
        row = [Fraction(0)] * ncols
        for x in reject[s]:
            row[x] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(table.leader_weight[s]))
    c = [Fraction(0)] * ncols
    c[0] = Fraction(1)
    sol = simplex.solve_min_ge(c, rows, rhs)
    return sol, word_at, covers, reject


def optimal_certificate(code: LinearCode, table: CosetTable) -> OptimalCertificate:
    """Solve the ratio LP and its dual independently and cross-verify.

    The dual prices give the expander-style obstruction: coordinate
    prices y sum to at most 1 and coset prices u make every dual word's
    rejection income at most its query cost; the dual objective matches
    the primal optimum exactly when both solves are correct.
    """
    if code.h == 0:
        raise NoValidTester("the dual code is {0}; no coset can be rejected")
    sol, word_at, covers, reject = _solve_primal(code, table)
    size = 1 << code.h
    nvars = size - 1
    n = code.n

    # Dual: maximize sum_s lw_s u_s  s.t.  sum_i y_i <= 1  and, per word,
    # rejection income <= query cost; variables y, u >= 0.
    dual_nvars = n + nvars
    drows = []
    drhs = []
    row = [Fraction(0)] * dual_nvars
    for i in range(n):
        row[i] = Fraction(1)
    drows.append(row)
    drhs.append(Fraction(1))
    rejected_by = [[] for _ in range(size)]
    for s in range(1, size):
        for x in reject[s]:
            rejected_by[x].append(s)
    for x in range(1, size):
        row = [Fraction(0)] * dual_nvars
        for s in rejected_by[x]:
            row[n + s - 1] = Fraction(1)
        w = word_at[x]
        for i in range(n):
            if (w >> i) & 1:
                row[i] = Fraction(-1)
        drows.append(row)
        drhs.append(Fraction(0))
    dobj = [Fraction(0)] * dual_nvars
    for s in range(1, size):
        dobj[n + s - 1] = Fraction(table.leader_weight[s])
    dsol = simplex.solve_max_le(dobj, drows, drhs)

    # Independent feasibility checks.
    prim_rows = []
    prim_rhs = []
    for i in range(n):
        row = [Fraction(0)] * (1 + nvars)
        row[0] = Fraction(1)
        for x in covers[i]:
            row[x] = Fraction(-1)
        prim_rows.append(row)
        prim_rhs.append(Fraction(0))
    for s in range(1, size):
        row = [Fraction(0)] * (1 + nvars)
        for x in reject[s]:
            row[x] = Fraction(1)
        prim_rows.append(row)
        prim_rhs.append(Fraction(table.leader_weight[s]))
    primal_ok = simplex.check_feasible_ge(prim_rows, prim_rhs, sol.x)
    dual_ok = all(v >= 0 for v in dsol.x) and all(
        sum((rv * xv for rv, xv in zip(row, dsol.x)), Fraction(0)) <= bi
        for row, bi in zip(drows, drhs)
    )
    return OptimalCertificate(
        ratio=sol.value,
        weights={x: sol.x[x] for x in range(1, 1 + nvars) if sol.x[x] != 0},
        dual_coordinate_prices=dsol.x[:n],
        dual_coset_prices={s: dsol.x[n + s - 1] for s in range(1, size) if dsol.x[n + s - 1] != 0},
        primal_feasible=primal_ok,
        dual_feasible=dual_ok,
        objectives_match=(sol.value == dsol.value),
    )
