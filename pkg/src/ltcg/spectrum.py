"""Spectrum generators, the two code/graph spectrum theorems, small-set
expansion and the 2-4 hypercontractivity check.

A spectrum generator is an ordered list of linear functionals (packed
like group elements) that spans the functional space, has no short
linear dependencies, and explains all large eigenvalues of a graph:
its own eigenvalues sit near 1 and every functional's eigenvalue decays
with the number of generators needed to express it.

Note on ranges: a tester with smoothness above 1/2 produces mu = 2*eps
above 1, so mu and nu are admitted in [0, 2] rather than [0, 1]; the
verification conditions are applied literally.  The reverse direction's
smoothness guarantee is implemented as eps <= mu/2 (the eigenvalue bound
1 - mu <= lambda(b_i) pins the rejection of each coordinate coset from
above; a proof line stating the opposite inequality is a typo we do not
follow).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import cayley
from .cayley import CayleyGraph, tester_graph
from .codes import LinearCode, coset_table, make_code, min_distance
from .f2core import (
    BitMatrix,
    BitVec,
    fully_independent,
    fwht,
    independence_width,
    rank,
    syndrome_bfs,
)
from .testers import Tester, make_tester, soundness


class NotSpanning(Exception):
    """The functionals do not span the dual of the group."""


class DistanceTooSmall(Exception):
    """The forward spectrum theorem needs code distance at least 3."""


class PreconditionFailed(Exception):
    pass


class BoundViolated(Exception):
    """An inequality the paper guarantees failed; this is always a bug."""


class EmptySet(Exception):
    pass


@dataclass(frozen=True)
class SpectrumGenerator:
    """Ordered spanning list of n linear functionals on F2^h."""

    h: int
    functionals: tuple[BitVec, ...]

    def __post_init__(self) -> None:
        if not self.functionals:
            raise NotSpanning("empty functional list")
        if any(b.n != self.h for b in self.functionals):
            raise ValueError("functional length mismatch")
        m = BitMatrix(tuple(b.word for b in self.functionals), self.h)
        if rank(m) != self.h:
            raise NotSpanning("functionals do not span the dual space")

    @property
    def n(self) -> int:
        return len(self.functionals)

    def width(self) -> int:
        return independence_width(self.functionals)


@dataclass
class SGReport:
    mu: Fraction
    nu: Fraction
    d: int
    width: int
    indep_ok: bool
    large_ok: bool
    decay_ok: bool
    large_witness: tuple[int, Fraction] | None = None
    decay_witness: tuple[int, int, Fraction] | None = None

    @property
    def passed(self) -> bool:
        return self.indep_ok and self.large_ok and self.decay_ok


def rank_table(sg: SpectrumGenerator) -> list[int]:
    """rk over F2^h with the functionals as generators, one BFS."""
    dist, _ = syndrome_bfs([b.word for b in sg.functionals], sg.h)
    return dist


def verify_sg(g: CayleyGraph, sg: SpectrumGenerator, mu, nu, d: int) -> SGReport:
    """Check the three spectrum-generator conditions, with witnesses."""
    if g.h != sg.h:
        raise ValueError("graph and generator dimensions differ")
    width = sg.width()
    indep_ok = width >= d
    lam = cayley.spectrum(g)
    large_ok, large_witness = True, None
    for i, b in enumerate(sg.functionals):
        if lam[b.word] < 1 - mu:
            large_ok, large_witness = False, (i, lam[b.word])
            break
    rk = rank_table(sg)
    decay_ok, decay_witness = True, None
    for a in range(1 << g.h):
        if lam[a] > 1 - nu * rk[a]:
            decay_ok, decay_witness = False, (a, rk[a], lam[a])
            break
    report = SGReport(mu=mu, nu=nu, d=d, width=width, indep_ok=indep_ok,
                      large_ok=large_ok, decay_ok=decay_ok,
                      large_witness=large_witness, decay_witness=decay_witness)
    if report.passed and sg.functionals and mu < nu:
        raise AssertionError("passing report with mu < nu is impossible")
    return report


def sg_from_ltc(t: Tester) -> tuple[CayleyGraph, SpectrumGenerator, SGReport]:
    """Tester graph plus the coordinate-coset functionals.

    With (eps, delta) the tester's tight parameters and d the code
    distance (at least 3), the functionals form a (2 eps, 2 delta)
    spectrum generator; the returned report verifies exactly that.
    """
    code = t.code
    d = min_distance(code)
    if d < 3:
        raise DistanceTooSmall(f"code distance {d} < 3")
    graph = tester_graph(t)
    functionals = tuple(code.pcheck.col(i) for i in range(code.n))
    sg = SpectrumGenerator(h=code.h, functionals=functionals)
    rep = soundness(t, coset_table(code))
    report = verify_sg(graph, sg, 2 * rep.epsilon, 2 * rep.delta, d)
    if not report.passed:
        raise AssertionError(f"forward spectrum theorem failed: {report}")
    return graph, sg, report


def ltc_from_sg(g: CayleyGraph, sg: SpectrumGenerator) -> tuple[LinearCode, Tester]:
    """Code and tester recovered from a graph and spectrum generator.

    The dual code is the image of alpha -> (b_1(alpha), ..., b_n(alpha));
    equivalently the parity-check matrix has the functionals as columns.
    The edge distribution pushes forward through the same map.
    """
    if g.h != sg.h:
        raise ValueError("graph and generator dimensions differ")
    rows = []
    for j in range(sg.h):
        r = 0
        for i, b in enumerate(sg.functionals):
            if (b.word >> j) & 1:
                r |= 1 << i
        rows.append(r)
    code = make_code(BitMatrix(tuple(rows), sg.n), "pcheck")
    support = []
    for alpha, mass in g.dist:
        w = 0
        for i, b in enumerate(sg.functionals):
            if (b.word & alpha).bit_count() & 1:
                w |= 1 << i
        support.append((BitVec(w, sg.n), mass))
    return code, make_tester(code, support)


def expansion(g: CayleyGraph, vertices: Sequence[int]) -> Fraction:
    """Probability that one random-walk step from a uniform point of the
    set leaves the set."""
    if not vertices:
        raise EmptySet("expansion of the empty set is undefined")
    s = set(vertices)
    if g.exact:
        # Integer numerators over a common denominator keep the literal
        # neighbor count exact without per-step Fraction overhead.
        den = math.lcm(*(Fraction(p).denominator for _, p in g.dist))
        steps = [(v, (Fraction(p) * den).numerator) for v, p in g.dist]
        acc = 0
        for x in s:
            for v, num in steps:
                if (x ^ v) not in s:
                    acc += num
        return Fraction(acc, den * len(s))
    total = 0.0
    for x in s:
        for v, p in g.dist:
            if (x ^ v) not in s:
                total += p
    return total / len(s)


def expansion_via_operator(g: CayleyGraph, vertices: Sequence[int]) -> Fraction:
    """Same quantity through 1 - <1_S, G 1_S>/tau (spectral route)."""
    if not vertices:
        raise EmptySet("expansion of the empty set is undefined")
    s = set(vertices)
    size = 1 << g.h
    indicator = [1 if x in s else 0 for x in range(size)]
    # <1_S, G 1_S> = sum_b lambda(b) * (hat 1_S(b))^2 with hat = FWHT/2^h.
    f = fwht(indicator)
    lam = cayley.spectrum(g)
    num = sum(lam[b] * f[b] * f[b] for b in range(size))
    inner = num / (size * size)
    tau = Fraction(len(s), size) if g.exact else len(s) / size
    return 1 - inner / tau


@dataclass
class SSESetResult:
    size: int
    tau: Fraction
    bound: float
    phi: Fraction
    vacuous: bool


@dataclass
class SSEReport:
    d: int
    nu: Fraction
    results: list[SSESetResult] = field(default_factory=list)

    @property
    def vacuous_count(self) -> int:
        return sum(1 for r in self.results if r.vacuous)

    @property
    def checked_count(self) -> int:
        return len(self.results)

    @property
    def min_slack(self) -> float:
        return min((float(r.phi) - r.bound) for r in self.results)


def sse_bound_check(g: CayleyGraph, sg: SpectrumGenerator, mu, nu, d: int,
                    sets: Sequence[Sequence[int]]) -> SSEReport:
    """Assert the expander bound phi >= nu*d/4 - 3^(d/2) tau^(1/4) per set.

    Requires a passing spectrum-generator report; a violation would
    falsify the small-set-expansion lemma and raises BoundViolated.
    """
    if not verify_sg(g, sg, mu, nu, d).passed:
        raise PreconditionFailed("spectrum generator conditions do not hold")
    report = SSEReport(d=d, nu=nu)
    size = 1 << g.h
    for s in sets:
        tau = Fraction(len(set(s)), size)
        bound = float(nu) * d / 4 - 3.0 ** (d / 2) * float(tau) ** 0.25
        phi = expansion(g, s)
        if float(phi) < bound - 1e-12:
            raise BoundViolated(f"set of density {tau}: phi {phi} < bound {bound}")
        report.results.append(SSESetResult(size=len(set(s)), tau=tau, bound=bound,
                                           phi=phi, vacuous=bound <= 0))
    return report


def sample_small_sets(h: int, seed: int, count: int) -> list[list[int]]:
    """Deterministic mix of singletons, radius-1 balls and random subsets
    at densities 2^-h * {1, 2, 4, 8}."""
    rng = random.Random(seed)
    size = 1 << h
    sets: list[list[int]] = []
    ball = [0] + [1 << j for j in range(h)]
    kinds = len(ball)
    while len(sets) < count:
        which = len(sets) % 4
        if which == 0:
            sets.append([rng.randrange(size)])
        elif which == 1:
            x = rng.randrange(size)
            sets.append([x ^ b for b in ball])
        else:
            m = rng.choice([2, 4, 8])
            m = min(m, size)
            sets.append(rng.sample(range(size), m))
    return sets[:count]


@dataclass
class HyperconReport:
    trials: int
    degree: int
    max_moment_ratio: float
    max_parseval_error: float

    @property
    def passed(self) -> bool:
        return self.max_moment_ratio <= 1 + 1e-9 and self.max_parseval_error <= 1e-10


def hypercontractivity_check(functionals: Sequence[BitVec], d: int, trials: int,
                             seed: int) -> HyperconReport:
    """2-4 hypercontractivity for random degree-<=d polynomials.

    The functionals must be (4d+1)-wise independent (fully independent
    lists qualify for every d).  Each trial draws a standard-normal
    coefficient vector for all character products of at most d
    functionals, scales it to unit norm (both checks are homogeneous, and
    unit scale keeps the absolute float tolerances meaningful), evaluates
    the polynomial on all of F2^h, and checks
    E[f^4] <= 9^d (E[f^2])^2 plus the Parseval identity.
    """
    if not functionals:
        raise PreconditionFailed("empty functional list")
    if not fully_independent(functionals) and independence_width(functionals) < 4 * d + 1:
        raise PreconditionFailed(
            f"need (4d+1)-wise independence, width is {independence_width(functionals)}"
        )
    h = functionals[0].n
    n = len(functionals)
    size = 1 << h

    subsets = []
    for sz in range(d + 1):
        subsets.extend(itertools.combinations(range(n), sz))
    chars = np.empty((len(subsets), size), dtype=np.float64)
    parity = np.zeros(size, dtype=np.int8)
    for v in range(1, size):
        parity[v] = parity[v >> 1] ^ (v & 1)
    xs = np.arange(size)
    for row, combo in enumerate(subsets):
        b = 0
        for i in combo:
            b ^= functionals[i].word
        chars[row] = 1.0 - 2.0 * parity[np.bitwise_and(xs, b)]

    rng = np.random.default_rng(seed)
    bound = 9.0**d
    worst_ratio = 0.0
    worst_parseval = 0.0
    for _ in range(trials):
        coeffs = rng.standard_normal(len(subsets))
        coeffs /= np.linalg.norm(coeffs)
        f = coeffs @ chars
        e2 = float(np.mean(f * f))
        e4 = float(np.mean(f**4))
        ratio = e4 / (bound * e2 * e2)
        worst_ratio = max(worst_ratio, ratio)
        parseval = abs(e2 - float(np.dot(coeffs, coeffs)))
        worst_parseval = max(worst_parseval, parseval)
        if e4 > bound * e2 * e2 + 1e-9:
            raise BoundViolated(f"E[f^4] = {e4} exceeds 9^d (E[f^2])^2 = {bound * e2 * e2}")
        if parseval > 1e-10:
            raise BoundViolated(f"Parseval error {parseval}")
    return HyperconReport(trials=trials, degree=d, max_moment_ratio=worst_ratio,
                          max_parseval_error=worst_parseval)
