"""L1-embedding machinery for coset graphs: cut embeddings, distortion,
linearization, and the two classical lower bounds.

A cut embedding is a distribution over +-1 tables on the 2^h quotient
vertices; the induced distance is the probability the sampled table
separates a pair.  Distortion compares the worst edge stretch against
the worst pair stretch.  Infinite distortion is represented as +inf,
never clamped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cayley import CayleyGraph, bfs_metric, graph_from_code
from .codes import CosetTable, LinearCode, TooLarge, dual, min_distance
from .f2core import BitVec, fwht
from .testers import Tester, TesterReport, make_tester, soundness

INF = float("inf")

_ALL_PAIRS_DIM = 10


class NotCosetInvariant(Exception):
    """Embedding tables do not live on the quotient of the given code."""


class ZeroDual(Exception):
    """The dual code is trivial; no dual-distance bound applies."""


class NotBasisTester(Exception):
    """The tester support is not a basis of the dual code."""


@dataclass(frozen=True)
class CutEmbedding:
    """Distribution over +-1 truth tables on the 2^h quotient vertices."""

    h: int
    functions: tuple[tuple[tuple[int, ...], Fraction], ...]

    def __post_init__(self) -> None:
        size = 1 << self.h
        total = 0
        for table, prob in self.functions:
            if len(table) != size:
                raise ValueError("table length must be 2^h")
            if any(v not in (1, -1) for v in table):
                raise ValueError("table values must be +-1")
            if prob < 0:
                raise ValueError("negative probability")
            total = total + prob
        if all(isinstance(p, (Fraction, int)) for _, p in self.functions):
            if total != 1:
                raise ValueError(f"probabilities sum to {total}, not 1")
        elif abs(total - 1) > 1e-12:
            raise ValueError(f"probabilities sum to {total}, not 1")

    def delta(self, x: int, y: int):
        """Embedded distance: probability the sampled cut separates x, y."""
        acc = 0
        for table, prob in self.functions:
            if table[x] != table[y]:
                acc = acc + prob
        return acc


@dataclass(frozen=True)
class DistortionReport:
    max_stretch: Fraction
    min_stretch: Fraction
    distortion: Fraction  # +inf allowed (as float inf)


def character_cut_embedding(t: Tester) -> CutEmbedding:
    """The tester viewed as a distribution over character cuts."""
    code = t.code
    size = 1 << code.h
    functions = []
    parity_cache: dict[int, tuple[int, ...]] = {}
    for word, prob in t.support:
        b = code.dual_coords(word)
        if b not in parity_cache:
            parity_cache[b] = tuple(1 - 2 * ((b & s).bit_count() & 1) for s in range(size))
        functions.append((parity_cache[b], prob))
    return CutEmbedding(h=code.h, functions=tuple(functions))


def _shift_averaged_delta(e: CutEmbedding) -> list:
    """delta'(u) of the shift-averaged embedding, for every difference u.

    Autocorrelations via the transform: sum_x f(x) f(x+u) is the inverse
    transform of the squared spectrum; tables are integers so the result
    is exact.
    """
    size = 1 << e.h
    acc = [0] * size
    for table, prob in e.functions:
        f = fwht(table)
        ac = fwht([v * v for v in f])
        # ac[u] = 2^h * sum_x f(x) f(x+u); normalize twice.
        for u in range(size):
            corr = Fraction(ac[u], size * size) if isinstance(prob, (Fraction, int)) else ac[u] / (size * size)
            acc[u] = acc[u] + prob * (1 - corr) / 2
    return acc


def distortion(e: CutEmbedding, g: CayleyGraph) -> DistortionReport:
    """Max edge stretch over min pair stretch under the cut embedding.

    The numerator only needs edges (triangle inequality); the
    denominator scans all pairs up to dimension 10 and otherwise
    shift-averages first, which never increases distortion.
    """
    if g.gens is None:
        raise ValueError("distortion needs the generator multiset")
    if e.h != g.h:
        raise ValueError("embedding and graph dimensions differ")
    dist0 = bfs_metric(g)
    size = 1 << g.h
    steps = sorted({s for s in g.gens if s})

    if g.h <= _ALL_PAIRS_DIM:
        max_stretch = None
        for x in range(size):
            for s in steps:
                d = e.delta(x, x ^ s)
                if max_stretch is None or d > max_stretch:
                    max_stretch = d
        min_stretch = None
        for x in range(size):
            for y in range(x + 1, size):
                d = e.delta(x, y)
                stretch = d / dist0[x ^ y] if d else 0
                if min_stretch is None or stretch < min_stretch:
                    min_stretch = stretch
    else:
        avg = _shift_averaged_delta(e)
        max_stretch = max(avg[s] for s in steps)
        min_stretch = min(avg[u] / dist0[u] if avg[u] else 0 for u in range(1, size))

    if min_stretch == 0:
        return DistortionReport(max_stretch=max_stretch, min_stretch=min_stretch,
                                distortion=INF)
    ratio = max_stretch / min_stretch
    if ratio < 1:
        raise AssertionError("edge stretch below pair stretch; metric math is broken")
    return DistortionReport(max_stretch=max_stretch, min_stretch=min_stretch,
                            distortion=ratio)


def linearize(e: CutEmbedding, code: LinearCode) -> Tester:
    """Fourier-sample the embedding into a tester on the dual code.

    Each table's squared spectrum (over the quotient) is a probability
    vector; their mixture gives the tester weights.  The induced linear
    embedding never has larger distortion than e.
    """
    if e.h != code.h:
        raise NotCosetInvariant(
            f"tables live on 2^{e.h} vertices, the code quotient has 2^{code.h}"
        )
    size = 1 << code.h
    weights = [0] * size
    for table, prob in e.functions:
        f = fwht(table)
        for b in range(size):
            w = Fraction(f[b] * f[b], size * size) if isinstance(prob, (Fraction, int)) else f[b] * f[b] / (size * size)
            weights[b] = weights[b] + prob * w
    support = [
        (code.word_from_dual_coords(b), weights[b]) for b in range(size) if weights[b]
    ]
    return make_tester(code, support)


def linear_distortion(t: Tester, table: CosetTable) -> DistortionReport:
    """Distortion of the linear embedding a tester defines.

    Equals smoothness over soundness; +inf when some nonzero coset is
    never rejected (degenerate embedding).
    """
    report = soundness(t, table)
    return DistortionReport(max_stretch=report.epsilon, min_stretch=report.delta,
                            distortion=report.ratio)


def khot_naor_bound(code: LinearCode, table: CosetTable) -> Fraction:
    """Exact lower bound (dual distance / n) * covering radius on c1.

    Valid for testers supported on nonzero dual words: smoothness is at
    least the relative dual distance and soundness at most the inverse
    covering radius.  The asymptotic form with the volume bound on t is
    informational only (see the CLI).
    """
    if code.h == 0:
        raise ZeroDual("the dual code is trivial")
    dd = min_distance(dual(code))
    return Fraction(dd, code.n) * table.covering_radius


@dataclass(frozen=True)
class BasisBoundReport:
    ratio: Fraction
    lower_bound: Fraction

    @property
    def holds(self) -> bool:
        return self.ratio >= self.lower_bound


def basis_tester_bound(code: LinearCode, t: Tester, table: CosetTable) -> BasisBoundReport:
    """Check ratio >= k d / 3n for a tester supported on a dual basis."""
    words = [w for w, _ in t.support]
    if len(words) != code.h:
        raise NotBasisTester(f"support size {len(words)} != n - k = {code.h}")
    from .f2core import BitMatrix, rank as f2rank

    m = BitMatrix(tuple(w.word for w in words), code.n)
    if f2rank(m) != code.h:
        raise NotBasisTester("support words are linearly dependent")
    report = soundness(t, table)
    lower = Fraction(code.k * min_distance(code), 3 * code.n)
    return BasisBoundReport(ratio=report.ratio, lower_bound=lower)
