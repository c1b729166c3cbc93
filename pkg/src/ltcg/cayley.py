"""Cayley graphs over F2^h: construction, spectra, shortest-path metric.

Vertices are group elements packed little-endian into ints.  The
eigenvectors of any such graph are the characters, so the spectrum is
the Walsh-Hadamard transform of the edge distribution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .codes import CosetTable, LinearCode, TooLarge, coset_table, make_code
from .f2core import BitMatrix, BitVec, fwht, rank
from .testers import Tester, rej_on_cosets

MAX_GRAPH_DIM = 24


class DegenerateGraph(Exception):
    """Zero-dimensional graphs carry no statement worth checking."""


class NotGenerating(Exception):
    """The generator multiset does not span the group."""


class Disconnected(Exception):
    """The distribution support does not span the group."""


class IdentityViolated(Exception):
    """The eigenvalue-rejection identity failed on a coset."""


@dataclass(frozen=True)
class CayleyGraph:
    """Weighted Cayley graph on F2^h given by an edge mass function.

    ``dist`` maps vertices (packed ints) to probability masses in
    insertion order; ``gens`` optionally carries the generator multiset
    (the unweighted view used by the metric operations).
    """

    h: int
    dist: tuple[tuple[int, Fraction], ...]
    gens: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.h < 1:
            raise DegenerateGraph("h must be >= 1")
        if self.h > MAX_GRAPH_DIM:
            raise TooLarge(f"h = {self.h} exceeds the gate {MAX_GRAPH_DIM}")
        total = 0
        seen = set()
        for v, p in self.dist:
            if not 0 <= v < (1 << self.h):
                raise ValueError("vertex outside F2^h")
            if v in seen:
                raise ValueError("duplicate support vertex")
            seen.add(v)
            if p < 0:
                raise ValueError("negative mass")
            total = total + p
        exact = all(isinstance(p, (Fraction, int)) for _, p in self.dist)
        if exact:
            if total != 1:
                raise ValueError(f"masses sum to {total}, not 1")
        elif abs(total - 1) > 1e-12:
            raise ValueError(f"masses sum to {total}, not 1")
        if self.gens is not None:
            for g in self.gens:
                if not 0 <= g < (1 << self.h):
                    raise ValueError("generator outside F2^h")

    @property
    def exact(self) -> bool:
        return all(isinstance(p, (Fraction, int)) for _, p in self.dist)


def graph_from_gens(h: int, gens: Sequence[int]) -> CayleyGraph:
    """Unweighted view: uniform distribution over a generator multiset."""
    if not gens:
        raise ValueError("empty generator multiset")
    p = Fraction(1, len(gens))
    acc: dict[int, Fraction] = {}
    for g in gens:
        acc[g] = acc.get(g, Fraction(0)) + p
    return CayleyGraph(h=h, dist=tuple(acc.items()), gens=tuple(gens))


@dataclass(frozen=True)
class SpectrumTable:
    """Eigenvalues indexed by packed linear functional."""

    h: int
    lam: tuple

    def __getitem__(self, b: int):
        return self.lam[b]


def spectrum(g: CayleyGraph) -> SpectrumTable:
    """All 2^h eigenvalues via the fast Walsh-Hadamard transform."""
    size = 1 << g.h
    dense = [Fraction(0) if g.exact else 0.0] * size
    for v, p in g.dist:
        dense[v] += p
    lam = fwht(dense)
    if g.exact:
        if lam[0] != 1 or any(not -1 <= l <= 1 for l in lam):
            raise AssertionError("spectrum escaped [-1, 1]")
    elif abs(lam[0] - 1) > 1e-9 or any(abs(l) > 1 + 1e-9 for l in lam):
        raise AssertionError("spectrum escaped [-1, 1]")
    return SpectrumTable(h=g.h, lam=tuple(lam))


def graph_from_code(code: LinearCode) -> CayleyGraph:
    """Coset graph of a code: generators are the syndromes of e_1..e_n."""
    if code.h == 0:
        raise DegenerateGraph("the full-space code has a trivial quotient")
    if code.h > MAX_GRAPH_DIM:
        raise TooLarge(f"n - k = {code.h} exceeds the gate {MAX_GRAPH_DIM}")
    gens = tuple(code.pcheck.col(i).word for i in range(code.n))
    return graph_from_gens(code.h, gens)


def code_from_graph(g: CayleyGraph) -> LinearCode:
    """Code whose words are the linear relations among the generators."""
    if g.gens is None:
        raise NotGenerating("graph carries no generator multiset")
    n = len(g.gens)
    rows = []
    for j in range(g.h):
        r = 0
        for i, gen in enumerate(g.gens):
            if (gen >> j) & 1:
                r |= 1 << i
        rows.append(r)
    pcheck = BitMatrix(tuple(rows), n)
    if rank(pcheck) != g.h:
        raise NotGenerating("generators do not span F2^h")
    return make_code(pcheck, "pcheck")


def tester_graph(t: Tester) -> CayleyGraph:
    """Cayley graph on the dual code with edge weights from the tester.

    Dual words are coordinatized against the code's pinned pcheck basis;
    the support doubles as the generator multiset for metric purposes.
    """
    code = t.code
    if code.h == 0:
        raise DegenerateGraph("trivial dual code")
    if code.h > MAX_GRAPH_DIM:
        raise TooLarge(f"n - k = {code.h} exceeds the gate {MAX_GRAPH_DIM}")
    dist = tuple((code.dual_coords(w), p) for w, p in t.support)
    gens = tuple(v for v, _ in dist)
    return CayleyGraph(h=code.h, dist=dist, gens=gens)


def bfs_metric(g: CayleyGraph) -> list[int]:
    """Shortest-path distances from 0; d(x, y) = dist[x ^ y] by symmetry.

    Weights are ignored by design: the metric statements are about the
    generator multiset (for weighted graphs, the support).
    """
    steps = sorted({v for v in (g.gens if g.gens is not None else [v for v, _ in g.dist]) if v})
    size = 1 << g.h
    dist = [-1] * size
    dist[0] = 0
    frontier = [0]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for s in steps:
                y = x ^ s
                if dist[y] < 0:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    if any(v < 0 for v in dist):
        raise Disconnected("support does not generate F2^h")
    return dist


@dataclass
class IdentityReport:
    cosets_checked: int
    max_abs_error: float


def eigenvalue_rejection_identity(t: Tester, table: CosetTable | None = None) -> IdentityReport:
    """Check lambda(coset) = 1 - 2 Rej(coset) over every coset.

    The left side is the Walsh-Hadamard spectrum of the tester graph; the
    right side sums the support against a coset leader.  Under the pinned
    identification a coset's functional is its packed syndrome, so the
    two sides share an index.  Exact testers are compared exactly.
    """
    code = t.code
    if code.h > 20:
        raise TooLarge("identity check gate is n - k <= 20")
    if table is None:
        table = coset_table(code)
    lam = spectrum(tester_graph(t))
    rejs = rej_on_cosets(t, table, method="direct")
    worst = 0.0
    for s in range(1 << code.h):
        expected = 1 - 2 * rejs[s]
        got = lam[s]
        if t.exact:
            if got != expected:
                raise IdentityViolated(f"coset {s}: lambda {got} vs 1-2Rej {expected}")
        else:
            err = abs(got - expected)
            worst = max(worst, err)
            if err > 1e-10:
                raise IdentityViolated(f"coset {s}: |{got} - {expected}| = {err}")
    return IdentityReport(cosets_checked=1 << code.h, max_abs_error=worst)
