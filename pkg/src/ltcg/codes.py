"""Binary linear codes: parameters, duals, coset-leader tables, distance.

A code is held as a full-rank generator matrix together with a full-rank
parity-check matrix.  Syndromes are packed little-endian into array
indices, so coset lookups are O(1) and file dumps are bit-exact.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import random

from .f2core import (
    BitMatrix,
    BitVec,
    independence_width,
    kernel_basis,
    rank,
    row_basis,
    syndrome_bfs,
)

MAX_SYNDROME_DIM = 24
MAX_ENUM_DIM = 24


class RankDeficient(Exception):
    """Input matrix has rank zero; no code can be extracted."""


class TooLarge(Exception):
    """Requested operation exceeds the desk-scale enumeration gates."""


@dataclass(frozen=True)
class LinearCode:
    """[n, k] binary linear code with pinned gen / pcheck bases.

    ``pcheck`` also fixes the coordinatization of the dual code: the dual
    word with coordinates x (packed little-endian) is XOR of the pcheck
    rows selected by x.  All dual-side maps in this package go through
    that one basis.
    """

    gen: BitMatrix
    pcheck: BitMatrix

    def __post_init__(self) -> None:
        n = self.pcheck.ncols
        if self.gen.ncols != n:
            raise ValueError("gen and pcheck column counts differ")
        if self.gen.nrows + self.pcheck.nrows != n:
            raise ValueError("rank counts do not add up to n")
        if rank(self.gen) != self.gen.nrows or rank(self.pcheck) != self.pcheck.nrows:
            raise ValueError("gen/pcheck rows must be independent")
        for g in self.gen.rows:
            for p in self.pcheck.rows:
                if (g & p).bit_count() & 1:
                    raise ValueError("gen and pcheck are not orthogonal")

    @property
    def n(self) -> int:
        return self.pcheck.ncols

    @property
    def k(self) -> int:
        return self.gen.nrows

    @property
    def h(self) -> int:
        """Syndrome dimension n - k."""
        return self.pcheck.nrows

    def contains(self, v: BitVec) -> bool:
        return all(((r & v.word).bit_count() & 1) == 0 for r in self.pcheck.rows)

    def is_dual_word(self, w: BitVec) -> bool:
        return all(((r & w.word).bit_count() & 1) == 0 for r in self.gen.rows)

    def syndrome_index(self, v: BitVec) -> int:
        """Syndrome of v packed little-endian (0 when h = 0)."""
        if v.n != self.n:
            raise ValueError("length mismatch")
        s = 0
        for j, r in enumerate(self.pcheck.rows):
            if (r & v.word).bit_count() & 1:
                s |= 1 << j
        return s

    def word_from_dual_coords(self, x: int) -> BitVec:
        """Dual codeword with coordinates x in the pinned pcheck basis."""
        w = 0
        j = 0
        xx = x
        while xx:
            if xx & 1:
                w ^= self.pcheck.rows[j]
            xx >>= 1
            j += 1
        return BitVec(w, self.n)

    def dual_coords(self, w: BitVec) -> int:
        """Coordinates of a dual codeword in the pinned pcheck basis."""
        return _dual_solver(self)(w)


@functools.lru_cache(maxsize=256)
def _dual_solver(code: LinearCode):
    # Reduce pcheck to RREF while tracking which original rows combine
    # into each reduced row; reducing a dual word against that data
    # recovers its coordinates.  Back-elimination keeps every stored row
    # zero at the other rows' pivots.
    reduced: list[tuple[int, int, int]] = []  # (pivot, row, combo mask)
    for j, row in enumerate(code.pcheck.rows):
        w, mask = row, 1 << j
        for p, rr, mm in reduced:
            if (w >> p) & 1:
                w ^= rr
                mask ^= mm
        pivot = (w & -w).bit_length() - 1
        reduced = [
            (p, rr ^ w, mm ^ mask) if (rr >> pivot) & 1 else (p, rr, mm)
            for p, rr, mm in reduced
        ]
        reduced.append((pivot, w, mask))
        reduced.sort()

    def solve(word: BitVec) -> int:
        if word.n != code.n:
            raise ValueError("length mismatch")
        w, x = word.word, 0
        for p, rr, mm in reduced:
            if (w >> p) & 1:
                w ^= rr
                x ^= mm
        if w:
            raise ValueError(f"{word} is not in the dual code")
        return x

    return solve


def make_code(matrix: BitMatrix, which: str = "gen") -> LinearCode:
    """Build a code from a generator or parity-check matrix.

    Dependent input rows are accepted (a row basis is extracted); a
    rank-zero input raises RankDeficient.  Full-rank inputs are kept
    verbatim so file round trips are byte-identical.
    """
    if which not in ("gen", "pcheck"):
        raise ValueError("which must be 'gen' or 'pcheck'")
    r = rank(matrix)
    if r == 0:
        raise RankDeficient("input matrix has rank 0")
    if r < matrix.nrows:
        matrix = row_basis(matrix)
    other = kernel_basis(matrix)
    if which == "gen":
        return LinearCode(gen=matrix, pcheck=other)
    return LinearCode(gen=other, pcheck=matrix)


def dual(code: LinearCode) -> LinearCode:
    return LinearCode(gen=code.pcheck, pcheck=code.gen)


def codewords(code: LinearCode):
    """All 2^k codewords as packed ints, Gray-code order (k <= 24)."""
    if code.k > MAX_ENUM_DIM:
        raise TooLarge(f"2^{code.k} codewords is beyond the enumeration gate")
    w = 0
    yield 0
    for m in range(1, 1 << code.k):
        w ^= code.gen.rows[(m & -m).bit_length() - 1]
        yield w


def dual_words(code: LinearCode):
    """All 2^(n-k) dual codewords as packed ints, Gray-code order."""
    if code.h > MAX_ENUM_DIM:
        raise TooLarge(f"2^{code.h} dual words is beyond the enumeration gate")
    w = 0
    yield 0
    for m in range(1, 1 << code.h):
        w ^= code.pcheck.rows[(m & -m).bit_length() - 1]
        yield w


def pcheck_columns(code: LinearCode) -> list[BitVec]:
    """The n syndrome images of e_1..e_n (columns of pcheck), h >= 1."""
    return [code.pcheck.col(i) for i in range(code.n)]


def min_distance(code: LinearCode) -> int:
    """Exact minimum nonzero codeword weight.

    Enumerates codewords when k <= n-k, otherwise uses the fact that the
    distance is the smallest dependency among the pcheck columns.
    Convention: the zero code [n, 0] gets n+1 (no nonzero codeword).
    """
    if code.k == 0:
        return code.n + 1
    if code.k == code.n:
        return 1
    if min(code.k, code.h) > MAX_ENUM_DIM:
        raise TooLarge("both 2^k and 2^(n-k) exceed the enumeration gate")
    if code.k <= code.h:
        return min(w.bit_count() for w in codewords(code) if w)
    return independence_width(pcheck_columns(code))


def dual_distance(code: LinearCode) -> int:
    return min_distance(dual(code))


@dataclass
class CosetTable:
    """Coset-leader weights of F2^n / C indexed by packed syndrome."""

    code: LinearCode
    leader_weight: list[int]
    leader_word: list[int]
    covering_radius: int

    def leader(self, syndrome: int) -> BitVec:
        return BitVec(self.leader_word[syndrome], self.code.n)


def coset_table(code: LinearCode) -> CosetTable:
    """BFS over the syndrome space using the pcheck columns as steps."""
    if code.h > MAX_SYNDROME_DIM:
        raise TooLarge(f"2^{code.h} syndromes is beyond the table gate")
    if code.h == 0:
        return CosetTable(code, [0], [0], 0)
    cols = [c.word for c in pcheck_columns(code)]
    dist, via = syndrome_bfs(cols, code.h)
    if any(d < 0 for d in dist):
        raise ValueError("pcheck columns do not span the syndrome space")
    words = [0] * (1 << code.h)
    order = sorted(range(1 << code.h), key=dist.__getitem__)
    for s in order:
        if s == 0:
            continue
        j = via[s]
        words[s] = words[s ^ cols[j]] | (1 << j)
    return CosetTable(code, dist, words, max(dist))


def dist_to_code(v: BitVec, table: CosetTable) -> int:
    """Hamming distance from v to the code via the coset table."""
    return table.leader_weight[table.code.syndrome_index(v)]


def brute_dist_to_code(v: BitVec, code: LinearCode) -> int:
    """Exhaustive min over all codewords (test oracle)."""
    return min((v.word ^ c).bit_count() for c in codewords(code))


def minimum_weight_dual_words(code: LinearCode) -> list[BitVec]:
    """Nonzero dual words of minimal weight, sorted by packed value."""
    best = None
    found: list[int] = []
    for w in dual_words(code):
        if w == 0:
            continue
        wt = w.bit_count()
        if best is None or wt < best:
            best, found = wt, [w]
        elif wt == best:
            found.append(w)
    return [BitVec(w, code.n) for w in sorted(found)]


# ---------------------------------------------------------------------------
# Code zoo


def repetition_code(n: int) -> LinearCode:
    """[n, 1, n] repetition code."""
    return make_code(BitMatrix(((1 << n) - 1,), n), "gen")


def parity_code(n: int) -> LinearCode:
    """[n, n-1, 2] even-weight code."""
    return make_code(BitMatrix(((1 << n) - 1,), n), "pcheck")


def full_code(n: int) -> LinearCode:
    """[n, n, 1] full space."""
    return make_code(BitMatrix.identity(n), "gen")


def zero_code(n: int) -> LinearCode:
    """[n, 0] zero code."""
    return make_code(BitMatrix.identity(n), "pcheck")


def hamming74() -> LinearCode:
    """[7, 4, 3] Hamming code; pcheck column i is the binary of i+1."""
    rows = []
    for j in range(3):
        r = 0
        for i in range(1, 8):
            if (i >> j) & 1:
                r |= 1 << (i - 1)
        rows.append(r)
    return make_code(BitMatrix(tuple(rows), 7), "pcheck")


def ext_hamming84() -> LinearCode:
    """[8, 4, 4] extended Hamming code (overall parity bit appended)."""
    base = hamming74().pcheck
    rows = tuple(base.rows) + (0xFF,)
    return make_code(BitMatrix(rows, 8), "pcheck")


def reed_muller(r: int, m: int) -> LinearCode:
    """RM(r, m): evaluations of degree-<=r monomials over F2^m (m <= 5)."""
    if not 0 <= r <= m:
        raise ValueError("need 0 <= r <= m")
    if m > 5:
        raise TooLarge("reed_muller supports m <= 5")
    n = 1 << m
    rows = []
    for size in range(r + 1):
        for combo in combinations(range(m), size):
            row = 0
            for x in range(n):
                if all((x >> i) & 1 for i in combo):
                    row |= 1 << x
            rows.append(row)
    return make_code(BitMatrix(tuple(rows), n), "gen")


def random_code(n: int, k: int, seed: int) -> LinearCode:
    """Seeded random [n, k] code (generator rows resampled to full rank)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    rng = random.Random(seed)
    while True:
        rows = tuple(rng.getrandbits(n) for _ in range(k))
        m = BitMatrix(rows, n)
        if rank(m) == k:
            return make_code(m, "gen")


def uniform(items: list[BitVec]) -> list[tuple[BitVec, Fraction]]:
    p = Fraction(1, len(items))
    return [(w, p) for w in items]
