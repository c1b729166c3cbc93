"""Packed bit-vector and bit-matrix arithmetic over F2.

Vectors are packed little-endian into Python ints: coordinate i of a
vector is bit i of the word.  All arithmetic is mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

MAX_CODEWORD_LEN = 4096
MAX_GROUP_DIM = 64

# Enumerating half-subsets is exact and cheap up to this many generators;
# beyond it we fall back to per-position syndrome BFS.
_MITM_LIMIT = 24


class NotInSpan(Exception):
    """Target vector cannot be written as a sum of the given generators."""


@dataclass(frozen=True)
class BitVec:
    """Fixed-length F2 vector; coordinate i is bit i of ``word``."""

    word: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_CODEWORD_LEN:
            raise ValueError(f"vector length {self.n} outside 1..{MAX_CODEWORD_LEN}")
        if self.word < 0 or self.word >> self.n:
            raise ValueError("word has bits set beyond the stated length")

    @classmethod
    def zero(cls, n: int) -> "BitVec":
        return cls(0, n)

    @classmethod
    def basis(cls, i: int, n: int) -> "BitVec":
        """Standard basis vector e_i (0-indexed)."""
        return cls(1 << i, n)

    @classmethod
    def from_str(cls, s: str) -> "BitVec":
        """Parse a 0/1 string; the first character is coordinate 0."""
        word = 0
        for i, ch in enumerate(s):
            if ch == "1":
                word |= 1 << i
            elif ch != "0":
                raise ValueError(f"bad bit character {ch!r}")
        return cls(word, len(s))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVec":
        word = 0
        for i, b in enumerate(bits):
            if b & 1:
                word |= 1 << i
        return cls(word, len(bits))

    def to01(self) -> str:
        return "".join("1" if (self.word >> i) & 1 else "0" for i in range(self.n))

    def __str__(self) -> str:
        return self.to01()

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.word >> i) & 1

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVec(self.word ^ other.word, self.n)

    def weight(self) -> int:
        return self.word.bit_count()

    def dot(self, other: "BitVec") -> int:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return (self.word & other.word).bit_count() & 1

    def is_zero(self) -> bool:
        return self.word == 0


@dataclass(frozen=True)
class BitMatrix:
    """Matrix over F2, each row packed as in BitVec.  nrows may be 0."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        if self.ncols < 1:
            raise ValueError("matrix must have at least one column")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ValueError("row has bits set beyond ncols")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_strs(cls, rows: Sequence[str]) -> "BitMatrix":
        if not rows:
            raise ValueError("cannot infer ncols from an empty row list")
        vecs = [BitVec.from_str(r) for r in rows]
        ncols = vecs[0].n
        if any(v.n != ncols for v in vecs):
            raise ValueError("ragged rows")
        return cls(tuple(v.word for v in vecs), ncols)

    @classmethod
    def from_bitvecs(cls, vecs: Sequence[BitVec], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            if not vecs:
                raise ValueError("ncols required for an empty matrix")
            ncols = vecs[0].n
        if any(v.n != ncols for v in vecs):
            raise ValueError("ragged rows")
        return cls(tuple(v.word for v in vecs), ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    def row(self, i: int) -> BitVec:
        return BitVec(self.rows[i], self.ncols)

    def col(self, j: int) -> BitVec:
        """Column j packed with row index as coordinate (nrows >= 1)."""
        if self.nrows == 0:
            raise ValueError("empty matrix has no columns to extract")
        word = 0
        for i, r in enumerate(self.rows):
            if (r >> j) & 1:
                word |= 1 << i
        return BitVec(word, self.nrows)

    def mul_vec(self, v: BitVec) -> BitVec:
        """Matrix-vector product over F2 (nrows >= 1)."""
        if v.n != self.ncols:
            raise ValueError("length mismatch")
        if self.nrows == 0:
            raise ValueError("empty matrix product is a length-0 vector")
        word = 0
        for i, r in enumerate(self.rows):
            if (r & v.word).bit_count() & 1:
                word |= 1 << i
        return BitVec(word, self.nrows)

    def row_strs(self) -> list[str]:
        return [self.row(i).to01() for i in range(self.nrows)]


def _rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    work = list(rows)
    pivots: list[int] = []
    pivot_row = 0
    for col in range(ncols):
        found = -1
        for r in range(pivot_row, len(work)):
            if (work[r] >> col) & 1:
                found = r
                break
        if found < 0:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        for r in range(len(work)):
            if r != pivot_row and ((work[r] >> col) & 1):
                work[r] ^= work[pivot_row]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(work):
            break
    return work[: len(pivots)], pivots


def rank(m: BitMatrix) -> int:
    """F2 row rank via Gaussian elimination."""
    _, pivots = _rref(m.rows, m.ncols)
    return len(pivots)


def row_basis(m: BitMatrix) -> BitMatrix:
    """Deterministic full-rank basis of the row space (RREF rows)."""
    rows, _ = _rref(m.rows, m.ncols)
    return BitMatrix(tuple(rows), m.ncols)


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of the right kernel {v : m v = 0}, one row per free column."""
    rref_rows, pivots = _rref(m.rows, m.ncols)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = 1 << f
        for row, p in zip(rref_rows, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return BitMatrix(tuple(basis), m.ncols)


def in_row_space(m: BitMatrix, v: BitVec) -> bool:
    base, pivots = _rref(m.rows, m.ncols)
    w = v.word
    for row, p in zip(base, pivots):
        if (w >> p) & 1:
            w ^= row
    return w == 0


def _half_sums(vs: Sequence[int]) -> tuple[dict[int, int], int | None]:
    """Min subset size per XOR sum (empty included), plus the smallest
    NONEMPTY zero-sum subset size, which the min-per-sum map cannot hold
    (the empty subset always wins the slot for sum 0)."""
    sums = {0: 0}
    best_zero: int | None = None
    for v in vs:
        nxt = dict(sums)
        for s, sz in sums.items():
            t = s ^ v
            cand = sz + 1
            if t == 0 and (best_zero is None or cand < best_zero):
                best_zero = cand
            if t not in nxt or cand < nxt[t]:
                nxt[t] = cand
        sums = nxt
    return sums, best_zero


def _width_mitm(words: Sequence[int]) -> int | None:
    """Smallest nonempty subset of positions XOR-ing to 0, or None."""
    half = len(words) // 2
    left, left_zero = _half_sums(words[:half])
    right, right_zero = _half_sums(words[half:])
    best: int | None = None
    for cand in (left_zero, right_zero):
        if cand is not None and (best is None or cand < best):
            best = cand
    for s, sz in left.items():
        if s == 0:
            continue
        other = right.get(s)
        if other is None:
            continue
        if best is None or sz + other < best:
            best = sz + other
    return best


def _width_bfs(words: Sequence[int]) -> int | None:
    """Per-position syndrome BFS fallback for long generator lists.

    For each position i, 1 + shortest representation of words[i] from the
    other positions; minimal nonzero-target representations never reuse a
    position, so the union is a genuine subset dependency.
    """
    best: int | None = None
    for i, target in enumerate(words):
        gens = [w for j, w in enumerate(words) if j != i]
        dist = {0: 0}
        frontier = [0]
        d = 0
        found = None
        while frontier and found is None:
            d += 1
            if best is not None and 1 + d >= best:
                break
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x ^ g
                    if y not in dist:
                        dist[y] = d
                        if y == target:
                            found = d
                        nxt.append(y)
            frontier = nxt
        if found is not None and (best is None or 1 + found < best):
            best = 1 + found
    return best


def independence_width(vs: Sequence[BitVec]) -> int:
    """Largest d such that vs is d-wise independent.

    Equals the size of the smallest linearly dependent subset of the list
    (the zero vector is a size-1 dependency, a duplicated vector a size-2
    one), or len(vs)+1 if the list is fully independent.
    """
    if not vs:
        raise ValueError("empty generator list")
    words = [v.word for v in vs]
    if any(w == 0 for w in words):
        return 1
    if len(set(words)) < len(words):
        return 2
    if len(words) <= _MITM_LIMIT:
        best = _width_mitm(words)
    else:
        best = _width_bfs(words)
    return best if best is not None else len(vs) + 1


def fully_independent(vs: Sequence[BitVec]) -> bool:
    """True when no subset of vs is linearly dependent."""
    return independence_width(vs) == len(vs) + 1


def rank_wrt(target: BitVec, gens: Sequence[BitVec]) -> int:
    """Minimal number of generators summing to target (BFS from 0)."""
    if not gens:
        raise ValueError("empty generator list")
    if any(g.n != target.n for g in gens):
        raise ValueError("length mismatch")
    if target.word == 0:
        return 0
    steps = sorted({g.word for g in gens} - {0})
    dist = {0: 0}
    frontier = [0]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for g in steps:
                y = x ^ g
                if y not in dist:
                    if y == target.word:
                        return d
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    raise NotInSpan(f"target {target} not in the span of the generators")


def syndrome_bfs(gen_words: Sequence[int], h: int) -> tuple[list[int], list[int]]:
    """BFS over F2^h from 0 with the given generator steps.

    Returns (dist, via): dist[x] is the minimal number of generators
    summing to x (-1 if unreachable); via[x] is the index of the generator
    used on the last BFS step (-1 at the origin / unreachable).
    """
    size = 1 << h
    dist = [-1] * size
    via = [-1] * size
    dist[0] = 0
    frontier = [0]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for j, g in enumerate(gen_words):
                y = x ^ g
                if dist[y] < 0:
                    dist[y] = d
                    via[y] = j
                    nxt.append(y)
        frontier = nxt
    return dist, via


def brute_min_dependency(vs: Sequence[BitVec], max_size: int | None = None) -> int | None:
    """Exhaustive smallest-dependent-subset search (test oracle)."""
    limit = len(vs) if max_size is None else min(max_size, len(vs))
    for size in range(1, limit + 1):
        for combo in combinations(range(len(vs)), size):
            acc = 0
            for i in combo:
                acc ^= vs[i].word
            if acc == 0:
                return size
    return None


def fwht(vals: Iterable) -> list:
    """Walsh-Hadamard transform of a length-2^h sequence.

    out[b] = sum_x vals[x] * (-1)^<b,x>.  Works for any numeric type with
    + and - (ints and Fractions stay exact); applying it twice multiplies
    by 2^h.
    """
    a = list(vals)
    n = len(a)
    if n & (n - 1):
        raise ValueError("length must be a power of two")
    step = 1
    while step < n:
        for i in range(0, n, step * 2):
            for j in range(i, i + step):
                u, v = a[j], a[j + step]
                a[j] = u + v
                a[j + step] = u - v
        step *= 2
    return a
