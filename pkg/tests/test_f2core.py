import random
from itertools import combinations

import pytest

from ltcg.f2core import (
    BitMatrix,
    BitVec,
    NotInSpan,
    brute_min_dependency,
    fully_independent,
    fwht,
    independence_width,
    in_row_space,
    kernel_basis,
    rank,
    rank_wrt,
    row_basis,
    syndrome_bfs,
)


def brute_rank(m: BitMatrix) -> int:
    # Largest independent row subset: no nonempty sub-subset XORs to zero.
    best = 0
    for size in range(1, m.nrows + 1):
        for combo in combinations(range(m.nrows), size):
            dependent = False
            for inner_size in range(1, size + 1):
                for inner in combinations(combo, inner_size):
                    acc = 0
                    for i in inner:
                        acc ^= m.rows[i]
                    if acc == 0:
                        dependent = True
            if not dependent:
                best = max(best, size)
    return best


# -- BitVec basics ------------------------------------------------------------

def test_bitvec_str_roundtrip():
    v = BitVec.from_str("10110")
    assert v.word == 0b01101
    assert v.to01() == "10110"
    assert v.weight() == 3
    assert v[0] == 1 and v[1] == 0


def test_bitvec_xor_self_is_zero():
    v = BitVec.from_str("1011")
    assert (v ^ v).is_zero()


def test_bitvec_rejects_out_of_range():
    with pytest.raises(ValueError):
        BitVec(4, 2)
    with pytest.raises(ValueError):
        BitVec(0, 0)


# -- rank ---------------------------------------------------------------------

def test_rank_identity():
    assert rank(BitMatrix.identity(3)) == 3


def test_rank_zero_matrix():
    assert rank(BitMatrix((0, 0), 5)) == 0


def test_rank_dependent_rows():
    m = BitMatrix.from_strs(["1110", "0111", "1001"])
    assert brute_rank(m) == 2
    assert rank(m) == 2


def test_rank_random_vs_brute():
    rng = random.Random(11)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 6)
        m = BitMatrix(tuple(rng.getrandbits(ncols) for _ in range(nrows)), ncols)
        assert rank(m) == brute_rank(m)


def test_rank_deterministic():
    m = BitMatrix.from_strs(["1110", "0111", "1001"])
    assert row_basis(m) == row_basis(m)


# -- kernel -------------------------------------------------------------------

def test_kernel_identity_is_empty():
    kb = kernel_basis(BitMatrix.identity(3))
    assert kb.nrows == 0


def test_kernel_single_row_111():
    m = BitMatrix.from_strs(["111"])
    kb = kernel_basis(m)
    # Oracle: all vectors orthogonal to 111 form the even-weight space.
    expected = {w for w in range(8) if bin(w).count("1") % 2 == 0}
    spanned = {0}
    for r in kb.rows:
        spanned |= {s ^ r for s in spanned}
    assert spanned == expected


def test_kernel_hamming_is_simplex():
    # Oracle: enumerate 2^7 vectors against the 4 generator rows.
    gen = BitMatrix.from_strs(["1000011", "0100101", "0010110", "0001111"])
    kb = kernel_basis(gen)
    assert kb.nrows == 3
    members = [
        w for w in range(1 << 7)
        if all(((w & g).bit_count() & 1) == 0 for g in gen.rows)
    ]
    spanned = {0}
    for r in kb.rows:
        spanned |= {s ^ r for s in spanned}
    assert spanned == set(members)
    assert all(w.bit_count() == 4 for w in spanned if w)


def test_rank_nullity_random():
    rng = random.Random(5)
    for _ in range(50):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 8)
        m = BitMatrix(tuple(rng.getrandbits(ncols) for _ in range(nrows)), ncols)
        kb = kernel_basis(m)
        assert rank(m) + kb.nrows == ncols
        for kr in kb.rows:
            assert all(((kr & r).bit_count() & 1) == 0 for r in m.rows)


def test_in_row_space():
    m = BitMatrix.from_strs(["110", "011"])
    assert in_row_space(m, BitVec.from_str("101"))
    assert not in_row_space(m, BitVec.from_str("100"))


# -- independence width -------------------------------------------------------

def test_width_standard_basis():
    vs = [BitVec.basis(i, 3) for i in range(3)]
    assert independence_width(vs) == 4
    assert fully_independent(vs)


def test_width_hamming_columns():
    vs = [BitVec(i, 3) for i in range(1, 8)]
    assert brute_min_dependency(vs) == 3
    assert independence_width(vs) == 3


def test_width_zero_vector():
    assert independence_width([BitVec.zero(3), BitVec.basis(0, 3)]) == 1


def test_width_duplicate():
    v = BitVec.from_str("101")
    assert independence_width([v, BitVec.from_str("011"), v]) == 2


def test_width_random_vs_brute():
    rng = random.Random(23)
    for _ in range(60):
        n, dim = rng.randint(1, 7), rng.randint(1, 5)
        vs = [BitVec(rng.getrandbits(dim) or rng.choice([0, 1]), dim) for _ in range(n)]
        brute = brute_min_dependency(vs)
        expected = brute if brute is not None else n + 1
        assert independence_width(vs) == expected


def test_width_bfs_fallback_matches_mitm(monkeypatch):
    import ltcg.f2core as f2

    rng = random.Random(3)
    for _ in range(20):
        n, dim = rng.randint(3, 9), rng.randint(2, 5)
        vs = [BitVec(rng.getrandbits(dim), dim) for _ in range(n)]
        if any(v.word == 0 for v in vs) or len({v.word for v in vs}) < n:
            continue
        assert f2._width_mitm([v.word for v in vs]) == f2._width_bfs([v.word for v in vs])


# -- rank_wrt -----------------------------------------------------------------

def test_rank_wrt_zero_target():
    gens = [BitVec.basis(i, 3) for i in range(3)]
    assert rank_wrt(BitVec.zero(3), gens) == 0


def test_rank_wrt_every_nonzero_is_a_generator():
    gens = [BitVec(i, 3) for i in range(1, 8)]
    for t in range(1, 8):
        assert rank_wrt(BitVec(t, 3), gens) == 1


def test_rank_wrt_needs_two():
    gens = [BitVec.from_str(s) for s in ["100", "010", "001", "111"]]
    # Oracle: enumerate all generator subsets.
    target = BitVec.from_str("110")
    best = None
    for size in range(1, 5):
        for combo in combinations(range(4), size):
            acc = 0
            for i in combo:
                acc ^= gens[i].word
            if acc == target.word:
                best = size if best is None else min(best, size)
    assert best == 2
    assert rank_wrt(target, gens) == 2


def test_rank_wrt_not_in_span():
    with pytest.raises(NotInSpan):
        rank_wrt(BitVec.from_str("001"), [BitVec.from_str("100"), BitVec.from_str("010")])


def test_rank_wrt_matches_exhaustive_subsets():
    rng = random.Random(77)
    for _ in range(30):
        dim = rng.randint(2, 5)
        ngens = rng.randint(1, 6)
        gens = [BitVec(rng.getrandbits(dim), dim) for _ in range(ngens)]
        target = BitVec(rng.getrandbits(dim), dim)
        best = 0 if target.word == 0 else None
        for size in range(1, ngens + 1):
            if best is not None:
                break
            for combo in combinations(range(ngens), size):
                acc = 0
                for i in combo:
                    acc ^= gens[i].word
                if acc == target.word:
                    best = size
                    break
        if best is None:
            with pytest.raises(NotInSpan):
                rank_wrt(target, gens)
        else:
            assert rank_wrt(target, gens) == best


def test_syndrome_bfs_distances():
    dist, via = syndrome_bfs([1, 2, 4], 3)
    assert dist == [0, 1, 1, 2, 1, 2, 2, 3]
    assert via[0] == -1


# -- fwht ---------------------------------------------------------------------

def test_fwht_point_mass():
    out = fwht([1, 0, 0, 0])
    assert out == [1, 1, 1, 1]


def test_fwht_matches_direct_sum():
    rng = random.Random(9)
    h = 4
    vals = [rng.randint(-5, 5) for _ in range(1 << h)]
    out = fwht(vals)
    for b in range(1 << h):
        direct = sum(v * (-1) ** ((b & x).bit_count() & 1) for x, v in enumerate(vals))
        assert out[b] == direct


def test_fwht_self_inverse():
    rng = random.Random(10)
    vals = [rng.randint(-9, 9) for _ in range(32)]
    twice = fwht(fwht(vals))
    assert [v // 32 for v in twice] == vals
    assert all(v % 32 == 0 for v in twice)
