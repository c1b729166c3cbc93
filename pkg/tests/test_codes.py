import random
from fractions import Fraction

import pytest

from ltcg import codes
from ltcg.codes import (
    CosetTable,
    RankDeficient,
    TooLarge,
    brute_dist_to_code,
    coset_table,
    dist_to_code,
    dual,
    dual_distance,
    make_code,
    min_distance,
)
from ltcg.f2core import BitMatrix, BitVec


def brute_min_distance(code):
    return min(w.bit_count() for w in codes.codewords(code) if w)


# -- make_code ----------------------------------------------------------------

def test_repetition_from_gen():
    c = codes.repetition_code(3)
    assert (c.n, c.k) == (3, 1)
    # pcheck rows span the even-weight space in F2^3
    spanned = {0}
    for r in c.pcheck.rows:
        spanned |= {s ^ r for s in spanned}
    assert spanned == {0b000, 0b011, 0b101, 0b110}


def test_hamming_from_pcheck():
    c = codes.hamming74()
    assert (c.n, c.k) == (7, 4)
    cols = {c.pcheck.col(i).word for i in range(7)}
    assert cols == set(range(1, 8))
    # Oracle: enumerate codewords against the parity checks.
    members = [
        w for w in range(1 << 7)
        if all(((w & p).bit_count() & 1) == 0 for p in c.pcheck.rows)
    ]
    assert len(members) == 16
    assert set(codes.codewords(c)) == set(members)


def test_full_space_code():
    c = codes.full_code(4)
    assert (c.n, c.k, c.h) == (4, 4, 0)
    assert c.pcheck.nrows == 0


def test_make_code_extracts_basis_from_dependent_rows():
    m = BitMatrix.from_strs(["110", "011", "101"])  # rank 2
    c = make_code(m, "gen")
    assert c.k == 2


def test_make_code_rank_zero_rejected():
    with pytest.raises(RankDeficient):
        make_code(BitMatrix((0, 0), 4), "gen")


def test_make_code_keeps_full_rank_input_verbatim():
    m = BitMatrix.from_strs(["1101", "0110"])
    c = make_code(m, "pcheck")
    assert c.pcheck == m


def test_dual_dual_is_identity():
    c = codes.hamming74()
    assert dual(dual(c)) == c


# -- min_distance ---------------------------------------------------------------

def test_min_distance_examples():
    assert min_distance(codes.repetition_code(3)) == 3
    assert min_distance(codes.hamming74()) == 3
    assert min_distance(codes.parity_code(4)) == 2


def test_min_distance_both_paths_agree():
    rng = random.Random(4)
    for _ in range(20):
        n = rng.randint(2, 10)
        k = rng.randint(1, n - 1)
        c = codes.random_code(n, k, rng.randint(0, 10**6))
        assert min_distance(c) == brute_min_distance(c)


def test_min_distance_degenerate():
    assert min_distance(codes.full_code(5)) == 1
    assert min_distance(codes.zero_code(5)) == 6


def test_min_distance_too_large():
    c = codes.random_code(52, 26, 0)
    with pytest.raises(TooLarge):
        min_distance(c)


def test_hamming_dual_distance_is_4():
    # Oracle: all 8 simplex words, nonzero ones have weight 4.
    c = codes.hamming74()
    weights = {w.bit_count() for w in codes.dual_words(c) if w}
    assert weights == {4}
    assert dual_distance(c) == 4


def test_reed_muller_parameters():
    rm13 = codes.reed_muller(1, 3)
    assert (rm13.n, rm13.k, min_distance(rm13)) == (8, 4, 4)
    rm14 = codes.reed_muller(1, 4)
    assert (rm14.n, rm14.k, min_distance(rm14)) == (16, 5, 8)
    rm24 = codes.reed_muller(2, 4)
    assert (rm24.n, rm24.k, min_distance(rm24)) == (16, 11, 4)


def test_ext_hamming_parameters():
    c = codes.ext_hamming84()
    assert (c.n, c.k, min_distance(c), dual_distance(c)) == (8, 4, 4, 4)


# -- coset table ----------------------------------------------------------------

def test_coset_table_hamming_perfect():
    c = codes.hamming74()
    tbl = coset_table(c)
    assert tbl.leader_weight[0] == 0
    assert all(tbl.leader_weight[s] == 1 for s in range(1, 8))
    assert tbl.covering_radius == 1


def test_coset_table_rep4():
    tbl = coset_table(codes.repetition_code(4))
    assert sorted(tbl.leader_weight) == [0, 1, 1, 1, 1, 2, 2, 2]
    assert tbl.covering_radius == 2


def test_coset_table_full_space():
    tbl = coset_table(codes.full_code(3))
    assert tbl.leader_weight == [0]
    assert tbl.covering_radius == 0


def test_leader_words_match_weights_and_syndromes():
    for c in [codes.hamming74(), codes.repetition_code(4), codes.parity_code(5)]:
        tbl = coset_table(c)
        for s in range(1 << c.h):
            leader = tbl.leader(s)
            assert c.syndrome_index(leader) == s
            assert leader.weight() == tbl.leader_weight[s]


def test_dist_to_code_examples():
    c = codes.hamming74()
    tbl = coset_table(c)
    for w in codes.codewords(c):
        assert dist_to_code(BitVec(w, 7), tbl) == 0
    assert dist_to_code(BitVec.basis(0, 7), tbl) == 1
    rep4 = codes.repetition_code(4)
    assert dist_to_code(BitVec.from_str("1100"), coset_table(rep4)) == 2


def test_dist_to_code_matches_brute_force(corpus):
    for entry in corpus:
        c = entry.code
        if c.n > 12:
            continue
        tbl = coset_table(c)
        for w in range(1 << c.n):
            v = BitVec(w, c.n)
            assert dist_to_code(v, tbl) == brute_dist_to_code(v, c)


def test_covering_radius_is_max_distance(corpus):
    for entry in corpus:
        c = entry.code
        if c.n > 12:
            continue
        tbl = coset_table(c)
        assert tbl.covering_radius == max(
            brute_dist_to_code(BitVec(w, c.n), c) for w in range(1 << c.n)
        )


def test_min_distance_dual_dual(corpus):
    for entry in corpus:
        assert min_distance(dual(dual(entry.code))) == min_distance(entry.code)


# -- dual coordinates -------------------------------------------------------------

def test_dual_coords_roundtrip():
    rng = random.Random(8)
    for c in [codes.hamming74(), codes.reed_muller(2, 4), codes.random_code(9, 4, 3)]:
        for _ in range(30):
            x = rng.randrange(1 << c.h)
            w = c.word_from_dual_coords(x)
            assert c.is_dual_word(w)
            assert c.dual_coords(w) == x


def test_dual_coords_rejects_non_dual_word():
    c = codes.hamming74()
    with pytest.raises(ValueError):
        c.dual_coords(BitVec.basis(0, 7))


def test_minimum_weight_dual_words():
    c = codes.hamming74()
    words = codes.minimum_weight_dual_words(c)
    assert len(words) == 7
    assert all(w.weight() == 4 for w in words)
