"""Shared randomized generators for the property tests (all seeded)."""

from __future__ import annotations

import random
from fractions import Fraction

from ltcg.codes import LinearCode
from ltcg.embed import CutEmbedding
from ltcg.f2core import BitVec
from ltcg.testers import Tester, make_tester


def random_tester(code: LinearCode, rng: random.Random, max_support: int = 8,
                  allow_zero_word: bool = True) -> Tester:
    size = 1 << code.h
    m = rng.randint(1, min(max_support, size))
    lo = 0 if allow_zero_word else 1
    coords = rng.sample(range(lo, size), m)
    weights = [rng.randint(1, 9) for _ in coords]
    total = sum(weights)
    support = [
        (code.word_from_dual_coords(x), Fraction(w, total))
        for x, w in zip(coords, weights)
    ]
    return make_tester(code, support)


def random_cut_embedding(h: int, rng: random.Random, max_tables: int = 4) -> CutEmbedding:
    size = 1 << h
    m = rng.randint(1, max_tables)
    weights = [rng.randint(1, 9) for _ in range(m)]
    total = sum(weights)
    functions = []
    for w in weights:
        bits = rng.getrandbits(size)
        table = tuple(1 - 2 * ((bits >> i) & 1) for i in range(size))
        functions.append((table, Fraction(w, total)))
    return CutEmbedding(h=h, functions=tuple(functions))


def random_bitvec(n: int, rng: random.Random) -> BitVec:
    return BitVec(rng.getrandbits(n), n)
