"""The standard code zoo with canonical testers.

Every identity in the test suite is quantified over this corpus: a fixed
set of small codes (repetition, parity, Hamming, extended Hamming, three
Reed-Muller codes, seeded random codes) each carrying a minimum-weight
uniform tester, the uniform tester on all nonzero dual words, and a
diluted variant with 7/8 of the mass parked on the zero word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .codes import (
    LinearCode,
    dual_words,
    ext_hamming84,
    hamming74,
    minimum_weight_dual_words,
    parity_code,
    random_code,
    reed_muller,
    repetition_code,
)
from .f2core import BitVec
from .testers import Tester, diluted_tester, uniform_tester
from . import formats


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    code: LinearCode
    testers: tuple[tuple[str, Tester], ...]

    def tester(self, name: str) -> Tester:
        for tname, t in self.testers:
            if tname == name:
                return t
        raise KeyError(name)


def min_weight_tester(code: LinearCode) -> Tester:
    return uniform_tester(code, minimum_weight_dual_words(code))


def all_dual_tester(code: LinearCode) -> Tester:
    words = [BitVec(w, code.n) for w in sorted(dual_words(code)) if w]
    return uniform_tester(code, words)


def canonical_testers(code: LinearCode) -> tuple[tuple[str, Tester], ...]:
    minw = min_weight_tester(code)
    out = [
        ("minw", minw),
        ("dual", all_dual_tester(code)),
        ("dil", diluted_tester(minw, Fraction(1, 8))),
    ]
    return tuple(out)


_RANDOM_SPECS = (("rand_10_5", 10, 5, 20240811), ("rand_12_8", 12, 8, 7), ("rand_9_4", 9, 4, 99))


def standard_codes() -> list[tuple[str, LinearCode]]:
    codes = [
        ("rep3", repetition_code(3)),
        ("rep4", repetition_code(4)),
        ("parity5", parity_code(5)),
        ("hamming74", hamming74()),
        ("exthamming84", ext_hamming84()),
        ("rm13", reed_muller(1, 3)),
        ("rm14", reed_muller(1, 4)),
        ("rm24", reed_muller(2, 4)),
    ]
    for name, n, k, seed in _RANDOM_SPECS:
        codes.append((name, random_code(n, k, seed)))
    return codes


def standard_corpus() -> list[CorpusEntry]:
    return [
        CorpusEntry(name=name, code=code, testers=canonical_testers(code))
        for name, code in standard_codes()
    ]


def diluted_hamming_tester() -> Tester:
    """The canonical dilution: 7/64 of the mass uniform on the simplex
    words, the rest on zero, so smoothness = soundness = 1/16."""
    return diluted_tester(min_weight_tester(hamming74()), Fraction(7, 64))


def write_corpus(outdir: str | Path) -> list[str]:
    """Emit the zoo as .code and .tester files; returns written names."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in standard_corpus():
        code_name = f"{entry.name}.code"
        (outdir / code_name).write_text(formats.dump_code(entry.code))
        written.append(code_name)
        for tname, tester in entry.testers:
            fname = f"{entry.name}.{tname}.tester"
            (outdir / fname).write_text(formats.dump_tester(tester, code_name))
            written.append(fname)
    return written
