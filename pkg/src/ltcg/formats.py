"""Text file formats: matrices, codes, testers, graphs, spectrum
generators and cut embeddings.

All formats are line-oriented ASCII with newline-terminated lines;
probabilities are written as exact "p/q" rationals.  serialize(parse(s))
is byte-identical for every format.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .cayley import CayleyGraph
from .codes import LinearCode, make_code
from .embed import CutEmbedding
from .f2core import BitMatrix, BitVec
from .spectrum import SpectrumGenerator
from .testers import Tester


class FormatError(Exception):
    pass


def _frac(tok: str) -> Fraction:
    if "/" not in tok:
        raise FormatError(f"probability {tok!r} is not of the form p/q")
    p, q = tok.split("/")
    return Fraction(int(p), int(q))


def _frac_str(p) -> str:
    if isinstance(p, Fraction):
        return f"{p.numerator}/{p.denominator}"
    if isinstance(p, int):
        return f"{p}/1"
    return repr(p)


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


# -- matrix -----------------------------------------------------------------

def dump_matrix(m: BitMatrix) -> str:
    out = [f"{m.nrows} {m.ncols}"]
    out.extend(m.row_strs())
    return "\n".join(out) + "\n"


def parse_matrix(text: str) -> BitMatrix:
    lines = _lines(text)
    try:
        nrows, ncols = map(int, lines[0].split())
    except (ValueError, IndexError) as exc:
        raise FormatError("matrix header must be 'nrows ncols'") from exc
    if len(lines) != 1 + nrows:
        raise FormatError(f"expected {nrows} rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        if len(line) != ncols:
            raise FormatError(f"row {line!r} is not {ncols} bits")
        rows.append(BitVec.from_str(line).word)
    return BitMatrix(tuple(rows), ncols)


# -- code -------------------------------------------------------------------

def dump_code(code: LinearCode, which: str = "pcheck") -> str:
    m = code.pcheck if which == "pcheck" else code.gen
    out = [f"code {code.n} {code.k}", which]
    out.extend(m.row_strs())
    return "\n".join(out) + "\n"


def parse_code(text: str) -> LinearCode:
    lines = _lines(text)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "code":
        raise FormatError("code header must be 'code n k'")
    n, k = int(head[1]), int(head[2])
    which = lines[1]
    if which not in ("gen", "pcheck"):
        raise FormatError("second line must be 'gen' or 'pcheck'")
    rows = lines[2:]
    expect = k if which == "gen" else n - k
    if len(rows) != expect:
        raise FormatError(f"expected {expect} matrix rows, found {len(rows)}")
    if any(len(r) != n for r in rows):
        raise FormatError("matrix row width differs from n")
    code = make_code(BitMatrix.from_strs(rows), which)
    if code.n != n or code.k != k:
        raise FormatError(f"matrix gives [{code.n},{code.k}], header says [{n},{k}]")
    return code


# -- tester -----------------------------------------------------------------

def dump_tester(t: Tester, code_filename: str) -> str:
    out = [f"tester {code_filename}"]
    for word, prob in t.support:
        out.append(f"{_frac_str(prob)} {word.to01()}")
    return "\n".join(out) + "\n"


def parse_tester(text: str, code: LinearCode) -> Tester:
    lines = _lines(text)
    if not lines or not lines[0].startswith("tester "):
        raise FormatError("tester header must be 'tester <codefile>'")
    support = []
    for line in lines[1:]:
        try:
            prob_tok, word_tok = line.split()
        except ValueError as exc:
            raise FormatError(f"bad tester line {line!r}") from exc
        support.append((BitVec.from_str(word_tok), _frac(prob_tok)))
    return Tester(code, tuple(support))


def tester_code_reference(text: str) -> str:
    lines = _lines(text)
    if not lines or not lines[0].startswith("tester "):
        raise FormatError("tester header must be 'tester <codefile>'")
    return lines[0].split(maxsplit=1)[1]


def load_tester(path: str | Path) -> Tester:
    """Read a tester file, resolving its code file relative to it."""
    path = Path(path)
    text = path.read_text()
    code_path = path.parent / tester_code_reference(text)
    code = parse_code(code_path.read_text())
    return parse_tester(text, code)


# -- cayley graph -----------------------------------------------------------

def dump_graph(g: CayleyGraph) -> str:
    out = [f"cayley {g.h}"]
    if g.gens is not None and _gens_match_dist(g):
        for gen in g.gens:
            out.append(f"gen {BitVec(gen, g.h).to01()}")
    else:
        for v, p in g.dist:
            out.append(f"mass {_frac_str(p)} {BitVec(v, g.h).to01()}")
    return "\n".join(out) + "\n"


def _gens_match_dist(g: CayleyGraph) -> bool:
    acc: dict[int, Fraction] = {}
    p = Fraction(1, len(g.gens))
    for gen in g.gens:
        acc[gen] = acc.get(gen, Fraction(0)) + p
    return acc == dict(g.dist)


def parse_graph(text: str) -> CayleyGraph:
    lines = _lines(text)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "cayley":
        raise FormatError("graph header must be 'cayley h'")
    h = int(head[1])
    gens: list[int] = []
    dist: list[tuple[int, Fraction]] = []
    for line in lines[1:]:
        toks = line.split()
        if toks[0] == "gen" and len(toks) == 2:
            gens.append(BitVec.from_str(toks[1]).word)
        elif toks[0] == "mass" and len(toks) == 3:
            dist.append((BitVec.from_str(toks[2]).word, _frac(toks[1])))
        else:
            raise FormatError(f"bad graph line {line!r}")
    if gens and dist:
        raise FormatError("graph file mixes gen and mass lines")
    if gens:
        from .cayley import graph_from_gens

        return graph_from_gens(h, gens)
    return CayleyGraph(h=h, dist=tuple(dist))


# -- spectrum generator -------------------------------------------------------

def dump_sg(sg: SpectrumGenerator) -> str:
    out = [f"sg {sg.h} {sg.n}"]
    out.extend(b.to01() for b in sg.functionals)
    return "\n".join(out) + "\n"


def parse_sg(text: str) -> SpectrumGenerator:
    lines = _lines(text)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "sg":
        raise FormatError("sg header must be 'sg h n'")
    h, n = int(head[1]), int(head[2])
    if len(lines) != 1 + n:
        raise FormatError(f"expected {n} functional rows, found {len(lines) - 1}")
    funcs = tuple(BitVec.from_str(line) for line in lines[1:])
    if any(b.n != h for b in funcs):
        raise FormatError("functional width differs from h")
    return SpectrumGenerator(h=h, functionals=funcs)


# -- cut embedding ------------------------------------------------------------

def dump_embedding(e: CutEmbedding) -> str:
    out = [f"embed {e.h}"]
    for table, prob in e.functions:
        out.append(f"{_frac_str(prob)} " + "".join("+" if v == 1 else "-" for v in table))
    return "\n".join(out) + "\n"


def parse_embedding(text: str) -> CutEmbedding:
    lines = _lines(text)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "embed":
        raise FormatError("embedding header must be 'embed h'")
    h = int(head[1])
    functions = []
    for line in lines[1:]:
        prob_tok, table_tok = line.split()
        table = tuple(1 if ch == "+" else -1 for ch in table_tok)
        if any(ch not in "+-" for ch in table_tok):
            raise FormatError(f"bad table characters in {line!r}")
        functions.append((table, _frac(prob_tok)))
    return CutEmbedding(h=h, functions=tuple(functions))
