"""Command-line front end.

Every subcommand prints a single JSON report (schema v1) on stdout and
uses the exit code to separate outcomes: 0 for pass, 2 for a violated
identity check, 1 for usage or IO errors.  Diagnostics go to stderr.
Rationals are emitted as "p/q" strings so goldens are platform-stable.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import cayley, codes, corpus, embed, formats, spectrum, testers
from .f2core import BitVec

SCHEMA = "v1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we reserve 2
        raise UsageError(message)


def _frac_arg(tok: str) -> Fraction:
    try:
        if "/" in tok:
            p, q = tok.split("/")
            return Fraction(int(p), int(q))
        return Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {tok!r}") from exc


def jsonable(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _read(path_str: str) -> tuple[Path, str]:
    path = Path(path_str)
    try:
        return path, path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path_str}: {exc}") from exc


def _load_code(path_str: str, inputs: dict) -> codes.LinearCode:
    path, text = _read(path_str)
    inputs[path.name] = _digest(path)
    return formats.parse_code(text)


def _load_tester(path_str: str, inputs: dict, as_float: bool) -> testers.Tester:
    path, text = _read(path_str)
    inputs[path.name] = _digest(path)
    ref = formats.tester_code_reference(text)
    code_path = path.parent / ref
    inputs[code_path.name] = _digest(code_path)
    code = formats.parse_code(code_path.read_text())
    t = formats.parse_tester(text, code)
    if as_float:
        t = testers.Tester(code, tuple((w, float(p)) for w, p in t.support))
    return t


def _load_graph(path_str: str, inputs: dict) -> cayley.CayleyGraph:
    path, text = _read(path_str)
    inputs[path.name] = _digest(path)
    return formats.parse_graph(text)


def _load_sg(path_str: str, inputs: dict) -> spectrum.SpectrumGenerator:
    path, text = _read(path_str)
    inputs[path.name] = _digest(path)
    return formats.parse_sg(text)


def _load_embedding(path_str: str, inputs: dict) -> embed.CutEmbedding:
    path, text = _read(path_str)
    inputs[path.name] = _digest(path)
    return formats.parse_embedding(text)


def _tester_results(t: testers.Tester, table=None, cap=None) -> dict:
    if table is None:
        table = codes.coset_table(t.code)
    rep = testers.soundness(t, table, cap=cap)
    out = {
        "epsilon": rep.epsilon,
        "delta": rep.delta,
        "ratio": rep.ratio,
        "support": [[p, w.to01()] for w, p in t.support],
    }
    if cap is not None:
        out["cap"] = cap
    return out


def build_parser() -> _Parser:
    p = _Parser(prog="ltcg", description=__doc__)
    p.add_argument("--format", choices=["json"], default="json")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("code-info")
    sp.add_argument("codefile")

    sp = sub.add_parser("tester-info")
    sp.add_argument("testerfile")
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("--float", action="store_true", dest="as_float")

    sp = sub.add_parser("boost")
    sp.add_argument("testerfile")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("-o", "--out", default=None)

    sp = sub.add_parser("covradius-boost")
    sp.add_argument("testerfile")
    sp.add_argument("--c", required=True, help="distortion bound, rational p/q")
    sp.add_argument("-o", "--out", default=None)

    sp = sub.add_parser("optimal-tester")
    sp.add_argument("codefile")
    sp.add_argument("--certify", action="store_true")

    sp = sub.add_parser("from-code")
    sp.add_argument("codefile")
    sp.add_argument("-o", "--out", default=None)

    sp = sub.add_parser("to-code")
    sp.add_argument("graphfile")
    sp.add_argument("-o", "--out", default=None)

    sp = sub.add_parser("graph")
    sp.add_argument("what", choices=["spectrum", "metric"])
    sp.add_argument("graphfile")

    sp = sub.add_parser("verify-sg")
    sp.add_argument("graphfile")
    sp.add_argument("sgfile")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--nu", required=True)
    sp.add_argument("--d", type=int, required=True)

    sp = sub.add_parser("sg-from-ltc")
    sp.add_argument("testerfile")
    sp.add_argument("-o", "--out", default=None, help="prefix for .graph/.sg files")

    sp = sub.add_parser("ltc-from-sg")
    sp.add_argument("graphfile")
    sp.add_argument("sgfile")
    sp.add_argument("-o", "--out", default=None, help="prefix for .code/.tester files")

    sp = sub.add_parser("sse-probe")
    sp.add_argument("graphfile")
    sp.add_argument("sgfile")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--nu", required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--sets", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("hypercon")
    sp.add_argument("--h", type=int, default=None, help="use the standard basis of F2^h")
    sp.add_argument("--sg", default=None, help="functional list file (alternative to --h)")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("distortion")
    sp.add_argument("embedfile")
    sp.add_argument("graphfile")

    sp = sub.add_parser("linearize")
    sp.add_argument("embedfile")
    sp.add_argument("codefile")
    sp.add_argument("-o", "--out", default=None)

    sp = sub.add_parser("kn-bound")
    sp.add_argument("codefile")

    sp = sub.add_parser("basis-bound")
    sp.add_argument("testerfile")

    sp = sub.add_parser("corpus")
    sp.add_argument("outdir")

    return p


def _run(args, inputs: dict) -> tuple[dict, bool]:
    cmd = args.command

    if cmd == "code-info":
        code = _load_code(args.codefile, inputs)
        table = codes.coset_table(code)
        return {
            "n": code.n,
            "k": code.k,
            "d": codes.min_distance(code),
            "dual_d": codes.dual_distance(code),
            "t": table.covering_radius,
        }, True

    if cmd == "tester-info":
        t = _load_tester(args.testerfile, inputs, getattr(args, "as_float", False))
        return _tester_results(t, cap=args.cap), True

    if cmd == "boost":
        t = _load_tester(args.testerfile, inputs, False)
        boosted = testers.boost(t, args.ell)
        if args.out:
            Path(args.out).write_text(
                formats.dump_tester(boosted, formats.tester_code_reference(Path(args.testerfile).read_text()))
            )
        out = _tester_results(boosted)
        out["ell"] = args.ell
        return out, True

    if cmd == "covradius-boost":
        t = _load_tester(args.testerfile, inputs, False)
        table = codes.coset_table(t.code)
        c = _frac_arg(args.c)
        boosted = testers.covradius_boost(t, table, c)
        if args.out:
            Path(args.out).write_text(
                formats.dump_tester(boosted, formats.tester_code_reference(Path(args.testerfile).read_text()))
            )
        out = _tester_results(boosted, table)
        out["changed"] = boosted is not t
        out["t"] = table.covering_radius
        return out, True

    if cmd == "optimal-tester":
        code = _load_code(args.codefile, inputs)
        table = codes.coset_table(code)
        tester, ratio = testers.optimal_tester(code, table)
        out = _tester_results(tester, table)
        out["ratio"] = ratio
        if args.certify:
            cert = testers.optimal_certificate(code, table)
            out["certified"] = cert.verified
            return out, cert.verified
        return out, True

    if cmd == "from-code":
        code = _load_code(args.codefile, inputs)
        g = cayley.graph_from_code(code)
        if args.out:
            Path(args.out).write_text(formats.dump_graph(g))
        return {"h": g.h, "generators": len(g.gens)}, True

    if cmd == "to-code":
        g = _load_graph(args.graphfile, inputs)
        code = cayley.code_from_graph(g)
        if args.out:
            Path(args.out).write_text(formats.dump_code(code))
        return {"n": code.n, "k": code.k, "d": codes.min_distance(code)}, True

    if cmd == "graph":
        g = _load_graph(args.graphfile, inputs)
        if args.what == "spectrum":
            lam = cayley.spectrum(g)
            return {"h": g.h, "lambda": list(lam.lam)}, True
        dist = cayley.bfs_metric(g)
        return {"h": g.h, "dist": dist}, True

    if cmd == "verify-sg":
        g = _load_graph(args.graphfile, inputs)
        sg = _load_sg(args.sgfile, inputs)
        rep = spectrum.verify_sg(g, sg, _frac_arg(args.mu), _frac_arg(args.nu), args.d)
        return {
            "mu": rep.mu,
            "nu": rep.nu,
            "d": rep.d,
            "width": rep.width,
            "independence": rep.indep_ok,
            "large_eigenvalues": rep.large_ok,
            "spectral_decay": rep.decay_ok,
            "large_witness": rep.large_witness,
            "decay_witness": rep.decay_witness,
        }, rep.passed

    if cmd == "sg-from-ltc":
        t = _load_tester(args.testerfile, inputs, False)
        g, sg, rep = spectrum.sg_from_ltc(t)
        if args.out:
            Path(args.out + ".graph").write_text(formats.dump_graph(g))
            Path(args.out + ".sg").write_text(formats.dump_sg(sg))
        return {"h": g.h, "n": sg.n, "mu": rep.mu, "nu": rep.nu, "d": rep.d}, rep.passed

    if cmd == "ltc-from-sg":
        g = _load_graph(args.graphfile, inputs)
        sg = _load_sg(args.sgfile, inputs)
        code, t = spectrum.ltc_from_sg(g, sg)
        if args.out:
            code_name = Path(args.out + ".code").name
            Path(args.out + ".code").write_text(formats.dump_code(code))
            Path(args.out + ".tester").write_text(formats.dump_tester(t, code_name))
        table = codes.coset_table(code)
        rep = testers.soundness(t, table)
        return {
            "n": code.n,
            "k": code.k,
            "d": codes.min_distance(code),
            "epsilon": rep.epsilon,
            "delta": rep.delta,
        }, True

    if cmd == "sse-probe":
        g = _load_graph(args.graphfile, inputs)
        sg = _load_sg(args.sgfile, inputs)
        sets = spectrum.sample_small_sets(g.h, args.seed, args.sets)
        try:
            rep = spectrum.sse_bound_check(
                g, sg, _frac_arg(args.mu), _frac_arg(args.nu), args.d, sets
            )
        except spectrum.BoundViolated as exc:
            return {"violated": str(exc)}, False
        return {
            "checked": rep.checked_count,
            "vacuous": rep.vacuous_count,
            "min_slack": rep.min_slack,
        }, True

    if cmd == "hypercon":
        if (args.h is None) == (args.sg is None):
            raise UsageError("give exactly one of --h or --sg")
        if args.sg is not None:
            funcs = list(_load_sg(args.sg, inputs).functionals)
        else:
            funcs = [BitVec.basis(i, args.h) for i in range(args.h)]
        try:
            rep = spectrum.hypercontractivity_check(funcs, args.d, args.trials, args.seed)
        except spectrum.BoundViolated as exc:
            return {"violated": str(exc)}, False
        return {
            "trials": rep.trials,
            "d": rep.degree,
            "max_moment_ratio": rep.max_moment_ratio,
            "max_parseval_error": rep.max_parseval_error,
        }, rep.passed

    if cmd == "distortion":
        e = _load_embedding(args.embedfile, inputs)
        g = _load_graph(args.graphfile, inputs)
        rep = embed.distortion(e, g)
        return {
            "max_stretch": rep.max_stretch,
            "min_stretch": rep.min_stretch,
            "distortion": rep.distortion,
        }, True

    if cmd == "linearize":
        e = _load_embedding(args.embedfile, inputs)
        code = _load_code(args.codefile, inputs)
        t = embed.linearize(e, code)
        if args.out:
            Path(args.out).write_text(formats.dump_tester(t, Path(args.codefile).name))
        return _tester_results(t), True

    if cmd == "kn-bound":
        code = _load_code(args.codefile, inputs)
        table = codes.coset_table(code)
        bound = embed.khot_naor_bound(code, table)
        dd = codes.dual_distance(code)
        if code.n > code.h:
            asym = dd * code.h / (code.n * math.log2(code.n / code.h))
        else:
            asym = float("inf")
        return {
            "bound": bound,
            "dual_d": dd,
            "t": table.covering_radius,
            "asymptotic_form": asym,
        }, True

    if cmd == "basis-bound":
        t = _load_tester(args.testerfile, inputs, False)
        table = codes.coset_table(t.code)
        rep = embed.basis_tester_bound(t.code, t, table)
        return {"ratio": rep.ratio, "lower_bound": rep.lower_bound}, rep.holds

    if cmd == "corpus":
        written = corpus.write_corpus(args.outdir)
        return {"written": written}, True

    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    inputs: dict[str, str] = {}
    try:
        results, passed = _run(args, inputs)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except formats.FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1
    except cayley.IdentityViolated as exc:
        print(f"identity violated: {exc}", file=sys.stderr)
        return 2
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "inputs": inputs,
        "results": jsonable(results),
        "pass": passed,
    }
    print(json.dumps(report, sort_keys=True))
    return 0 if passed else 2


if __name__ == "__main__":
    sys.exit(main())
