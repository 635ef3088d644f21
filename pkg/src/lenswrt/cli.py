"""Command-line interface.

Every subcommand is deterministic and machine-readable: --format json
emits documents with fixed key order, --format csv uses 17 significant
digits so doubles round-trip.  Exit codes: 0 success, 2 invalid input,
3 computation error (rank deficiency, unsupported case, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from .analysis import build_f_matrix, kernel, rank, recover_skein
from .cyclotomic import CyclotomicNumber, embed_complex
from .errors import ComputationError
from .gauss import GaussSumSpec, gauss_sum
from .laurent import LaurentPoly
from .numtheory import classify_order, dedekind_sum, rademacher_phi
from .selftest import run_selftest
from .skein import SkeinElement
from .wrt import (
    FPolynomial,
    LensSpace,
    eval_link,
    eval_meridian,
    eval_z_combination,
    f_poly,
    jeffrey_oracle,
)


# --- serialization helpers ------------------------------------------------------


def coeff_to_json(c):
    """Rational -> [num, den]; cyclotomic -> {"order": N, "coeffs": [[j, num, den], ...]}."""
    if isinstance(c, CyclotomicNumber):
        if c.is_rational():
            c = c.rational_value()
        else:
            return {
                "order": c.order,
                "coeffs": [
                    [j, Fraction(v).numerator, Fraction(v).denominator]
                    for j, v in enumerate(c.coeffs)
                    if v
                ],
            }
    f = Fraction(c)
    return [f.numerator, f.denominator]


def poly_to_json(poly: LaurentPoly) -> list:
    """Sorted [exponent, num, den] triples, or [exponent, {cyclotomic}] entries."""
    out = []
    for e, c in poly.items():
        cj = coeff_to_json(c)
        if isinstance(cj, list):
            out.append([e, cj[0], cj[1]])
        else:
            out.append([e, cj])
    return out


def poly_from_json(var: str, data) -> LaurentPoly:
    terms = {}
    for entry in data:
        e = int(entry[0])
        if len(entry) == 3:
            terms[e] = Fraction(int(entry[1]), int(entry[2]))
        else:
            spec = entry[1]
            order = int(spec["order"])
            vec = [Fraction(0)] * order
            for j, num, den in spec["coeffs"]:
                vec[int(j)] = Fraction(int(num), int(den))
            terms[e] = CyclotomicNumber(order, vec)
    return LaurentPoly(var, terms)


def fpoly_to_json(fp: FPolynomial, p: int, q: int, c: int, k: int) -> dict:
    return {
        "p": p,
        "q": q,
        "c": c,
        "k": k,
        "prefactor_sign": fp.prefactor_sign,
        "scale": "i/sqrt(2p)",
        "body": poly_to_json(fp.body),
    }


def fpoly_from_json(data: dict) -> FPolynomial:
    return FPolynomial(
        p=int(data["p"]),
        prefactor_sign=int(data["prefactor_sign"]),
        body=poly_from_json("z", data["body"]),
    )


def _fmt17(x) -> str:
    return f"{float(x):.16e}"  # 17 significant digits: doubles round-trip


class _Output:
    def __init__(self, path: str | None):
        self.path = path
        self.lines: list[str] = []

    def writeln(self, text: str = ""):
        self.lines.append(text)

    def flush(self):
        text = "\n".join(self.lines) + ("\n" if self.lines else "")
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _emit(out: _Output, fmt: str, document: dict, text_lines, csv_rows=None, csv_header=None):
    if fmt == "json":
        out.writeln(json.dumps(document))
    elif fmt == "csv":
        if csv_rows is None:
            csv_rows = [[document.get(k) for k in document]]
            csv_header = list(document)
        out.writeln(",".join(csv_header))
        for row in csv_rows:
            out.writeln(",".join(str(v) for v in row))
    else:
        for line in text_lines:
            out.writeln(line)


# --- subcommands --------------------------------------------------------------------


def cmd_gauss(args, out: _Output):
    spec = GaussSumSpec(args.p, args.a, args.b)
    value = gauss_sum(spec)
    num = embed_complex(value, args.precision)
    doc = {
        "p": spec.p,
        "a": spec.a,
        "b": spec.b,
        "exact": coeff_to_json(value),
        "re": float(mpmath.re(num)),
        "im": float(mpmath.im(num)),
    }
    _emit(
        out,
        args.format,
        doc,
        [f"G_{spec.p}({spec.a},{spec.b}) = {value}", f"  = {mpmath.nstr(num, 15)}"],
        csv_rows=[[spec.p, spec.a, spec.b, _fmt17(mpmath.re(num)), _fmt17(mpmath.im(num))]],
        csv_header=["p", "a", "b", "re", "im"],
    )


def cmd_dedekind(args, out: _Output):
    value = dedekind_sum(args.q, args.p)
    doc = {"q": args.q, "p": args.p, "numerator": value.numerator, "denominator": value.denominator}
    _emit(
        out,
        args.format,
        doc,
        [f"s({args.q},{args.p}) = {value}"],
        csv_rows=[[args.q, args.p, value.numerator, value.denominator]],
        csv_header=["q", "p", "numerator", "denominator"],
    )


def cmd_phi(args, out: _Output):
    value = rademacher_phi(args.p, args.q)
    doc = {"p": args.p, "q": args.q, "phi": value}
    _emit(out, args.format, doc, [f"phi({args.p},{args.q}) = {value}"],
          csv_rows=[[args.p, args.q, value]], csv_header=["p", "q", "phi"])


def cmd_fpoly(args, out: _Output):
    space = LensSpace(args.p, args.q)
    fp = f_poly(space, args.c, args.k)
    doc = fpoly_to_json(fp, args.p, args.q, args.c, args.k)
    _emit(
        out,
        args.format,
        doc,
        [
            f"f(p={args.p}, q={args.q}, c={args.c}, k={args.k}):",
            f"  sign {fp.prefactor_sign:+d}, scale i/sqrt({2 * args.p})",
            f"  body = {fp.body!r}",
        ],
    )


def _load_skein_file(path: str):
    with open(path) as fh:
        data = json.load(fh)
    if "components" in data:
        comps = [poly_from_json("z", entry) for entry in data["components"]]
        return int(data["p"]), ("z", comps)
    element = SkeinElement.from_json(data)
    return element.p, ("A", element)


def cmd_wrt(args, out: _Output):
    space = LensSpace(args.p, args.q)
    prec = args.precision
    if (args.color is None) == (args.skein_file is None):
        raise ValueError("specify exactly one of --color or --skein-file")
    if args.color is not None:
        def value_at(r):
            return eval_meridian(space, args.color, r, prec)

        def oracle_at(r):
            return jeffrey_oracle(space, args.color, r, prec)
    else:
        file_p, (kind, payload) = _load_skein_file(args.skein_file)
        if file_p != args.p:
            raise ValueError(f"skein file has order {file_p}, expected {args.p}")
        if kind == "A":
            def value_at(r):
                return eval_link(space, payload, r, prec)

            def weight(c, r):
                return payload.coeffs[c].eval_at_unit_root(2 * r + 1, 4 * r, prec)
        else:
            def value_at(r):
                return eval_z_combination(space, payload, r, prec)

            def weight(c, r):
                return payload[c].eval_at_unit_root(1, 4 * space.p * r, prec)

        def oracle_at(r):
            with mpmath.workprec(prec):
                return mpmath.fsum(
                    (weight(c, r) * jeffrey_oracle(space, c, r, prec)
                     for c in range(space.p // 2 + 1)),
                    absolute=False,
                )

    rows = []
    with mpmath.workprec(args.precision):
        for r in range(args.rmin, args.rmax + 1):
            v = value_at(r)
            o = oracle_at(r)
            rows.append((r, v, o, abs(v - o)))
    doc = {
        "p": args.p,
        "q": args.q,
        "rows": [
            {"r": r, "re": float(mpmath.re(v)), "im": float(mpmath.im(v)),
             "oracle_re": float(mpmath.re(o)), "oracle_im": float(mpmath.im(o)),
             "abs_diff": float(d)}
            for r, v, o, d in rows
        ],
    }
    _emit(
        out,
        args.format,
        doc,
        [f"r={r}: w_r = {mpmath.nstr(v, 12)}  oracle {mpmath.nstr(o, 12)}  |diff| {mpmath.nstr(d, 3)}"
         for r, v, o, d in rows],
        csv_rows=[[r, _fmt17(mpmath.re(v)), _fmt17(mpmath.im(v)),
                   _fmt17(mpmath.re(o)), _fmt17(mpmath.im(o)), _fmt17(d)]
                  for r, v, o, d in rows],
        csv_header=["r", "re", "im", "oracle_re", "oracle_im", "abs_diff"],
    )


def cmd_rank(args, out: _Output):
    space = LensSpace(args.p, args.q)
    value = rank(build_f_matrix(space))
    doc = {"p": args.p, "q": args.q, "rank": value, "columns": args.p // 2 + 1,
           "full": value == args.p // 2 + 1}
    _emit(out, args.format, doc, [f"rank of the f-matrix of L({args.p},{args.q}) = {value}"],
          csv_rows=[[args.p, args.q, value]], csv_header=["p", "q", "rank"])


def cmd_kernel(args, out: _Output):
    space = LensSpace(args.p, args.q)
    basis = kernel(space)
    doc = {
        "p": args.p,
        "q": args.q,
        "dimension": len(basis),
        "basis": [{"components": [poly_to_json(c) for c in vec]} for vec in basis],
    }
    lines = [f"kernel dimension {len(basis)} for L({args.p},{args.q})"]
    for i, vec in enumerate(basis):
        lines.append(f"vector {i}:")
        for c, comp in enumerate(vec):
            lines.append(f"  mu_{c}: {comp!r}")
    _emit(out, args.format, doc, lines)


def cmd_classify(args, out: _Output):
    result = classify_order(args.p).value
    doc = {"p": args.p, "classification": result}
    _emit(out, args.format, doc, [f"{result}"],
          csv_rows=[[args.p, result]], csv_header=["p", "classification"])


def cmd_recover(args, out: _Output):
    with open(args.samples_file) as fh:
        data = json.load(fh)
    p, q = int(data["p"]), int(data["q"])
    if (p, q) != (args.p, args.q):
        raise ValueError(f"samples file is for L({p},{q}), expected L({args.p},{args.q})")
    fpolys = [poly_from_json("z", entry) for entry in data["fpolys"]]
    space = LensSpace(p, q)
    result = recover_skein(space, fpolys)
    comps = []
    for comp in result.z_components:
        if comp.is_polynomial():
            comps.append(poly_to_json(comp.as_polynomial()))
        else:
            comps.append({"num": poly_to_json(comp.num), "den": poly_to_json(comp.den)})
    doc = {
        "p": p,
        "q": q,
        "z_components": comps,
        "a_form": result.a_form.to_json() if result.a_form is not None else None,
    }
    lines = [f"recovered skein class in L({p},{q}):"]
    for c, comp in enumerate(result.z_components):
        lines.append(f"  C_{c}(-z^{p}) = {comp!r}")
    if result.a_form is not None:
        lines.append(f"  A-form: {result.a_form!r}")
    _emit(out, args.format, doc, lines)


def cmd_selftest(args, out: _Output):
    only = None
    if args.only:
        only = {int(tok) for tok in args.only.split(",")}
    code = run_selftest(only=only, writeln=out.writeln)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lenswrt",
        description="Exact quantum invariants of links in lens spaces.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--precision", type=int, default=53, help="working precision in bits")
    parser.add_argument("--output", default=None, help="write output to a file")
    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS)
    common.add_argument("--output", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gauss", parents=[common], help="generalized Gauss sum")
    s.add_argument("p", type=int)
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.set_defaults(func=cmd_gauss)

    s = sub.add_parser("dedekind", parents=[common], help="Dedekind sum s(q, p)")
    s.add_argument("q", type=int)
    s.add_argument("p", type=int)
    s.set_defaults(func=cmd_dedekind)

    s = sub.add_parser("phi", parents=[common], help="framing-correction integer of L(p,q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("fpoly", parents=[common], help="the invariant polynomial for one (c, k)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("c", type=int)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_fpoly)

    s = sub.add_parser("wrt", parents=[common], help="invariant values over a range of levels")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--color", type=int, default=None, help="meridian color c")
    s.add_argument("--skein-file", default=None, help="JSON skein element")
    s.add_argument("--rmin", type=int, default=2)
    s.add_argument("--rmax", type=int, default=40)
    s.set_defaults(func=cmd_wrt)

    s = sub.add_parser("rank", parents=[common], help="rank of the f-matrix")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("kernel", parents=[common], help="kernel basis of the f-matrix")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_kernel)

    s = sub.add_parser("classify", parents=[common], help="whether skein classes are determined by invariants")
    s.add_argument("p", type=int)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("recover", parents=[common], help="solve for skein coefficients from polynomials")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("samples_file")
    s.set_defaults(func=cmd_recover)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    s.add_argument("--only", default=None, help="comma-separated criterion numbers")
    s.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision < 53:
        parser.error("--precision must be at least 53 bits")
    out = _Output(args.output)
    try:
        code = args.func(args, out)
    except ValueError as exc:
        _report_error(args.format, "ValueError", str(exc))
        return 2
    except ComputationError as exc:
        _report_error(args.format, type(exc).__name__, str(exc))
        return 3
    out.flush()
    return code or 0


def _report_error(fmt: str, name: str, message: str):
    if fmt == "json":
        sys.stderr.write(json.dumps({"error": {"name": name, "message": message}}) + "\n")
    else:
        sys.stderr.write(f"error [{name}]: {message}\n")


if __name__ == "__main__":
    sys.exit(main())
