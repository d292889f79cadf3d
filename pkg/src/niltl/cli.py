"""
Command line interface.

    niltl normalize 3 "x3x1x2"          -> 1 3 2
    niltl basis 3 --degree 2
    niltl dim 5
    niltl triangle 6 --format csv --figure triangle.png
    niltl convert to-dyck "3 2 1" -n 3  -> UUUUDDDD
    niltl verify 5 --oracle

Exit codes: 0 success, 1 verification or conversion failure, 2 usage or
parse error.
"""

import argparse
import csv
import io
import json
import sys

from . import checks, dyck, enumeration, perm, runs, words

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class ConversionError(Exception):
    pass


def nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def profile(m: words.Monomial) -> dict:
    rs = runs.monomial_to_runs(m)
    return {
        "n": m.rank,
        "word": words.format_word(m.letters),
        "degree": m.degree,
        "runs": [list(pair) for pair in rs.pairs],
        "dyck": str(dyck.runs_to_dyck(rs)),
        "perm": list(perm.monomial_to_permutation(m)),
    }


PROFILE_FIELDS = ["n", "word", "degree", "runs", "dyck", "perm"]


def _csv_text(rows, header=None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _profiles_csv(profiles) -> str:
    rows = [[p["n"], p["word"], p["degree"], "".join(f"({a},{b})" for a, b in p["runs"]),
             p["dyck"], " ".join(map(str, p["perm"]))] for p in profiles]
    return _csv_text(rows, PROFILE_FIELDS)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _parse_word(text, n):
    try:
        return words.parse_word(text, n)
    except words.InvalidWord as e:
        raise UsageError(str(e)) from None


def cmd_normalize(args) -> str:
    m = words.canonical_form(_parse_word(args.word, args.n))
    if args.format == "json":
        if m is words.ZERO:
            return _dumps({"n": args.n, "word": "0", "zero": True})
        return _dumps(dict(profile(m), zero=False))
    if args.format == "csv":
        if m is words.ZERO:
            return _csv_text([[args.n, "0", "", "", "", ""]], PROFILE_FIELDS)
        return _profiles_csv([profile(m)])
    return f"{m}\n"


def cmd_basis(args) -> str:
    basis = enumeration.enumerate_basis(args.n, jobs=args.jobs)
    if args.degree is not None:
        basis = [m for m in basis if m.degree == args.degree]
    if args.figure:
        from .plotting import save_basis_figure
        save_basis_figure(basis, args.figure)
    if args.format == "json":
        return _dumps([profile(m) for m in basis])
    if args.format == "csv":
        return _profiles_csv(profile(m) for m in basis)
    return "".join(f"{m}\n" for m in basis)


def cmd_dim(args) -> str:
    dim = enumeration.dimension(args.n)
    cat = enumeration.catalan(args.n + 1)
    if args.format == "json":
        return _dumps({"n": args.n, "dimension": dim, "catalan": cat})
    if args.format == "csv":
        return _csv_text([[args.n, dim, cat]], ["n", "dimension", "catalan"])
    return f"{dim}\n"


def cmd_triangle(args) -> str:
    rows = enumeration.triangle(args.n_max)
    if args.figure:
        from .plotting import save_triangle_figure
        save_triangle_figure(rows, args.figure)
    if args.format == "json":
        return _dumps([{"n": r.rank, "counts": list(r.counts)} for r in rows])
    return _csv_text(r.counts for r in rows)


def _require_rank(args):
    if args.n is None:
        raise UsageError(f"{args.direction} needs the rank, pass -n")
    return args.n


def _canonical_input(args) -> words.Monomial:
    w = _parse_word(args.input, _require_rank(args))
    m = words.canonical_form(w)
    if m is words.ZERO:
        raise ConversionError(f"word {w} is zero in the algebra of P_{w.rank}")
    if m.letters != w.letters:
        raise ConversionError(f"word {w} is not canonical; its canonical form is {m}")
    return m


def cmd_convert(args) -> str:
    direction = args.direction
    path = None
    if direction == "to-dyck":
        m = _canonical_input(args)
        path = dyck.runs_to_dyck(runs.monomial_to_runs(m))
        result = str(path)
    elif direction == "from-dyck":
        try:
            path = dyck.parse_path(args.input)
        except dyck.InvalidPath as e:
            raise UsageError(str(e)) from None
        if path.semilength == 0:
            raise UsageError("the empty path does not belong to any P_n")
        if args.n is not None and args.n != path.rank:
            raise ConversionError(f"path of semilength {path.semilength} belongs to P_{path.rank}, "
                                  f"not P_{args.n}")
        m = runs.runs_to_monomial(dyck.dyck_to_runs(path))
        result = str(m)
    elif direction == "to-perm":
        m = _canonical_input(args)
        result = perm.format_permutation(perm.monomial_to_permutation(m))
    else:
        try:
            p = perm.parse_permutation(args.input)
        except perm.InvalidPermutation as e:
            raise UsageError(str(e)) from None
        if not p:
            raise UsageError("the empty permutation does not belong to any P_n")
        try:
            m = perm.permutation_to_monomial(p)
        except perm.Not321Avoiding as e:
            raise ConversionError(f"Not321Avoiding: {e}") from None
        result = str(m)

    if args.figure:
        if path is None:
            raise UsageError("--figure is only available for to-dyck and from-dyck")
        from .plotting import save_path_figure
        save_path_figure(path, args.figure, label=result if direction == "from-dyck" else args.input)
    if args.ascii and path is not None:
        result += "\n" + dyck.render_ascii(path)
    if args.format == "json":
        return _dumps({"direction": direction, "input": args.input, "output": result})
    return result + "\n"


def cmd_verify(args):
    results = []
    for res in checks.run_checks(args.n, with_oracle=args.oracle,
                                 oracle_length=args.oracle_length):
        results.append(res)
        if not res.ok:
            break
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        text = _dumps([{"rank": r.rank, "check": r.name, "ok": r.ok, "detail": r.detail}
                       for r in results])
    elif args.format == "csv":
        text = _csv_text([[r.rank, r.name, r.ok, r.detail] for r in results],
                         ["rank", "check", "ok", "detail"])
    else:
        text = "".join(f"{r}\n" for r in results)
    if failed:
        print(f"verification failed: {failed[0]}", file=sys.stderr)
    return text, (EXIT_FAIL if failed else EXIT_OK)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="niltl", description="nil-Temperley-Lieb algebras of the path graphs P_n")
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text")
    parser.add_argument("--output", metavar="FILE", default=None,
                        help="write output to FILE instead of stdout")

    # same flags after the subcommand; SUPPRESS keeps the top-level value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--output", metavar="FILE", default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="canonical form of a word, or 0")
    p.add_argument("n", type=nonnegative_int)
    p.add_argument("word", help='e.g. "3 1 2" or "x3x1x2"; empty string is the unit')
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("basis", parents=[common], help="list the basis monomials of P_n")
    p.add_argument("n", type=nonnegative_int)
    p.add_argument("--degree", type=nonnegative_int, default=None)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
    p.add_argument("--figure", metavar="FILE", help="draw every monomial's Dyck path")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("dim", parents=[common], help="dimension of the algebra of P_n")
    p.add_argument("n", type=nonnegative_int)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("triangle", parents=[common], help="degree distributions for P_0..P_n")
    p.add_argument("n_max", type=nonnegative_int)
    p.add_argument("--figure", metavar="FILE", help="plot the distributions")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("convert", parents=[common], help="monomial <-> Dyck path / permutation")
    p.add_argument("direction", choices=["to-dyck", "from-dyck", "to-perm", "from-perm"])
    p.add_argument("input")
    p.add_argument("-n", type=nonnegative_int, default=None,
                   help="rank; required for to-dyck and to-perm")
    p.add_argument("--ascii", action="store_true", help="also print the path as a drawing")
    p.add_argument("--figure", metavar="FILE", help="draw the path (to-dyck/from-dyck)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", parents=[common], help="run all cross-checks for P_0..P_n")
    p.add_argument("n", type=nonnegative_int)
    p.add_argument("--oracle", action="store_true",
                   help=f"include brute-force oracle checks (ranks <= {checks.ORACLE_MAX_RANK})")
    p.add_argument("--oracle-length", type=nonnegative_int, default=7,
                   help="longest word compared against the oracle zero test")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except UsageError as e:
        print(f"niltl: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConversionError as e:
        print(f"niltl: {e}", file=sys.stderr)
        return EXIT_FAIL
    code = EXIT_OK
    if isinstance(out, tuple):
        out, code = out
    if args.output:
        with open(args.output, "w") as f:
            f.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
