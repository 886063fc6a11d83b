"""Command-line interface.

One verb per deliverable:

  count      exact class sizes (pattern / wrap / double-wrap / descent)
  table      sequence tables and the zigzag triangle
  triangle   one wrap-refined triangle, pretty or as a JSON dump
  tetra      one arrangement-refined tetrahedron
  densities  exact arrangement densities for all-plus words
  conjecture finite-n deviations from the conjectured limits
  bijection  map orders to permutations and back, or verify exhaustively
  oracle     brute-force classification table
  verify     full oracle-vs-engine-vs-bijection cross-check

Counts are printed as decimal strings, never floats.  Exit status is 0 on
success, 1 on a usage error (message on stderr) and 2 when an internal
cross-check fails.  Sign words starting with '-' must be preceded by ``--``
so they are not mistaken for options, e.g. ``cyclenum count pw -- -+``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import __version__
from .bijection import (
    order_to_permutation,
    permutation_to_order,
    transport_holds,
)
from .boustrophedon import (
    METHODS,
    arc_pair,
    arc_tetrahedra,
    arc_triangles,
    count_double_wrap,
    count_pattern,
    count_wrap,
    descent_class_count,
    entringer_triangle,
)
from .densities import conjecture_report, density_rows, fraction_decimal
from .oracle import (
    all_cyclic_orders,
    classify_all,
    refined_tetra_counts,
    refined_triangle_counts,
)
from .orders import (
    MINUS,
    PLUS,
    CyclicOrder,
    check_permutation,
    check_sign,
    check_sign_word,
    flip_even_signs,
)
from .polynomials import HomoPoly, arc_insertion, arc_insertion_fast, format_triangle, poly_to_json


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; user errors are 1 here.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_sequence(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse {text!r}; expected comma-separated integers") from None


def _print_table(rows, header, fmt):
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(out.getvalue())
    elif fmt == "json":
        print(json.dumps([dict(zip(header, row)) for row in rows]))
    else:
        widths = [
            max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
            for i, h in enumerate(header)
        ]
        print("  ".join(str(h).rjust(w) for h, w in zip(header, widths)))
        for row in rows:
            print("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_count(args) -> int:
    word = check_sign_word(args.word)
    kind = args.kind
    signs = args.signs
    if kind == "pw":
        if signs:
            raise ValueError("'count pw' takes no sign arguments")
        print(count_pattern(word))
    elif kind == "qw":
        if len(signs) != 1:
            raise ValueError("'count qw' needs exactly one sign argument (+ or -)")
        print(count_wrap(word, check_sign(signs[0])))
    elif kind == "rw":
        if len(signs) != 2:
            raise ValueError("'count rw' needs exactly two sign arguments")
        print(count_double_wrap(word, check_sign(signs[0]), check_sign(signs[1])))
    else:  # descent
        if signs:
            raise ValueError("'count descent' takes no sign arguments")
        print(descent_class_count(word))
    return 0


def _cmd_table(args) -> int:
    max_n = args.max_n
    if max_n < 1:
        raise ValueError("--max-n must be >= 1")
    if args.kind == "entringer":
        rows = [(i + 1, *line) for i, line in enumerate(entringer_triangle(max_n))]
        if args.format == "pretty":
            for _, *line in rows:
                print(" ".join(str(v) for v in line))
        elif args.format == "csv":
            out = io.StringIO()
            writer = csv.writer(out)
            for row in rows:
                writer.writerow(row)
            sys.stdout.write(out.getvalue())
        else:
            print(json.dumps([{"n": row[0], "row": [str(v) for v in row[1:]]} for row in rows]))
        return 0
    counters = {
        "euler": lambda n: count_pattern("+" * n),
        "qplus": lambda n: count_wrap("+" * n, PLUS),
        "rpp": lambda n: count_double_wrap("+" * n, PLUS, PLUS),
    }
    counter = counters[args.kind]
    rows = [(n, str(counter(n))) for n in range(1, max_n + 1)]
    _print_table(rows, ("n", "count"), args.format)
    return 0


def _cmd_triangle(args) -> int:
    word = check_sign_word(args.word)
    sign = check_sign(args.sign)
    plus, minus = arc_triangles(word)
    poly = plus if sign == PLUS else minus
    if args.format == "json":
        print(poly_to_json(poly, word, sign))
    else:
        print(format_triangle(poly))
    return 0


def _cmd_tetra(args) -> int:
    word = check_sign_word(args.word)
    if not 1 <= args.alpha <= 6:
        raise ValueError("alpha must be between 1 and 6")
    poly = arc_tetrahedra(word)[args.alpha - 1]
    if args.format == "pretty":
        d = poly.degree
        for layer in range(d + 1):
            slice_coeffs = {
                (i, j, k): v for (i, j, k, l), v in poly.coeffs.items() if l == layer
            }
            print(f"fourth exponent = {layer}:")
            sub = HomoPoly(3, d - layer, slice_coeffs)
            print(format_triangle(sub))
            print()
    else:
        print(poly_to_json(poly, word, args.alpha))
    return 0


def _cmd_densities(args) -> int:
    rows = density_rows(args.max_n, digits=args.digits)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "n": row.n,
                        "fractions": [str(f) for f in row.fractions],
                        "decimals": list(row.decimals),
                    }
                    for row in rows
                ]
            )
        )
    else:
        header = ("n",) + tuple(f"arrangement{a}" for a in range(1, 7))
        table = [(row.n, *row.decimals) for row in rows]
        _print_table(table, header, "csv" if args.format == "csv" else "pretty")
    return 0


def _cmd_conjecture(args) -> int:
    report = conjecture_report(args.n)
    digits = 12
    print(f"arrangement densities for the all-plus word of length {report.n}:")
    for a in range(6):
        print(
            f"  arrangement {a + 1}: density={fraction_decimal(report.densities[a], digits)}"
            f"  limit={report.limits[a]:.12f}  |deviation|={report.deviations[a]:.3e}"
        )
    print(
        f"  positive wrap class: density={fraction_decimal(report.wrap_plus, digits)}"
        f"  limit={report.wrap_plus_limit:.12f}  |deviation|={report.wrap_plus_deviation:.3e}"
    )
    print(
        f"  doubly-positive class: density={fraction_decimal(report.double_wrap_plus, digits)}"
        f"  limit={report.double_wrap_plus_limit:.12f}"
        f"  |deviation|={report.double_wrap_plus_deviation:.3e}"
    )
    return 0


def _cmd_bijection(args) -> int:
    if args.action == "map":
        order = CyclicOrder(_parse_sequence(args.value))
        print(",".join(str(v) for v in order_to_permutation(order)))
    elif args.action == "unmap":
        perm = check_permutation(_parse_sequence(args.value))
        print(permutation_to_order(perm).to_text())
    else:  # verify
        failures = _bijection_checks(args.max_n)
        for line in failures:
            print(line, file=sys.stderr)
        if failures:
            print("FAIL")
            return 2
        print(f"PASS: bijection verified exhaustively for orders on up to {args.max_n} elements")
    return 0


def _bijection_checks(max_n: int) -> list[str]:
    if max_n < 3:
        raise ValueError("--max-n must be >= 3")
    failures = []
    for n in range(3, max_n + 1):
        images = set()
        for order in all_cyclic_orders(n):
            perm = order_to_permutation(order)
            images.add(perm)
            if permutation_to_order(perm) != order:
                failures.append(f"round trip failed for {order}")
        if len(images) != _factorial(n - 1):
            failures.append(f"map on {n} elements is not onto")
    for length in range(1, min(max_n - 2, 7) + 1):
        for word in _all_words(length):
            if not transport_holds(word):
                failures.append(f"pattern transport failed for {word}")
    return failures


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _all_words(length: int):
    for bits in range(2**length):
        yield "".join(PLUS if bits & (1 << i) else MINUS for i in range(length))


def _cmd_oracle(args) -> int:
    counts = classify_all(args.n, force=args.force)
    header = ("word", "pattern", "wrap+", "wrap-", *(f"arr{a}" for a in range(1, 7)))
    rows = [
        (word, str(c.total), str(c.plus), str(c.minus), *(str(v) for v in c.arrangement))
        for word, c in sorted(counts.items())
    ]
    _print_table(rows, header, args.format)
    return 0


def _cmd_verify(args) -> int:
    ok = True

    def check(label: str, passed: bool) -> None:
        nonlocal ok
        print(("ok   " if passed else "FAIL ") + label)
        ok = ok and passed

    max_len = args.max_word_len
    if not 1 <= max_len <= 7:
        raise ValueError("--max-word-len must be between 1 and 7")

    for length in range(1, max_len + 1):
        counts = classify_all(length + 2, force=True)
        words = list(_all_words(length))
        good_tri = good_tet = good_sums = True
        for word in words:
            entry = counts.get(word)
            total = entry.total if entry else 0
            plus_n = entry.plus if entry else 0
            minus_n = entry.minus if entry else 0
            tri_plus, tri_minus = arc_triangles(word)
            good_tri &= tri_plus.coeffs == refined_triangle_counts(word, PLUS)
            good_tri &= tri_minus.coeffs == refined_triangle_counts(word, MINUS)
            good_sums &= count_pattern(word) == total
            good_sums &= tri_plus.total() == plus_n and tri_minus.total() == minus_n
            good_sums &= descent_class_count(flip_even_signs(word)) == total
            if length >= 2:
                tets = arc_tetrahedra(word)
                for alpha in range(1, 7):
                    good_tet &= tets[alpha - 1].coeffs == refined_tetra_counts(word, alpha)
                arrangement = entry.arrangement if entry else (0,) * 6
                good_sums &= tuple(t.total() for t in tets) == arrangement
        check(f"triangles match the oracle for all words of length {length}", good_tri)
        if length >= 2:
            check(f"tetrahedra match the oracle for all words of length {length}", good_tet)
        check(f"class sizes agree across engines for length {length}", good_sums)

    rng = random.Random(20240)
    agree = True
    for _ in range(40):
        m = rng.choice((2, 3, 4))
        degree = rng.randrange(0, 7)
        cells = {}
        for _ in range(rng.randrange(1, 8)):
            cuts = sorted(rng.randrange(0, degree + 1) for _ in range(m - 1))
            expts = tuple(
                b - a for a, b in zip((0, *cuts), (*cuts, degree))
            )
            cells[expts] = rng.randrange(1, 100)
        poly = HomoPoly(m, degree, cells)
        a = rng.randrange(1, m + 1)
        b, c = rng.sample(range(1, m + 1), 2)
        agree &= arc_insertion(a, b, c, poly) == arc_insertion_fast(a, b, c, poly)
    check("operator implementations agree on random polynomials", agree)

    bij_n = min(max_len + 2, 7)
    check(
        f"bijection round-trips exhaustively on up to {bij_n} elements",
        not _bijection_checks(bij_n),
    )

    print("PASS" if ok else "FAIL")
    return 0 if ok else 2


def descent_class_count_flipped(word: str) -> int:
    from .orders import flip_even_signs

    return descent_class_count(flip_even_signs(word))


# ---------------------------------------------------------------------------
# parser assembly


def _build_parser() -> _Parser:
    parser = _Parser(prog="cyclenum", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"cyclenum {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="exact class sizes")
    p.add_argument("kind", choices=("pw", "qw", "rw", "descent"))
    p.add_argument("word", help="sign word over + and -")
    p.add_argument("signs", nargs="*", help="extra sign arguments for qw / rw")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="sequence tables")
    p.add_argument("kind", choices=("euler", "entringer", "qplus", "rpp"))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("pretty", "csv", "json"), default="pretty")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("triangle", help="wrap-refined triangle for a word")
    p.add_argument("word")
    p.add_argument("sign", choices=(PLUS, MINUS))
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser("tetra", help="arrangement-refined tetrahedron for a word")
    p.add_argument("word")
    p.add_argument("alpha", type=int)
    p.add_argument("--format", choices=("pretty", "json"), default="json")
    p.set_defaults(func=_cmd_tetra)

    p = sub.add_parser("densities", help="exact arrangement densities")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--digits", type=int, default=15)
    p.add_argument("--format", choices=("pretty", "csv", "json"), default="pretty")
    p.set_defaults(func=_cmd_densities)

    p = sub.add_parser("conjecture", help="deviations from the conjectured limits")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("bijection", help="order/permutation encoding")
    p.add_argument("action", choices=("map", "unmap", "verify"))
    p.add_argument("value", nargs="?", help="cycle or permutation, comma-separated")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("oracle", help="brute-force classification table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--force", action="store_true", help="raise the size guard (hard cap 12)")
    p.add_argument("--format", choices=("pretty", "csv", "json"), default="pretty")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="oracle-vs-engine cross-check suite")
    p.add_argument("--max-word-len", type=int, default=5)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    try:
        if args.command == "bijection" and args.action in ("map", "unmap") and not args.value:
            raise ValueError(f"'bijection {args.action}' needs a value argument")
        return args.func(args)
    except ValueError as exc:
        print(f"cyclenum: error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"cyclenum: internal invariant failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
