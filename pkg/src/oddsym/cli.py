"""Batch command-line interface: pairings, expansions, tables, RSK, the
determinant analysis, and the verification suites.

Exit codes: 0 all requested checks pass, 1 verification failure (a JSON
witness goes to stdout), 2 usage error.
"""

import argparse
import csv
import io
import json
import sys

from . import bases, form, gramdet, hopf, oddring
from .combinat import partitions_of
from .polyq import QPoly
from .rsk import rsk as rsk_map
from .rsk import rsk_verify_degree


def parse_parts(text: str) -> tuple[int, ...]:
    """Comma-separated positive integers; k^m shorthand for m copies of k.

    Examples: "2,2", "1^5", "3,1^2".
    """
    text = text.strip()
    if not text or text == "0":
        return ()
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if "^" in token:
            base, _, count = token.partition("^")
            parts.extend([int(base)] * int(count))
        else:
            parts.append(int(token))
    if any(p < 1 for p in parts):
        raise ValueError(f"parts must be positive: {text!r}")
    return tuple(parts)


def parse_colored(text: str):
    """Mixed word: tokens like e2 or h3 (plain integers default to h)."""
    word = []
    for token in text.split(","):
        token = token.strip()
        if token.startswith(("e", "h")):
            color = form.E if token[0] == "e" else form.H
            n = int(token[1:])
        else:
            color = form.H
            n = int(token)
        if n < 1:
            raise ValueError(f"letter subscripts must be positive: {text!r}")
        word.append((n, color))
    return tuple(word)


def fmt_parts(parts) -> str:
    return ",".join(map(str, parts)) if parts else "-"


def emit_table(args, row_labels, col_labels, rows, title: str) -> None:
    fmt = args.format
    if fmt == "json":
        print(
            json.dumps(
                {
                    "title": title,
                    "rows": [list(r) for r in row_labels],
                    "columns": [list(c) for c in col_labels],
                    "entries": [[_jsonable(x) for x in row] for row in rows],
                }
            )
        )
        return
    cells = [[""] + [fmt_parts(c) for c in col_labels]]
    for label, row in zip(row_labels, rows):
        cells.append([fmt_parts(label)] + [str(x) for x in row])
    if fmt == "csv":
        out = io.StringIO()
        csv.writer(out).writerows(cells)
        sys.stdout.write(out.getvalue())
        return
    widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
    print(title)
    for r in cells:
        print("  ".join(x.rjust(w) for x, w in zip(r, widths)))


def _jsonable(x):
    if isinstance(x, QPoly):
        return list(x.coeffs)
    return x


def emit_expansion(args, name: str, terms: dict, letter: str) -> None:
    fmt = args.format
    if fmt == "json":
        print(json.dumps({name: {",".join(map(str, p)): c for p, c in sorted(terms.items())}}))
        return
    if fmt == "csv":
        out = io.StringIO()
        w = csv.writer(out)
        w.writerow(["index", "coefficient"])
        for p, c in sorted(terms.items()):
            w.writerow([fmt_parts(p), c])
        sys.stdout.write(out.getvalue())
        return
    bits = []
    for p, c in sorted(terms.items()):
        label = f"{letter}({fmt_parts(p)})" if p else "1"
        if c == 1:
            bits.append(f"+ {label}")
        elif c == -1:
            bits.append(f"- {label}")
        else:
            bits.append(f"{c:+d}*{label}")
    print(f"{name} =", " ".join(bits) if bits else "0")


# ---------------------------------------------------------------------------
# subcommands


def cmd_pair(args) -> int:
    q = args.q
    if args.basis == "mixed":
        left, right = parse_colored(args.left), parse_colored(args.right)
    else:
        mk = form.e_word if args.basis == "e" else form.h_word
        left, right = mk(parse_parts(args.left)), mk(parse_parts(args.right))
    if q == "generic":
        value = form.pair_words_generic(left, right)
        shown = str(value)
        payload = list(value.coeffs)
    else:
        value = form.pair_words_generic(left, right).evaluate(int(q))
        shown = str(value)
        payload = value
    if args.format == "json":
        print(json.dumps({"left": args.left, "right": args.right, "q": q,
                          "value": payload}))
    elif args.format == "csv":
        print("left,right,q,value")
        print(f'"{args.left}","{args.right}",{q},"{shown}"')
    else:
        print(shown)
    return 0


def cmd_expand(args) -> int:
    what = args.what
    index = parse_parts(args.index)
    if what == "htilde":
        if args.in_basis != "h":
            raise ValueError("htilde expands over h-words only")
        terms = form.htilde_expansion(index)
        emit_expansion(args, f"htilde({fmt_parts(index)})", terms, "h")
        return 0
    makers = {
        "e": oddring.e_elt,
        "m": bases.monomial,
        "f": bases.forgotten,
        "s": bases.schur,
        "p": lambda p: bases.power_sum(p[0]) if len(p) == 1 else None,
    }
    if what == "p" and len(index) != 1:
        raise ValueError("power sums are indexed by a single integer")
    elt = makers[what](index)
    terms = elt.terms if args.in_basis == "h" else oddring.e_coordinates(elt)
    emit_expansion(args, f"{what}({fmt_parts(index)})", terms,
                   args.in_basis)
    return 0


def cmd_kostka(args) -> int:
    parts, rows = bases.kostka_matrix(args.degree)
    emit_table(args, parts, parts, rows,
               f"signed Kostka numbers, degree {args.degree} (rows = shape)")
    return 0


def cmd_gram(args) -> int:
    order = "appendix" if args.basis == "compositions" else "lex"
    labels, rows = gramdet.gram_matrix(args.degree, q=args.q, basis=args.basis,
                                       order=order)
    shown = [[str(x) if isinstance(x, QPoly) else x for x in row] for row in rows]
    if args.format == "json":
        emit_table(args, labels, labels, rows, "")
    else:
        emit_table(args, labels, labels, shown,
                   f"Gram matrix, degree {args.degree}, q = {args.q}")
    return 0


def cmd_rsk(args) -> int:
    if args.verify is not None:
        report = rsk_verify_degree(args.verify)
        if args.format == "json":
            flat = [e for cls in report["classes"] for e in cls["matrices"]]
            print(json.dumps(flat))
        else:
            for cls in report["classes"]:
                print(
                    f"margins {fmt_parts(cls['mu'])} x {fmt_parts(cls['rho'])}: "
                    f"{len(cls['matrices'])} matrices, signed sum "
                    f"{cls['aggregate_sign_count']}, "
                    f"{'ok' if cls['ok'] else 'FAIL'}"
                )
            print("degree", report["degree"], "PASS" if report["ok"] else "FAIL")
        if not report["ok"]:
            if args.format != "json":
                bad = [c for c in report["classes"] if not c["ok"]]
                print(json.dumps(bad[0]))
            return 1
        return 0
    matrix = json.loads(args.matrix)
    if not matrix or any(not isinstance(r, list) for r in matrix):
        raise ValueError("matrix must be a JSON list of rows")
    pair = rsk_map(matrix)
    from .combinat import matrix_sign, shape_sign

    payload = {
        "matrix": matrix,
        "P": pair.insertion.to_lists(),
        "Q": pair.recording.to_lists(),
        "sign_A": matrix_sign(matrix),
        "sign_P": pair.insertion.sign(),
        "sign_Q": pair.recording.sign(),
        "shape_sign": shape_sign(pair.insertion.shape),
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print("P:", pair.insertion.to_lists())
        print("Q:", pair.recording.to_lists())
        print(
            "sign(A) =", payload["sign_A"],
            " sign(P) =", payload["sign_P"],
            " sign(Q) =", payload["sign_Q"],
            " shape sign =", payload["shape_sign"],
        )
    return 0


def cmd_det(args) -> int:
    n = args.degree
    report = gramdet.det_degree_check(n)
    payload = {"degree_check": report}
    ok = report["ok"]
    if args.factors:
        fac = gramdet.factor_multiplicity_check(n)
        payload["factors"] = {
            "items": [
                {"factor": f["factor"], "multiplicity": f["got"],
                 "listed": f["want"], "ok": f["ok"]}
                for f in fac["factors"] if f["want"] or f["got"]
            ],
            "residual": fac["residual"],
            "ok": fac["ok"],
        }
        ok = ok and fac["ok"]
    if args.format == "json":
        payload["determinant"] = list(gramdet.gram_det(n).coeffs)
        print(json.dumps(payload))
    else:
        det = gramdet.gram_det(n)
        print(f"det degree {report['det_degree']} (formula {report['formula']}), "
              f"leading coefficient {report['leading_coefficient']}: "
              f"{'ok' if report['ok'] else 'FAIL'}")
        if n <= 3:
            print("det =", det)
        if args.factors:
            for f in payload["factors"]["items"]:
                print(f"  {f['factor']}: multiplicity {f['multiplicity']} "
                      f"(listed {f['listed']}) {'ok' if f['ok'] else 'FAIL'}")
            print(f"  residual after all listed factors: "
                  f"{payload['factors']['residual']}")
    if not ok:
        if args.format != "json":
            print(json.dumps(payload))
        return 1
    return 0


SUITES = ("hopf", "schur", "rsk", "semiorth", "primitives", "all")


def run_suite(suite: str, max_degree: int):
    """Yields (name, ok, witness) triples."""
    if suite in ("hopf", "all"):
        yield ("hopf/adjointness", *(_report(hopf.adjointness_check(max_degree))))
        for n in range(max_degree + 1):
            r = hopf.antipode_axiom_check(n)
            yield (f"hopf/antipode-axiom deg {n}", r["ok"], r["axiom_failures"])
            yield (
                f"hopf/composite-involutive deg {n}",
                r["composite_involutive"],
                [],
            )
        yield ("hopf/group-relations", *(_report(hopf.group_relations_check(max_degree))))
        yield ("hopf/images", *(_report(hopf.antipode_images_check(max_degree))))
        gen = all(hopf.generating_function_check(n)["ok"] for n in range(1, max_degree + 1))
        yield ("hopf/generating-function", gen, [])
        yield ("hopf/schur-action", *(_report(hopf.schur_action_check(max_degree))))
    if suite in ("schur", "all"):
        for n in range(1, max_degree + 1):
            yield (f"schur/orthonormality deg {n}", *(_report(bases.schur_orthonormality(n))))
        for lam in partitions_of(max_degree):
            r = bases.schur_alt_routes(lam)
            yield (f"schur/alt-routes {fmt_parts(lam)}", r["ok"], r["checks"])
    if suite in ("rsk", "all"):
        for n in range(1, max_degree + 1):
            r = rsk_verify_degree(n)
            bad = [c for c in r["classes"] if not c["ok"]]
            yield (f"rsk/sign-theorem deg {n}", r["ok"], bad[:1])
    if suite in ("semiorth", "all"):
        for n in range(1, max_degree + 1):
            yield (f"semiorth deg {n}", *(_report(oddring.semiorthogonality_check(n))))
    if suite in ("primitives", "all"):
        for n in range(1, max_degree + 1):
            ps = hopf.primitives(n)
            want = 1 if (n == 1 or n % 2 == 0) else 0
            dim_ok = len(ps) == want
            prim_ok = all(hopf.is_primitive(p) for p in ps)
            match_ok = True
            if want == 1:
                pn = bases.power_sum(n)
                match_ok = ps[0] == pn or ps[0] == pn.scale(-1)
            yield (
                f"primitives deg {n}",
                dim_ok and prim_ok and match_ok,
                {"dimension": len(ps), "expected": want},
            )
        for k in range(1, max_degree):
            r = hopf.centrality_check(k, max_degree)
            yield (f"primitives/centrality p_{k}", r["ok"],
                   r["witnesses"][:1] if k % 2 else r["witnesses"])


def _report(r: dict):
    return r["ok"], r.get("failures", [])


def cmd_verify(args) -> int:
    failures = []
    results = []
    for name, ok, witness in run_suite(args.suite, args.max_degree):
        results.append({"check": name, "ok": ok})
        if args.format != "json":
            note = ""
            if name.startswith("hopf/composite-involutive"):
                note = ("  (involutive composite; the axiom-satisfying antipode"
                        " is not involutive)")
            print(f"{'PASS' if ok else 'FAIL'}  {name}{note}")
        if not ok:
            failures.append({"check": name, "witness": _json_safe(witness)})
    if args.format == "json":
        print(json.dumps({"results": results, "failures": failures}))
    elif failures:
        print(json.dumps({"failures": failures}))
    return 1 if failures else 0


def _json_safe(x):
    if isinstance(x, dict):
        return {str(k): _json_safe(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_safe(v) for v in x]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return repr(x)


def cmd_tables(args) -> int:
    import pathlib

    if not args.appendix:
        raise ValueError("nothing to do: pass --appendix")
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    def write_csv(name, row_labels, col_labels, rows):
        with open(out / name, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow([""] + [fmt_parts(c) for c in col_labels])
            for label, row in zip(row_labels, rows):
                w.writerow([fmt_parts(label)] + [str(x) for x in row])

    for n in range(1, 6):
        parts, rows = bases.kostka_matrix(n)
        write_csv(f"kostka_degree_{n}.csv", parts, parts, rows)
    for n in range(1, 5):
        labels, rows = gramdet.gram_matrix(n, order="appendix")
        write_csv(f"gram_generic_degree_{n}.csv", labels, labels,
                  [[str(x) for x in row] for row in rows])
    for n in range(1, 7):
        labels, rows = gramdet.gram_matrix(n, q=-1, basis="partitions")
        write_csv(f"gram_qminus1_degree_{n}.csv", labels, labels, rows)

    def write_expansions(name, indices, maker):
        with open(out / name, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["index", "h-basis expansion"])
            for lam in indices:
                w.writerow([fmt_parts(lam), repr(maker(lam))])

    upto4 = [lam for n in range(1, 5) for lam in partitions_of(n)]
    upto5 = [lam for n in range(1, 6) for lam in partitions_of(n)]
    write_expansions("monomial_expansions.csv", upto4, bases.monomial)
    write_expansions("forgotten_expansions.csv", upto4, bases.forgotten)
    write_expansions("schur_expansions.csv", upto5, bases.schur)

    from importlib import resources

    data = resources.files("oddsym.data").joinpath("degenerate_factors.json").read_text()
    (out / "degenerate_factors.json").write_text(data)
    print(f"wrote appendix tables to {out}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddsym",
        description="Exact computations in the ring of odd symmetric functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "csv", "json"),
                       default="plain")

    p = sub.add_parser("pair", help="bilinear form of two basis words")
    p.add_argument("--basis", choices=("h", "e", "mixed"), default="h")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--q", default="generic")
    add_format(p)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("expand", help="expand a named element in a basis")
    p.add_argument("--what", choices=("e", "m", "f", "s", "p", "htilde"),
                   required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--in-basis", dest="in_basis", choices=("h", "e"),
                   default="h")
    add_format(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("kostka", help="signed Kostka table for one degree")
    p.add_argument("--degree", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("gram", help="Gram matrix of the pairing")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--q", default="generic")
    p.add_argument("--basis", choices=("compositions", "partitions"),
                   default="compositions")
    add_format(p)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("rsk", help="RSK of a matrix, or exhaustive sign check")
    p.add_argument("--matrix", help="JSON list of rows")
    p.add_argument("--verify", type=int, metavar="DEGREE",
                   help="check the sign theorem for all margins of this weight")
    add_format(p)
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("det", help="Gram determinant analysis")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--factors", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--max-degree", dest="max_degree", type=int, default=5)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="regenerate the appendix tables")
    p.add_argument("--appendix", action="store_true")
    p.add_argument("--out", default="appendix_tables")
    add_format(p)
    p.set_defaults(func=cmd_tables)

    return parser


BOUNDS = {"kostka": 8, "gram": 8, "det": (2, gramdet.GENERIC_DET_BOUND), "rsk": 7}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "kostka" and not 1 <= args.degree <= BOUNDS["kostka"]:
            raise ValueError(f"degree must be in 1..{BOUNDS['kostka']}")
        if args.command == "gram" and not 1 <= args.degree <= BOUNDS["gram"]:
            raise ValueError(f"degree must be in 1..{BOUNDS['gram']}")
        if args.command == "det":
            lo, hi = BOUNDS["det"]
            if not lo <= args.degree <= hi:
                raise ValueError(f"degree must be in {lo}..{hi}")
        if args.command == "rsk":
            if (args.matrix is None) == (args.verify is None):
                raise ValueError("pass exactly one of --matrix or --verify")
            if args.verify is not None and not 1 <= args.verify <= BOUNDS["rsk"]:
                raise ValueError(f"verify degree must be in 1..{BOUNDS['rsk']}")
        return args.func(args)
    except (ValueError, json.JSONDecodeError) as exc:
        parser.exit(2, f"error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
