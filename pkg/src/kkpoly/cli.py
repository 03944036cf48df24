"""
Command line interface.

    kkpoly roots --type C --rank 3
    kkpoly elem --type C --rank 5 --perm "-5,4,-3,2,-1"
    kkpoly rankmatrix --type B --rank 4 --perm "-3,-2,4,-1"
    kkpoly bruhat --type A --rank 3 --v "2,1,3,4" --w "4,3,2,1"
    kkpoly cwv --type A --rank 2 --w "3,2,1" --v "1,2,3"
    kkpoly dw --type C --rank 2 --perm "-1,-2"
    kkpoly verify distinct-dw --type B --rank 3

Exit status: 0 when every check passes, 1 when some check fails, 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .harness import APPLICABLE, SUITES, BudgetError, LARGE_MAX_RANK, VerificationReport
from .nilhecke import c, c_recursive, c_subword_oracle, d
from .root_system import Kind, build
from .weyl import (
    bruhat_leq, bruhat_leq_subword, from_word, label_order, length, parse_perm, rank_matrix,
    reduced_word, support,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _system(args):
    try:
        return build(Kind(args.type.upper()), args.rank)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _perm(rs, text, what="--perm"):
    if text is None:
        raise UsageError(f"{what} is required")
    try:
        return parse_perm(rs, text)
    except ValueError as e:
        raise UsageError(f"{what}: {e}") from None


def _word(text):
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"cannot parse word {text!r}") from None


def _emit(obj, fmt, text):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=1))
    else:
        print(text)


# --------------------------------------------------------------------------
# subcommands

def cmd_roots(args) -> int:
    rs = _system(args)
    rows = [{"index": k + 1, "eps": r.name, "alpha": r.alpha_name, "simple": r in rs.simple_roots}
            for k, r in enumerate(rs.positive_roots)]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        print(buf.getvalue(), end="")
        return EXIT_OK
    width = max(len(r["eps"]) for r in rows)
    text = "\n".join(f"{r['index']:>3}  {r['eps']:<{width}}  {r['alpha']}" for r in rows)
    _emit({"type": rs.kind.value, "rank": rs.rank, "roots": rows}, args.format, text)
    return EXIT_OK


def cmd_elem(args) -> int:
    rs = _system(args)
    if args.perm is None and args.word is None:
        raise UsageError("give --perm or --word")
    if args.perm is not None:
        w = _perm(rs, args.perm)
    else:
        try:
            w = from_word(rs, _word(args.word))
        except ValueError as e:
            raise UsageError(str(e)) from None
    status = EXIT_OK
    info = {"perm": str(w), "length": length(w), "reduced_word": list(reduced_word(w)),
            "involution": w.is_involution()}
    if args.perm is not None and args.word is not None:
        word = _word(args.word)
        try:
            u = from_word(rs, word)
        except ValueError as e:
            raise UsageError(str(e)) from None
        info["word"] = word
        info["word_matches"] = u == w
        info["word_reduced"] = u == w and len(word) == length(w)
        if not info["word_matches"]:
            status = EXIT_FAIL
    if w.is_involution():
        info["support"] = [r.name for r in support(w)]
    lines = [w.two_line(), f"length: {info['length']}",
             f"reduced word: {' '.join(map(str, info['reduced_word'])) or '(empty)'}"]
    if "word_matches" in info:
        lines.append(f"word {args.word!r}: "
                     + ("reduced expression" if info["word_reduced"]
                        else "represents this element" if info["word_matches"]
                        else "does NOT represent this element"))
    if "support" in info:
        lines.append("support: {" + ", ".join(info["support"]) + "}")
    else:
        lines.append("not an involution")
    _emit(info, args.format, "\n".join(lines))
    return status


def cmd_rankmatrix(args) -> int:
    rs = _system(args)
    w = _perm(rs, args.perm)
    R = rank_matrix(w)
    labels = label_order(rs.dim, rs.kind is not Kind.A)
    if args.format == "json":
        _emit({"perm": str(w), "labels": labels, "matrix": R.tolist()}, "json", "")
    elif args.format == "csv":
        buf = io.StringIO()
        cw = csv.writer(buf, lineterminator="\n")
        cw.writerow([""] + labels)
        for lab, row in zip(labels, R.tolist()):
            cw.writerow([lab] + row)
        print(buf.getvalue(), end="")
    else:
        width = max(len(str(x)) for x in labels + R.ravel().tolist())
        fmt = lambda xs: " ".join(str(x).rjust(width) for x in xs)
        print(" " * (width + 1) + fmt(labels))
        for lab, row in zip(labels, R.tolist()):
            print(str(lab).rjust(width) + " " + fmt(row))
    return EXIT_OK


def cmd_bruhat(args) -> int:
    rs = _system(args)
    v, w = _perm(rs, args.v, "--v"), _perm(rs, args.w, "--w")
    leq = (bruhat_leq if args.method == "rank" else bruhat_leq_subword)(v, w)
    rel = "<=" if leq else "not <="
    _emit({"v": str(v), "w": str(w), "method": args.method, "leq": leq}, args.format,
          f"{v} {rel} {w}")
    return EXIT_OK


def cmd_cwv(args) -> int:
    rs = _system(args)
    w, v = _perm(rs, args.w, "--w"), _perm(rs, args.v, "--v")
    if args.oracle == "product":
        f = c(w, v)
    elif args.oracle == "recursive":
        f = c_recursive(w, v)
    else:
        f = c_subword_oracle(reduced_word(w), v, rs)
    _emit({"w": str(w), "v": str(v), "oracle": args.oracle, "c": f.to_json_obj(),
           "text": str(f)}, args.format, str(f))
    return EXIT_OK


def cmd_dw(args) -> int:
    rs = _system(args)
    w = _perm(rs, args.perm)
    p = d(w).value
    _emit({"perm": str(w), "length": length(w), "d": p.to_json_obj(), "text": str(p)},
          args.format, str(p))
    return EXIT_OK


def _run_suite(name, kind, n, args) -> VerificationReport:
    fn = SUITES[name]
    if name == "distinct-dw":
        limit = LARGE_MAX_RANK if args.large else 3
        return fn(kind, n, max_rank=limit, jobs=args.jobs)
    return fn(kind, n)


def cmd_verify(args) -> int:
    kind = None
    if args.type is not None:
        try:
            kind = Kind(args.type.upper())
        except ValueError:
            raise UsageError(f"unknown type {args.type!r}") from None
    if args.rank is None:
        raise UsageError("--rank is required")
    forced = {"length-lemma-a": Kind.A, "length-lemma-c": Kind.C}
    if args.suite in forced:
        if kind not in (None, forced[args.suite]):
            raise UsageError(f"{args.suite} is for type {forced[args.suite].value} only")
        kind = forced[args.suite]
    if kind is None:
        raise UsageError("--type is required")
    names = APPLICABLE[kind] if args.suite == "all" else [args.suite]
    reports = []
    try:
        for name in names:
            reports.append(_run_suite(name, kind, args.rank, args))
    except BudgetError as e:
        raise UsageError(f"{e} (use --large for rank {LARGE_MAX_RANK})") from None
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.format == "json":
        objs = [r.to_dict(timing=not args.no_timing) for r in reports]
        print(json.dumps(objs[0] if args.suite != "all" else objs, sort_keys=True, indent=1))
    elif args.format == "csv":
        for k, r in enumerate(reports):
            out = r.to_csv()
            print(out if k == 0 else out.split("\n", 1)[1], end="")
    else:
        for r in reports:
            print(r.to_text(verbose=args.verbose))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


# --------------------------------------------------------------------------

VERIFY_CHOICES = ["distinct-dw", "divisibility", "bruhat-remarks", "length-lemma-a",
                  "length-lemma-c", "distinguish", "orbit-dim", "support-dyer",
                  "parabolic-g0", "bruhat-oracles", "all"]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kkpoly", description="Kostant-Kumar polynomials and Bruhat order "
                                            "for Weyl groups of type A, B, C.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("text", "json"), need_type=True):
        sp.add_argument("--type", required=need_type, help="A, B or C")
        sp.add_argument("--rank", type=int, required=need_type)
        sp.add_argument("--format", choices=formats, default="text")

    sp = sub.add_parser("roots", help="list the positive roots")
    common(sp, ("text", "json", "csv"))
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("elem", help="length, reduced word and support of an element")
    common(sp)
    sp.add_argument("--perm")
    sp.add_argument("--word")
    sp.set_defaults(func=cmd_elem)

    sp = sub.add_parser("rankmatrix", help="South-West rank matrix")
    common(sp, ("text", "json", "csv"))
    sp.add_argument("--perm", required=True)
    sp.set_defaults(func=cmd_rankmatrix)

    sp = sub.add_parser("bruhat", help="test v <= w in Bruhat order")
    common(sp)
    sp.add_argument("--v", required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--method", choices=["rank", "subword"], default="rank")
    sp.set_defaults(func=cmd_bruhat)

    sp = sub.add_parser("cwv", help="coefficient of delta_v in x_w")
    common(sp)
    sp.add_argument("--w", required=True)
    sp.add_argument("--v", required=True)
    sp.add_argument("--oracle", choices=["product", "recursive", "subword"], default="product")
    sp.set_defaults(func=cmd_cwv)

    sp = sub.add_parser("dw", help="Kostant-Kumar polynomial d_w")
    common(sp)
    sp.add_argument("--perm", required=True)
    sp.set_defaults(func=cmd_dw)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=VERIFY_CHOICES)
    common(sp, ("text", "json", "csv"), need_type=False)
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for d_w sweeps")
    sp.add_argument("--large", action="store_true",
                    help=f"allow pairwise d_w sweeps up to rank {LARGE_MAX_RANK}")
    sp.add_argument("--verbose", action="store_true", help="list passing cases too")
    sp.add_argument("--no-timing", action="store_true",
                    help="omit elapsed_ms so JSON output is byte-stable")
    sp.set_defaults(func=cmd_verify)
    return p


_VALUE_OPTS = {"--perm", "--word", "--v", "--w"}


def _glue_negative_values(argv):
    # "--perm -3,2,1" would otherwise read -3,2,1 as an option
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_OPTS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    if getattr(args, "jobs", 1) < 1:
        print("kkpoly: error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"kkpoly: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
