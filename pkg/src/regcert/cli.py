"""The regcert command line tool.

Subcommands: kernel, reg, lex, gtable, and verify {regflat, poweli,
regbound, main}.  Exit codes: 0 all checks pass, 1 at least one failure,
2 inconclusive, 64 usage error.
"""

import argparse
import json
import sys

from .groebner import kernel_of_map
from .monomials import compute_G, g_cap
from .parser import (ParseError, Parametrisation, format_polynomial,
                     parse_ideal_file)
from .reports import FAIL, INCONCLUSIVE, PASS
from .resolution import regularity
from .rings import BlockOrder, DegRevLexOrder, LexOrder
from .scalars import DEFAULT_PRIME
from .verify import (DEFAULT_CUTOFF, lex_ideal_of_presentation, verify_main,
                     verify_main_trials, verify_poweli_trials,
                     verify_regbound, verify_regbound_trials, verify_regflat)

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _parse_range(text):
    """'2' -> [2]; '1..3' -> [1, 2, 3]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _resolve_order(name, ring):
    if name == "lex":
        return LexOrder()
    if name == "degrevlex":
        return DegRevLexOrder()
    if name == "elim":
        return BlockOrder(ring.kept)
    raise _Usage(f"unknown order {name!r}")


def _emit(report, args, out):
    if args.json:
        print(report.to_json(), file=out)
    else:
        print(f"check: {report.check_name}", file=out)
        print(f"status: {report.status}", file=out)
        for inst in sorted(report.instances, key=lambda i: i.digest):
            line = f"  [{inst.digest}] " + ", ".join(
                f"{k}={v}" for k, v in inst.values.items()
                if not isinstance(v, list))
            print(line, file=out)
            if inst.witness is not None:
                print(f"    witness: {inst.witness}", file=out)
        for item in report.inconclusive_reasons:
            print(f"  inconclusive [{item['digest']}]: {item['reason']}",
                  file=out)
    return {PASS: EXIT_PASS, FAIL: EXIT_FAIL,
            INCONCLUSIVE: EXIT_INCONCLUSIVE}[report.status]


def _reparse_with_char(path, char):
    """Reload a file, overriding the characteristic clause."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    ring, obj, order = parse_ideal_file(text)
    if char is None or char == ring.char:
        return ring, obj, order
    import re
    if re.search(r"\bchar\b", text):
        text = re.sub(r"char\s+\d+", f"char {char}", text, count=1)
    elif text.lstrip().startswith("param"):
        text = text.replace(";", f"; char {char} ;", 1)
    else:
        text = text.replace(";", f"; char {char} ;", 1)
    return parse_ideal_file(text)


def cmd_kernel(args, out):
    if not args.param:
        raise _Usage("--param FILE is required")
    ring, obj, _ = _reparse_with_char(args.param, args.char)
    if not isinstance(obj, Parametrisation):
        raise _Usage("--param expects a parametrisation file")
    order = None
    if args.order:
        order = (LexOrder() if args.order == "lex"
                 else BlockOrder(obj.n) if args.order == "elim"
                 else None)
        if order is None:
            raise _Usage("kernel needs an elimination order (lex or elim)")
    G = kernel_of_map(list(obj.f), order=order)
    gens = [format_polynomial(g) for g in G.elements]
    if args.json:
        print(json.dumps({"ring": list(G.ring.names), "kernel": gens},
                         indent=2), file=out)
    else:
        if not gens:
            print("kernel: (0)", file=out)
        else:
            print("kernel:", file=out)
            for g in gens:
                print(f"  {g}", file=out)
    return EXIT_PASS


def cmd_reg(args, out):
    if not args.ideal:
        raise _Usage("--ideal FILE is required")
    ring, J, _ = _reparse_with_char(args.ideal, args.char)
    if isinstance(J, Parametrisation):
        raise _Usage("reg expects an ideal file")
    if not J.homogeneous:
        raise _Usage("reg requires a homogeneous ideal")
    if J.is_zero():
        raise _Usage("regularity of the zero ideal is undefined")
    order = _resolve_order(args.order, ring) if args.order else None
    r = regularity(J, order)
    if args.json:
        print(json.dumps({"regularity": r, "field": ring.char}), file=out)
    else:
        print(f"regularity: {r}", file=out)
    return EXIT_PASS


def cmd_lex(args, out):
    if not args.ideal:
        raise _Usage("--ideal FILE is required")
    ring, J, _ = _reparse_with_char(args.ideal, args.char)
    if isinstance(J, Parametrisation):
        raise _Usage("lex expects an ideal file")
    if not J.homogeneous:
        raise _Usage("lex requires a homogeneous ideal")
    cutoff = args.cutoff or DEFAULT_CUTOFF
    L, complete = lex_ideal_of_presentation(J, cutoff)
    from .parser import format_monomial
    gens = [format_monomial(ring, m) for m in L.gens]
    if args.json:
        print(json.dumps({"lex_generators": gens, "complete": complete},
                         indent=2), file=out)
    else:
        status = "" if complete else f" (truncated at degree {cutoff})"
        print(f"lex segment ideal{status}:", file=out)
        for g in gens:
            print(f"  {g}", file=out)
    return EXIT_PASS if complete else EXIT_INCONCLUSIVE


def cmd_gtable(args, out):
    ns = _parse_range(args.n or "1..3")
    ds = _parse_range(args.d or "2..3")
    ms = _parse_range(args.m or "1..2")
    rows = []
    for n in ns:
        for d in ds:
            for m in ms:
                rows.append({"n": n, "d": d, "m": m,
                             "G": compute_G(n, d, m),
                             "cap": g_cap(n, d, m)})
    if args.json:
        print(json.dumps(rows, indent=2), file=out)
    else:
        print("  n  d  m      G    cap", file=out)
        for r in rows:
            print(f"{r['n']:>3}{r['d']:>3}{r['m']:>3}{r['G']:>7}"
                  f"{r['cap']:>7}", file=out)
    return EXIT_PASS


def cmd_verify(args, out):
    char = DEFAULT_PRIME if args.char is None else args.char
    if args.lemma == "regflat":
        if not args.ideal:
            raise _Usage("verify regflat needs --ideal FILE")
        _, J, _ = _reparse_with_char(args.ideal, args.char)
        if isinstance(J, Parametrisation):
            raise _Usage("verify regflat expects an ideal file")
        report = verify_regflat(J, args.d or 2)
    elif args.lemma == "poweli":
        report = verify_poweli_trials(args.trials, args.seed, char=char)
    elif args.lemma == "regbound":
        if args.ideal:
            _, J, _ = _reparse_with_char(args.ideal, args.char)
            if isinstance(J, Parametrisation):
                raise _Usage("verify regbound expects an ideal file")
            report = verify_regbound(J, J.ring.kept,
                                     cutoff=args.cutoff or DEFAULT_CUTOFF)
        else:
            report = verify_regbound_trials(args.trials, args.seed,
                                            char=char)
    elif args.lemma == "main":
        if args.param:
            _, param, _ = _reparse_with_char(args.param, args.char)
            if not isinstance(param, Parametrisation):
                raise _Usage("verify main expects a parametrisation file")
            report = verify_main(param, cutoff=args.cutoff)
        else:
            if not (args.n and args.m and args.d):
                raise _Usage("verify main needs --param FILE or --n/--m/--d")
            report = verify_main_trials(int(args.n), int(args.m),
                                        int(args.d), args.trials, args.seed,
                                        char=char, cutoff=args.cutoff)
    else:
        raise _Usage(f"unknown verify target {args.lemma!r}")
    return _emit(report, args, out)


def build_parser():
    p = _Parser(prog="regcert",
                description="Exact regularity certificates for polynomially "
                            "parametrised varieties")
    sub = p.add_subparsers(dest="command")

    def common(sp):
        sp.add_argument("--ideal")
        sp.add_argument("--param")
        sp.add_argument("--order")
        sp.add_argument("--char", type=int)
        sp.add_argument("--cutoff", type=int)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int, default=5)
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--out")
        sp.add_argument("--n")
        sp.add_argument("--m")
        sp.add_argument("--d")

    for name in ("kernel", "reg", "lex", "gtable"):
        common(sub.add_parser(name))
    vp = sub.add_parser("verify")
    vp.add_argument("lemma", choices=["regflat", "poweli", "regbound",
                                      "main"])
    common(vp)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise _Usage("a subcommand is required")
        if args.command == "verify" and args.d is not None:
            args.d = int(args.d)
        out = sys.stdout
        close = False
        if getattr(args, "out", None):
            out = open(args.out, "w", encoding="utf-8")
            close = True
        try:
            handler = {"kernel": cmd_kernel, "reg": cmd_reg, "lex": cmd_lex,
                       "gtable": cmd_gtable, "verify": cmd_verify}
            return handler[args.command](args, out)
        finally:
            if close:
                out.close()
    except _Usage as exc:
        print(f"regcert: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, FileNotFoundError, ValueError) as exc:
        print(f"regcert: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        code = exc.code
        return EXIT_USAGE if code not in (0, None) else 0


if __name__ == "__main__":
    sys.exit(main())
