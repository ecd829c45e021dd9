"""Command-line front end.

Exit status is 0 on success, 1 when the computation does not apply to the
input (for example a filamentation of a link) and 2 for unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable

from . import alexander, bracket, diagram, families, filamentation, flat, moves
from .codes import CodeError, DiagramCode, canonical_form, parse

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2


class _ParseFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _ParseFailure(message)


def _read_input(args) -> DiagramCode:
    sources = [s for s in (args.code, args.file, args.family, args.name) if s is not None]
    if len(sources) != 1:
        raise _ParseFailure("give exactly one of --code, --file, --family or --name")
    if args.code is not None:
        return parse(args.code)
    if args.file is not None:
        with open(args.file, encoding="utf-8") as fh:
            lines = [ln.split("#", 1)[0] for ln in fh]
        return parse(" ".join(ln.strip() for ln in lines if ln.strip()))
    if args.family is not None:
        if args.n is None:
            raise _ParseFailure("--family needs --n")
        if args.n < 0:
            raise _ParseFailure("--n must be nonnegative")
        return families.make_family(args.family, args.n)
    try:
        return families.named_example(args.name)
    except KeyError as exc:
        raise _ParseFailure(exc.args[0]) from None


def _poly(p) -> tuple[str, object]:
    return str(p), p.to_json()


def _cmd_parse(d, args):
    text = canonical_form(d)
    return text, {"code": str(d), "kind": d.kind, "components": d.n_components, "chords": d.n_chords}


def _cmd_canon(d, args):
    return canonical_form(d), canonical_form(d)


def _cmd_bracket(d, args):
    return _poly(bracket.kauffman_bracket(d))


def _cmd_fpoly(d, args):
    return _poly(bracket.f_polynomial(d))


def _cmd_jones(d, args):
    return _poly(bracket.jones(d))


def _cmd_galex(d, args):
    return _poly(alexander.g_polynomial(d))


def _cmd_filament(d, args):
    p = filamentation.find_filamentation(d)
    payload = filamentation.witness_json(d, p)
    if p is None:
        return "none", payload
    lines = [str(p)] + [f"<{x},{y}> = {row['intersection']}" for row in payload["filamentation"] for x, y in [row["pair"]]]
    return "\n".join(lines), payload


def _cmd_parity(d, args):
    v = flat.parity(d)
    return str(v), v


def _cmd_flatbq(d, args):
    _, rels = flat.flat_relations(d)
    detected = flat.is_flat_detected(d)
    text = "\n".join(str(r) for r in rels) + f"\ndetected: {'yes' if detected else 'no'}"
    return text, {"relations": [r.to_json() for r in rels], "detected": detected}


def _cmd_genus(d, args):
    g = diagram.genus(d)
    return str(g), g


def _cmd_moves(d, args):
    kinds = args.kinds.split(",") if args.kinds else None
    found = moves.enumerate_moves(d, kinds)
    return "\n".join(str(m) for m in found), [m.to_json() for m in found]


def _cmd_reduce(d, args):
    res = moves.reduce_search(d, args.max_chords, args.max_steps)
    lines = [str(res.diagram) if res.diagram.n_chords else "(empty)"]
    lines += [str(m) for m in res.path]
    return "\n".join(lines), res.to_json()


def _cmd_family(d, args):
    return str(d), str(d)


def _cmd_corpus(d, args):
    return str(d), str(d)


COMMANDS: dict[str, tuple[Callable, str]] = {
    "parse": (_cmd_parse, "validate a code and print its canonical form"),
    "canon": (_cmd_canon, "canonical form"),
    "bracket": (_cmd_bracket, "Kauffman bracket"),
    "fpoly": (_cmd_fpoly, "normalized bracket f(A)"),
    "jones": (_cmd_jones, "Jones polynomial in t"),
    "galex": (_cmd_galex, "generalized Alexander polynomial G(s, t)"),
    "filament": (_cmd_filament, "first filamentation, or none"),
    "parity": (_cmd_parity, "parity of a flat link"),
    "flatbq": (_cmd_flatbq, "flat biquandle relations"),
    "genus": (_cmd_genus, "genus of the carrier surface"),
    "moves": (_cmd_moves, "applicable Reidemeister moves"),
    "reduce": (_cmd_reduce, "breadth-first reduction search"),
    "family": (_cmd_family, "print a family member"),
    "corpus": (_cmd_corpus, "print a named example, or list them"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="virtknot", description="Invariants of virtual and flat knot diagrams.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--code", help="diagram code, e.g. 'A+o B-u C+o A-u B+o C-u'")
        sp.add_argument("--file", help="read the code from a file ('#' starts a comment)")
        sp.add_argument("--family", choices=sorted(families.FAMILIES))
        sp.add_argument("--n", type=int)
        sp.add_argument("--name", help="named example from the corpus")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--timing", action="store_true", help="include elapsed time in JSON output")
        if name == "moves":
            sp.add_argument("--kinds", help="comma-separated move kinds")
        if name == "reduce":
            sp.add_argument("--max-chords", type=int, default=8)
            sp.add_argument("--max-steps", type=int, default=10_000)
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _ParseFailure:
        return EXIT_PARSE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    if args.command == "corpus" and args.name is None and args.code is None and args.file is None and args.family is None:
        entries = families.corpus()
        if args.json:
            print(json.dumps(entries, indent=None, sort_keys=False), file=out)
        else:
            width = max(len(k) for k in entries)
            for k, v in entries.items():
                print(f"{k:<{width}}  {v}", file=out)
        return EXIT_OK

    try:
        d = _read_input(args)
    except (CodeError, _ParseFailure) as exc:
        print(f"virtknot: parse error: {exc}", file=err)
        return EXIT_PARSE
    except OSError as exc:
        print(f"virtknot: cannot read input: {exc}", file=err)
        return EXIT_PARSE

    fn, _ = COMMANDS[args.command]
    t0 = time.perf_counter()
    status = EXIT_OK
    try:
        text, payload = fn(d, args)
    except moves.SearchExhausted as exc:
        status = EXIT_DOMAIN
        print(f"virtknot: {exc}", file=err)
        text = "exhausted"
        payload = {"exhausted": exc.reason, **exc.result.to_json()}
    except (ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"virtknot: {args.command}: {msg}", file=err)
        return EXIT_DOMAIN
    elapsed = time.perf_counter() - t0

    if args.json:
        report = {"input": canonical_form(d), "invariant": args.command, "result": payload}
        if args.timing:
            report["elapsed_ms"] = round(elapsed * 1000, 3)
        print(json.dumps(report, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
