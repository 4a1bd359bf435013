"""Command-line front end.

    ccgsem parse [--lexicon FILE] [--target-cat CAT] [--trace] SENTENCE
    ccgsem parse [--lexicon FILE] --batch FILE

Exit status: 0 when every sentence has a reading, 1 when some sentence has
none or contains an unknown word, 2 on usage or lexicon errors.
"""

from __future__ import annotations

import argparse
import sys

from .category import parse_cat, print_cat
from .chart import ParserConfig, derivation_trace, parse, readings
from .errors import CcgError, LexiconError, UnknownWordError
from .lexicon import read_lexicon, sample_lexicon
from .notation import show_term

_EDGE_PUNCT = ".,;:!?\"'"


def tokenize(sentence: str) -> list[str]:
    return sentence.strip().strip(_EDGE_PUNCT).lower().split()


def _parser():
    ap = argparse.ArgumentParser(prog="ccgsem")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("parse", help="parse sentences and print their logical forms")
    p.add_argument("sentence", nargs="?")
    p.add_argument("--batch", metavar="FILE", help="one sentence per line")
    p.add_argument("--lexicon", metavar="FILE", help="lexicon file (default: bundled sample)")
    p.add_argument("--target-cat", default="s")
    p.add_argument("--trace", action="store_true", help="print a derivation per reading")
    p.add_argument("--all-derivations", action="store_true",
                   help="print every recorded derivation of each reading")
    p.add_argument("--show-np-coord", action="store_true",
                   help="also coordinate bare np constituents")
    p.add_argument("--coord-bound", type=int, metavar="N")
    p.add_argument("--raise-targets", default="s", metavar="CATS",
                   help="comma-separated raising target categories")
    return ap


def _emit_sentence(lex, tokens, target, cfg, args, out):
    chart = parse(lex, tokens, cfg)
    found = readings(chart, target, cfg.max_readings)
    for r in found:
        out.write(f"{print_cat(r.cat)} : {show_term(r.lf)}\n")
        if args.trace or args.all_derivations:
            derivs = r.derivations if args.all_derivations else r.derivations[:1]
            for d in derivs:
                out.write("\n" + derivation_trace(d) + "\n\n")
    return bool(found)


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if (args.sentence is None) == (args.batch is None):
        err.write("ccgsem: give exactly one of SENTENCE or --batch\n")
        return 2
    try:
        lex = read_lexicon(args.lexicon) if args.lexicon else sample_lexicon()
        target = parse_cat(args.target_cat, lex.atoms)
        raise_targets = [parse_cat(c.strip(), lex.atoms)
                         for c in args.raise_targets.split(",") if c.strip()]
        cfg = ParserConfig(raising_targets=raise_targets,
                           allow_atomic_np_coordination=args.show_np_coord,
                           coord_depth_bound=args.coord_bound)
    except LexiconError as exc:
        err.write(f"ccgsem: lexicon error: {exc}\n")
        return 2
    except (CcgError, OSError, ValueError) as exc:
        err.write(f"ccgsem: {exc}\n")
        return 2

    if args.batch:
        try:
            with open(args.batch, encoding="utf-8") as fh:
                sentences = [line.strip() for line in fh if line.strip()]
        except OSError as exc:
            err.write(f"ccgsem: {exc}\n")
            return 2
    else:
        sentences = [args.sentence]

    status = 0
    for sentence in sentences:
        if args.batch:
            out.write(f"# {sentence}\n")
        tokens = tokenize(sentence)
        try:
            ok = bool(tokens) and _emit_sentence(lex, tokens, target, cfg, args, out)
        except UnknownWordError as exc:
            err.write(f"ccgsem: {exc}\n")
            status = 1
            continue
        if not ok:
            err.write(f"ccgsem: no reading of category {print_cat(target)} for {sentence!r}\n")
            status = 1
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
