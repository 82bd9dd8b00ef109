"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain precondition
failure (non-reduced word, bad rank, input outside a theorem's hypothesis),
3 verification-suite violation.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import bsdh, verify
from .character import anticanonical_character, character_lowest_weight_report
from .errors import BSDHError, NotReducedError
from .fixtures import check_fixture, load_fixtures
from .rootsys import DynkinType, RootSystem, build_root_system
from .weyl import (
    all_reduced_words,
    commutation_classes,
    element_of,
    format_word,
    longest_element,
    parse_word,
    require_reduced,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _root_system(args) -> RootSystem:
    # malformed text is a usage error (1); a well-formed type with a bad rank is a domain error (2)
    if args.type is None:
        raise UsageError("--type is required")
    text = args.type.strip()
    family, digits = text[:1].upper(), text[1:]
    if family not in "ABCDEFG" or not family or (digits and not digits.isdigit()):
        raise UsageError(f"cannot parse type {args.type!r}; expected a letter A-G or a name like A3")
    if digits:
        if args.rank is not None:
            raise UsageError("give either --type A --rank 3 or --type A3, not both")
        return build_root_system(DynkinType(family, int(digits)))
    if args.rank is None:
        raise UsageError("--rank is required with a bare family letter")
    return build_root_system(DynkinType(family, args.rank))


def _word(args, rs: RootSystem):
    if args.word is None:
        raise UsageError("--word is required")
    try:
        word = parse_word(args.word)
    except BSDHError as exc:
        raise UsageError(str(exc)) from None
    for i in word:
        rs.check_letter(i)
    return word


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


# Each command returns (input, result, verdicts, text lines).

def cmd_coeffs(args):
    rs = _root_system(args)
    word = require_reduced(rs, _word(args, rs))
    result = {}
    lines = [f"type {rs.type}, word {format_word(word) or '(empty)'}"]
    if args.basis in ("O", "both"):
        m = bsdh.anticanonical_o_coeffs(rs, word).coeffs
        result["m"] = list(m)
        lines.append(f"O-basis (m): {format_word(m)}")
    if args.basis in ("X", "both"):
        x = bsdh.anticanonical_x_coeffs(rs, word).coeffs
        result["x"] = list(x)
        lines.append(f"X-basis:     {format_word(x)}")
    return {"type": str(rs.type), "word": list(word), "basis": args.basis}, result, {}, lines


def cmd_classify(args):
    rs = _root_system(args)
    word = require_reduced(rs, _word(args, rs))
    c = bsdh.classify(rs, word)
    verdicts = {k: v for k, v in c.as_dict().items() if k != "m"}
    lines = [f"type {rs.type}, word {format_word(word) or '(empty)'}"]
    if not word:
        lines.append("point: Fano (convention)")
    else:
        lines.append(f"m: {format_word(c.m.coeffs)}")
        lines.append(f"globally generated: {_yn(c.globally_generated)}; Fano: {_yn(c.fano)}")
        lines.append(f"very ample: {_yn(c.very_ample)}")
        lines.append(f"weak Fano (certified): {_yn(c.weak_fano_certified)}")
        lines.append("big: yes")
    return {"type": str(rs.type), "word": list(word)}, {"m": list(c.m.coeffs)}, verdicts, lines


def cmd_words(args):
    rs = _root_system(args)
    if args.longest:
        w = longest_element(rs)
    else:
        w = element_of(rs, _word(args, rs))
    words = all_reduced_words(rs, w)
    result = {"element": list(w.canonical_word), "length": w.length,
              "count": len(words), "words": [list(x) for x in words]}
    lines = [f"type {rs.type}, element {w} (length {w.length})", f"reduced words: {len(words)}"]
    if args.classes:
        classes = commutation_classes(rs, words)
        result["classes"] = [[list(x) for x in c] for c in classes]
        result["class_count"] = len(classes)
        lines.append(f"commutation classes: {len(classes)}")
        for k, c in enumerate(classes, 1):
            lines.append(f"  class {k}: {len(c)} word{'' if len(c) == 1 else 's'}")
            lines.extend(f"    {format_word(x)}" for x in c)
    else:
        lines.extend(f"  {format_word(x)}" for x in words)
    inp = {"type": str(rs.type), "element": "longest" if args.longest else args.word,
           "classes": bool(args.classes)}
    return inp, result, {}, lines


def cmd_census(args):
    rs = _root_system(args)
    census = bsdh.coxeter_census(rs)
    short = rs.short_simple_indices()
    table = {}
    lines = [f"type {rs.type}: Coxeter c with c^-1(sum of simple roots) = -alpha_i"]
    for i, entry in census.items():
        length = "short" if i in short else ("long" if short else "-")
        if entry is None:
            table[str(i)] = None
            lines.append(f"  alpha_{i} ({length}): none")
        else:
            c, word = entry
            table[str(i)] = list(word)
            lines.append(f"  alpha_{i} ({length}): {''.join(f's{k}' for k in word)}")
    failures = verify.census_shape_failures(rs)
    verdicts = {"shape_ok": not failures}
    return {"type": str(rs.type)}, {"census": table, "short_simple": short, "failures": failures}, verdicts, lines


def cmd_character(args):
    rs = _root_system(args)
    word = require_reduced(rs, _word(args, rs))
    chi = anticanonical_character(rs, word)
    report = character_lowest_weight_report(rs, word, strict=False)
    result = {
        "dimension": chi.dimension,
        "weights": [{"weight": list(w), "multiplicity": m} for w, m in chi.items()],
        "report": report.as_dict(),
    }
    verdicts = {"certification": report.certification, "lowest_weight_check": report.passed}
    lines = [
        f"type {rs.type}, word {format_word(word) or '(empty)'}",
        f"dimension: {chi.dimension}",
        f"certification: {report.certification}",
        f"lowest weight w.0 = {list(report.lowest_weight)}, multiplicity {report.lowest_multiplicity}",
        f"lowest-weight check: {'pass' if report.passed else 'fail'}",
        "weights (fundamental-weight coordinates):",
    ]
    lines.extend(f"  {list(w)}: {m}" for w, m in chi.items())
    return {"type": str(rs.type), "word": list(word)}, result, verdicts, lines


def _suite_types(args, suite: str) -> list[str]:
    if args.types:
        types = [t.strip() for t in args.types.split(",") if t.strip()]
    elif args.type:
        types = [args.type if args.rank is None else f"{args.type}{args.rank}"]
    else:
        key = "oracle-m-sampled" if suite == "oracle-m" and args.sample is not None else suite
        types = list(verify.DEFAULT_TYPES.get(key, []))
        if suite == "fano-all-words" and args.with_d4:
            types.append("D4")
    if args.max_rank is not None:
        types = [t for t in types if DynkinType.parse(t.partition(":")[0]).rank <= args.max_rank]
    return types


def cmd_verify(args):
    suite = args.suite
    if suite not in verify.SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(verify.SUITES)}")
    if suite == "fixtures":
        res = verify.suite_fixtures(args.file)
        types = []
    else:
        types = _suite_types(args, suite)
        if suite == "oracle-m":
            exhaustive = args.sample is None
            res = verify.suite_oracle_m(types, exhaustive=exhaustive,
                                        sample=args.sample or 0, seed=args.seed)
        else:
            res = verify.SUITES[suite](types)
    lines = [f"suite {suite}: checked {res.checked}, violations {len(res.violations)}"]
    for key, detail in res.details.items():
        lines.append(f"  {key}: {json.dumps(detail)}")
    for v in res.violations:
        lines.append(f"  VIOLATION {json.dumps(v)}")
    lines.append("PASS" if res.passed else "FAIL")
    inp = {"suite": suite, "types": types, "sample": args.sample, "seed": args.seed}
    return inp, res.as_dict(), {"passed": res.passed}, lines


def cmd_fixtures(args):
    rows = []
    lines = []
    for fx in load_fixtures(args.file):
        failures = check_fixture(fx)
        rows.append({"name": fx.name, "type": str(fx.type), "word": list(fx.word),
                     "source": fx.source, "failures": failures})
        lines.append(f"{'ok  ' if not failures else 'FAIL'} {fx.name:28s} {fx.type} {format_word(fx.word)}")
        lines.extend(f"      {f}" for f in failures)
    passed = all(not r["failures"] for r in rows)
    lines.append(f"{len(rows)} fixtures, {'all pass' if passed else 'failures present'}")
    return {"file": args.file}, {"fixtures": rows}, {"passed": passed}, lines


COMMANDS = {
    "coeffs": cmd_coeffs,
    "classify": cmd_classify,
    "words": cmd_words,
    "census": cmd_census,
    "verify": cmd_verify,
    "character": cmd_character,
    "fixtures": cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bsdh", description="Anti-canonical bundles on Bott-Samelson varieties.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, word=True):
        p.add_argument("--type", help="family letter A-G, or compact form like A3")
        p.add_argument("--rank", type=int)
        if word:
            p.add_argument("--word", help="comma-separated 1-based letters, e.g. 1,2,1")
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("coeffs", help="anti-canonical coefficients in the O and X bases")
    common(p)
    p.add_argument("--basis", choices=["O", "X", "both"], default="both")

    common(sub.add_parser("classify", help="globally generated / Fano verdicts"))

    p = sub.add_parser("words", help="all reduced words of an element")
    common(p)
    p.add_argument("--longest", action="store_true", help="use the longest element")
    p.add_argument("--classes", action="store_true", help="group into commutation classes")

    common(sub.add_parser("census", help="Coxeter elements sending sum(alpha) into -S"), word=False)
    common(sub.add_parser("character", help="anti-canonical character and lowest weight"))

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=", ".join(verify.SUITES))
    common(p, word=False)
    p.add_argument("--types", help="comma-separated, e.g. A3,B3,G2 or A4:2,D4:4 for the minuscule suite")
    p.add_argument("--max-rank", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="enumerate every word (default)")
    mode.add_argument("--sample", type=int, help="check N random reduced words per type")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--with-d4", action="store_true", help="add D4 to the fano-all-words sweep")
    p.add_argument("--file", help="fixture file (fixtures suite)")

    p = sub.add_parser("fixtures", help="check the worked-example corpus")
    p.add_argument("--file")
    p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        inp, result, verdicts, lines = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"bsdh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotReducedError as exc:
        print(f"bsdh: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BSDHError as exc:
        print(f"bsdh: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    duration_ms = round((time.perf_counter() - start) * 1000, 3)

    if args.json:
        report = {"command": args.command, "input": inp, "result": result,
                  "verdicts": verdicts, "duration_ms": duration_ms}
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(lines))

    failed = verdicts.get("passed") is False
    if args.command in ("verify", "fixtures") and failed:
        return EXIT_VIOLATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
