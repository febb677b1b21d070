"""Command-line surface: lint, evaluate, segments, tquery.

Exit codes: 0 success, 1 usage error, 2 data error.  Warnings and usage
text go to stderr; reports go to stdout.  ``REQSMELL_CONFIG_DIR`` may
point at a directory holding ``keywords.json`` / ``glossary.txt``
overrides; explicit flags win over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from pathlib import Path

from .corpus import CorpusError, read_corpus, read_diagnostics, read_gold, write_diagnostics
from .evaluation import EvaluationError, evaluate_patterns, evaluate_smells, render_text, report_to_dict
from .model import SMELL_DISPLAY_NAMES, SmellKind
from .pipeline import AnalysisConfig, analyze_corpus
from .resources import load_glossary, load_keywords, load_rimay_catalog
from .segmenter import segment
from .tquery import QueryCompileError, compile_query, find_matches
from .tree import parse_ptb

USAGE_EXIT = 1
DATA_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _build_parser() -> _Parser:
    parser = _Parser(prog="reqsmell", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lint = sub.add_parser("lint", help="analyze a corpus and write diagnostics")
    lint.add_argument("corpus", help="corpus JSONL file")
    lint.add_argument("-o", "--output", help="diagnostics JSONL output path")
    lint.add_argument("--glossary", help="imprecise-verb glossary override")
    lint.add_argument("--keywords", help="keyword configuration override")
    lint.add_argument("--jobs", type=int, default=1, help="parallel workers")
    lint.add_argument("--format", choices=("human", "json"), default="human")

    evaluate = sub.add_parser("evaluate", help="score diagnostics against ground truth")
    evaluate.add_argument("diagnostics", help="diagnostics JSONL (lint output)")
    evaluate.add_argument("gold", help="ground-truth JSONL")
    evaluate.add_argument("--format", choices=("human", "json"), default="human")

    segments = sub.add_parser("segments", help="print per-requirement segment breakdowns")
    segments.add_argument("corpus")
    segments.add_argument("--keywords", help="keyword configuration override")

    tquery = sub.add_parser("tquery", help="run one tree query against a corpus")
    tquery.add_argument("query", help="query text")
    tquery.add_argument("corpus")

    return parser


def _config_from_args(args) -> AnalysisConfig:
    config_dir = os.environ.get("REQSMELL_CONFIG_DIR")
    keyword_path = getattr(args, "keywords", None)
    glossary_path = getattr(args, "glossary", None)
    if config_dir:
        base = Path(config_dir)
        if keyword_path is None and (base / "keywords.json").exists():
            keyword_path = base / "keywords.json"
        if glossary_path is None and (base / "glossary.txt").exists():
            glossary_path = base / "glossary.txt"
    return AnalysisConfig(
        keywords=load_keywords(keyword_path), glossary=load_glossary(glossary_path)
    )


def _span_text(req, span) -> str:
    return " ".join(t.text for t in req.tokens[span[0] : span[1]])


def _cmd_lint(args) -> int:
    config = _config_from_args(args)
    requirements = read_corpus(args.corpus)
    for req in requirements:
        if req.tree is None:
            print(
                f"warning: {req.id}: no constituency tree; tree-based detection skipped",
                file=sys.stderr,
            )
    diagnostics = analyze_corpus(requirements, config, jobs=args.jobs)
    if args.output:
        write_diagnostics(diagnostics, args.output)

    smell_counts = Counter()
    pattern_counts = Counter()
    for diag in diagnostics:
        for kind in diag.smell_kinds():
            smell_counts[kind] += 1
        if diag.recommendation and diag.recommendation.pattern:
            pattern_counts[diag.recommendation.pattern] += 1

    if args.format == "json":
        print(
            json.dumps(
                {
                    "requirements": len(requirements),
                    "smell_counts": {k.value: smell_counts[k] for k in SmellKind},
                    "pattern_counts": {p: pattern_counts[p] for p in sorted(pattern_counts)},
                },
                ensure_ascii=False,
            )
        )
        return 0

    print(f"Linted {len(requirements)} requirements")
    print("\nSmells detected:")
    for kind in SmellKind:
        if smell_counts[kind]:
            print(f"  {SMELL_DISPLAY_NAMES[kind]:<30} {smell_counts[kind]}")
    if not smell_counts:
        print("  none")
    print("\nRecommended patterns:")
    catalog = load_rimay_catalog()
    for pattern_id in sorted(pattern_counts, key=lambda p: int(p[1:])):
        name = catalog[pattern_id]["name"]
        print(f"  {pattern_id} {name:<55} {pattern_counts[pattern_id]}")
    if not pattern_counts:
        print("  none")
    return 0


def _cmd_evaluate(args) -> int:
    pred = read_diagnostics(args.diagnostics)
    gold = read_gold(args.gold)
    smells = evaluate_smells(gold, pred)
    patterns = evaluate_patterns(gold, pred)
    if args.format == "json":
        print(
            json.dumps(
                {"smells": report_to_dict(smells), "patterns": report_to_dict(patterns)},
                ensure_ascii=False,
            )
        )
        return 0
    display = {k.value: SMELL_DISPLAY_NAMES[k] for k in SmellKind}
    print(render_text(smells, "Smell detection", display))
    print()
    catalog = load_rimay_catalog()
    pattern_names = {p: f"{p} {catalog[p]['name']}" for p in catalog}
    print(render_text(patterns, "Pattern suggestion", pattern_names))
    return 0


def _cmd_segments(args) -> int:
    config = _config_from_args(args)
    for req in read_corpus(args.corpus):
        print(req.id)
        for seg in segment(req, config.keywords):
            kind = seg.kind.value
            print(f"  [{seg.start:>3},{seg.end:>3}) {kind:<16} {seg.source:<12} {_span_text(req, seg.span)}")
    return 0


def _cmd_tquery(args) -> int:
    try:
        query = compile_query(args.query)
    except QueryCompileError as exc:
        print(f"error: bad query: {exc}", file=sys.stderr)
        return USAGE_EXIT
    for req in read_corpus(args.corpus):
        if req.tree is None:
            continue
        tree = parse_ptb(req.tree)
        for match in find_matches(query, tree):
            print(f"{req.id}\t[{match.span[0]},{match.span[1]})\t{_span_text(req, match.span)}")
    return 0


_COMMANDS = {
    "lint": _cmd_lint,
    "evaluate": _cmd_evaluate,
    "segments": _cmd_segments,
    "tquery": _cmd_tquery,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_EXIT
    try:
        return _COMMANDS[args.command](args)
    except (CorpusError, EvaluationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_EXIT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_EXIT


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
