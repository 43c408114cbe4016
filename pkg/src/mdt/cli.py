"""Batch command line: translate, validate, serve.

Exit codes: 0 success, 1 usage error, 2 lexicon error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .demo import demo_lexicon_dir
from .lexicon import LexiconError, lint_lexicon, parse_lexicon
from .pipeline import parse_pre_analyzed
from .service import create_server
from .xfer import TranslationResult, translate


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mdt", description="Group-based shallow-transfer translator")
    sub = parser.add_subparsers(dest="command", required=True)

    tr = sub.add_parser("translate", help="translate text from stdin or arguments")
    tr.add_argument("--lexicon", required=True, help="lexicon directory ('demo' for the bundled one)")
    tr.add_argument("--source", help="source language code (defaults to the lexicon's)")
    tr.add_argument("--target", help="target language code (defaults to the first translation language)")
    tr.add_argument("--json", action="store_true", help="print the structured result document")
    tr.add_argument("--max", type=int, default=None, help="cap on the number of outputs")
    tr.add_argument("--trace", action="store_true", help="dump intermediate steps to stderr")
    tr.add_argument("--gap", type=int, default=0, help="max tokens skippable between group items")
    tr.add_argument("--analyzed", action="store_true", help="input is pre-analyzed TSV, one token per line")
    tr.add_argument("text", nargs="*", help="sentence to translate; reads stdin lines when omitted")

    va = sub.add_parser("validate", help="lint a lexicon directory")
    va.add_argument("directory")

    se = sub.add_parser("serve", help="run the HTTP service")
    se.add_argument("--lexicon", required=True)
    se.add_argument("--port", type=int, default=8040)
    se.add_argument("--host", default="127.0.0.1")
    se.add_argument("--log", default=None, help="acceptance log path (or env MDT_LOG)")
    se.add_argument("--target", help="target language code")
    se.add_argument("--ui-dir", default=None, help="directory of built UI assets to serve at /")
    return parser


def _resolve_lexicon_dir(path: str) -> str:
    return str(demo_lexicon_dir()) if path == "demo" else path


def _print_result(result: TranslationResult, as_json: bool, trace: bool, out, err) -> None:
    if trace:
        for line in result.trace:
            print(line, file=err)
    if as_json:
        print(json.dumps(result.to_doc(), ensure_ascii=False), file=out)
    else:
        for text in result.outputs:
            print(text, file=out)


def _run_translate(args, out, err) -> int:
    try:
        lexicon = parse_lexicon(_resolve_lexicon_dir(args.lexicon))
    except LexiconError as exc:
        print(f"error: {exc}", file=err)
        return 2
    if args.analyzed:
        raw = " ".join(args.text) if args.text else sys.stdin.read()
        sentence = parse_pre_analyzed(raw)
        from .pipeline import apply_transforms
        from .solver import find_candidates, solve
        from .xfer import AssignmentOutputs, linearize, realize, transfer

        transformed = apply_transforms(sentence, lexicon.rules, lexicon.cats)
        result = TranslationResult(source=raw, sentence=transformed)
        target = args.target or (lexicon.target_langs[0] if lexicon.target_langs else "")
        table = lexicon.target_forms(target)
        for assignment in solve(find_candidates(transformed, lexicon, args.gap), transformed):
            block = AssignmentOutputs(assignment, [])
            for combo in transfer(assignment, lexicon, target):
                block.sentences.extend(realize(linearize(combo, assignment, transformed), table))
            result.per_assignment.append(block)
        _print_result(result, args.json, args.trace, out, err)
        return 0
    inputs = [" ".join(args.text)] if args.text else [line.rstrip("\n") for line in sys.stdin if line.strip()]
    for text in inputs:
        result = translate(
            text,
            lexicon,
            source_lang=args.source,
            target_lang=args.target,
            max_outputs=args.max,
            trace=args.trace,
            max_gap=args.gap,
        )
        _print_result(result, args.json, args.trace, out, err)
    return 0


def _run_validate(args, out, err) -> int:
    directory = _resolve_lexicon_dir(args.directory)
    diagnostics = lint_lexicon(directory)
    if diagnostics:
        for diag in diagnostics:
            print(diag, file=out)
        return 2
    lexicon = parse_lexicon(directory)
    print(f"OK: {len(lexicon.entries)} groups, {len(lexicon.rules)} rules", file=out)
    return 0


def _run_serve(args, out, err) -> int:
    try:
        lexicon = parse_lexicon(_resolve_lexicon_dir(args.lexicon))
    except LexiconError as exc:
        print(f"error: {exc}", file=err)
        return 2
    server = create_server(
        lexicon,
        host=args.host,
        port=args.port,
        log_path=args.log,
        target_lang=args.target,
        ui_dir=args.ui_dir,
    )
    host, port = server.server_address[:2]
    print(f"serving {lexicon.source_lang}->{server.target_lang} on http://{host}:{port}/", file=out, flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def cli_main(argv: Optional[list[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    try:
        if args.command == "translate":
            return _run_translate(args, out, err)
        if args.command == "validate":
            return _run_validate(args, out, err)
        if args.command == "serve":
            return _run_serve(args, out, err)
    except LexiconError as exc:
        print(f"error: {exc}", file=err)
        return 2
    return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
