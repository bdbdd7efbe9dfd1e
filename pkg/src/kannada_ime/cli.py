"""Command-line surface: scripted composition, corpus analysis, savings.

Keystroke scripts are whitespace-separated tokens: a bare letter is a tap
(uppercase = shifted), a ``+`` suffix is press-and-hold, ``<BS>``
``<A-BS>`` ``<S-BS>`` ``<C-BS>`` are the four deletes, ``<SP>`` is the
space barrier and ``<ZWJ>``/``<ZWNJ>`` the joiner overrides.

Exit codes: 0 success (blocked-input notices are diagnostics, not
failures), 1 usage error, 2 input-data error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import analyzer, composer as cp, keymap as km
from .phonology import ZWJ, ZWNJ

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class ScriptError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__("line %d, column %d: %s" % (line, column, message))
        self.line = line
        self.column = column


_SPECIAL_EVENTS = {
    "<BS>": km.KeyEvent(km.BACKSPACE),
    "<A-BS>": km.KeyEvent(km.BACKSPACE, modifier=km.Modifier.ALT),
    "<S-BS>": km.KeyEvent(km.BACKSPACE, modifier=km.Modifier.SHIFT),
    "<C-BS>": km.KeyEvent(km.BACKSPACE, modifier=km.Modifier.CTRL),
    "<SP>": km.KeyEvent(" "),
    "<ZWJ>": km.KeyEvent(ZWJ),
    "<ZWNJ>": km.KeyEvent(ZWNJ),
}


def parse_script(text: str) -> list[km.KeyEvent]:
    """Turn a keystroke script into key events.  Unknown tokens are
    errors, not passthrough."""
    events: list[km.KeyEvent] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        col = 0
        rest = line
        while rest:
            stripped = rest.lstrip()
            col += len(rest) - len(stripped)
            if not stripped:
                break
            token = stripped.split()[0]
            start_col = col + 1
            rest = stripped[len(token) :]
            col += len(token)
            if token in _SPECIAL_EVENTS:
                events.append(_SPECIAL_EVENTS[token])
                continue
            hold = token.endswith("+")
            base = token[:-1] if hold else token
            if len(base) != 1 or not (base.isalpha() or base.isdigit()):
                raise ScriptError("unknown token %r" % token, lineno, start_col)
            if hold and base.isdigit():
                raise ScriptError("hold is only defined for letters", lineno, start_col)
            events.append(
                km.KeyEvent(base.lower(), shift=base.isalpha() and base.isupper(), hold=hold)
            )
    return events


def _composer_config(args: argparse.Namespace) -> cp.ComposerConfig:
    return cp.ComposerConfig(
        default_vowel=cp.DefaultVowel.NULL if args.default_vowel == "null" else cp.DefaultVowel.INHERENT_A,
        ohok_mode={"off": cp.OhokMode.OFF, "so": cp.OhokMode.SVA_OTTU, "ko": cp.OhokMode.KANDANTE, "ao": cp.OhokMode.ANDANTE}[args.mode],
        shunyification=not args.no_shunyify,
        arkification=not args.no_arkify,
        strict_rules=not args.no_strict,
    )


def _load_layout(args: argparse.Namespace) -> km.KeyLayout:
    if args.layout:
        return km.load_layout(Path(args.layout).read_text("utf-8"), name=args.layout)
    return km.load_default_layout()


def _cmd_compose(args: argparse.Namespace, out, err) -> int:
    if args.script and args.script != "-":
        try:
            text = Path(args.script).read_text("utf-8")
        except OSError as e:
            print("error: %s" % e, file=err)
            return EXIT_DATA
    else:
        text = sys.stdin.read()
    try:
        events = parse_script(text)
        layout = _load_layout(args)
    except (ScriptError, km.LayoutError, OSError) as e:
        print("error: %s" % e, file=err)
        return EXIT_DATA
    config = _composer_config(args)
    buf = cp.EditorBuffer.empty()
    for ev in events:
        action = km.resolve(layout, ev, ascii_digits=args.ascii_digits)
        buf, notice = cp.apply(buf, action, config)
        if notice is not None:
            print("notice: %s: %s" % (notice.kind.value, notice.message), file=err)
        if args.trace:
            print(cp.render(buf), file=out)
    if not args.trace:
        print(cp.render(buf), file=out)
    return EXIT_OK


def _read_corpus(paths: Sequence[str], err) -> Optional[str]:
    if not paths:
        return sys.stdin.read()
    chunks = []
    for p in paths:
        try:
            chunks.append(Path(p).read_text("utf-8"))
        except OSError as e:
            print("error: %s" % e, file=err)
            return None
    return "\n".join(chunks)


def _cmd_analyze(args: argparse.Namespace, out, err) -> int:
    text = _read_corpus(args.corpus, err)
    if text is None:
        return EXIT_DATA
    try:
        freq = analyzer.classify_corpus(text)
    except analyzer.EmptyCorpusError:
        print("error: no Kannada syllables in the input", file=err)
        return EXIT_DATA
    out.write(analyzer.format_frequency_report(freq, fmt=args.format))
    return EXIT_OK


def _cmd_savings(args: argparse.Namespace, out, err) -> int:
    freq = analyzer.BASELINE_FREQUENCIES
    if args.freq:
        text = _read_corpus(args.freq, err)
        if text is None:
            return EXIT_DATA
        try:
            freq = analyzer.classify_corpus(text)
        except analyzer.EmptyCorpusError:
            print("error: no Kannada syllables in the input", file=err)
            return EXIT_DATA
    out.write(analyzer.format_savings_report(freq, fmt=args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kannada-ime", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compose", help="replay a keystroke script")
    comp.add_argument("script", nargs="?", help="script file ('-' or omitted for stdin)")
    comp.add_argument("--default-vowel", choices=("a", "null"), default="a")
    comp.add_argument("--mode", choices=("off", "so", "ko", "ao"), default="off")
    comp.add_argument("--no-shunyify", action="store_true")
    comp.add_argument("--no-arkify", action="store_true")
    comp.add_argument("--no-strict", action="store_true")
    comp.add_argument("--ascii-digits", action="store_true")
    comp.add_argument("--layout", help="layout document file")
    comp.add_argument("--trace", action="store_true", help="print the buffer after every keystroke")
    comp.set_defaults(func=_cmd_compose)

    ana = sub.add_parser("analyze", help="syllable-frequency report for a corpus")
    ana.add_argument("corpus", nargs="*", help="UTF-8 text files (stdin if omitted)")
    ana.add_argument("--format", choices=("text", "csv"), default="text")
    ana.set_defaults(func=_cmd_analyze)

    sav = sub.add_parser("savings", help="keystroke-savings grid")
    sav.add_argument("--freq", nargs="+", metavar="CORPUS", help="measure frequencies from these files")
    sav.add_argument("--format", choices=("text", "csv"), default="text")
    sav.set_defaults(func=_cmd_savings)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    return args.func(args, out, err)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
