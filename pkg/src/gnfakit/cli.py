"""Command-line interface: ``gnfakit r2n|n2r|check|gen|step``."""
from __future__ import annotations

import argparse
import json
import os
import random
import shlex
import subprocess
import sys
import tempfile
from pathlib import Path

from . import check
from .n2r import ndfa_to_regexp
from .nfa import NfaValidationError, validate_nfa
from .r2n import regexp_to_ndfa
from .regexp import gen_word, parse_regexp, render_regexp, simplify, symbols_of
from .trace import (
    INSTRUCTIONS,
    Trace,
    VizCursor,
    cursor_end,
    cursor_new,
    cursor_next,
    cursor_prev,
    cursor_start,
    frame_to_dot,
)

DOT_CMD_ENV = "GNFAKIT_DOT_CMD"

KEYS = {
    "right": cursor_next,
    "left": cursor_prev,
    "down": cursor_end,
    "up": cursor_start,
}

_ESCAPES = {"\x1b[C": "right", "\x1b[D": "left", "\x1b[B": "down", "\x1b[A": "up"}


class CommandError(Exception):
    """Reported on stderr with exit status 1."""


def _write_trace(trace: Trace, out: Path, fmt: str) -> None:
    out.mkdir(parents=True, exist_ok=True)
    if fmt in ("json", "both"):
        (out / "trace.json").write_text(trace.dumps(), encoding="utf-8")
    if fmt in ("dot", "both"):
        for frame in trace:
            (out / f"frame_{frame.index:03d}.dot").write_text(frame_to_dot(frame), encoding="utf-8")


def _parse(text: str, sigma: str | None):
    try:
        return parse_regexp(text, sigma)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CommandError(f"cannot read {path}: {exc}") from exc


def _load_machine(obj):
    try:
        return validate_nfa(obj)
    except NfaValidationError as exc:
        raise CommandError("\n".join(exc.errors)) from exc


def cmd_r2n(args) -> int:
    r = _parse(args.regexp, args.sigma)
    nfa, trace = regexp_to_ndfa(r, args.sigma)
    out = Path(args.out)
    _write_trace(trace, out, args.format)
    (out / "machine.json").write_text(json.dumps(nfa.to_json(), indent=1) + "\n", encoding="utf-8")
    print(f"{len(trace)} frames")
    return 0


def cmd_n2r(args) -> int:
    m = _load_machine(_load_json(args.machine))
    r, trace = ndfa_to_regexp(m)
    out = Path(args.out)
    _write_trace(trace, out, args.format)
    lines = [render_regexp(r)]
    if args.simplify:
        lines.append(render_regexp(simplify(r)))
    (out / "regexp.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(lines[0])
    if args.simplify:
        print(f"simplified: {lines[1]}")
    return 0


def cmd_check(args) -> int:
    if os.path.isfile(args.input):
        obj = _load_json(args.input)
        if isinstance(obj, dict) and "frames" in obj:
            try:
                trace = Trace.from_json(obj)
            except ValueError as exc:
                raise CommandError(f"malformed trace: {exc}") from exc
            problem = check.check_trace(trace, args.maxlen)
        else:
            problem = check.check_machine(_load_machine(obj), args.maxlen)
    else:
        r = _parse(args.input, args.sigma)
        sigma = args.sigma if args.sigma else symbols_of(r)
        problem = check.check_regexp(r, sigma, args.maxlen)
    if problem is None:
        print("EQUIVALENT")
        return 0
    word = " ".join(problem.word) if problem.word else "!"
    print(f"NOT EQUIVALENT: counterexample {word} ({problem})")
    return 1


def cmd_gen(args) -> int:
    r = _parse(args.regexp, args.sigma)
    rng = random.Random(args.seed)
    try:
        for _ in range(args.count):
            w = gen_word(r, rng, args.max_reps)
            print(" ".join(w) if w else "!")
    except ValueError:
        raise CommandError("empty language") from None
    return 0


# ---------------------------------------------------------------------------
# Stepping


def apply_key(cursor: VizCursor, key: str) -> VizCursor:
    return KEYS[key](cursor)


def _describe(cursor: VizCursor, total: int, dot_path: Path, out) -> None:
    frame = cursor.current
    print(f"[{frame.index + 1}/{total}] {frame.message}", file=out)
    print(f"  highlighted: {', '.join(frame.highlights) or '-'}", file=out)
    renderer = os.environ.get(DOT_CMD_ENV)
    if renderer:
        subprocess.run(shlex.split(renderer) + [str(dot_path)], check=False)
    else:
        print(f"  dot: {dot_path}", file=out)


def _dot_paths(trace: Trace, trace_file: Path) -> list[Path]:
    beside = [trace_file.parent / f"frame_{f.index:03d}.dot" for f in trace]
    if all(p.is_file() and p.read_text(encoding="utf-8") == frame_to_dot(f)
           for p, f in zip(beside, trace)):
        return beside
    tmp = Path(tempfile.mkdtemp(prefix="gnfakit-"))
    paths = []
    for f in trace:
        p = tmp / f"frame_{f.index:03d}.dot"
        p.write_text(frame_to_dot(f), encoding="utf-8")
        paths.append(p)
    return paths


def _read_key(stream) -> str:
    ch = stream.read(1)
    if ch == "\x1b":
        ch += stream.read(2)
    return _ESCAPES.get(ch, ch)


def _interactive(cursor: VizCursor, total: int, paths: list[Path]) -> None:
    import termios
    import tty

    fd = sys.stdin.fileno()
    saved = termios.tcgetattr(fd)
    print(INSTRUCTIONS + "   q quit")
    _describe(cursor, total, paths[cursor.current.index], sys.stdout)
    try:
        tty.setcbreak(fd)
        while True:
            key = _read_key(sys.stdin)
            if key == "q":
                break
            if key in KEYS:
                cursor = apply_key(cursor, key)
                _describe(cursor, total, paths[cursor.current.index], sys.stdout)
    finally:
        termios.tcsetattr(fd, termios.TCSADRAIN, saved)


def cmd_step(args) -> int:
    trace_file = Path(args.trace)
    try:
        trace = Trace.from_json(_load_json(args.trace))
    except ValueError as exc:
        raise CommandError(f"malformed trace: {exc}") from exc
    paths = _dot_paths(trace, trace_file)
    cursor = cursor_new(trace)
    total = len(trace)

    if args.keys is not None:
        keys = [k for k in args.keys.split(",") if k]
        unknown = [k for k in keys if k not in KEYS and k != "q"]
        if unknown:
            raise CommandError(f"unknown keys: {', '.join(unknown)}")
        _describe(cursor, total, paths[0], sys.stdout)
        for key in keys:
            if key == "q":
                break
            cursor = apply_key(cursor, key)
            _describe(cursor, total, paths[cursor.current.index], sys.stdout)
    elif sys.stdin.isatty() and sys.stdout.isatty():
        _interactive(cursor, total, paths)
    else:
        # no terminal: show every frame in order
        while True:
            _describe(cursor, total, paths[cursor.current.index], sys.stdout)
            if cursor.at_end:
                break
            cursor = cursor_next(cursor)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gnfakit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("r2n", help="convert a regular expression to an ndfa")
    p.add_argument("regexp")
    p.add_argument("--sigma", help="alphabet, e.g. 'abc'")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--format", choices=("json", "dot", "both"), default="both")
    p.set_defaults(func=cmd_r2n)

    p = sub.add_parser("n2r", help="convert a machine JSON file to a regular expression")
    p.add_argument("machine")
    p.add_argument("--out", default=".")
    p.add_argument("--format", choices=("json", "dot", "both"), default="both")
    p.add_argument("--simplify", action="store_true", help="also report the simplified regexp")
    p.set_defaults(func=cmd_n2r)

    p = sub.add_parser("check", help="bounded equivalence of the conversion methods")
    p.add_argument("input", help="machine JSON, trace JSON, or regexp text")
    p.add_argument("--sigma")
    p.add_argument("--maxlen", type=int, default=5)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate words of a regular expression")
    p.add_argument("regexp")
    p.add_argument("--sigma")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-reps", type=int, default=20)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("step", help="step through a trace with the arrow keys")
    p.add_argument("trace")
    p.add_argument("--keys", help="comma-separated script of right,left,down,up,q")
    p.set_defaults(func=cmd_step)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
