"""Transformation traces, the two-list navigation cursor, and DOT output."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .gnfa import Gnfa
from .regexp import render_regexp

VIOLET = "#9400D3"
START_MARKER = "__start"
INSTRUCTIONS = "\u2192 next   \u2190 previous   \u2193 end   \u2191 start"


class EmptyTraceError(ValueError):
    pass


@dataclass(frozen=True)
class Frame:
    index: int
    graph: Gnfa
    message: str
    highlights: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "message": self.message,
            "highlights": list(self.highlights),
            "graph": self.graph.to_json(),
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Frame":
        graph = Gnfa.from_json(obj["graph"])
        highlights = tuple(obj.get("highlights", ()))
        if not set(highlights) <= set(graph.states):
            raise ValueError(f"frame {obj.get('index')} highlights unknown states")
        return cls(int(obj["index"]), graph, str(obj["message"]), highlights)


@dataclass(frozen=True)
class Trace:
    frames: tuple[Frame, ...]

    def __post_init__(self):
        if not self.frames:
            raise EmptyTraceError("a trace needs at least one frame")
        for i, f in enumerate(self.frames):
            if f.index != i:
                raise ValueError(f"frame at position {i} has index {f.index}")

    def __len__(self):
        return len(self.frames)

    def __getitem__(self, i) -> Frame:
        return self.frames[i]

    def __iter__(self):
        return iter(self.frames)

    @property
    def graphs(self) -> list[Gnfa]:
        return [f.graph for f in self.frames]

    def to_json(self) -> dict:
        return {"frames": [f.to_json() for f in self.frames]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, obj: Mapping) -> "Trace":
        try:
            frames = obj["frames"]
        except (KeyError, TypeError) as exc:
            raise ValueError("trace JSON needs a 'frames' list") from exc
        return cls(tuple(Frame.from_json(f) for f in frames))


class TraceBuilder:
    """Accumulates frames, numbering them and ordering highlights by state order."""

    def __init__(self):
        self.frames: list[Frame] = []

    def add(self, graph: Gnfa, message: str, highlights: Iterable[str] = ()) -> None:
        wanted = set(highlights)
        ordered = tuple(s for s in graph.states if s in wanted)
        self.frames.append(Frame(len(self.frames), graph, message, ordered))

    def build(self) -> Trace:
        return Trace(tuple(self.frames))


# ---------------------------------------------------------------------------
# Navigation


@dataclass(frozen=True)
class VizCursor:
    """Processed frames (most recent first) and unprocessed frames (head is shown)."""

    pimgs: tuple[Frame, ...]
    upimgs: tuple[Frame, ...]

    @property
    def current(self) -> Frame:
        return self.upimgs[0]

    @property
    def at_start(self) -> bool:
        return not self.pimgs

    @property
    def at_end(self) -> bool:
        return len(self.upimgs) == 1


def cursor_new(t: Trace | Iterable[Frame]) -> VizCursor:
    frames = tuple(t)
    if not frames:
        raise EmptyTraceError("cannot navigate an empty trace")
    return VizCursor((), frames)


def cursor_next(c: VizCursor) -> VizCursor:
    if c.at_end:
        return c
    return VizCursor((c.upimgs[0],) + c.pimgs, c.upimgs[1:])


def cursor_prev(c: VizCursor) -> VizCursor:
    if c.at_start:
        return c
    return VizCursor(c.pimgs[1:], (c.pimgs[0],) + c.upimgs)


def cursor_end(c: VizCursor) -> VizCursor:
    moved = c.upimgs[:-1]
    return VizCursor(tuple(reversed(moved)) + c.pimgs, c.upimgs[-1:])


def cursor_start(c: VizCursor) -> VizCursor:
    return VizCursor((), tuple(reversed(c.pimgs)) + c.upimgs)


# ---------------------------------------------------------------------------
# DOT


def _quote(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{escaped}"'


def frame_to_dot(f: Frame) -> str:
    g = f.graph
    highlighted = set(f.highlights)
    lines = [
        "digraph gnfa {",
        "  rankdir=LR;",
        '  labelloc="b";',
        f"  label={_quote(f.message + chr(10) + INSTRUCTIONS)};",
        "  node [shape=circle];",
        f"  {_quote(START_MARKER)} [shape=point, style=invis];",
    ]
    for s in g.states:
        attrs = []
        if s == g.final:
            attrs.append("shape=doublecircle")
        if s in highlighted:
            attrs.append(f'style=filled, fillcolor="{VIOLET}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(s)}{suffix};")
    lines.append(f"  {_quote(START_MARKER)} -> {_quote(g.start)};")
    for src, label, dst in g.edges:
        lines.append(f"  {_quote(src)} -> {_quote(dst)} [label={_quote(render_regexp(label))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
