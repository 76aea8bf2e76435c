"""Generalized NFAs: transitions labeled by regular expressions.

A :class:`Gnfa` keeps at most one edge per ordered state pair and never
stores an edge labeled with the null regexp. Parallel edges are folded into a
union label, existing label first.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .nfa import EMP, Nfa
from .regexp import (
    EMPTY,
    Concat,
    Empty,
    Null,
    Regexp,
    Singleton,
    Star,
    Union,
    Word,
    derivative,
    match_ends,
    nullable,
    regexp_from_json,
    regexp_to_json,
    symbols_of,
)

Edge = tuple[str, Regexp, str]


class GnfaError(ValueError):
    pass


def fresh_state_name(used: Iterable[str]) -> str:
    """Shortest unused name: ``A``..``Z`` first, then ``A0``..``Z0``, ``A1``..."""
    used = set(used)
    for letter in string.ascii_uppercase:
        if letter not in used:
            return letter
    n = 0
    while True:
        for letter in string.ascii_uppercase:
            name = f"{letter}{n}"
            if name not in used:
                return name
        n += 1


def add_edge(edges: list[Edge], src: str, label: Regexp, dst: str) -> None:
    """Add an edge in place, merging into an existing parallel edge by union."""
    if isinstance(label, Null):
        return
    for i, (s, old, d) in enumerate(edges):
        if s == src and d == dst:
            edges[i] = (s, Union(old, label), d)
            return
    edges.append((src, label, dst))


@dataclass(frozen=True)
class Gnfa:
    states: tuple[str, ...]
    sigma: tuple[str, ...]
    start: str
    final: str
    edges: tuple[Edge, ...]

    def label(self, src: str, dst: str) -> Regexp | None:
        for s, r, d in self.edges:
            if s == src and d == dst:
                return r
        return None

    def check(self) -> None:
        """Raise :class:`GnfaError` if a structural invariant is broken."""
        if self.start == self.final:
            raise GnfaError("start and final coincide")
        known = set(self.states)
        if self.start not in known or self.final not in known:
            raise GnfaError("start or final is not a state")
        pairs = set()
        for s, r, d in self.edges:
            if s not in known or d not in known:
                raise GnfaError(f"edge ({s}, {d}) touches an unknown state")
            if (s, d) in pairs:
                raise GnfaError(f"parallel edges between {s} and {d}")
            pairs.add((s, d))
            if isinstance(r, Null):
                raise GnfaError(f"null label on edge ({s}, {d})")
            if d == self.start:
                raise GnfaError("edge into the start state")
            if s == self.final:
                raise GnfaError("edge out of the final state")

    def to_json(self) -> dict:
        return {
            "states": list(self.states),
            "sigma": list(self.sigma),
            "start": self.start,
            "final": self.final,
            "rules": [[s, regexp_to_json(r), d] for s, r, d in self.edges],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Gnfa":
        try:
            g = cls(
                tuple(obj["states"]),
                tuple(obj["sigma"]),
                obj["start"],
                obj["final"],
                tuple((s, regexp_from_json(r), d) for s, r, d in obj["rules"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise GnfaError(f"malformed GNFA JSON: {exc}") from exc
        g.check()
        return g


def gnfa_from_regexp(r: Regexp, sigma: Iterable[str] | None = None) -> Gnfa:
    edges: list[Edge] = []
    add_edge(edges, "S", r, "F")
    sigma = tuple(symbols_of(r)) if sigma is None else tuple(sigma)
    return Gnfa(("S", "F"), sigma, "S", "F", tuple(edges))


def gnfa_from_nfa(m: Nfa) -> Gnfa:
    new_start = fresh_state_name(m.states)
    new_final = fresh_state_name(set(m.states) | {new_start})
    edges: list[Edge] = []
    add_edge(edges, new_start, EMPTY, m.start)
    for src, label, dst in m.rules:
        add_edge(edges, src, EMPTY if label == EMP else Singleton(label), dst)
    for f in m.finals:
        add_edge(edges, f, EMPTY, new_final)
    states = (new_start, *m.states, new_final)
    return Gnfa(states, m.sigma, new_start, new_final, tuple(edges))


def neighbours(g: Gnfa, q: str) -> tuple[list[str], list[str]]:
    """Predecessors and successors of ``q`` other than ``q`` itself, in edge order."""
    preds = [s for s, _, d in g.edges if d == q and s != q]
    succs = [d for s, _, d in g.edges if s == q and d != q]
    return preds, succs


def rip_state(g: Gnfa, q: str) -> Gnfa:
    """Remove ``q``, reconnecting every predecessor to every successor."""
    if q not in g.states:
        raise GnfaError(f"unknown state {q}")
    if q in (g.start, g.final):
        raise GnfaError(f"cannot rip the start or final state {q}")
    preds, succs = neighbours(g, q)
    loop = g.label(q, q)
    edges = [e for e in g.edges if q not in (e[0], e[2])]
    for p in preds:
        into = g.label(p, q)
        for s in succs:
            out = g.label(q, s)
            middle = out if loop is None else Concat(Star(loop), out)
            add_edge(edges, p, Concat(into, middle), s)
    states = tuple(s for s in g.states if s != q)
    return Gnfa(states, g.sigma, g.start, g.final, tuple(edges))


@lru_cache(maxsize=64)
def _out_edges(g: Gnfa) -> dict[str, list[Edge]]:
    out: dict[str, list[Edge]] = {}
    for e in g.edges:
        out.setdefault(e[0], []).append(e)
    return out


def gnfa_accepts(g: Gnfa, w: Iterable[str]) -> bool:
    """True iff some start-to-final path spells ``w``.

    Searches (state, position) pairs; each edge advances the position by the
    length of a segment its label matches (possibly zero).
    """
    w: Word = tuple(w)
    out_edges = _out_edges(g)
    goal = (g.final, len(w))
    seen = {(g.start, 0)}
    todo = [(g.start, 0)]
    while todo:
        state, pos = todo.pop()
        if (state, pos) == goal:
            return True
        for _, label, dst in out_edges.get(state, ()):
            for end in match_ends(label, w, pos):
                if (dst, end) not in seen:
                    seen.add((dst, end))
                    todo.append((dst, end))
    return False


def gnfa_language(g: Gnfa, maxlen: int, sigma: Iterable[str] | None = None) -> set[Word]:
    """All words of length at most ``maxlen`` accepted by ``g``.

    Walks the prefix tree once, carrying the set of reachable states and of
    partially consumed edges (residual label, destination).
    """
    sigma = sorted(set(g.sigma if sigma is None else sigma))
    out_edges = _out_edges(g)

    def close(states: set, items: set):
        todo = list(states)
        for label, dst in list(items):
            if nullable(label) and dst not in states:
                states.add(dst)
                todo.append(dst)
        while todo:
            q = todo.pop()
            for _, label, dst in out_edges.get(q, ()):
                if (label, dst) in items:
                    continue
                items.add((label, dst))
                if nullable(label) and dst not in states:
                    states.add(dst)
                    todo.append(dst)
        return states, items

    found: set[Word] = set()

    def walk(items: frozenset, prefix: Word, states: set):
        if g.final in states:
            found.add(prefix)
        if len(prefix) == maxlen:
            return
        for a in sigma:
            nxt = set()
            for label, dst in items:
                d = derivative(label, a)
                if not isinstance(d, Null):
                    nxt.add((d, dst))
            if nxt:
                st, it = close(set(), nxt)
                walk(frozenset(it), prefix + (a,), st)

    states, items = close({g.start}, set())
    walk(frozenset(items), (), states)
    return found


def gnfa_to_nfa(g: Gnfa) -> Nfa:
    rules = []
    for s, r, d in g.edges:
        if isinstance(r, Singleton):
            rules.append((s, r.symbol, d))
        elif isinstance(r, Empty):
            rules.append((s, EMP, d))
        else:
            raise GnfaError(f"edge ({s}, {d}) carries a non-atomic label")
    return Nfa(g.states, g.sigma, g.start, (g.final,), tuple(rules))
