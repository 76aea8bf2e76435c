"""Regexp to NFA by repeatedly decomposing one GNFA edge at a time."""
from __future__ import annotations

from typing import Iterable

from .gnfa import Edge, Gnfa, GnfaError, add_edge, fresh_state_name, gnfa_from_regexp, gnfa_to_nfa
from .nfa import Nfa
from .regexp import DECOMPOSABLE, EMPTY, Concat, Regexp, Star, Union, render_regexp, simplify
from .trace import Trace, TraceBuilder

KIND = {Union: "union", Concat: "concatenation", Star: "Kleene star"}


def select_decomposable_edge(g: Gnfa) -> Edge | None:
    for edge in g.edges:
        if isinstance(edge[1], DECOMPOSABLE):
            return edge
    return None


def _fresh(states: list[str], n: int) -> list[str]:
    names = []
    for _ in range(n):
        name = fresh_state_name(states)
        states.append(name)
        names.append(name)
    return names


def expand_edge(g: Gnfa, edge: Edge) -> tuple[Gnfa, tuple[str, str], str]:
    """Replace ``edge`` by the closure construction for its label.

    Returns the new GNFA, the (source, destination) pair to highlight and a
    message describing the step.
    """
    src, r, dst = edge
    if edge not in g.edges:
        raise GnfaError(f"edge ({src}, {dst}) is not in the GNFA")
    if not isinstance(r, DECOMPOSABLE):
        raise GnfaError(f"label {render_regexp(r)} on ({src}, {dst}) is not decomposable")

    states = list(g.states)
    edges = [e for e in g.edges if e != edge]
    if isinstance(r, Union):
        a, b, c, d = _fresh(states, 4)
        new = [(src, EMPTY, a), (src, EMPTY, b), (a, r.r1, c), (b, r.r2, d),
               (c, EMPTY, dst), (d, EMPTY, dst)]
    elif isinstance(r, Concat):
        a, b = _fresh(states, 2)
        new = [(src, r.r1, a), (a, EMPTY, b), (b, r.r2, dst)]
    else:
        a, b = _fresh(states, 2)
        new = [(src, EMPTY, a), (a, EMPTY, b), (a, EMPTY, dst), (b, EMPTY, dst), (b, r.r1, b)]
    for e in new:
        add_edge(edges, *e)

    message = f"Expanded {render_regexp(r)} on the edge from {src} to {dst}."
    expanded = Gnfa(tuple(states), g.sigma, g.start, g.final, tuple(edges))
    return expanded, (src, dst), message


def regexp_to_ndfa(r: Regexp, sigma: Iterable[str] | None = None) -> tuple[Nfa, Trace]:
    """Convert ``r`` to an NFA, recording one frame per step.

    ``sigma`` defaults to the symbols occurring in ``r``.
    """
    trace = TraceBuilder()
    g = gnfa_from_regexp(r, sigma)
    trace.add(g, "Starting ndfa.")

    simpler = simplify(r)
    if simpler != r:
        edges: list[Edge] = []
        add_edge(edges, g.start, simpler, g.final)
        g = Gnfa(g.states, g.sigma, g.start, g.final, tuple(edges))
        trace.add(g, f"Simplified the regular expression to {render_regexp(simpler)}.")

    while (edge := select_decomposable_edge(g)) is not None:
        g, highlights, message = expand_edge(g, edge)
        trace.add(g, message, highlights)

    return gnfa_to_nfa(g), trace.build()
