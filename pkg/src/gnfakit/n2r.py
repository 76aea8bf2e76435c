"""NFA to regexp: GNFA state ripping, and the recursive-equation method."""
from __future__ import annotations

from functools import lru_cache

from .gnfa import gnfa_from_nfa, neighbours, rip_state
from .nfa import EMP, Nfa
from .regexp import EMPTY, NULL, Concat, Regexp, Singleton, Star, Union, simplify
from .trace import Trace, TraceBuilder


def rip_order(m: Nfa) -> list[str]:
    return list(m.states)


def ndfa_to_regexp(m: Nfa) -> tuple[Regexp, Trace]:
    """Rip every original state out of the GNFA built from ``m``.

    The returned regexp is the raw label left between the new start and the
    new final state (the null regexp when no edge survives). Each rip frame
    highlights the neighbours that were reconnected.
    """
    g = gnfa_from_nfa(m)
    trace = TraceBuilder()
    trace.add(
        g,
        f"Constructed GNFA with new start {g.start} and new final {g.final}.",
        (g.start, g.final),
    )
    for q in rip_order(m):
        preds, succs = neighbours(g, q)
        g = rip_state(g, q)
        trace.add(g, f"Ripped out state {q}.", preds + succs)
    label = g.label(g.start, g.final)
    return (NULL if label is None else label), trace.build()


def _union_all(parts: list[Regexp]) -> Regexp:
    if not parts:
        return NULL
    acc = parts[0]
    for r in parts[1:]:
        acc = Union(acc, r)
    return acc


def _state_order(m: Nfa) -> list[str]:
    return [m.start] + [s for s in m.states if s != m.start]


def _path_terms(m: Nfa):
    order = _state_order(m)

    @lru_cache(maxsize=None)
    def R(i: int, j: int, k: int) -> Regexp:
        if k == 0:
            parts: list[Regexp] = [EMPTY] if i == j else []
            for src, label, dst in m.rules:
                if src == order[i - 1] and dst == order[j - 1]:
                    parts.append(EMPTY if label == EMP else Singleton(label))
            return simplify(_union_all(parts))
        via = Concat(R(i, k, k - 1), Concat(Star(R(k, k, k - 1)), R(k, j, k - 1)))
        return simplify(Union(R(i, j, k - 1), via))

    return R


def r_term(m: Nfa, i: int, j: int, k: int) -> Regexp:
    """R(i, j, k): words leading from state i to state j through intermediate
    states numbered at most k.

    States are numbered from 1 in declaration order with the start state
    moved to the front. Empty-word rules contribute the empty regexp.
    """
    return _path_terms(m)(i, j, k)


def r_equations(m: Nfa) -> Regexp:
    """Language of ``m`` as the union of R(1, j, n) over the final states j."""
    order = _state_order(m)
    R = _path_terms(m)
    n = len(order)
    finals = [order.index(f) + 1 for f in m.finals]
    return simplify(_union_all([R(1, j, n) for j in finals]))
