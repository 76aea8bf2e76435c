"""Nondeterministic finite automata with empty-word transitions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .regexp import SymbolError, Word

EMP = "eps"

Rule = tuple[str, str, str]


class NfaValidationError(ValueError):
    def __init__(self, errors: list[str]):
        super().__init__("invalid machine: " + "; ".join(errors))
        self.errors = errors


@dataclass(frozen=True)
class Nfa:
    states: tuple[str, ...]
    sigma: tuple[str, ...]
    start: str
    finals: tuple[str, ...]
    rules: tuple[Rule, ...]

    def to_json(self) -> dict:
        return {
            "states": list(self.states),
            "sigma": list(self.sigma),
            "start": self.start,
            "finals": list(self.finals),
            "rules": [list(rule) for rule in self.rules],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Nfa":
        return validate_nfa(obj)


def _duplicates(items) -> list:
    seen, dups = set(), []
    for item in items:
        if item in seen and item not in dups:
            dups.append(item)
        seen.add(item)
    return dups


def validate_nfa(candidate: Mapping) -> Nfa:
    """Build an :class:`Nfa` from a raw description, listing every violation.

    ``candidate`` has the keys ``states``, ``sigma``, ``start``, ``finals`` and
    ``rules``; each rule is a ``(source, label, destination)`` triple whose label
    is a symbol or :data:`EMP`.
    """
    errors = []
    try:
        states = [str(s) for s in candidate["states"]]
        sigma = [str(a) for a in candidate["sigma"]]
        start = str(candidate["start"])
        finals = [str(f) for f in candidate["finals"]]
        raw_rules = list(candidate["rules"])
    except (KeyError, TypeError) as exc:
        raise NfaValidationError([f"malformed machine description: {exc}"]) from exc

    for s in _duplicates(states):
        errors.append(f"duplicate-state: {s}")
    for a in _duplicates(sigma):
        errors.append(f"duplicate-symbol: {a}")
    if EMP in sigma:
        errors.append(f"unknown-symbol: {EMP} is reserved for empty transitions")
    known = set(states)
    if start not in known:
        errors.append(f"start-not-a-state: {start}")
    for f in finals:
        if f not in known:
            errors.append(f"final-not-a-state: {f}")

    rules = []
    for rule in raw_rules:
        if not isinstance(rule, (list, tuple)) or len(rule) != 3:
            errors.append(f"malformed-rule: {rule!r}")
            continue
        src, label, dst = (str(x) for x in rule)
        for s in (src, dst):
            if s not in known:
                errors.append(f"unknown-state-in-rule: {s} in ({src} {label} {dst})")
        if label != EMP and label not in sigma:
            errors.append(f"unknown-symbol: {label} in ({src} {label} {dst})")
        rules.append((src, label, dst))

    if errors:
        raise NfaValidationError(errors)
    return Nfa(tuple(states), tuple(sigma), start, tuple(finals), tuple(rules))


def epsilon_closure(m: Nfa, states: Iterable[str]) -> frozenset[str]:
    closure = set(states)
    todo = list(closure)
    while todo:
        q = todo.pop()
        for src, label, dst in m.rules:
            if src == q and label == EMP and dst not in closure:
                closure.add(dst)
                todo.append(dst)
    return frozenset(closure)


def _step(m: Nfa, frontier: frozenset[str], symbol: str) -> frozenset[str]:
    moved = {dst for src, label, dst in m.rules if label == symbol and src in frontier}
    return epsilon_closure(m, moved)


def nfa_apply(m: Nfa, w: Iterable[str]) -> str:
    """Return ``'accept'`` or ``'reject'``."""
    frontier = epsilon_closure(m, [m.start])
    for symbol in w:
        if symbol not in m.sigma:
            raise SymbolError(f"symbol {symbol!r} is not in the machine alphabet")
        frontier = _step(m, frontier, symbol)
    return "accept" if frontier & set(m.finals) else "reject"


def accepts(m: Nfa, w: Iterable[str]) -> bool:
    return nfa_apply(m, w) == "accept"


def enumerate_nfa_language(m: Nfa, maxlen: int) -> set[Word]:
    return {
        w
        for n in range(maxlen + 1)
        for w in itertools.product(m.sigma, repeat=n)
        if nfa_apply(m, w) == "accept"
    }
