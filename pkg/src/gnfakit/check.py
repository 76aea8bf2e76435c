"""Bounded-language differential checks shared by the CLI and the test-suite."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .gnfa import Gnfa, gnfa_accepts
from .n2r import ndfa_to_regexp, r_equations
from .nfa import Nfa, enumerate_nfa_language
from .r2n import regexp_to_ndfa
from .regexp import Regexp, Word, all_words, enumerate_regexp_language
from .trace import Trace


def shortest(words: Iterable[Word]) -> Word | None:
    return min(words, key=lambda w: (len(w), w), default=None)


@dataclass
class Disagreement:
    left: str
    right: str
    word: Word
    left_accepts: bool

    def __str__(self):
        shown = " ".join(self.word) if self.word else "!"
        if self.left_accepts:
            return f"{self.left} accepts '{shown}', {self.right} rejects it"
        return f"{self.left} rejects '{shown}', {self.right} accepts it"


def compare_languages(named: dict[str, set[Word]]) -> Disagreement | None:
    """Compare every language with the first one; report the shortest mismatch."""
    (ref_name, ref), *others = named.items()
    worst = None
    for name, lang in others:
        word = shortest(ref ^ lang)
        if word is not None and (worst is None or (len(word), word) < (len(worst.word), worst.word)):
            worst = Disagreement(ref_name, name, word, word in ref)
    return worst


def check_machine(m: Nfa, maxlen: int) -> Disagreement | None:
    ripped, _ = ndfa_to_regexp(m)
    return compare_languages({
        "machine": enumerate_nfa_language(m, maxlen),
        "ripping": enumerate_regexp_language(ripped, maxlen, m.sigma),
        "equations": enumerate_regexp_language(r_equations(m), maxlen, m.sigma),
    })


def check_regexp(r: Regexp, sigma: Iterable[str], maxlen: int) -> Disagreement | None:
    sigma = sorted(set(sigma))
    m, _ = regexp_to_ndfa(r, sigma)
    back, _ = ndfa_to_regexp(m)
    return compare_languages({
        "regexp": enumerate_regexp_language(r, maxlen, sigma),
        "ndfa": enumerate_nfa_language(m, maxlen),
        "round-trip": enumerate_regexp_language(back, maxlen, sigma),
        "equations": enumerate_regexp_language(r_equations(m), maxlen, sigma),
    })


def step_violation(before: Gnfa, after: Gnfa, maxlen: int,
                   sigma: Iterable[str] | None = None) -> Word | None:
    """Shortest word on which two GNFAs disagree, by :func:`gnfa_accepts`."""
    sigma = sorted(set(before.sigma) | set(after.sigma) if sigma is None else set(sigma))
    for w in all_words(sigma, maxlen):
        if gnfa_accepts(before, w) != gnfa_accepts(after, w):
            return w
    return None


def check_trace(t: Trace, maxlen: int) -> Disagreement | None:
    graphs = t.graphs
    for i in range(1, len(graphs)):
        w = step_violation(graphs[i - 1], graphs[i], maxlen)
        if w is not None:
            return Disagreement(f"frame {i - 1}", f"frame {i}", w, gnfa_accepts(graphs[i - 1], w))
    return None
