"""Regular expression algebra over six varieties.

Values are immutable trees built from :class:`Null`, :class:`Empty`,
:class:`Singleton`, :class:`Union`, :class:`Concat` and :class:`Star`.

Concrete text syntax::

    union   := concat (('U' | '|') concat)*
    concat  := postfix postfix*
    postfix := atom '*'*
    atom    := symbol | '!' | '~' | '(' union ')'

``!`` is the empty word, ``~`` the empty language, and a symbol is a single
alphanumeric character other than ``U``. Whitespace is ignored.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Union as _U

Word = tuple[str, ...]

UNION_TOKENS = ("U", "|")


class RegexpSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class SymbolError(ValueError):
    """A symbol is not in the alphabet in use."""


class EmptyLanguageError(ValueError):
    """Raised when a word is requested from a regexp denoting the empty language."""


class _Node:
    # Trees are compared and hashed a lot by the memoized matchers; cache the hash.
    __slots__ = ()

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((type(self).__name__,) + self._key())
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return render_regexp(self)


@dataclass(frozen=True, eq=True, repr=True)
class Null(_Node):
    _hash: int | None = field(default=None, init=False, repr=False, compare=False)

    def _key(self):
        return ()

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Empty(_Node):
    _hash: int | None = field(default=None, init=False, repr=False, compare=False)

    def _key(self):
        return ()

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Singleton(_Node):
    symbol: str
    _hash: int | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.symbol, str) or len(self.symbol) != 1:
            raise SymbolError(f"singleton symbol must be one character, got {self.symbol!r}")

    def _key(self):
        return (self.symbol,)

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Union(_Node):
    r1: "Regexp"
    r2: "Regexp"
    _hash: int | None = field(default=None, init=False, repr=False, compare=False)

    def _key(self):
        return (self.r1, self.r2)

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Concat(_Node):
    r1: "Regexp"
    r2: "Regexp"
    _hash: int | None = field(default=None, init=False, repr=False, compare=False)

    def _key(self):
        return (self.r1, self.r2)

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Star(_Node):
    r1: "Regexp"
    _hash: int | None = field(default=None, init=False, repr=False, compare=False)

    def _key(self):
        return (self.r1,)

    __hash__ = _Node.__hash__


Regexp = _U[Null, Empty, Singleton, Union, Concat, Star]

NULL = Null()
EMPTY = Empty()

DECOMPOSABLE = (Union, Concat, Star)


def symbols_of(r: Regexp) -> list[str]:
    """Singleton symbols occurring in ``r``, sorted."""
    found = set()
    stack = [r]
    while stack:
        node = stack.pop()
        if isinstance(node, Singleton):
            found.add(node.symbol)
        elif isinstance(node, (Union, Concat)):
            stack.extend((node.r1, node.r2))
        elif isinstance(node, Star):
            stack.append(node.r1)
    return sorted(found)


# ---------------------------------------------------------------------------
# Parsing and rendering


def _is_symbol_char(ch: str) -> bool:
    return ch.isascii() and ch.isalnum() and ch not in UNION_TOKENS


class _Parser:
    def __init__(self, text: str, sigma):
        self.text = text
        self.sigma = None if sigma is None else set(sigma)
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> Regexp:
        if self.peek() is None:
            raise RegexpSyntaxError("empty regular expression", self.pos)
        r = self.union()
        if self.peek() is not None:
            raise RegexpSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return r

    def union(self) -> Regexp:
        r = self.concat()
        while self.peek() in UNION_TOKENS:
            self.pos += 1
            r = Union(r, self.concat())
        return r

    def concat(self) -> Regexp:
        r = self.postfix()
        while True:
            ch = self.peek()
            if ch is None or ch in UNION_TOKENS or ch == ")":
                return r
            r = Concat(r, self.postfix())

    def postfix(self) -> Regexp:
        r = self.atom()
        while self.peek() == "*":
            self.pos += 1
            r = Star(r)
        return r

    def atom(self) -> Regexp:
        ch = self.peek()
        start = self.pos
        if ch is None:
            raise RegexpSyntaxError("unexpected end of input", start)
        if ch == "(":
            self.pos += 1
            r = self.union()
            if self.peek() != ")":
                raise RegexpSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return r
        if ch == "!":
            self.pos += 1
            return EMPTY
        if ch == "~":
            self.pos += 1
            return NULL
        if _is_symbol_char(ch):
            if self.sigma is not None and ch not in self.sigma:
                raise SymbolError(f"symbol {ch!r} at position {start} is not in the alphabet")
            self.pos += 1
            return Singleton(ch)
        raise RegexpSyntaxError(f"unexpected {ch!r}", start)


def parse_regexp(text: str, sigma: Iterable[str] | None = None) -> Regexp:
    """Parse ``text`` into a :data:`Regexp`.

    When ``sigma`` is given every singleton must belong to it.
    """
    return _Parser(text, sigma).parse()


_PREC = {Union: 0, Concat: 1, Star: 2}


def _render(r: Regexp, min_prec: int) -> str:
    if isinstance(r, Null):
        return "~"
    if isinstance(r, Empty):
        return "!"
    if isinstance(r, Singleton):
        return r.symbol
    prec = _PREC[type(r)]
    if isinstance(r, Union):
        # left-associative: a right operand of the same kind needs parentheses
        text = f"{_render(r.r1, 0)} U {_render(r.r2, 1)}"
    elif isinstance(r, Concat):
        text = _render(r.r1, 1) + _render(r.r2, 2)
    else:
        text = _render(r.r1, 2) + "*"
    return f"({text})" if prec < min_prec else text


def render_regexp(r: Regexp) -> str:
    return _render(r, 0)


# ---------------------------------------------------------------------------
# JSON form


def regexp_to_json(r: Regexp) -> dict:
    if isinstance(r, Null):
        return {"tag": "null"}
    if isinstance(r, Empty):
        return {"tag": "empty"}
    if isinstance(r, Singleton):
        return {"tag": "singleton", "symbol": r.symbol}
    if isinstance(r, Union):
        return {"tag": "union", "r1": regexp_to_json(r.r1), "r2": regexp_to_json(r.r2)}
    if isinstance(r, Concat):
        return {"tag": "concat", "r1": regexp_to_json(r.r1), "r2": regexp_to_json(r.r2)}
    return {"tag": "star", "r1": regexp_to_json(r.r1)}


def regexp_from_json(obj: dict) -> Regexp:
    try:
        tag = obj["tag"]
        if tag == "null":
            return NULL
        if tag == "empty":
            return EMPTY
        if tag == "singleton":
            return Singleton(obj["symbol"])
        if tag == "union":
            return Union(regexp_from_json(obj["r1"]), regexp_from_json(obj["r2"]))
        if tag == "concat":
            return Concat(regexp_from_json(obj["r1"]), regexp_from_json(obj["r2"]))
        if tag == "star":
            return Star(regexp_from_json(obj["r1"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed regexp JSON: {obj!r}") from exc
    raise ValueError(f"unknown regexp tag {tag!r}")


# ---------------------------------------------------------------------------
# Simplification


def _simplify_node(r: Regexp) -> Regexp:
    # children are already simplified
    if isinstance(r, Union):
        if isinstance(r.r2, Null):
            return r.r1
        if isinstance(r.r1, Null):
            return r.r2
    elif isinstance(r, Concat):
        if isinstance(r.r1, Null) or isinstance(r.r2, Null):
            return NULL
        if isinstance(r.r2, Empty):
            return r.r1
        if isinstance(r.r1, Empty):
            return r.r2
    elif isinstance(r, Star):
        if isinstance(r.r1, (Null, Empty)):
            return EMPTY
        if isinstance(r.r1, Star):
            return r.r1
    return r


def simplify(r: Regexp) -> Regexp:
    """Remove eliminable null and empty-word subterms, and collapse nested stars.

    Rules, applied bottom-up::

        r U ~ -> r     ~ U r -> r
        r ~  -> ~      ~ r  -> ~
        r !  -> r      ! r  -> r
        ~*   -> !      !*   -> !      r** -> r*

    Every rule yields an already simplified term when its inputs are
    simplified, so one bottom-up pass reaches the fixpoint.
    """
    if isinstance(r, (Union, Concat)):
        r1, r2 = simplify(r.r1), simplify(r.r2)
        node = r if (r1 is r.r1 and r2 is r.r2) else type(r)(r1, r2)
    elif isinstance(r, Star):
        r1 = simplify(r.r1)
        node = r if r1 is r.r1 else Star(r1)
    else:
        return r
    return _simplify_node(node)


# ---------------------------------------------------------------------------
# Membership by derivatives


@lru_cache(maxsize=None)
def nullable(r: Regexp) -> bool:
    if isinstance(r, (Empty, Star)):
        return True
    if isinstance(r, Union):
        return nullable(r.r1) or nullable(r.r2)
    if isinstance(r, Concat):
        return nullable(r.r1) and nullable(r.r2)
    return False


def _alt(r1: Regexp, r2: Regexp) -> Regexp:
    if isinstance(r1, Null):
        return r2
    if isinstance(r2, Null) or r1 == r2:
        return r1
    return Union(r1, r2)


def _seq(r1: Regexp, r2: Regexp) -> Regexp:
    if isinstance(r1, Null) or isinstance(r2, Null):
        return NULL
    if isinstance(r1, Empty):
        return r2
    if isinstance(r2, Empty):
        return r1
    return Concat(r1, r2)


@lru_cache(maxsize=1 << 18)
def derivative(r: Regexp, symbol: str) -> Regexp:
    """The regexp denoting ``{w : symbol + w in L(r)}``."""
    if isinstance(r, Singleton):
        return EMPTY if r.symbol == symbol else NULL
    if isinstance(r, Union):
        return _alt(derivative(r.r1, symbol), derivative(r.r2, symbol))
    if isinstance(r, Concat):
        head = _seq(derivative(r.r1, symbol), r.r2)
        if nullable(r.r1):
            return _alt(head, derivative(r.r2, symbol))
        return head
    if isinstance(r, Star):
        return _seq(derivative(r.r1, symbol), r)
    return NULL


def matches(r: Regexp, w: Iterable[str]) -> bool:
    for symbol in w:
        r = derivative(r, symbol)
        if isinstance(r, Null):
            return False
    return nullable(r)


def match_ends(r: Regexp, w: Word, start: int) -> list[int]:
    """All ``end`` with ``w[start:end]`` in L(r)."""
    if isinstance(r, Singleton):
        return [start + 1] if start < len(w) and w[start] == r.symbol else []
    if isinstance(r, Empty):
        return [start]
    ends = []
    for end in range(start, len(w) + 1):
        if nullable(r):
            ends.append(end)
        if end == len(w):
            break
        r = derivative(r, w[end])
        if isinstance(r, Null):
            break
    return ends


def all_words(sigma: Iterable[str], maxlen: int):
    sigma = list(sigma)
    for n in range(maxlen + 1):
        yield from itertools.product(sigma, repeat=n)


def enumerate_regexp_language(r: Regexp, maxlen: int, sigma: Iterable[str]) -> set[Word]:
    """Every word over ``sigma`` of length at most ``maxlen`` that ``r`` matches."""
    sigma = sorted(set(sigma))
    found: set[Word] = set()

    def walk(current: Regexp, prefix: Word):
        if nullable(current):
            found.add(prefix)
        if len(prefix) == maxlen:
            return
        for symbol in sigma:
            nxt = derivative(current, symbol)
            # an empty residual can match no extension of this prefix
            if not isinstance(nxt, Null):
                walk(nxt, prefix + (symbol,))

    walk(r, ())
    return found


# ---------------------------------------------------------------------------
# Word generation


@lru_cache(maxsize=None)
def is_empty_language(r: Regexp) -> bool:
    if isinstance(r, Null):
        return True
    if isinstance(r, Union):
        return is_empty_language(r.r1) and is_empty_language(r.r2)
    if isinstance(r, Concat):
        return is_empty_language(r.r1) or is_empty_language(r.r2)
    return False


DEFAULT_MAX_STAR_REPS = 20


def gen_word(r: Regexp, seed: int | random.Random | None = None,
             max_star_reps: int = DEFAULT_MAX_STAR_REPS) -> Word:
    """Generate a random word of L(r).

    Union branches are chosen uniformly (a branch denoting the empty language
    is never taken) and each star repeats a uniform number of times in
    ``[0, max_star_reps]``. ``seed`` may be an integer or a ``random.Random``.
    """
    if is_empty_language(r):
        raise EmptyLanguageError(f"{render_regexp(r)} denotes the empty language")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    out: list[str] = []

    def gen(node: Regexp):
        if isinstance(node, Singleton):
            out.append(node.symbol)
        elif isinstance(node, Union):
            if is_empty_language(node.r1):
                gen(node.r2)
            elif is_empty_language(node.r2):
                gen(node.r1)
            else:
                gen(node.r1 if rng.random() < 0.5 else node.r2)
        elif isinstance(node, Concat):
            gen(node.r1)
            gen(node.r2)
        elif isinstance(node, Star):
            reps = rng.randint(0, max_star_reps)
            if is_empty_language(node.r1):
                return
            for _ in range(reps):
                gen(node.r1)

    gen(r)
    return tuple(out)
