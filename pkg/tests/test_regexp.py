import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gnfakit.regexp import (
    EMPTY,
    NULL,
    Concat,
    EmptyLanguageError,
    RegexpSyntaxError,
    Singleton,
    Star,
    SymbolError,
    Union,
    enumerate_regexp_language,
    gen_word,
    matches,
    parse_regexp,
    regexp_from_json,
    regexp_to_json,
    render_regexp,
    simplify,
)

from generators import regexps
from oracles import re_matches

a, b, m = Singleton("a"), Singleton("b"), Singleton("m")
AB_BA = Union(Concat(a, Star(b)), Concat(b, Star(a)))


def words(sigma, maxlen):
    for n in range(maxlen + 1):
        yield from itertools.product(sigma, repeat=n)


class TestParse:
    def test_fig6_comment(self):
        assert parse_regexp("a b* U b a*", {"a", "b"}) == AB_BA

    def test_empty_word_token(self):
        assert parse_regexp("!") == EMPTY

    def test_null_inside_star(self):
        expected = Star(Concat(m, Union(a, NULL)))
        assert parse_regexp("(m(a U ~))*", {"m", "a"}) == expected
        assert parse_regexp("(m(aU~))*") == expected

    def test_bar_is_union(self):
        assert parse_regexp("a|b") == Union(a, b)

    @pytest.mark.parametrize("text, expected", [
        ("a U b U a", Union(Union(a, b), a)),
        ("abm", Concat(Concat(a, b), m)),
        ("ab*", Concat(a, Star(b))),
        ("a**", Star(Star(a))),
    ])
    def test_precedence_and_associativity(self, text, expected):
        assert parse_regexp(text) == expected

    @pytest.mark.parametrize("text, position", [
        ("(ab", 3),
        ("a U", 3),
        ("*a", 0),
        ("a)", 1),
        ("", 0),
        ("a#", 1),
    ])
    def test_syntax_errors_report_position(self, text, position):
        with pytest.raises(RegexpSyntaxError) as info:
            parse_regexp(text)
        assert info.value.position == position

    def test_symbol_outside_alphabet(self):
        with pytest.raises(SymbolError):
            parse_regexp("ac", {"a", "b"})


class TestRender:
    def test_fig6(self):
        assert render_regexp(AB_BA) == "ab* U ba*"

    def test_empty(self):
        assert render_regexp(EMPTY) == "!"

    def test_simplified_fig8(self):
        assert render_regexp(Star(Concat(m, a))) == "(ma)*"

    def test_right_nested_operands_keep_parentheses(self):
        assert render_regexp(Union(a, Union(b, m))) == "a U (b U m)"
        assert render_regexp(Concat(a, Concat(b, m))) == "a(bm)"

    @given(regexps())
    def test_round_trip(self, r):
        assert parse_regexp(render_regexp(r), "abc") == r

    @given(regexps())
    def test_json_round_trip(self, r):
        assert regexp_from_json(regexp_to_json(r)) == r


class TestSimplify:
    def test_fig8_step(self):
        assert simplify(Star(Concat(m, Union(a, NULL)))) == Star(Concat(m, a))

    def test_already_simple(self):
        assert simplify(a) == a

    def test_null_concat(self):
        # bounded enumeration of both sides is empty up to length 4
        r = Concat(NULL, Star(b))
        assert not any(matches(r, w) for w in words("ab", 4))
        assert simplify(r) == NULL

    @pytest.mark.parametrize("r, expected", [
        (Union(a, NULL), a),
        (Union(NULL, a), a),
        (Concat(a, NULL), NULL),
        (Concat(NULL, a), NULL),
        (Concat(a, EMPTY), a),
        (Concat(EMPTY, a), a),
        (Star(NULL), EMPTY),
        (Star(EMPTY), EMPTY),
        (Star(Star(a)), Star(a)),
        (Star(Star(Star(a))), Star(a)),
        (Star(Union(NULL, EMPTY)), EMPTY),
    ])
    def test_rules(self, r, expected):
        assert simplify(r) == expected

    @settings(max_examples=200)
    @given(regexps())
    def test_sound(self, r):
        s = simplify(r)
        for w in words("abc", 5):
            assert matches(r, w) == matches(s, w)

    @given(regexps())
    def test_idempotent(self, r):
        assert simplify(simplify(r)) == simplify(r)

    @given(regexps())
    def test_null_only_for_empty_language(self, r):
        s = simplify(r)
        contains_null = "~" in render_regexp(s)
        if s == NULL:
            assert not any(re_matches(r, w) for w in words("abc", 4))
        assert not contains_null or s == NULL


class TestMatches:
    def test_fig7_word(self):
        assert matches(AB_BA, ["a", "b", "b"])

    def test_empty_word(self):
        assert matches(EMPTY, [])
        assert not matches(NULL, [])

    def test_unknown_symbol_never_matches(self):
        assert not matches(Star(a), ["z"])

    @settings(max_examples=200)
    @given(regexps())
    def test_agrees_with_re(self, r):
        for w in words("abc", 4):
            assert matches(r, w) == re_matches(r, w)


class TestEnumerate:
    def test_null(self):
        assert enumerate_regexp_language(NULL, 3, "ab") == set()

    def test_star(self):
        assert enumerate_regexp_language(Star(a), 2, "ab") == {(), ("a",), ("a", "a")}

    def test_fig6_up_to_two(self):
        # all 7 words of length <= 2 checked against the re oracle
        assert enumerate_regexp_language(AB_BA, 2, "ab") == {("a",), ("b",), ("a", "b"), ("b", "a")}

    @given(regexps(), st.integers(0, 4))
    def test_exact_and_monotone(self, r, n):
        lang = enumerate_regexp_language(r, n, "abc")
        assert lang == {w for w in words("abc", n) if re_matches(r, w)}
        assert lang <= enumerate_regexp_language(r, n + 1, "abc")


class TestGenWord:
    def test_singleton(self):
        assert gen_word(a, 3, 5) == ("a",)

    @pytest.mark.parametrize("seed", range(20))
    def test_fig6(self, seed):
        w = gen_word(AB_BA, seed, 4)
        assert w and (set(w[1:]) <= {"b"} if w[0] == "a" else set(w[1:]) <= {"a"})

    def test_star_reachable_outputs(self):
        outs = {gen_word(Star(b), seed, 3) for seed in range(200)}
        assert outs == {(), ("b",), ("b", "b"), ("b", "b", "b")}

    def test_empty_language(self):
        with pytest.raises(EmptyLanguageError):
            gen_word(Concat(a, NULL), 0)

    def test_null_branch_never_taken(self):
        r = Union(NULL, Concat(a, Star(b)))
        assert all(gen_word(r, s, 3)[0] == "a" for s in range(50))

    def test_reproducible(self):
        assert gen_word(Star(Union(a, b)), 42) == gen_word(Star(Union(a, b)), 42)
        rng1, rng2 = random.Random(5), random.Random(5)
        assert [gen_word(AB_BA, rng1) for _ in range(5)] == [gen_word(AB_BA, rng2) for _ in range(5)]

    @given(regexps(), st.integers(0, 2**32), st.integers(0, 5))
    def test_sound(self, r, seed, reps):
        if simplify(r) == NULL:
            with pytest.raises(EmptyLanguageError):
                gen_word(r, seed, reps)
        else:
            assert re_matches(r, gen_word(r, seed, reps))
