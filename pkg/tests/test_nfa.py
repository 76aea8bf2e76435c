import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gnfakit.nfa import (
    Nfa,
    NfaValidationError,
    enumerate_nfa_language,
    epsilon_closure,
    nfa_apply,
    validate_nfa,
)
from gnfakit.regexp import SymbolError, enumerate_regexp_language, parse_regexp

from generators import random_nfa


def machine(**kw):
    base = {"states": ["S"], "sigma": ["a"], "start": "S", "finals": [], "rules": []}
    base.update(kw)
    return base


class TestValidate:
    def test_fig7(self, fig7):
        assert fig7.states == ("S", "A", "B", "D", "E")
        assert len(fig7.rules) == 6

    def test_fig7_literal_finals_rejected(self):
        raw = {
            "states": ["S", "A", "B", "D", "E"], "sigma": ["a", "b"], "start": "S",
            "finals": ["B", "C", "E", "F"], "rules": [],
        }
        with pytest.raises(NfaValidationError) as info:
            validate_nfa(raw)
        assert info.value.errors == ["final-not-a-state: C", "final-not-a-state: F"]

    def test_unknown_state_in_rule(self):
        with pytest.raises(NfaValidationError) as info:
            validate_nfa(machine(rules=[["S", "a", "Q"]]))
        assert any(e.startswith("unknown-state-in-rule: Q") for e in info.value.errors)

    def test_zero_finals_is_valid(self):
        assert validate_nfa(machine()).finals == ()

    def test_every_violation_listed(self):
        raw = {
            "states": ["S", "S", "A"], "sigma": ["a", "a"], "start": "Z",
            "finals": ["Y"], "rules": [["S", "b", "A"]],
        }
        with pytest.raises(NfaValidationError) as info:
            validate_nfa(raw)
        kinds = sorted(e.split(":")[0] for e in info.value.errors)
        assert kinds == ["duplicate-state", "duplicate-symbol", "final-not-a-state",
                         "start-not-a-state", "unknown-symbol"]

    def test_json_round_trip(self, fig7):
        assert Nfa.from_json(fig7.to_json()) == fig7
        assert list(fig7.to_json()) == ["states", "sigma", "start", "finals", "rules"]
        assert fig7.to_json()["rules"][0] == ["S", "eps", "A"]


class TestClosure:
    def test_fig7_start(self, fig7):
        assert epsilon_closure(fig7, {"S"}) == {"S", "A", "D"}

    def test_empty_set(self, fig7):
        assert epsilon_closure(fig7, set()) == set()

    def test_no_empty_rules(self):
        m = validate_nfa(machine(states=["q", "r"], start="q", rules=[["q", "a", "r"]]))
        assert epsilon_closure(m, {"q"}) == {"q"}

    def test_chain(self):
        m = validate_nfa(machine(states=["P", "Q", "R"], start="P",
                                 rules=[["P", "eps", "Q"], ["Q", "eps", "R"], ["R", "eps", "P"]]))
        assert epsilon_closure(m, {"Q"}) == {"P", "Q", "R"}

    @given(st.integers(0, 10_000), st.data())
    def test_monotone_and_idempotent(self, seed, data):
        import random

        m = random_nfa(random.Random(seed))
        s = set(data.draw(st.sets(st.sampled_from(m.states))))
        t = s | set(data.draw(st.sets(st.sampled_from(m.states))))
        cs = epsilon_closure(m, s)
        assert cs <= epsilon_closure(m, t)
        assert epsilon_closure(m, cs) == cs


class TestApply:
    @pytest.mark.parametrize("word, verdict", [
        ("bb", "reject"), ("aab", "reject"), ("a", "accept"),
        ("b", "accept"), ("abb", "accept"), ("ba", "accept"),
    ])
    def test_fig7(self, fig7, word, verdict):
        assert nfa_apply(fig7, list(word)) == verdict

    def test_unknown_symbol(self, fig7):
        with pytest.raises(SymbolError):
            nfa_apply(fig7, ["c"])


class TestEnumerate:
    def test_fig7_up_to_two(self, fig7):
        expected = {w for n in range(3) for w in itertools.product("ab", repeat=n)
                    if nfa_apply(fig7, w) == "accept"}
        assert expected == {("a",), ("b",), ("a", "b"), ("b", "a")}
        assert enumerate_nfa_language(fig7, 2) == expected

    def test_no_finals(self):
        assert enumerate_nfa_language(validate_nfa(machine(rules=[["S", "a", "S"]])), 3) == set()

    def test_start_final(self):
        assert enumerate_nfa_language(validate_nfa(machine(finals=["S"])), 0) == {()}

    def test_fig7_matches_fig6(self, fig7):
        r = parse_regexp("ab* U ba*")
        assert enumerate_nfa_language(fig7, 5) == enumerate_regexp_language(r, 5, "ab")

    @settings(max_examples=50)
    @given(st.integers(0, 10_000))
    def test_apply_agrees_with_enumeration(self, seed):
        import random

        m = random_nfa(random.Random(seed))
        lang = enumerate_nfa_language(m, 3)
        for n in range(4):
            for w in itertools.product(m.sigma, repeat=n):
                assert (nfa_apply(m, w) == "accept") == (w in lang)
