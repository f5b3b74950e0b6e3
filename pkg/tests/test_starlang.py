"""Star closures of word sets: membership oracles, the two DFA routes, the
chain of stars, and the combined measure report."""

import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobword.automata import determinize, equivalent, is_cofinite, minimize
from frobword.starlang import (
    BudgetExceeded,
    WordSet,
    chain_cofinite,
    chain_nfa,
    measure_all,
    member_chain,
    member_star,
    minimal_chain_dfa,
    minimal_star_dfa,
    trie_star_nfa,
    two_length_cofinite,
    window_star_dfa,
    window_state_bound,
)
from oracles import chain_upto, closure_upto, words_upto

small_sets = st.lists(
    st.text(alphabet="01", min_size=1, max_size=3), min_size=1, max_size=4
).map(lambda ws: WordSet.of("01", ws))


def test_word_set_normalization():
    s = WordSet.of("01", ["10", "0", "10", "1"])
    assert s.words == ("0", "1", "10")
    assert s.word_count == 3
    assert s.max_word_length == 2
    assert s.total_symbols == 4


def test_word_set_drops_empty_with_warning():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        s = WordSet.of("01", ["", "0"])
    assert s.words == ("0",)
    assert len(caught) == 1


def test_word_set_rejects_bad_input():
    with pytest.raises(ValueError):
        WordSet.of("01", ["2"])
    with pytest.raises(ValueError):
        WordSet.of("00", ["0"])
    with pytest.raises(ValueError):
        WordSet("01", ("",))
    with pytest.raises(ValueError):
        WordSet("01", ("0", "0"))


def test_member_star_known():
    s = WordSet.of("01", ["0", "01", "11"])
    assert member_star(s, "")
    assert member_star(s, "0011")
    assert not member_star(s, "1")
    assert not member_star(s, "111")


@given(small_sets)
def test_member_star_matches_brute_closure(s):
    closure = closure_upto(s.words, 6)
    for w in words_upto("01", 6):
        assert member_star(s, w) == (w in closure)


def test_member_chain_known():
    assert member_chain(["00", "000"], "00000")
    assert not member_chain(["00", "000"], "0")
    assert member_chain(["0", "1"], "0011")
    assert not member_chain(["0", "1"], "0110")
    assert member_chain(["01", "01"], "0101")


@given(
    st.lists(st.text(alphabet="01", min_size=1, max_size=3), min_size=1, max_size=3)
)
def test_member_chain_matches_brute(xs):
    chain = chain_upto(xs, 6)
    for w in words_upto("01", 6):
        assert member_chain(xs, w) == (w in chain)


def test_trie_nfa_size_bound_and_language():
    s = WordSet.of("01", ["0", "01", "11"])
    n = trie_star_nfa(s)
    assert n.state_count <= s.total_symbols - s.word_count + 1
    closure = closure_upto(s.words, 6)
    for w in words_upto("01", 6):
        assert n.accepts(w) == (w in closure)


@given(small_sets)
def test_window_route_equals_trie_route(s):
    assert equivalent(window_star_dfa(s), determinize(trie_star_nfa(s)))


@given(small_sets)
def test_window_state_count_within_bound(s):
    d = window_star_dfa(s)
    assert d.state_count <= window_state_bound(len(s.alphabet), s.max_word_length)


def test_chain_nfa_size_and_language():
    xs = ["01", "0", "01"]
    n = chain_nfa(xs, "01")
    assert n.state_count <= sum(len(x) for x in xs) + 1
    chain = chain_upto(xs, 6)
    for w in words_upto("01", 6):
        assert n.accepts(w) == (w in chain)


def test_chain_cofinite_criterion():
    assert chain_cofinite(["00", "000"], "0")
    assert not chain_cofinite(["00", "0000"], "0")
    assert not chain_cofinite(["00", "000"], "01")
    assert chain_cofinite(["0"], "0")
    # criterion equals the automaton verdict on these
    assert is_cofinite(minimal_chain_dfa(["00", "000"], "0"))
    assert not is_cofinite(minimal_chain_dfa(["00", "0000"], "0"))
    assert not is_cofinite(minimal_chain_dfa(["00", "000"], "01"))


def test_measure_all_unary_golden():
    s = WordSet.of("0", ["00", "000"])
    r = measure_all(s)
    assert r.cofinite_star is True
    assert r.full_language is False
    assert r.longest_omitted == 1
    assert r.longest_omitted_word == "0"
    assert r.omitted_count == 1
    assert r.star_sc == 3
    assert r.chain_sc == 3
    assert r.chain_is_cofinite is True
    assert r.chain_longest_omitted == 1
    assert r.nfa_size_bound == 4


def test_measure_all_binary_ambient_golden():
    # the same two words measured over a two-letter alphabet: nothing is
    # co-finite any more and both minimal automata pick up a sink
    s = WordSet.of("01", ["00", "000"])
    r = measure_all(s)
    assert r.cofinite_star is False
    assert r.longest_omitted is None
    assert r.omitted_count is None
    assert r.star_sc == 4
    assert r.chain_sc == 4
    assert r.chain_is_cofinite is False


def test_measure_all_full_language():
    r = measure_all(WordSet.of("01", ["0", "1"]))
    assert r.cofinite_star is True
    assert r.full_language is True
    assert r.longest_omitted is None
    assert r.omitted_count == 0
    assert r.star_sc == 1


def test_measure_all_toggles():
    s = WordSet.of("0", ["00", "000"])
    r = measure_all(s, star=False)
    assert r.cofinite_star is None
    assert r.star_sc is None
    assert r.window_dfa_states is None
    assert r.chain_sc == 3
    r = measure_all(s, chain=False)
    assert r.chain_sc is None
    assert r.chain_is_cofinite is None
    assert r.star_sc == 3


def test_measure_all_order_validation():
    s = WordSet.of("01", ["0", "1"])
    r = measure_all(s, ["1", "0", "1"])
    assert r.chain_sc is not None
    with pytest.raises(ValueError):
        measure_all(s, ["0"])
    with pytest.raises(ValueError):
        measure_all(s, ["0", "1", "11"])


def test_minimal_star_dfa_is_minimal():
    s = WordSet.of("01", ["0", "01", "11"])
    d = minimal_star_dfa(s)
    assert d.minimal
    assert d.state_count == minimize(determinize(trie_star_nfa(s))).state_count


def test_two_length_cofinite_decision():
    from frobword.families import two_length_family

    fam = two_length_family(2, 3)
    assert two_length_cofinite(fam.words, 2, 3) is True
    # removing a short word destroys the property
    rest = WordSet.of("01", [w for w in fam.words.words if w != "00"])
    assert two_length_cofinite(rest, 2, 3) is False


def test_two_length_cofinite_budget():
    from frobword.families import two_length_family

    fam = two_length_family(3, 5)
    with pytest.raises(BudgetExceeded):
        two_length_cofinite(fam.words, 3, 5, budget=10)
