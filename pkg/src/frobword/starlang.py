"""Star closures of finite word sets: membership oracles, automaton
constructions, and the measures of how much a closure misses.

A ``WordSet`` holds distinct nonempty words over a declared alphabet.  Its
star closure is everything obtainable by concatenating words of the set,
empty concatenation included.  ``measure_all`` packages the interesting
quantities: whether only finitely many words are missed, the longest and
the number of missed words, minimal DFA sizes for the closure and for the
ordered concatenation of the individual stars, and the construction sizes
the answers came from.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterable, Sequence

from frobword.automata import (
    DEFAULT_STATE_CAP,
    CapExceeded,
    Dfa,
    Nfa,
    complement,
    count_words,
    determinize,
    is_cofinite,
    longest_word,
    minimize,
)


class PreconditionViolated(ValueError):
    """Input fails a structural requirement of the operation."""


class BudgetExceeded(RuntimeError):
    """An exhaustive check would enumerate more words than allowed."""


@dataclass(frozen=True)
class WordSet:
    """Finite set of distinct nonempty words over a declared alphabet.

    Construct through ``WordSet.of``, which normalizes: duplicate words
    collapse, empty words are dropped with a warning (they never change the
    star closure), and words are kept sorted by length then lexicographic
    rank for deterministic output.
    """

    alphabet: str
    words: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.alphabet)) != len(self.alphabet) or not self.alphabet:
            raise ValueError("alphabet must be distinct characters")
        if not self.words:
            raise ValueError("at least one word is required")
        letters = set(self.alphabet)
        if len(set(self.words)) != len(self.words):
            raise ValueError("words must be distinct")
        for w in self.words:
            if not w:
                raise ValueError("words must be nonempty")
            if not set(w) <= letters:
                raise ValueError("word %r uses characters outside %r" % (w, self.alphabet))

    @classmethod
    def of(cls, alphabet: str, words: Iterable[str]) -> "WordSet":
        kept = []
        dropped = 0
        for w in words:
            if w == "":
                dropped += 1
            else:
                kept.append(w)
        if dropped:
            warnings.warn("ignoring %d empty word(s): they never change the closure" % dropped)
        ordered = tuple(sorted(set(kept), key=lambda w: (len(w), w)))
        return cls(alphabet, ordered)

    @property
    def word_count(self) -> int:
        return len(self.words)

    @property
    def max_word_length(self) -> int:
        return max(len(w) for w in self.words)

    @property
    def total_symbols(self) -> int:
        return sum(len(w) for w in self.words)


def _length_index(words: Iterable[str]) -> dict[int, frozenset[str]]:
    buckets: dict[int, set[str]] = {}
    for w in words:
        buckets.setdefault(len(w), set()).add(w)
    return {n: frozenset(b) for n, b in buckets.items()}


def _member_star_indexed(index: dict[int, frozenset[str]], word: str) -> bool:
    limit = len(word)
    reach = bytearray(limit + 1)
    reach[0] = 1
    for i in range(limit):
        if not reach[i]:
            continue
        for n, bucket in index.items():
            j = i + n
            if j <= limit and not reach[j] and word[i:j] in bucket:
                reach[j] = 1
    return bool(reach[limit])


def member_star(s: WordSet, word: str) -> bool:
    """Whether the word splits into pieces from the set (dynamic program)."""
    return _member_star_indexed(_length_index(s.words), word)


def member_chain(xs: Sequence[str], word: str) -> bool:
    """Whether the word is a block of repeats of ``xs[0]``, then repeats of
    ``xs[1]``, and so on, any block possibly empty."""
    if not xs:
        raise ValueError("empty chains are not meaningful")
    positions = {0}
    for x in xs:
        if not x:
            raise ValueError("chain words must be nonempty")
        n = len(x)
        grown = set(positions)
        stack = list(positions)
        while stack:
            p = stack.pop()
            q = p + n
            if q <= len(word) and q not in grown and word[p:q] == x:
                grown.add(q)
                stack.append(q)
        positions = grown
    return len(word) in positions


def trie_star_nfa(s: WordSet) -> Nfa:
    """Nondeterministic acceptor for the star closure from a shared trie.

    The proper prefixes of the words form a trie rooted at a single state
    that is both initial and accepting; the last letter of each word loops
    back to the root.  State count is the number of distinct proper
    prefixes, at most ``total_symbols - word_count + 1``.
    """
    node_ids: dict[str, int] = {"": 0}
    edges: list[tuple[int, str, int]] = []
    for x in s.words:
        v = 0
        for j, c in enumerate(x):
            if j == len(x) - 1:
                edges.append((v, c, 0))
            else:
                prefix = x[: j + 1]
                u = node_ids.setdefault(prefix, len(node_ids))
                edges.append((v, c, u))
                v = u
    return Nfa.from_edges(len(node_ids), s.alphabet, set(edges), {0}, {0})


def window_state_bound(alphabet_size: int, max_len: int) -> int:
    """Upper bound on reachable window-DFA states: sum over window fills
    ``i < max_len`` of ``alphabet_size**i * 2**(i+1)``."""
    return sum(alphabet_size**i * 2 ** (i + 1) for i in range(max_len))


def window_star_dfa(s: WordSet, state_cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """Deterministic acceptor for the star closure built directly.

    Each state is a pair ``(recent, marks)``: ``recent`` holds the most
    recent input symbols, capped one below the longest word length, and
    ``marks`` records the offsets, measured back from the current position,
    at which a split of the input into set words could end.  Reading a
    symbol shifts every mark by one, drops marks pushed beyond the reach of
    any word, and adds mark 0 exactly when some word of the set ends at the
    new position starting from a previously marked split point.  The input
    so far is in the closure iff 0 is marked, so those states accept.

    Only reachable states are built, breadth-first in symbol order, and the
    automaton is complete by construction.  Reachable states never exceed
    ``window_state_bound(len(alphabet), max_word_length)``.
    """
    words = frozenset(s.words)
    window = s.max_word_length - 1
    start = ("", (0,))
    ids: dict[tuple[str, tuple[int, ...]], int] = {start: 0}
    states: list[tuple[str, tuple[int, ...]]] = [start]
    rows: list[tuple[int, ...]] = []
    i = 0
    while i < len(states):
        recent, marks = states[i]
        i += 1
        row = []
        for c in s.alphabet:
            ext = recent + c
            hit = any(ext[-(a + 1):] in words for a in marks)
            nrecent = ext if len(ext) <= window else ext[1:]
            shifted = tuple(a + 1 for a in marks if a + 1 <= len(nrecent))
            nmarks = ((0,) + shifted) if hit else shifted
            state = (nrecent, nmarks)
            target = ids.get(state)
            if target is None:
                if len(states) >= state_cap:
                    raise CapExceeded("window construction exceeded %d states" % state_cap)
                target = len(states)
                ids[state] = target
                states.append(state)
            row.append(target)
        rows.append(tuple(row))
    finals = frozenset(j for j, (_, marks) in enumerate(states) if marks and marks[0] == 0)
    return Dfa(s.alphabet, tuple(rows), 0, finals)


def chain_nfa(xs: Sequence[str], alphabet: str) -> Nfa:
    """Nondeterministic acceptor for ``xs[0]* xs[1]* ... xs[-1]*``.

    One cyclic loop per word, anchored at a state reached after each
    complete repeat; from an anchor the automaton may enter the loop of any
    later word, which encodes skipping empty blocks.  Anchors accept.
    State count is the total length of the words.
    """
    if not xs:
        raise ValueError("empty chains are not meaningful")
    anchors: list[int] = []
    counter = 0
    interiors: list[list[int]] = []
    for x in xs:
        if not x:
            raise ValueError("chain words must be nonempty")
        anchors.append(counter)
        counter += 1
        inner = list(range(counter, counter + len(x) - 1))
        counter += len(x) - 1
        interiors.append(inner)
    edges: list[tuple[int, str, int]] = []
    entries: list[int] = []
    for j, x in enumerate(xs):
        path = [anchors[j]] + interiors[j] + [anchors[j]]
        for step, c in enumerate(x):
            edges.append((path[step], c, path[step + 1]))
        entries.append(path[1])
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            edges.append((anchors[i], xs[j][0], entries[j]))
    return Nfa.from_edges(counter, alphabet, set(edges), {anchors[0]}, set(anchors))


def chain_cofinite(xs: Sequence[str], alphabet: str) -> bool:
    """Whether the chain of stars misses only finitely many words.

    This happens exactly for a one-letter alphabet with word lengths that
    are coprime overall; over two or more letters the chain fixes the order
    of blocks and misses infinitely many rearrangements.
    """
    if not xs:
        raise ValueError("empty chains are not meaningful")
    lengths = [len(x) for x in xs]
    if min(lengths) < 1:
        raise ValueError("chain words must be nonempty")
    return len(alphabet) == 1 and gcd(*lengths) == 1


def minimal_star_dfa(s: WordSet, state_cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """Minimal complete DFA for the star closure."""
    return minimize(window_star_dfa(s, state_cap))


def minimal_chain_dfa(
    xs: Sequence[str], alphabet: str, state_cap: int = DEFAULT_STATE_CAP
) -> Dfa:
    """Minimal complete DFA for the ordered chain of stars."""
    return minimize(determinize(chain_nfa(xs, alphabet), state_cap))


@dataclass(frozen=True)
class MeasureReport:
    """Everything ``measure_all`` knows about one word set.

    Omitted-word fields are ``None`` when they do not apply: the longest
    omitted word and the omitted count require the star closure to miss
    only finitely many words, and the longest one additionally requires it
    to miss at least one (``full_language`` distinguishes the two).  The
    chain fields mirror this for the ordered concatenation of stars.
    """

    cofinite_star: bool | None
    full_language: bool | None
    longest_omitted: int | None
    longest_omitted_word: str | None
    omitted_count: int | None
    star_sc: int | None
    chain_sc: int | None
    chain_is_cofinite: bool | None
    chain_full_language: bool | None
    chain_longest_omitted: int | None
    chain_longest_omitted_word: str | None
    nfa_size_bound: int
    window_dfa_states: int | None


def measure_all(
    s: WordSet,
    xs_order: Sequence[str] | None = None,
    *,
    star: bool = True,
    chain: bool = True,
    state_cap: int = DEFAULT_STATE_CAP,
) -> MeasureReport:
    """Compute all measures for one word set.

    ``xs_order`` fixes the order of the chain of stars and may repeat
    words; it must use exactly the words of the set.  It defaults to the
    set's canonical order.  ``star=False`` or ``chain=False`` skips that
    side entirely (the corresponding fields come back ``None``).
    """
    if xs_order is None:
        xs_order = list(s.words)
    if set(xs_order) != set(s.words):
        raise ValueError("chain order must use exactly the words of the set")

    star_cof = None
    longest = None
    longest_wit = None
    count = None
    full = None
    star_sc = None
    window_states = None
    if star:
        window = window_star_dfa(s, state_cap)
        star_min = minimize(window)
        star_sc = star_min.state_count
        window_states = window.state_count
        star_cof = is_cofinite(star_min)
        full = False
        if star_cof:
            comp = complement(star_min)
            count = count_words(comp)
            if count == 0:
                full = True
            else:
                longest_wit = longest_word(comp)
                assert longest_wit is not None
                longest = len(longest_wit)

    chain_cof = None
    chain_sc = None
    chain_longest = None
    chain_wit = None
    chain_full = None
    if chain:
        chain_min = minimal_chain_dfa(xs_order, s.alphabet, state_cap)
        chain_sc = chain_min.state_count
        chain_cof = chain_cofinite(xs_order, s.alphabet)
        chain_full = False
        if chain_cof:
            ccomp = complement(chain_min)
            chain_wit = longest_word(ccomp)
            if chain_wit is None:
                chain_full = True
            else:
                chain_longest = len(chain_wit)

    return MeasureReport(
        cofinite_star=star_cof,
        full_language=full,
        longest_omitted=longest,
        longest_omitted_word=longest_wit,
        omitted_count=count,
        star_sc=star_sc,
        chain_sc=chain_sc,
        chain_is_cofinite=chain_cof,
        chain_full_language=chain_full,
        chain_longest_omitted=chain_longest,
        chain_longest_omitted_word=chain_wit,
        nfa_size_bound=s.total_symbols - s.word_count + 1,
        window_dfa_states=window_states,
    )


DEFAULT_ENUM_BUDGET = 2**20


def two_length_cofinite(
    s: WordSet, short_len: int, long_len: int, *, budget: int = DEFAULT_ENUM_BUDGET
) -> bool:
    """Decide co-finiteness for sets whose words all have one of two lengths.

    Requires ``0 < short_len < long_len < 2 * short_len`` with coprime
    lengths, and every word of the set to have one of the two lengths.  The
    closure then misses only finitely many words iff the set contains every
    word of the short length and the closure contains every word of length
    ``short_len * sigma**(long_len - short_len) + long_len - short_len``
    (sigma the alphabet size).  That borderline length is checked by
    running the membership oracle over all words of that length, so the
    call refuses to start when there are more than ``budget`` of them.
    """
    m, n = short_len, long_len
    if not (0 < m < n < 2 * m):
        raise PreconditionViolated("lengths must satisfy 0 < short < long < 2*short")
    if gcd(m, n) != 1:
        raise PreconditionViolated("the two lengths must be coprime")
    if any(len(w) not in (m, n) for w in s.words):
        raise PreconditionViolated("every word must have one of the two lengths")
    sigma = len(s.alphabet)
    short_words = sum(1 for w in s.words if len(w) == m)
    if short_words < sigma**m:
        return False
    threshold = m * sigma ** (n - m) + (n - m)
    if sigma**threshold > budget:
        raise BudgetExceeded(
            "would enumerate %d words of length %d" % (sigma**threshold, threshold)
        )
    index = _length_index(s.words)
    for tup in product(s.alphabet, repeat=threshold):
        if not _member_star_indexed(index, "".join(tup)):
            return False
    return True
