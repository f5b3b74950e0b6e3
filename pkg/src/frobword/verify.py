"""Verification suites: each one replays a batch of predicted-versus-actual
checks and reports rows a human can scan.

Every suite is deterministic for a given seed, returns a ``SuiteReport``
whose rows carry the instance, the predicted value, and the value actually
computed, and is shared between the command line runner and the test suite.
Aggregating suites (pairs, bounds) emit summary rows plus one row per
violation; the small suites emit one row per instance.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import gcd

from frobword.automata import (
    CapExceeded,
    complement,
    count_words,
    determinize,
    equivalent,
    has_dead_state,
    is_cofinite,
    longest_word,
    minimize,
    state_complexity,
)
from frobword.families import (
    longest_omitted_witness,
    omitted_count_lower_bound,
    predicted_longest_omitted,
    star_blowup_family,
    star_blowup_sc,
    star_blowup_sc_floor,
    two_length_family,
)
from frobword.numeric import frobenius_g
from frobword.starlang import (
    BudgetExceeded,
    WordSet,
    _length_index,
    _member_star_indexed,
    chain_cofinite,
    member_chain,
    member_star,
    minimal_chain_dfa,
    minimal_star_dfa,
    trie_star_nfa,
    two_length_cofinite,
    window_star_dfa,
    window_state_bound,
)
from frobword.words import (
    EXACT,
    commutes,
    fine_wilf_agreement,
    predicted_pair_concat_sc,
    predicted_pair_star_sc,
    prefix_suffix_condition,
)

DEFAULT_SEED = 20240817


@dataclass
class CheckRow:
    instance: str
    predicted: str
    actual: str
    ok: bool


@dataclass
class SuiteReport:
    suite: str
    rows: list[CheckRow] = field(default_factory=list)
    cap_events: int = 0

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows) and self.cap_events == 0

    def add(self, instance: str, predicted, actual, ok: bool) -> None:
        self.rows.append(CheckRow(instance, str(predicted), str(actual), ok))

    def failures(self) -> list[CheckRow]:
        return [r for r in self.rows if not r.ok]


# ---------------------------------------------------------------------------
# corpora


def random_word_sets(count: int = 200, seed: int = DEFAULT_SEED) -> list[WordSet]:
    """Random binary and ternary word sets, words of length at most 4."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        alphabet = "01" if i % 5 < 3 else "012"
        k = rng.randint(1, 5)
        words: set[str] = set()
        while len(words) < k:
            n = rng.randint(1, 4)
            words.add("".join(rng.choice(alphabet) for _ in range(n)))
        out.append(WordSet.of(alphabet, words))
    return out


def crafted_word_sets() -> list[WordSet]:
    """Hand-picked sets that exercise the rare shapes: closures that miss
    only finitely many words, full closures, prefix-free sets, one-letter
    alphabets."""
    sets = [
        WordSet.of("01", ["0", "1"]),
        WordSet.of("01", ["0", "1", "01"]),
        WordSet.of("01", ["0", "01", "11"]),
        WordSet.of("01", ["00", "01", "10", "11"]),
        WordSet.of("01", ["0", "10", "110"]),
        WordSet.of("01", ["00", "000"]),
        WordSet.of("01", ["0", "01"]),
        WordSet.of("01", ["1", "10", "100"]),
        WordSet.of("0", ["0"]),
        WordSet.of("0", ["00", "000"]),
        WordSet.of("0", ["00", "0000"]),
        WordSet.of("0", ["000", "0000"]),
        WordSet.of("012", ["0", "1", "2"]),
        WordSet.of("012", ["0", "1", "2", "012"]),
        WordSet.of("012", ["01", "12", "20"]),
        two_length_family(2, 3).words,
        two_length_family(3, 4).words,
        star_blowup_family(2).words,
        star_blowup_family(3).words,
    ]
    return sets


# ---------------------------------------------------------------------------
# suites


def suite_unary(count: int = 50, seed: int = DEFAULT_SEED) -> SuiteReport:
    """Minimal DFA size of a one-letter star closure versus the closed form.

    For lengths with gcd d whose quotients have a well-defined largest gap
    g, the size must be exactly ``d * (g + 1) + 1``.  Tuples whose
    quotients contain 1 are resampled: their closure is just a cycle and
    the closed form does not apply (they are covered by the degenerate law
    in the unit tests).
    """
    report = SuiteReport("unary")
    rng = random.Random(seed)
    seen: set[tuple[int, ...]] = set()
    while len(seen) < count:
        k = rng.randint(1, 4)
        tup = tuple(sorted({rng.randint(1, 20) for _ in range(k)}))
        d = gcd(*tup)
        if tup[0] // d == 1 or tup in seen:
            continue
        seen.add(tup)
        predicted = d * (frobenius_g([a // d for a in tup]) + 1) + 1
        s = WordSet.of("0", ["0" * a for a in tup])
        actual = state_complexity(determinize(trie_star_nfa(s)))
        report.add("lengths=%s" % (tup,), predicted, actual, predicted == actual)
    return report


def _pair_words(max_len: int) -> list[str]:
    return [
        "".join(p)
        for n in range(1, max_len + 1)
        for p in itertools.product("01", repeat=n)
    ]


def suite_pairs(max_len: int = 6, agreement_total: int = 14) -> SuiteReport:
    """Size predictions for two-word closures over the binary alphabet.

    Checks, for every pair of nonempty binary words up to ``max_len``:
    the star closure never needs more than ``|w| + |x|`` states and the
    ordered concatenation of stars never more than ``|w| + 2|x|``; both
    bounds are attained by some pair; commuting pairs match their exact
    formula.  Separately bounds the block-stream agreement length for all
    non-commuting pairs with ``|w| + |x|`` up to ``agreement_total``.
    """
    report = SuiteReport("pairs")
    words = _pair_words(max_len)

    checked = viol = tight = 0
    exact_checked = exact_bad = 0
    first_tight = ""
    for i, w in enumerate(words):
        for x in words[i:]:
            pred, kind = predicted_pair_star_sc(w, x)
            ws = WordSet.of("01", {w, x})
            actual = state_complexity(determinize(trie_star_nfa(ws)))
            if kind == EXACT:
                exact_checked += 1
                if actual != pred:
                    exact_bad += 1
                    report.add("star {%s,%s}" % (w, x), pred, actual, False)
            else:
                checked += 1
                if actual > pred:
                    viol += 1
                    report.add("star {%s,%s}" % (w, x), "<= %d" % pred, actual, False)
                if actual == pred:
                    tight += 1
                    if not first_tight:
                        first_tight = "{%s,%s}" % (w, x)
    report.add(
        "star bound, %d non-commuting pairs" % checked,
        "0 violations",
        "%d violations" % viol,
        viol == 0,
    )
    report.add(
        "star bound tightness",
        ">= 1 pair attains it",
        "%d attain (first %s)" % (tight, first_tight),
        tight >= 1,
    )
    report.add(
        "star commuting formula, %d pairs" % exact_checked,
        "0 mismatches",
        "%d mismatches" % exact_bad,
        exact_bad == 0,
    )

    checked = viol = tight = 0
    exact_checked = exact_bad = 0
    first_tight = ""
    for w in words:
        for x in words:
            pred, kind = predicted_pair_concat_sc(w, x)
            actual = minimal_chain_dfa([w, x], "01").state_count
            if kind == EXACT:
                exact_checked += 1
                if actual != pred:
                    exact_bad += 1
                    report.add("concat %s* %s*" % (w, x), pred, actual, False)
            else:
                checked += 1
                if actual > pred:
                    viol += 1
                    report.add("concat %s* %s*" % (w, x), "<= %d" % pred, actual, False)
                if actual == pred:
                    tight += 1
                    if not first_tight:
                        first_tight = "%s* %s*" % (w, x)
    report.add(
        "concat bound, %d non-commuting pairs" % checked,
        "0 violations",
        "%d violations" % viol,
        viol == 0,
    )
    report.add(
        "concat bound tightness",
        ">= 1 pair attains it",
        "%d attain (first %s)" % (tight, first_tight),
        tight >= 1,
    )
    report.add(
        "concat commuting formula, %d pairs" % exact_checked,
        "0 mismatches",
        "%d mismatches" % exact_bad,
        exact_bad == 0,
    )

    checked = viol = 0
    for total in range(2, agreement_total + 1):
        for la in range(1, total):
            lb = total - la
            for pa in itertools.product("01", repeat=la):
                w = "".join(pa)
                for pb in itertools.product("01", repeat=lb):
                    x = "".join(pb)
                    if commutes(w, x):
                        continue
                    checked += 1
                    agr = fine_wilf_agreement(w, x)
                    bound = la + lb - gcd(la, lb) - 1
                    if agr > bound:
                        viol += 1
                        report.add(
                            "agreement (%s,%s)" % (w, x), "<= %d" % bound, agr, False
                        )
    report.add(
        "agreement bound, %d non-commuting pairs" % checked,
        "0 violations",
        "%d violations" % viol,
        viol == 0,
    )
    return report


def suite_st(t_max: int = 5) -> SuiteReport:
    """The blowup family versus its closed-form minimal DFA size.

    The closed form counts the rejecting sink; the suite verifies that
    convention at every size, records that the sink really is present, and
    checks the easy exponential floor.  Small sizes are recomputed through
    the window construction as an independent route.
    """
    report = SuiteReport("st")
    for t in range(2, t_max + 1):
        fam = star_blowup_family(t)
        try:
            d = minimize(determinize(trie_star_nfa(fam.words)))
        except CapExceeded as exc:
            report.cap_events += 1
            report.add("t=%d" % t, star_blowup_sc(t), "cap exceeded: %s" % exc, False)
            continue
        predicted = star_blowup_sc(t)
        report.add("t=%d size (sink counted)" % t, predicted, d.state_count, d.state_count == predicted)
        report.add(
            "t=%d sink present" % t,
            True,
            has_dead_state(d),
            has_dead_state(d),
        )
        floor = star_blowup_sc_floor(t)
        report.add("t=%d floor" % t, ">= %d" % floor, d.state_count, d.state_count >= floor)
        if t <= 3:
            w = minimal_star_dfa(fam.words)
            report.add("t=%d window route" % t, d.state_count, w.state_count, w.state_count == d.state_count)
    return report


def suite_tmn(m: int = 3, n: int = 5, alphabet: str = "01") -> SuiteReport:
    """The two-length family: co-finiteness both ways, the exact longest
    omitted word, and the floor on the omitted count."""
    report = SuiteReport("tmn")
    fam = two_length_family(m, n, alphabet)
    s = fam.words

    try:
        decided = two_length_cofinite(s, m, n)
        report.add("decision procedure", True, decided, decided is True)
    except BudgetExceeded as exc:
        report.cap_events += 1
        report.add("decision procedure", True, "budget exceeded: %s" % exc, False)

    d = minimal_star_dfa(s)
    cof = is_cofinite(d)
    report.add("automaton co-finite", True, cof, cof)
    if not cof:
        return report

    comp = complement(d)
    wit = longest_word(comp)
    predicted = predicted_longest_omitted(fam)
    report.add("longest omitted length", predicted, len(wit) if wit else None, wit is not None and len(wit) == predicted)
    structured = longest_omitted_witness(fam)
    report.add("longest omitted word", structured, wit, wit == structured)
    report.add(
        "witness rejected by oracle",
        False,
        member_star(s, structured),
        member_star(s, structured) is False,
    )

    count = count_words(comp)
    floor = omitted_count_lower_bound(fam)
    report.add("omitted count", ">= %d" % floor, count, count >= floor)

    report.add(
        "prefix/suffix extension condition",
        True,
        prefix_suffix_condition(s.words),
        prefix_suffix_condition(s.words),
    )

    # pumping the seed word: every interleaving of the seed with full-length
    # filler blocks stays outside the closure until the count runs out
    sigma = len(alphabet)
    fillers = ["".join(p) for p in itertools.product(alphabet, repeat=m)]
    rng = random.Random(DEFAULT_SEED)
    if len(fillers) > 32:
        fillers = rng.sample(fillers, 32)
    bad = 0
    total = 0
    for reps in range(1, m):
        blocks = reps - 1
        if blocks == 0:
            total += 1
            if member_star(s, fam.seed_word):
                bad += 1
        else:
            for combo in itertools.product(fillers, repeat=blocks):
                total += 1
                pumped = fam.seed_word
                for f in combo:
                    pumped += f + fam.seed_word
                if member_star(s, pumped):
                    bad += 1
    report.add(
        "seed pumping, %d words" % total,
        "all outside the closure",
        "%d inside" % bad,
        bad == 0,
    )

    # dropping any short word must break co-finiteness
    if sigma**m <= 16:
        broken = 0
        shorts = [w for w in s.words if len(w) == m]
        for u in shorts:
            rest = WordSet.of(alphabet, [w for w in s.words if w != u])
            if is_cofinite(minimal_star_dfa(rest)):
                broken += 1
        report.add(
            "dropping a short word, %d cases" % len(shorts),
            "never co-finite",
            "%d still co-finite" % broken,
            broken == 0,
        )
    return report


def suite_chain_cofinite(count: int = 100, seed: int = DEFAULT_SEED) -> SuiteReport:
    """Chain-of-stars co-finiteness: closed-form criterion versus the
    automaton, over random one-letter and two-letter instances with mixed
    length gcds."""
    report = SuiteReport("chain-cofinite")
    rng = random.Random(seed)
    for i in range(count):
        alphabet = "0" if rng.random() < 0.5 else "01"
        k = rng.randint(1, 4)
        stretch = 2 if rng.random() < 0.4 else 1
        xs = []
        for _ in range(k):
            n = rng.randint(1, 5) * stretch
            if alphabet == "0":
                xs.append("0" * n)
            else:
                xs.append("".join(rng.choice(alphabet) for _ in range(n)))
        predicted = chain_cofinite(xs, alphabet)
        try:
            actual = is_cofinite(minimal_chain_dfa(xs, alphabet))
        except CapExceeded as exc:
            report.cap_events += 1
            report.add("chain %s" % (xs,), predicted, "cap exceeded: %s" % exc, False)
            continue
        report.add(
            "chain %s over %r" % ("/".join(xs), alphabet),
            predicted,
            actual,
            predicted == actual,
        )
    return report


def suite_bounds(count: int = 200, seed: int = DEFAULT_SEED, deep: bool = True) -> SuiteReport:
    """Corpus-wide structural laws.

    Over random word sets plus hand-picked extras: the window construction
    agrees with the determinized trie; its reachable size obeys the closed
    bound; minimal DFA sizes obey the subset bound (and the sharper one for
    prefix-free sets); co-finite closures omit fewer than bound-many words
    and their longest omission is shorter than the bound; the membership
    oracles agree with the automata word-for-word up to length 12 (binary)
    and 8 (ternary) when ``deep`` is set.
    """
    report = SuiteReport("bounds")
    corpus = random_word_sets(count, seed) + crafted_word_sets()
    rng = random.Random(seed + 1)

    equiv_bad = window_bad = subset_bad = prefixfree_bad = 0
    prefixfree_n = cof_n = 0
    longest_bad = count_bad = condition_bad = 0
    star_mismatch = chain_mismatch = 0
    deep_words: dict[str, list[str]] = {}
    if deep:
        deep_words["01"] = [
            "".join(p) for L in range(0, 13) for p in itertools.product("01", repeat=L)
        ]
        deep_words["012"] = [
            "".join(p) for L in range(0, 9) for p in itertools.product("012", repeat=L)
        ]

    for s in corpus:
        win = window_star_dfa(s)
        bound = window_state_bound(len(s.alphabet), s.max_word_length)
        if win.state_count > bound:
            window_bad += 1
            report.add("window size %s" % (s.words,), "<= %d" % bound, win.state_count, False)
        det = determinize(trie_star_nfa(s))
        if not equivalent(win, det):
            equiv_bad += 1
            report.add("window vs trie %s" % (s.words,), "equivalent", "differ", False)
        d = minimize(win)
        cap = 2 ** (s.total_symbols - s.word_count + 1)
        if d.state_count > cap:
            subset_bad += 1
            report.add("subset bound %s" % (s.words,), "<= %d" % cap, d.state_count, False)
        if not any(
            u != v and v.startswith(u) for u in s.words for v in s.words
        ):
            prefixfree_n += 1
            sharp = s.total_symbols - s.word_count + 2
            if d.state_count > sharp:
                prefixfree_bad += 1
                report.add(
                    "prefix-free bound %s" % (s.words,), "<= %d" % sharp, d.state_count, False
                )
        if is_cofinite(d):
            cof_n += 1
            comp = complement(d)
            omitted = count_words(comp)
            sigma = len(s.alphabet)
            geo = bound if sigma == 1 else (sigma**bound - 1) // (sigma - 1)
            if omitted > geo:
                count_bad += 1
                report.add("omitted count %s" % (s.words,), "<= %d" % geo, omitted, False)
            wit = longest_word(comp)
            if wit is not None:
                if len(wit) >= bound:
                    longest_bad += 1
                    report.add(
                        "longest omitted %s" % (s.words,), "< %d" % bound, len(wit), False
                    )
                if not prefix_suffix_condition(s.words):
                    condition_bad += 1
                    report.add(
                        "extension condition %s" % (s.words,), True, False, False
                    )
        if deep and s.alphabet in deep_words:
            sym = {c: i for i, c in enumerate(d.alphabet)}
            idx = _length_index(s.words)
            for w in deep_words[s.alphabet]:
                st = d.initial
                for c in w:
                    st = d.transitions[st][sym[c]]
                if (st in d.finals) != _member_star_indexed(idx, w):
                    star_mismatch += 1
                    report.add("star oracle %s word %s" % (s.words, w), "agree", "differ", False)
                    break
            order = list(s.words)
            rng.shuffle(order)
            cd = minimal_chain_dfa(order, s.alphabet)
            csym = {c: i for i, c in enumerate(cd.alphabet)}
            for w in deep_words[s.alphabet]:
                st = cd.initial
                for c in w:
                    st = cd.transitions[st][csym[c]]
                if (st in cd.finals) != member_chain(order, w):
                    chain_mismatch += 1
                    report.add("chain oracle %s word %s" % (order, w), "agree", "differ", False)
                    break

    n = len(corpus)
    report.add("window vs trie, %d sets" % n, "0 differ", "%d differ" % equiv_bad, equiv_bad == 0)
    report.add("window size bound, %d sets" % n, "0 over", "%d over" % window_bad, window_bad == 0)
    report.add("subset bound, %d sets" % n, "0 over", "%d over" % subset_bad, subset_bad == 0)
    report.add(
        "prefix-free bound, %d sets" % prefixfree_n,
        "0 over",
        "%d over" % prefixfree_bad,
        prefixfree_bad == 0,
    )
    report.add(
        "longest omitted bound, %d co-finite sets" % cof_n,
        "0 over",
        "%d over" % longest_bad,
        longest_bad == 0,
    )
    report.add(
        "omitted count bound",
        "0 over",
        "%d over" % count_bad,
        count_bad == 0,
    )
    report.add(
        "extension condition on co-finite sets",
        "0 failures",
        "%d failures" % condition_bad,
        condition_bad == 0,
    )
    if deep:
        report.add(
            "star membership concordance",
            "0 mismatches",
            "%d mismatches" % star_mismatch,
            star_mismatch == 0,
        )
        report.add(
            "chain membership concordance",
            "0 mismatches",
            "%d mismatches" % chain_mismatch,
            chain_mismatch == 0,
        )
    return report
