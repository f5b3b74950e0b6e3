"""Command line frontend.

Subcommands: ``measure`` runs the size measures on a word-set file and
emits a JSON report, ``gen`` prints the built-in families as word-set
files, ``verify`` replays a verification suite as a TSV table, and
``oracle`` answers membership queries by brute force.

Word-set file format: a header line ``alphabet: <chars>``, then one word
per line.  ``#`` starts a comment, blank lines are ignored, duplicate
words are allowed and their file order is kept (the order matters for the
chain of stars; the star closure ignores it).

Exit codes: 0 success, 1 a verified invariant was violated, 2 a resource
cap was hit, 3 bad input.  The environment variable ``FROBWORD_STATE_CAP``
overrides the determinization cap; the ``--state-cap`` flag overrides
both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from frobword.automata import DEFAULT_STATE_CAP, CapExceeded, to_dot
from frobword.families import (
    chain_blowup_family,
    star_blowup_family,
    two_length_family,
)
from frobword.starlang import (
    PreconditionViolated,
    WordSet,
    measure_all,
    member_chain,
    member_star,
    minimal_chain_dfa,
    minimal_star_dfa,
)
from frobword import verify as verify_mod

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_CAP = 2
EXIT_BAD_INPUT = 3


class WordSetFileError(ValueError):
    """Raised on malformed word-set files; the message carries the source
    name and line number."""


def parse_word_set_file(text: str, source: str = "<input>") -> tuple[str, list[str]]:
    """Parse a word-set file into ``(alphabet, words)``.

    Words come back in file order with duplicates preserved.
    """
    alphabet = None
    words: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if alphabet is None:
            if not line.startswith("alphabet:"):
                raise WordSetFileError(
                    "%s:%d: expected header 'alphabet: <chars>', got %r"
                    % (source, lineno, line)
                )
            alphabet = line[len("alphabet:") :].strip()
            if not alphabet:
                raise WordSetFileError("%s:%d: empty alphabet" % (source, lineno))
            if len(set(alphabet)) != len(alphabet):
                raise WordSetFileError(
                    "%s:%d: repeated character in alphabet %r" % (source, lineno, alphabet)
                )
            continue
        stray = sorted(set(line) - set(alphabet))
        if stray:
            raise WordSetFileError(
                "%s:%d: word %r uses characters %s not in alphabet %r"
                % (source, lineno, line, ",".join(stray), alphabet)
            )
        words.append(line)
    if alphabet is None:
        raise WordSetFileError("%s: missing 'alphabet:' header" % source)
    if not words:
        raise WordSetFileError("%s: no words" % source)
    return alphabet, words


def format_word_set_file(alphabet: str, words) -> str:
    return "\n".join(["alphabet: %s" % alphabet, *words]) + "\n"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _resolve_cap(args) -> int:
    if getattr(args, "state_cap", None):
        return args.state_cap
    env = os.environ.get("FROBWORD_STATE_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise WordSetFileError("FROBWORD_STATE_CAP is not an integer: %r" % env)
    return DEFAULT_STATE_CAP


# ---------------------------------------------------------------------------
# measure


def _report_dict(label, s, report, want_star, want_chain, wall_ms):
    """Assemble the JSON report with a fixed key order; measures that do
    not apply are null and immediately followed by a reason key."""
    rep: dict[str, object] = {
        "input": label,
        "alphabet": s.alphabet,
        "k": s.word_count,
        "n": s.max_word_length,
        "m_total": s.total_symbols,
    }
    not_requested = "not requested (star measures disabled)"
    rep["cofinite_star"] = report.cofinite_star
    if report.cofinite_star is None:
        rep["cofinite_star_reason"] = not_requested
    rep["L"] = report.longest_omitted
    if report.longest_omitted is None:
        if not want_star:
            rep["L_reason"] = not_requested
        elif report.full_language:
            rep["L_reason"] = "the closure is the full language"
        elif not report.cofinite_star:
            rep["L_reason"] = "the complement is infinite"
    rep["L_witness"] = report.longest_omitted_word
    rep["S"] = report.star_sc
    if report.star_sc is None:
        rep["S_reason"] = not_requested
    rep["S_prime"] = report.chain_sc
    if report.chain_sc is None:
        rep["S_prime_reason"] = "not requested (chain measures disabled)"
    rep["K"] = report.chain_longest_omitted
    if report.chain_longest_omitted is None:
        if not want_chain:
            rep["K_reason"] = "not requested (chain measures disabled)"
        elif report.chain_full_language:
            rep["K_reason"] = "the chain is the full language"
        else:
            rep["K_reason"] = "the chain complement is infinite"
    rep["M"] = None if report.omitted_count is None else str(report.omitted_count)
    if report.omitted_count is None:
        if not want_star:
            rep["M_reason"] = not_requested
        else:
            rep["M_reason"] = "the complement is infinite"
    rep["nfa_bound"] = report.nfa_size_bound
    rep["window_dfa_states"] = report.window_dfa_states
    if report.window_dfa_states is None:
        rep["window_dfa_states_reason"] = not_requested
    rep["wall_time_ms"] = wall_ms
    if wall_ms is None:
        rep["wall_time_ms_reason"] = "timing disabled"
    return rep


def cmd_measure(args) -> int:
    try:
        alphabet, file_words = parse_word_set_file(_read_input(args.file), args.file)
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    except WordSetFileError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT

    s = WordSet.of(alphabet, file_words)
    want_star = args.star or not args.chain
    want_chain = args.chain or not args.star
    xs_order = file_words
    if args.order is not None:
        xs_order = [w for w in args.order.split(",") if w]

    cap = _resolve_cap(args)
    t0 = time.perf_counter()
    try:
        report = measure_all(
            s, xs_order, star=want_star, chain=want_chain, state_cap=cap
        )
    except CapExceeded as exc:
        print("error: state cap exceeded: %s" % exc, file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    wall_ms = None if args.no_timing else round((time.perf_counter() - t0) * 1000, 3)

    if args.dot:
        if want_star:
            with open(args.dot + ".star.dot", "w", encoding="ascii") as fh:
                fh.write(to_dot(minimal_star_dfa(s, cap), "star"))
        if want_chain:
            with open(args.dot + ".chain.dot", "w", encoding="ascii") as fh:
                fh.write(to_dot(minimal_chain_dfa(xs_order, alphabet, cap), "chain"))

    rep = _report_dict(args.file, s, report, want_star, want_chain, wall_ms)
    if args.pretty:
        print(json.dumps(rep, indent=2))
    else:
        print(json.dumps(rep, separators=(",", ":")))
    return EXIT_OK


# ---------------------------------------------------------------------------
# gen


def cmd_gen(args) -> int:
    try:
        if args.family == "st":
            fam = star_blowup_family(args.t)
            out = format_word_set_file(fam.words.alphabet, fam.words.words)
        elif args.family == "tmn":
            fam = two_length_family(args.m, args.n, args.alphabet)
            out = format_word_set_file(fam.words.alphabet, fam.words.words)
        else:
            words, _repeats = chain_blowup_family(args.t)
            alphabet = "".join(sorted(set("".join(words))))
            out = format_word_set_file(alphabet, words)
    except (PreconditionViolated, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    sys.stdout.write(out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    if args.suite == "unary":
        report = verify_mod.suite_unary(args.count, args.seed)
    elif args.suite == "pairs":
        report = verify_mod.suite_pairs(args.max_len, args.agreement_total)
    elif args.suite == "st":
        report = verify_mod.suite_st(args.t_max)
    elif args.suite == "tmn":
        report = verify_mod.suite_tmn(args.m, args.n, args.alphabet)
    elif args.suite == "chain-cofinite":
        report = verify_mod.suite_chain_cofinite(args.count, args.seed)
    else:
        report = verify_mod.suite_bounds(args.count, args.seed, deep=not args.shallow)

    print("instance\tpredicted\tactual\tstatus")
    for row in report.rows:
        print(
            "%s\t%s\t%s\t%s"
            % (row.instance, row.predicted, row.actual, "ok" if row.ok else "FAIL")
        )
    failures = len(report.failures())
    print(
        "# suite %s: %d checks, %d failures, %d cap events"
        % (report.suite, len(report.rows), failures, report.cap_events),
        file=sys.stderr,
    )
    if report.cap_events:
        return EXIT_CAP
    return EXIT_OK if report.passed else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# oracle


def cmd_oracle(args) -> int:
    try:
        alphabet, file_words = parse_word_set_file(_read_input(args.file), args.file)
    except (OSError, WordSetFileError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    s = WordSet.of(alphabet, file_words)
    for word in args.words:
        stray = sorted(set(word) - set(alphabet))
        if stray:
            print(
                "error: word %r uses characters %s not in alphabet %r"
                % (word, ",".join(stray), alphabet),
                file=sys.stderr,
            )
            return EXIT_BAD_INPUT
        if args.chain:
            inside = member_chain(file_words, word)
        else:
            inside = member_star(s, word)
        print("%s\t%s" % (word, "true" if inside else "false"))
    return EXIT_OK


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="frobword",
        description="Measures, families and verification for star closures of finite word sets.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", help="measure a word-set file, emit a JSON report")
    m.add_argument("file", help="word-set file, or - for standard input")
    m.add_argument("--star", action="store_true", help="star measures only")
    m.add_argument("--chain", action="store_true", help="chain measures only")
    m.add_argument(
        "--order",
        help="comma-separated chain order (default: file order); must use exactly the file's words",
    )
    m.add_argument("--pretty", action="store_true", help="indent the JSON output")
    m.add_argument(
        "--no-timing", action="store_true", help="null wall_time_ms for byte-stable output"
    )
    m.add_argument("--dot", metavar="PREFIX", help="also write PREFIX.{star,chain}.dot")
    m.add_argument("--state-cap", type=int, help="determinization state cap")
    m.set_defaults(func=cmd_measure)

    g = sub.add_parser("gen", help="print a built-in family as a word-set file")
    gsub = g.add_subparsers(dest="family", required=True)
    gst = gsub.add_parser("st", help="the star-closure blowup family")
    gst.add_argument("--t", type=int, required=True)
    gst.set_defaults(func=cmd_gen)
    gt = gsub.add_parser("tmn", help="the two-length family")
    gt.add_argument("--m", type=int, required=True)
    gt.add_argument("--n", type=int, required=True)
    gt.add_argument("--alphabet", default="01")
    gt.set_defaults(func=cmd_gen)
    gc = gsub.add_parser("chain", help="the chain-of-stars blowup family")
    gc.add_argument("--t", type=int, required=True)
    gc.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="run a verification suite, emit a TSV table")
    v.add_argument(
        "suite", choices=["unary", "pairs", "st", "tmn", "chain-cofinite", "bounds"]
    )
    v.add_argument("--seed", type=int, default=verify_mod.DEFAULT_SEED)
    v.add_argument("--count", type=int, default=None)
    v.add_argument("--max-len", type=int, default=6, help="pairs: maximum word length")
    v.add_argument(
        "--agreement-total",
        type=int,
        default=14,
        help="pairs: maximum combined length for agreement checks",
    )
    v.add_argument("--t-max", type=int, default=5, help="st: largest family index")
    v.add_argument("--m", type=int, default=3, help="tmn: short length")
    v.add_argument("--n", type=int, default=5, help="tmn: long length")
    v.add_argument("--alphabet", default="01", help="tmn: alphabet")
    v.add_argument(
        "--shallow", action="store_true", help="bounds: skip the word-by-word concordance"
    )
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="brute-force membership queries")
    o.add_argument("file", help="word-set file, or - for standard input")
    o.add_argument("words", nargs="+", help="words to test")
    o.add_argument(
        "--chain",
        action="store_true",
        help="test membership in the chain of stars (file order) instead of the star closure",
    )
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and args.count is None:
        args.count = 100 if args.suite == "chain-cofinite" else 200
        if args.suite == "unary":
            args.count = 50
    try:
        return args.func(args)
    except CapExceeded as exc:
        print("error: state cap exceeded: %s" % exc, file=sys.stderr)
        return EXIT_CAP
    except WordSetFileError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
