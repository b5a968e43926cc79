"""Command-line front end.

Every subcommand prints plain text by default; ``--format json`` switches to
the structured form documented in the README.  Exit codes: 0 success, 1 a
theorem check failed, 2 malformed input or budget error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .errors import BudgetExceeded, LPrimError
from .languages import (
    VIEWS,
    descend_to_lp_root,
    is_l_primitive,
    is_prefix_set,
    l_primitive_roots,
    l_root_of_language,
    load_language,
    lp_set_up_to,
    lp_words_in,
)
from .numeric import (
    classify_lp_count,
    enumerate_lp_in_H,
    frobenius,
    membership,
    minimal_generators,
    parse_generators,
    parse_numeric_language,
)
from .submonoid import (
    WordSubmonoidSpec,
    classify_lp_count_words,
    classify_primitive_count,
    classify_root_count,
    word_membership,
)
from .words import Alphabet, format_word, is_primitive, primitive_root, smallest_period


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _words(ws) -> str:
    return " ".join(format_word(w) for w in ws)


def _parse_word(text: str, alphabet: str | None) -> str:
    alpha = Alphabet.of(alphabet) if alphabet else Alphabet.infer(text if text != "eps" else "")
    return alpha.word(text)


def _view(args):
    L = load_language(args.lang)
    return L, VIEWS[args.view](L)


# Each handler returns (text, structured).

def cmd_word_root(args):
    w = _parse_word(args.word, args.alphabet)
    root, k = primitive_root(w)
    return f"{root}^{k}", {"word": w, "root": root, "exponent": k}


def cmd_word_primitive(args):
    w = _parse_word(args.word, args.alphabet)
    p = is_primitive(w)
    return _bool(p), {"word": w, "primitive": p}


def cmd_word_period(args):
    w = _parse_word(args.word, args.alphabet)
    p = smallest_period(w)
    return str(p), {"word": w, "period": p}


def cmd_lang_lp(args):
    L, view = _view(args)
    w = L.alphabet.word(args.word)
    result = is_l_primitive(w, view)
    return _bool(result), {"word": w, "view": args.view, "l_primitive": result}


def cmd_lang_lp_set(args):
    L, view = _view(args)
    words = list(lp_set_up_to(view, args.maxlen, budget=args.budget))
    return _words(words), {"view": args.view, "maxlen": args.maxlen, "words": words}


def cmd_lang_roots(args):
    L, view = _view(args)
    w = L.alphabet.word(args.word)
    roots = list(l_primitive_roots(w, view))
    return _words(roots), {"word": w, "view": args.view, "roots": roots}


def cmd_lang_lp_in(args):
    L, view = _view(args)
    words = list(lp_words_in(L, view))
    return _words(words), {"view": args.view, "words": words}


def cmd_lang_l_root(args):
    L, view = _view(args)
    words = list(l_root_of_language(L, view))
    return _words(words), {"view": args.view, "words": words}


def cmd_lang_prefix_set(args):
    result = is_prefix_set(load_language(args.lang))
    return _bool(result), {"prefix_set": result}


def cmd_lang_descend(args):
    L = load_language(args.lang)
    w = L.alphabet.word(args.word)
    x, m = descend_to_lp_root(w, L)
    return f"{x}^{m}", {"word": w, "root": x, "exponent": m}


def cmd_num_classify(args):
    spec = parse_generators(args.gens)
    L = parse_numeric_language(args.lang)
    if not L.is_finite:
        raise UsageError(f"classification needs a finite language, got '{args.lang}'")
    c = classify_lp_count(spec, L)
    return str(c), c.to_dict()


def cmd_num_enumerate(args):
    spec = parse_generators(args.gens)
    L = parse_numeric_language(args.lang)
    if args.bound < 1:
        raise UsageError(f"bound must be positive, got '{args.bound}'")
    if args.bound > args.budget:
        raise BudgetExceeded(f"bound {args.bound} exceeds budget {args.budget}")
    found = enumerate_lp_in_H(spec, L, args.bound)
    return " ".join(map(str, found)), {
        "generators": spec.sorted(), "language": str(L), "bound": args.bound, "elements": found}


def cmd_num_mingens(args):
    Y = minimal_generators(parse_generators(args.gens)).sorted()
    return " ".join(map(str, Y)), {"generators": Y}


def cmd_num_frobenius(args):
    f = frobenius(parse_generators(args.gens))
    return str(f), {"frobenius": f}


def cmd_num_member(args):
    result = membership(args.value, parse_generators(args.gens))
    return _bool(result), {"value": args.value, "member": result}


def _mono_spec(args) -> WordSubmonoidSpec:
    return WordSubmonoidSpec(load_language(args.gens_file))


def cmd_mono_classify(args):
    c = classify_primitive_count(_mono_spec(args))
    return str(c), c.to_dict()


def cmd_mono_roots(args):
    c = classify_root_count(_mono_spec(args))
    return str(c), c.to_dict()


def cmd_mono_lp_classify(args):
    c = classify_lp_count_words(_mono_spec(args), load_language(args.lang))
    return str(c), c.to_dict()


def cmd_mono_member(args):
    spec = _mono_spec(args)
    w = spec.alphabet.word(args.word)
    result = word_membership(w, spec)
    return _bool(result), {"word": w, "member": result}


def cmd_verify(args):
    params = harness.CheckParams(alphabet=args.alphabet, maxlen=args.maxlen, samples=args.samples,
                                 seed=args.seed, numeric_samples=args.numeric_samples, budget=args.budget)
    if args.check and len(args.check) == 1:
        results = [harness.run_check(args.check[0], params)]
    else:
        for c in args.check or ():
            if c not in harness.check_ids():
                raise UsageError(f"unknown check '{c}'")
        results = harness.run_all(params, args.check)
    failed = any(r.status == harness.FAIL for r in results)
    return harness.report_text(results), json.loads(harness.report_json(results)), 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)

    parser = _Parser(prog="lprim", description=__doc__.splitlines()[0], parents=[common])
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, fn, help):
        p = group.add_parser(name, help=help, parents=[common])
        p.set_defaults(fn=fn)
        return p

    word = groups.add_parser("word", help="single-word queries").add_subparsers(dest="cmd", required=True)
    for name, fn, help in [("root", cmd_word_root, "primitive root and exponent"),
                           ("primitive", cmd_word_primitive, "primitivity test"),
                           ("period", cmd_word_period, "smallest period")]:
        p = sub(word, name, fn, help)
        p.add_argument("word")
        p.add_argument("--alphabet", help="alphabet letters (default: letters of the word)")

    lang = groups.add_parser("lang", help="queries against a language file").add_subparsers(dest="cmd", required=True)
    for name, fn, help, needs_word in [
        ("lp", cmd_lang_lp, "is the word L-primitive", True),
        ("lp-set", cmd_lang_lp_set, "all L-primitive words up to a length", False),
        ("roots", cmd_lang_roots, "L-primitive roots of a word", True),
        ("lp-in", cmd_lang_lp_in, "L-primitive words of the file's language", False),
        ("l-root", cmd_lang_l_root, "L-primitive root of the file's language", False),
        ("prefix-set", cmd_lang_prefix_set, "is the language a prefix set", False),
        ("descend", cmd_lang_descend, "descend from a member to an L-primitive root", True),
    ]:
        p = sub(lang, name, fn, help)
        p.add_argument("--lang", required=True, help="language file")
        if name not in ("prefix-set", "descend"):
            p.add_argument("--view", choices=sorted(VIEWS), default="explicit",
                           help="use the file's language as is, its pow-closure, or its complement")
        if needs_word:
            p.add_argument("--word", required=True)
        if name == "lp-set":
            p.add_argument("--maxlen", type=int, required=True)
            p.add_argument("--budget", type=int, default=2_000_000)

    num = groups.add_parser("num", help="submonoids of N").add_subparsers(dest="cmd", required=True)
    p = sub(num, "classify", cmd_num_classify, "size class of the L-primitive elements")
    p.add_argument("--gens", required=True)
    p.add_argument("--lang", required=True)
    p = sub(num, "enumerate", cmd_num_enumerate, "L-primitive elements up to a bound")
    p.add_argument("--gens", required=True)
    p.add_argument("--lang", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--budget", type=int, default=10_000_000)
    for name, fn, help in [("mingens", cmd_num_mingens, "minimal generating set"),
                           ("frobenius", cmd_num_frobenius, "Frobenius number")]:
        sub(num, name, fn, help).add_argument("--gens", required=True)
    p = sub(num, "member", cmd_num_member, "membership test")
    p.add_argument("--gens", required=True)
    p.add_argument("value", type=int)

    mono = groups.add_parser("mono", help="submonoids of a free monoid").add_subparsers(dest="cmd", required=True)
    for name, fn, help in [("classify", cmd_mono_classify, "size class of the primitive members"),
                           ("roots", cmd_mono_roots, "size class of the primitive roots of members"),
                           ("lp-classify", cmd_mono_lp_classify, "size class of the L-primitive members"),
                           ("member", cmd_mono_member, "membership test")]:
        p = sub(mono, name, fn, help)
        p.add_argument("--gens-file", required=True)
        if name == "lp-classify":
            p.add_argument("--lang", required=True)
        if name == "member":
            p.add_argument("--word", required=True)

    d = harness.CheckParams()
    p = groups.add_parser("verify", help="run the theorem suite", parents=[common])
    p.set_defaults(fn=cmd_verify)
    p.add_argument("--check", action="append", help="check id (repeatable; default: all)")
    p.add_argument("--list", action="store_true", help="list check ids and exit")
    p.add_argument("--alphabet", default=d.alphabet)
    p.add_argument("--maxlen", type=int, default=d.maxlen)
    p.add_argument("--samples", type=int, default=d.samples)
    p.add_argument("--numeric-samples", type=int, default=d.numeric_samples)
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--budget", type=int, default=d.budget)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "list", False):
            print("\n".join(harness.check_ids()))
            return 0
        out = args.fn(args)
    except (UsageError, LPrimError, OSError) as exc:
        print(f"lprim: error: {exc}", file=sys.stderr)
        return 2
    text, structured, *code = out
    if getattr(args, "format", "text") == "json":
        print(json.dumps(structured, sort_keys=True))
    else:
        print(text)
    return code[0] if code else 0


if __name__ == "__main__":
    sys.exit(main())
