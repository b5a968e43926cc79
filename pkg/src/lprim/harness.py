"""Executable theorem suite.

Every check compares the library against a brute-force oracle over a bounded
universe, or replays a specific witness.  Checks declare their quantifier
regime so a report never overstates what a bounded run establishes:

* ``exhaustive``: every word (or integer) up to the stated bound,
* ``seeded-sample``: a reproducible random sample of languages or generators,
* ``fixed-witness``: one concrete example.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from math import gcd
from typing import Any, Callable, Iterable

from .errors import BudgetExceeded, UnknownCheck
from .languages import (
    ComplementOf,
    Explicit,
    FiniteLanguage,
    PowClosure,
    descend_to_lp_root,
    is_l_primitive,
    is_prefix_set,
    l_primitive_roots,
    l_root_of_language,
    lp_set_up_to,
    lp_words_in,
)
from .numeric import (
    SubmonoidSpec,
    classify_lp_count,
    enumerate_lp_in_H,
    frobenius,
    is_numerical_monoid,
    membership,
    minimal_generators,
    normalize,
    numeric_is_l_primitive,
    parse_numeric_language,
)
from .submonoid import (
    WordSubmonoidSpec,
    classify_lp_count_words,
    classify_primitive_count,
    classify_root_count,
)
from .verdict import GCD_ONE, INFINITE, ONE, ZERO
from .words import Alphabet, is_primitive, primitive_root, smallest_period

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
EXHAUSTIVE, SAMPLED, WITNESS = "exhaustive", "seeded-sample", "fixed-witness"

NUMERIC_BOUND = 10_000


@dataclass(frozen=True)
class CheckParams:
    alphabet: str = "ab"
    maxlen: int = 8
    samples: int = 200
    seed: int = 1
    numeric_samples: int = 500
    # largest universe (words or integers) any single check may enumerate
    budget: int = 1_000_000


@dataclass
class TheoremCheck:
    id: str
    regime: str
    status: str
    parameters: dict[str, Any]
    seed: int
    elapsed: float
    counterexample: dict[str, Any] | None = None
    payload: dict[str, Any] = field(default_factory=dict)
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> TheoremCheck:
        return cls(**d)

    def line(self) -> str:
        scope = f"{self.regime} n={self.parameters['maxlen']}"
        if self.regime != EXHAUSTIVE:
            scope += f" seed={self.seed}"
        text = f"{self.status.upper():7} {self.id:30} [{scope}] {self.elapsed:.2f}s"
        if self.status == FAIL:
            text += "  counterexample: " + json.dumps(self.counterexample, sort_keys=True)
        elif self.status == SKIPPED:
            text += f"  ({self.reason})"
        return text


class CheckFailed(Exception):
    def __init__(self, **counterexample):
        super().__init__(counterexample)
        self.counterexample = counterexample


class _Context:
    def __init__(self, check_id: str, params: CheckParams):
        self.params = params
        self.alphabet = Alphabet.of(params.alphabet)
        self.n = params.maxlen
        self.rng = random.Random(f"{params.seed}:{check_id}")

    def guard(self, size: int):
        if size > self.params.budget:
            raise BudgetExceeded(f"universe of {size} exceeds budget {self.params.budget}")

    def universe(self, n: int | None = None, alphabet: Alphabet | None = None) -> list[str]:
        """Nonempty words of length <= n, after the budget guard."""
        alphabet = alphabet or self.alphabet
        n = self.n if n is None else n
        self.guard(alphabet.count_up_to(n))
        return list(alphabet.words_up_to(n, nonempty=True))

    def language(self, words: Iterable[str]) -> FiniteLanguage:
        return FiniteLanguage(self.alphabet, frozenset(words))


_REGISTRY: dict[str, tuple[str, Callable[[_Context], dict]]] = {}


def check(check_id: str, regime: str):
    def register(fn):
        _REGISTRY[check_id] = (regime, fn)
        return fn
    return register


def check_ids() -> list[str]:
    return list(_REGISTRY)


def _require(cond: bool, **counterexample):
    if not cond:
        raise CheckFailed(**counterexample)


def _lang(L: FiniteLanguage) -> dict[str, Any]:
    return {"alphabet": str(L.alphabet), "words": list(L)}


# ---------------------------------------------------------------- oracles
# These deliberately avoid the library's period and root machinery.

def _brute_factorizations(w: str) -> list[tuple[str, int]]:
    n = len(w)
    return [(w[:p], n // p) for p in range(1, n + 1) if n % p == 0 and w[:p] * (n // p) == w]


def _brute_is_primitive(w: str) -> bool:
    return len(_brute_factorizations(w)) == 1


def _brute_period(w: str) -> int:
    return next(p for p in range(1, len(w) + 1) if all(w[i] == w[i + p] for i in range(len(w) - p)))


def _brute_is_lp(w: str, member) -> bool:
    return not any(k >= 2 and u in member for u, k in _brute_factorizations(w))


def _brute_lp_roots(w: str, member, alphabet: Alphabet) -> set[str]:
    out = set()
    n = len(w)
    for d in range(1, n + 1):
        if n % d:
            continue
        for u in alphabet.words_of_length(d):
            if u * (n // d) == w and _brute_is_lp(u, member):
                out.add(u)
    return out


def _closure(gens: Iterable[str], n: int) -> set[str]:
    """Members of ``gens*`` of length <= n, by repeated concatenation."""
    gens = [g for g in gens if g]
    seen = {""}
    frontier = [""]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                v = w + g
                if len(v) <= n and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def _coin_dp(gens: Iterable[int], bound: int) -> list[bool]:
    reach = [False] * (bound + 1)
    reach[0] = True
    gens = sorted(set(gens))
    for h in range(1, bound + 1):
        reach[h] = any(g <= h and reach[h - g] for g in gens)
    return reach


def _finite_complement(gens: list[int]) -> bool:
    """A run of ``min(gens)`` consecutive members means every later integer is a member."""
    m = min(gens)
    limit = max(gens) ** 2 + 2 * max(gens)
    run = 0
    for flag in _coin_dp(gens, limit):
        run = run + 1 if flag else 0
        if run >= m:
            return True
    return False


# ---------------------------------------------------------------- samplers

def _random_word(rng: random.Random, alphabet: Alphabet, length: int) -> str:
    return "".join(rng.choice(alphabet.letters) for _ in range(length))


def sample_word(rng: random.Random, alphabet: Alphabet, max_len: int = 4) -> str:
    """Half plain random words, half powers of short words so that root relations occur."""
    if rng.random() < 0.5:
        base = _random_word(rng, alphabet, rng.randint(1, min(2, max_len)))
        return base * rng.randint(1, max_len // len(base))
    return _random_word(rng, alphabet, rng.randint(1, max_len))


def sample_language(ctx: _Context, max_size: int = 5, max_len: int = 4, eps: float = 0.0) -> FiniteLanguage:
    rng = ctx.rng
    words = {sample_word(rng, ctx.alphabet, max_len) for _ in range(rng.randint(1, max_size))}
    if rng.random() < eps:
        words.add("")
    return ctx.language(words)


def _root_closed(L: FiniteLanguage) -> FiniteLanguage:
    extra = {u for w in L.words if w for u, _ in _brute_factorizations(w)}
    return L.with_words(L.words | extra)


def _sample_view(ctx: _Context, F: FiniteLanguage):
    return ctx.rng.choice([Explicit, PowClosure, ComplementOf])(F)


def sample_generators(ctx: _Context, max_gens: int = 4, max_len: int = 4) -> WordSubmonoidSpec:
    rng = ctx.rng
    gens = {_random_word(rng, ctx.alphabet, rng.randint(1, max_len)) for _ in range(rng.randint(1, max_gens))}
    return WordSubmonoidSpec(ctx.language(gens))


# ---------------------------------------------------------------- words and languages

@check("prop-1.1-unique-root", EXHAUSTIVE)
def _unique_root(ctx: _Context) -> dict:
    count = 0
    for alphabet in (ctx.alphabet, Alphabet.of(ctx.alphabet.letters[0])):
        for w in ctx.universe(alphabet=alphabet):
            pairs = [(u, k) for u, k in _brute_factorizations(w) if _brute_is_primitive(u)]
            _require(len(pairs) == 1, word=w, primitive_factorizations=pairs)
            _require(tuple(primitive_root(w)) == pairs[0], word=w, expected=pairs[0], got=list(primitive_root(w)))
            _require(smallest_period(w) == _brute_period(w), word=w, expected=_brute_period(w), got=smallest_period(w))
            count += 1
    return {"words": count}


@check("rem-2.3-extremes", EXHAUSTIVE)
def _extremes(ctx: _Context) -> dict:
    universe = ctx.universe()
    empty = ctx.language(())
    got = lp_set_up_to(Explicit(empty), ctx.n, budget=ctx.params.budget)
    _require(got.words == set(universe), case="L empty", missing=sorted(set(universe) - got.words))
    got = lp_set_up_to(ComplementOf(empty), ctx.n, budget=ctx.params.budget)
    primitives = {w for w in universe if _brute_is_primitive(w)}
    _require(got.words == primitives, case="L = A*", difference=sorted(got.words ^ primitives))
    return {"nonempty_words": len(universe), "primitive_words": len(primitives)}


@check("rem-lp-not-primitive", WITNESS)
def _abab(ctx: _Context) -> dict:
    L = FiniteLanguage.of("ab", ["abab"])
    _require(is_l_primitive("abab", L) and not is_primitive("abab"), word="abab", language=_lang(L))
    return {"word": "abab", "language": _lang(L)}


@check("prop-2.4-antitone", SAMPLED)
def _antitone(ctx: _Context) -> dict:
    ctx.guard(ctx.alphabet.count_up_to(ctx.n))
    for _ in range(ctx.params.samples):
        L2 = sample_language(ctx, eps=0.2)
        L1 = L2.with_words(w for w in L2.words if ctx.rng.random() < 0.5)
        for small, big in ((Explicit(L1), Explicit(L2)), (ComplementOf(L2), ComplementOf(L1))):
            lp_big = lp_set_up_to(big, ctx.n, budget=ctx.params.budget)
            lp_small = lp_set_up_to(small, ctx.n, budget=ctx.params.budget)
            _require(lp_big <= lp_small, L1=_lang(L1), L2=_lang(L2), view=type(big).__name__,
                     offending=sorted(lp_big.words - lp_small.words))
    return {"pairs": ctx.params.samples}


@check("cor-2.5-prim-implies-lp", SAMPLED)
def _prim_implies_lp(ctx: _Context) -> dict:
    primitives = [w for w in ctx.universe() if _brute_is_primitive(w)]
    for _ in range(ctx.params.samples):
        F = sample_language(ctx, eps=0.2)
        view = _sample_view(ctx, F)
        for w in primitives:
            _require(is_l_primitive(w, view), word=w, language=_lang(F), view=type(view).__name__)
    return {"primitive_words": len(primitives), "languages": ctx.params.samples}


@check("thm-3.1-nonempty", SAMPLED)
def _nonempty(ctx: _Context) -> dict:
    _require(len(lp_words_in(ctx.language(()), ctx.language(()))) == 0, case="L empty")
    steps = 0
    for _ in range(ctx.params.samples):
        L = sample_language(ctx)
        lp = lp_words_in(L, L)
        _require(len(lp) > 0, language=_lang(L))
        for w in L:
            x, m = descend_to_lp_root(w, L)
            _require(x in L and x * m == w and _brute_is_lp(x, L), language=_lang(L), word=w, got=[x, m])
            steps += m > 1
    return {"languages": ctx.params.samples, "nontrivial_descents": steps}


@check("thm-prefix", SAMPLED)
def _prefix(ctx: _Context) -> dict:
    for _ in range(ctx.params.samples):
        kept: list[str] = []
        for _ in range(ctx.rng.randint(1, 6)):
            w = sample_word(ctx.rng, ctx.alphabet, 4)
            if not any(w.startswith(u) or u.startswith(w) for u in kept):
                kept.append(w)
        X = ctx.language(kept)
        _require(is_prefix_set(X), language=_lang(X), claim="generated set is a prefix set")
        _require(lp_words_in(X, X) == X, language=_lang(X), got=list(lp_words_in(X, X)))
    return {"prefix_sets": ctx.params.samples}


@check("rem-prefix-converse", WITNESS)
def _prefix_converse(ctx: _Context) -> dict:
    L = FiniteLanguage.of("ab", ["a", "ab"])
    _require(lp_words_in(L, L) == L and not is_prefix_set(L), language=_lang(L))
    return {"witness": _lang(L)}


@check("rem-2.9-root-nonempty", SAMPLED)
def _root_nonempty(ctx: _Context) -> dict:
    universe = ctx.universe()
    for _ in range(ctx.params.samples):
        F = sample_language(ctx, eps=0.2)
        view = _sample_view(ctx, F)
        for w in universe:
            roots = l_primitive_roots(w, view)
            _require(primitive_root(w).root in roots, word=w, language=_lang(F), view=type(view).__name__)
    return {"words": len(universe), "languages": ctx.params.samples}


@check("def-lp-roots-oracle", SAMPLED)
def _lp_roots_oracle(ctx: _Context) -> dict:
    universe = ctx.universe()
    languages = max(1, ctx.params.samples // 20)
    for _ in range(languages):
        F = sample_language(ctx, eps=0.2)
        view = _sample_view(ctx, F)
        for w in universe:
            expected = _brute_lp_roots(w, view, ctx.alphabet)
            got = l_primitive_roots(w, view).words
            _require(got == expected, word=w, language=_lang(F), view=type(view).__name__,
                     expected=sorted(expected), got=sorted(got))
    return {"words": len(universe), "languages": languages}


@check("thm-llp-i", SAMPLED)
def _llp_i(ctx: _Context) -> dict:
    held = 0
    for i in range(ctx.params.samples):
        L = sample_language(ctx, eps=0.1)
        if i % 2:
            L = _root_closed(L)
        lroot = l_root_of_language(L, L)
        lhs = lroot <= L
        rhs = lp_words_in(L, L) == lroot
        _require(lhs == rhs, language=_lang(L), root_inside=lhs, lp_equals_root=rhs)
        held += lhs
    return {"languages": ctx.params.samples, "hypothesis_true": held}


@check("thm-llp-ii", SAMPLED)
def _llp_ii(ctx: _Context) -> dict:
    universe = ctx.universe()
    held = 0
    for i in range(ctx.params.samples):
        L = sample_language(ctx, eps=0.1)
        if i % 2:
            L = _root_closed(L)
        # w in pow(L^c) \ L^c: w in L with some factorization u**k where u is outside L
        bad = [w for w in universe if w in L and any(u not in L for u, _ in _brute_factorizations(w))]
        if bad:
            continue
        held += 1
        _require(lp_words_in(L, L) == l_root_of_language(L, L), language=_lang(L))
    _require(held > 0, reason="no sampled language satisfied the hypothesis")
    return {"languages": ctx.params.samples, "hypothesis_true": held}


@check("thm-llp-iii", SAMPLED)
def _llp_iii(ctx: _Context) -> dict:
    for _ in range(ctx.params.samples):
        L = sample_language(ctx)
        L = L.with_words({w for w in L.words if _brute_is_primitive(w)} | {ctx.alphabet.letters[0]})
        lp, lroot = lp_words_in(L, L), l_root_of_language(L, L)
        _require(lp == L and lroot == L, language=_lang(L), lp=list(lp), l_root=list(lroot))
    return {"languages": ctx.params.samples}


@check("cor-llp", SAMPLED)
def _cor_llp(ctx: _Context) -> dict:
    held = 0
    for i in range(ctx.params.samples):
        L = sample_language(ctx, eps=0.1)
        if i % 2:
            L = L.with_words(w for w in L.words if w and _brute_is_primitive(w))
        lroot = l_root_of_language(L, L)
        lhs = L == lroot
        rhs = lp_words_in(L, L) == lroot == L
        _require(lhs == rhs, language=_lang(L), lhs=lhs, rhs=rhs)
        held += lhs
    return {"languages": ctx.params.samples, "hypothesis_true": held}


@check("rem-llp-ii-converse", WITNESS)
def _llp_ii_converse(ctx: _Context) -> dict:
    L = FiniteLanguage.of("ab", ["a", "b", "aaaaaa"])
    ab = {"a", "b"}
    _require(lp_words_in(L, L).words == ab and l_root_of_language(L, L).words == ab, language=_lang(L))
    complement = ComplementOf(L)
    # aa lies in L^c and (aa)^3 = a^6, so a^6 is in pow(L^c) but not in L^c
    _require("aa" in complement and "aa" * 3 == "aaaaaa" and "aaaaaa" not in complement, language=_lang(L))
    return {"witness": _lang(L), "pow_witness": ["aa", 3]}


@check("thm-pow-equiv", SAMPLED)
def _pow_equiv(ctx: _Context) -> dict:
    universe = ctx.universe()
    reverse = 0
    for _ in range(ctx.params.samples):
        F = sample_language(ctx, eps=0.1)
        # L = pow(F) is power-closed, so every nonempty word outside it is L-primitive
        P = PowClosure(F)
        for w in universe:
            if w not in P:
                _require(is_l_primitive(w, P), direction="forward", language=_lang(F), word=w)
        # a finite L with a nonempty word is not power-closed; exhibit a non-L-primitive word of L^c
        if F.nonempty().words:
            bound = 2 * F.max_length()
            witness = next((w for w in ctx.universe(bound) if w not in F and w in PowClosure(F)
                            and not is_l_primitive(w, F)), None)
            _require(witness is not None, direction="reverse", language=_lang(F))
            reverse += 1
    return {"languages": ctx.params.samples, "reverse_witnesses": reverse}


# ---------------------------------------------------------------- free submonoids

def _primitive_members(gens: Iterable[str], n: int) -> set[str]:
    return {w for w in _closure(gens, n) if w and _brute_is_primitive(w)}


def _brute_commute(gens: Iterable[str]) -> bool:
    gens = list(gens)
    return all(u + v == v + u for u in gens for v in gens)


@check("thm-3.3-trichotomy", SAMPLED)
def _trichotomy(ctx: _Context) -> dict:
    tally = {ZERO: 0, ONE: 0, INFINITE: 0}
    for _ in range(ctx.params.samples):
        spec = sample_generators(ctx)
        gens = list(spec.generators)
        wide = ctx.n + max(map(len, gens))
        ctx.guard(ctx.alphabet.count_up_to(wide))
        got = classify_primitive_count(spec)
        tally[got.verdict] += 1
        near, far = _primitive_members(gens, ctx.n), _primitive_members(gens, wide)
        case = dict(generators=gens, verdict=str(got))
        if got.verdict == ZERO:
            _require(not far, **case, found=sorted(far))
        elif got.verdict == ONE:
            _require(near == far == {got.witness}, **case, found=sorted(far))
        else:
            _require(not _brute_commute(gens) and len(far) > len(near), **case, counts=[len(near), len(far)])
    return {"generator_sets": ctx.params.samples, "verdicts": tally}


@check("cor-3.3-root-count", SAMPLED)
def _root_count(ctx: _Context) -> dict:
    for _ in range(ctx.params.samples):
        spec = sample_generators(ctx)
        gens = list(spec.generators)
        wide = ctx.n + max(map(len, gens))
        got = classify_root_count(spec)
        roots = lambda n: {_brute_factorizations(w)[0][0] for w in _closure(gens, n) if w}  # noqa: E731
        near, far = roots(ctx.n), roots(wide)
        case = dict(generators=gens, verdict=str(got))
        if got.verdict == ONE:
            _require(far == {got.witness}, **case, roots=sorted(far))
        else:
            _require(got.verdict == INFINITE and len(far) > len(near), **case, counts=[len(near), len(far)])
    return {"generator_sets": ctx.params.samples}


@check("rem-3.8-noncomm", SAMPLED)
def _noncomm(ctx: _Context) -> dict:
    done = 0
    while done < ctx.params.samples:
        spec = sample_generators(ctx)
        gens = list(spec.generators)
        if _brute_commute(gens):
            continue
        done += 1
        L = sample_language(ctx, eps=0.1)
        wide = ctx.n + max(map(len, gens))
        ctx.guard(ctx.alphabet.count_up_to(wide))
        got = classify_lp_count_words(spec, L)
        count = lambda n: sum(1 for w in _closure(gens, n) if w and _brute_is_lp(w, L))  # noqa: E731
        near, far = count(ctx.n), count(wide)
        _require(got.verdict == INFINITE and far > near, generators=gens, language=_lang(L),
                 verdict=str(got), counts=[near, far])
    return {"generator_sets": done}


@check("ext-commutative-reduction", SAMPLED)
def _commutative_reduction(ctx: _Context) -> dict:
    # exponent window: reaches d*p for a prime p above every exponent in L (d, exponents <= 8)
    window = 120
    tally = {ZERO: 0, ONE: 0, INFINITE: 0}
    rng = ctx.rng
    for _ in range(ctx.params.samples):
        root = sample_word(rng, ctx.alphabet, 3)
        root = _brute_factorizations(root)[0][0]
        gens = {root * rng.randint(1, 8) for _ in range(rng.randint(1, 3))}
        L = {root * rng.randint(1, 8) for _ in range(rng.randint(0, 3))}
        L |= {sample_word(rng, ctx.alphabet, 4) for _ in range(rng.randint(0, 2))}
        if not L:
            L = {root * 2}
        spec, L = WordSubmonoidSpec(ctx.language(gens)), ctx.language(L)
        got = classify_lp_count_words(spec, L)
        tally[got.verdict] += 1
        members = lambda n: {w for w in _closure(gens, n) if w and _brute_is_lp(w, L)}  # noqa: E731
        near, far = members(window // 2 * len(root)), members(window * len(root))
        case = dict(generators=sorted(gens, key=len), language=_lang(L), verdict=str(got))
        if got.verdict == ZERO:
            _require(not far, **case, found=sorted(far, key=len))
        elif got.verdict == ONE:
            _require(far == {got.witness}, **case, found=sorted(far, key=len))
        else:
            _require(len(far) > len(near), **case, counts=[len(near), len(far)])
    return {"specs": ctx.params.samples, "verdicts": tally, "exponent_window": window}


# ---------------------------------------------------------------- submonoids of N

def _random_gens(rng: random.Random, top: int = 50, max_gens: int = 4) -> list[int]:
    return sorted({rng.randint(1, top) for _ in range(rng.randint(1, max_gens))})


def _random_numeric_language(rng: random.Random, top: int = 50, max_size: int = 6) -> set[int]:
    return {rng.randint(1, top) for _ in range(rng.randint(1, max_size))}


def _oracle_agrees(spec: SubmonoidSpec, L: set[int]) -> tuple[bool, dict]:
    """Compare the classifier with bounded enumeration; the thresholds are bounded evidence only."""
    got = classify_lp_count(spec, L)
    small = enumerate_lp_in_H(spec, L, NUMERIC_BOUND)
    info = dict(generators=spec.sorted(), language=sorted(L), verdict=str(got), found=small[:12])
    if got.verdict == ZERO:
        return not small, info
    if got.verdict == ONE:
        return small == [got.witness], info
    big = enumerate_lp_in_H(spec, L, 2 * NUMERIC_BOUND)
    info["counts"] = [len(small), len(big)]
    return len(small) >= 10 and len(big) > len(small), info


@check("thm-1.2-gcd-criterion", SAMPLED)
def _gcd_criterion(ctx: _Context) -> dict:
    ctx.guard(1000)
    for _ in range(ctx.params.samples):
        gens = _random_gens(ctx.rng, 20, 3)
        spec = SubmonoidSpec.of(gens)
        numerical = is_numerical_monoid(spec)
        _require(numerical == _finite_complement(gens), generators=gens, numerical=numerical)
        if numerical:
            f = frobenius(spec)
            reach = _coin_dp(gens, f + 2 + max(gens))
            _require((f < 0 or not reach[f]) and all(reach[f + 1:]), generators=gens, frobenius=f)
        else:
            d = gcd(*gens) if len(gens) > 1 else gens[0]
            reach = _coin_dp(gens, 1000)
            coprime = [h for h in range(1, 1001) if reach[h] and gcd(h, d) == 1]
            _require(not coprime, generators=gens, coprime_members=coprime[:5])
    return {"generator_sets": ctx.params.samples}


@check("thm-1.3-min-gens", SAMPLED)
def _min_gens(ctx: _Context) -> dict:
    for _ in range(ctx.params.samples):
        gens = _random_gens(ctx.rng, 30, 5)
        Y = minimal_generators(SubmonoidSpec.of(gens))
        ys = Y.sorted()
        limit = 4 * max(ys) ** 2
        ctx.guard(limit)
        case = dict(generators=gens, minimal=ys)
        _require(minimal_generators(Y) == Y, **case, claim="fixed point")
        full = _coin_dp(gens, limit)
        _require(_coin_dp(ys, limit) == full, **case, claim="same submonoid")
        for y in ys:
            rest = [x for x in ys if x != y]
            _require(not rest or _coin_dp(rest, limit) != full, **case, redundant=y)
    return {"generator_sets": ctx.params.samples}


@check("thm-1.4-normalize", SAMPLED)
def _normalize(ctx: _Context) -> dict:
    ctx.guard(1000)
    for _ in range(ctx.params.samples):
        gens = _random_gens(ctx.rng, 30, 4)
        spec = SubmonoidSpec.of(gens)
        d, reduced = normalize(spec)
        reach = _coin_dp(gens, 1000)
        for h in range(1001):
            via = h % d == 0 and membership(h // d, reduced)
            _require(membership(h, spec) == via == reach[h], generators=gens, h=h)
    return {"generator_sets": ctx.params.samples}


@check("unary-correspondence", SAMPLED)
def _unary(ctx: _Context) -> dict:
    for _ in range(ctx.params.samples):
        L = _random_numeric_language(ctx.rng, 20, 5)
        words = FiniteLanguage.of("a", ["a" * l for l in L])
        for h in range(1, 65):
            _require(is_l_primitive("a" * h, words) == numeric_is_l_primitive(h, L), language=sorted(L), h=h)
    return {"languages": ctx.params.samples, "max_h": 64}


@check("rem-one-in-L", SAMPLED)
def _one_in_L(ctx: _Context) -> dict:
    ctx.guard(2 * NUMERIC_BOUND)
    for _ in range(ctx.params.samples):
        gens = _random_gens(ctx.rng, 10)
        L = _random_numeric_language(ctx.rng) | {1}
        spec = SubmonoidSpec.of(gens)
        got = classify_lp_count(spec, L)
        expected = ONE if 1 in gens else ZERO
        ok, info = _oracle_agrees(spec, L)
        _require(got.verdict == expected and ok, **info)
    return {"pairs": ctx.params.samples}


@check("thm-3.5-gcd1", SAMPLED)
def _gcd1(ctx: _Context) -> dict:
    ctx.guard(2 * NUMERIC_BOUND)
    done = 0
    while done < ctx.params.samples:
        gens = _random_gens(ctx.rng)
        if gcd(*gens, 0) != 1:
            continue
        done += 1
        L = _random_numeric_language(ctx.rng) - {1} or {2}
        spec = SubmonoidSpec.of(gens)
        ok, info = _oracle_agrees(spec, L)
        _require(classify_lp_count(spec, L).reason == GCD_ONE and ok, **info)
    return {"pairs": done}


@check("thm-3.6-ledger", SAMPLED)
def _ledger(ctx: _Context) -> dict:
    ctx.guard(2 * NUMERIC_BOUND)
    rng = ctx.rng
    tally: dict[str, int] = {}
    for _ in range(ctx.params.numeric_samples):
        d = rng.randint(2, 12)
        gens = sorted({d * rng.randint(1, 50 // d) for _ in range(rng.randint(1, 4))})
        L = _random_numeric_language(rng) - {1} or {d}
        divs = [x for x in range(2, d + 1) if d % x == 0]
        if rng.random() < 0.5:
            L |= set(rng.sample(divs, rng.randint(1, len(divs))))
        spec = SubmonoidSpec.of(gens)
        ok, info = _oracle_agrees(spec, L)
        _require(ok, **info)
        key = str(classify_lp_count(spec, L)).split()[0]
        tally[key] = tally.get(key, 0) + 1
    return {"pairs": ctx.params.numeric_samples, "verdicts": tally}


def _enumeration_witness(ctx: _Context, expectations: list[tuple[str, list[int]]]) -> dict:
    ctx.guard(NUMERIC_BOUND)
    spec = SubmonoidSpec.of(4, 6)
    payload = {}
    for text, expected in expectations:
        got = enumerate_lp_in_H(spec, parse_numeric_language(text), NUMERIC_BOUND)
        _require(got == expected, generators=[4, 6], language=text, bound=NUMERIC_BOUND,
                 expected=expected, got=got)
        payload[text] = got
    return payload


@check("rem-3.7-infiniteL", WITNESS)
def _infinite_L(ctx: _Context) -> dict:
    return _enumeration_witness(ctx, [
        ("finite:4+primes-except:2,5", [4, 10]),
        ("finite:4+primes-except:2,5,7", [4, 10, 14]),
    ])


@check("rem-3.7-repaired-witness", WITNESS)
def _infinite_L_repaired(ctx: _Context) -> dict:
    # 2*5**b and products of the excluded primes need their own blockers in L
    return _enumeration_witness(ctx, [
        ("finite:4,25+primes-except:2,5", [4, 10]),
        ("finite:4,25,35,49+primes-except:2,5,7", [4, 10, 14]),
    ])


# ---------------------------------------------------------------- running

def run_check(check_id: str, params: CheckParams | None = None) -> TheoremCheck:
    """Run one check; raises UnknownCheck, and BudgetExceeded when the universe is too large."""
    if check_id not in _REGISTRY:
        raise UnknownCheck(check_id)
    params = params or CheckParams()
    regime, fn = _REGISTRY[check_id]
    ctx = _Context(check_id, params)
    start = time.perf_counter()
    try:
        payload = fn(ctx)
        status, counterexample = PASS, None
    except CheckFailed as exc:
        payload, status, counterexample = {}, FAIL, exc.counterexample
    return TheoremCheck(check_id, regime, status, asdict(params), params.seed,
                        round(time.perf_counter() - start, 4), counterexample, payload)


def run_all(params: CheckParams | None = None, ids: Iterable[str] | None = None) -> list[TheoremCheck]:
    params = params or CheckParams()
    results = []
    for check_id in ids or check_ids():
        try:
            results.append(run_check(check_id, params))
        except BudgetExceeded as exc:
            regime = _REGISTRY[check_id][0]
            results.append(TheoremCheck(check_id, regime, SKIPPED, asdict(params), params.seed, 0.0,
                                        reason=f"BudgetExceeded: {exc}"))
    return results


def report_text(results: list[TheoremCheck]) -> str:
    lines = [r.line() for r in results]
    counts = {s: sum(r.status == s for r in results) for s in (PASS, FAIL, SKIPPED)}
    lines.append(f"{counts[PASS]} passed, {counts[FAIL]} failed, {counts[SKIPPED]} skipped")
    return "\n".join(lines)


def report_json(results: list[TheoremCheck]) -> str:
    return json.dumps({"checks": [r.to_dict() for r in results],
                       "failed": sum(r.status == FAIL for r in results)}, indent=2, sort_keys=True)
