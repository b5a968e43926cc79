"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import random
import time
from itertools import combinations
from math import gcd

import pytest

import oracles
from lprim import (
    ComplementOf,
    FiniteLanguage,
    SubmonoidSpec,
    WordSubmonoidSpec,
    classify_lp_count,
    classify_primitive_count,
    enumerate_lp_in_H,
    frobenius,
    is_l_primitive,
    is_numerical_monoid,
    is_prefix_set,
    is_primitive,
    l_root_of_language,
    lp_words_in,
    minimal_generators,
    parse_numeric_language,
    primitive_root,
)
from lprim.harness import CheckParams, run_all

REGISTERED = [
    "prop-1.1-unique-root", "rem-2.3-extremes", "prop-2.4-antitone", "cor-2.5-prim-implies-lp",
    "thm-3.1-nonempty", "thm-prefix", "rem-prefix-converse", "rem-2.9-root-nonempty",
    "thm-llp-i", "thm-llp-ii", "thm-llp-iii", "cor-llp", "rem-llp-ii-converse", "thm-pow-equiv",
    "thm-3.3-trichotomy", "thm-3.5-gcd1", "thm-3.6-ledger", "rem-3.7-infiniteL", "rem-3.8-noncomm",
]


@pytest.fixture
def emit(capsys):
    def _emit(criterion, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance {criterion}] {'PASS' if ok else 'FAIL'}: {detail}")
    return _emit


def test_criterion_1_worked_examples(emit):
    start = time.perf_counter()
    H = SubmonoidSpec.of(4, 6)
    parts = {}
    for text, expected in [("finite:4+primes-except:2,5", [4, 10]), ("finite:4+primes-except:2,5,7", [4, 10, 14])]:
        got = enumerate_lp_in_H(H, parse_numeric_language(text), 10_000)
        parts[f"enumerate <4,6> {text}"] = (got == expected, f"expected {expected}, got {got}")

    L = FiniteLanguage.of("ab", ["a", "b", "aaaaaa"])
    ok = (lp_words_in(L, L).words == {"a", "b"} and l_root_of_language(L, L).words == {"a", "b"}
          and "aa" in ComplementOf(L) and "aaaaaa" not in ComplementOf(L))
    parts["L = {a,b,a^6}"] = (ok, "L_{L-p} = l-root = {a,b}; a^6 = (aa)^3 with aa in L^c, a^6 not in L^c")

    L = FiniteLanguage.of("ab", ["a", "ab"])
    parts["L = {a,ab}"] = (lp_words_in(L, L) == L and not is_prefix_set(L), "L = L_{L-p}, not a prefix set")

    abab = FiniteLanguage.of("ab", ["abab"])
    parts["abab"] = (is_l_primitive("abab", abab) and not is_primitive("abab"), "L-primitive, not primitive")

    elapsed = time.perf_counter() - start
    parts["time < 5 s"] = (elapsed < 5, f"{elapsed:.2f}s")
    failed = [k for k, (ok, _) in parts.items() if not ok]
    emit(1, not failed, "; ".join(f"{k}: {'ok' if ok else 'MISMATCH'} ({d})" for k, (ok, d) in parts.items()))
    assert not failed, failed


def test_criterion_2_root_oracle(emit):
    start = time.perf_counter()
    words = list(oracles.words_up_to("a", 12)) + list(oracles.words_up_to("ab", 12))
    mismatches = [w for w in words if oracles.primitive_pairs(w) != [tuple(primitive_root(w))]]
    elapsed = time.perf_counter() - start
    ok = not mismatches and len(words) == 12 + 8190 and elapsed < 30
    emit(2, ok, f"{len(words)} words, {len(mismatches)} mismatches, {elapsed:.2f}s")
    assert ok, mismatches[:5]


def test_criterion_3_theorem_suite(emit):
    start = time.perf_counter()
    failures = {}
    for seed in range(1, 6):
        results = {r.id: r for r in run_all(CheckParams(seed=seed))}
        missing = [i for i in REGISTERED if i not in results]
        assert not missing, missing
        for i in REGISTERED:
            if results[i].status != "pass":
                failures.setdefault(i, []).append(seed)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300
    emit(3, ok, f"seeds 1-5, {len(REGISTERED)} ids, non-passing {failures or 'none'}, {elapsed:.1f}s")
    assert ok, failures


def test_criterion_4_classification_ledger(emit):
    start = time.perf_counter()
    rng = random.Random(1)
    disagreements = []
    tally = {"zero": 0, "one": 0, "infinite": 0}
    for _ in range(500):
        gens = rng.sample(range(1, 51), rng.randint(1, 4))
        L = rng.sample(range(1, 51), rng.randint(1, 6))
        spec = SubmonoidSpec.of(gens)
        got = classify_lp_count(spec, L)
        tally[got.verdict] += 1
        small = enumerate_lp_in_H(spec, L, 10_000)
        if got.verdict == "zero":
            ok = not small
        elif got.verdict == "one":
            ok = small == [got.witness]
        else:
            ok = len(small) >= 10 and len(enumerate_lp_in_H(spec, L, 20_000)) > len(small)
        if not ok:
            disagreements.append((sorted(gens), sorted(L), str(got)))
    elapsed = time.perf_counter() - start
    ok = not disagreements and elapsed < 120
    emit(4, ok, f"500 pairs {tally}, {len(disagreements)} disagreements, {elapsed:.1f}s")
    assert ok, disagreements[:5]


def test_criterion_5_primitive_trichotomy(emit):
    start = time.perf_counter()
    rng = random.Random(1)
    disagreements = []
    tally = {"zero": 0, "one": 0, "infinite": 0}
    for _ in range(200):
        gens = {"".join(rng.choice("ab") for _ in range(rng.randint(1, 4))) for _ in range(rng.randint(1, 4))}
        got = classify_primitive_count(WordSubmonoidSpec.of("ab", gens))
        tally[got.verdict] += 1
        at8 = {w for w in oracles.closure(gens, 8) if w and oracles.is_primitive(w)}
        if got.verdict == "zero":
            ok = not at8
        elif got.verdict == "one":
            ok = at8 == {got.witness}
        else:
            at10 = {w for w in oracles.closure(gens, 10) if w and oracles.is_primitive(w)}
            ok = len(at10) > len(at8)
        if not ok:
            disagreements.append((sorted(gens), str(got)))
    elapsed = time.perf_counter() - start
    ok = not disagreements and elapsed < 180
    emit(5, ok, f"200 generator sets {tally}, disagreements {disagreements or 'none'}, {elapsed:.1f}s")
    assert ok, disagreements


def test_criterion_6_numerical_monoids(emit):
    start = time.perf_counter()
    problems = []
    count = 0
    for size in (1, 2, 3):
        for gens in combinations(range(1, 21), size):
            count += 1
            spec = SubmonoidSpec.of(gens)
            top = max(gens)
            table = oracles.coin_table(gens, top * top + 2 * top)
            run, bounded_complement = 0, False
            for flag in table:
                run = run + 1 if flag else 0
                if run >= min(gens):
                    bounded_complement = True
                    break
            if is_numerical_monoid(spec) != bounded_complement:
                problems.append(("gcd criterion", gens))
            if bounded_complement:
                f = frobenius(spec)
                if not ((f < 0 or not table[f]) and all(table[f + 1: f + 2 + top])):
                    problems.append(("frobenius", gens))
            else:
                d = gcd(*gens) if size > 1 else gens[0]
                members = oracles.coin_table(gens, 1000)
                if any(members[h] and gcd(h, d) == 1 for h in range(1, 1001)):
                    problems.append(("infinite complement", gens))
            Y = minimal_generators(spec)
            ys = Y.sorted()
            limit = 4 * max(ys) ** 2
            full = oracles.coin_table(gens, limit)
            if minimal_generators(Y) != Y or oracles.coin_table(ys, limit) != full:
                problems.append(("minimal generators", gens))
            for y in ys:
                rest = [x for x in ys if x != y]
                if rest and oracles.coin_table(rest, limit) == full:
                    problems.append(("redundant generator", gens, y))
    table = oracles.coin_table((3, 5), 15)
    dp_frobenius = max(h for h in range(16) if not table[h])
    if not (dp_frobenius == 7 == frobenius(SubmonoidSpec.of(3, 5))):
        problems.append(("frobenius(3,5)", dp_frobenius))
    elapsed = time.perf_counter() - start
    ok = not problems and count == 1350 and elapsed < 30
    emit(6, ok, f"{count} generator sets, {len(problems)} problems, frobenius(3,5) = {dp_frobenius}, {elapsed:.1f}s")
    assert ok, problems[:5]
