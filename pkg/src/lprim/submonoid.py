"""Finitely generated submonoids of a free monoid.

A finite generator set commutes pairwise exactly when every generator is a
power of one primitive word ``w``; the submonoid is then
``{w**n : n in <exponents>}`` and the counting questions reduce to the
unary case in :mod:`lprim.numeric`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyLanguage, TrivialSubmonoid
from .languages import FiniteLanguage, is_commutative
from .numeric import SubmonoidSpec, classify_lp_count
from .verdict import NO_POWER_OF_ROOT_IN_L, NONCOMMUTATIVE, Classification
from .words import primitive_root


@dataclass(frozen=True)
class WordSubmonoidSpec:
    generators: FiniteLanguage

    def __post_init__(self):
        # the empty word generates nothing new
        if "" in self.generators:
            object.__setattr__(self, "generators", self.generators.nonempty())

    @classmethod
    def of(cls, alphabet, words) -> WordSubmonoidSpec:
        return cls(FiniteLanguage.of(alphabet, words))

    @property
    def alphabet(self):
        return self.generators.alphabet

    def common_root(self) -> str | None:
        """The shared primitive root when the generators commute, else None."""
        if not self.generators or not is_commutative(self.generators):
            return None
        return primitive_root(next(iter(self.generators))).root


def word_membership(w: str, spec: WordSubmonoidSpec) -> bool:
    """Whether ``w`` factors over the generators (prefix DP over positions)."""
    gens = list(spec.generators)
    reachable = [False] * (len(w) + 1)
    reachable[0] = True
    for i in range(len(w)):
        if reachable[i]:
            for g in gens:
                if w.startswith(g, i):
                    reachable[i + len(g)] = True
    return reachable[len(w)]


def classify_primitive_count(spec: WordSubmonoidSpec) -> Classification:
    if not spec.generators:
        return Classification.zero(["H = {eps}"])
    root = spec.common_root()
    if root is None:
        return Classification.infinite(NONCOMMUTATIVE, ["a pair of generators does not commute"])
    trace = [f"generators commute, common primitive root {root}"]
    # only w itself among the powers of w is primitive
    if root in spec.generators:
        trace.append("the root is a generator")
        return Classification.one(root, trace)
    trace.append("the root is not in H")
    return Classification.zero(trace)


def classify_root_count(spec: WordSubmonoidSpec) -> Classification:
    if not spec.generators:
        raise TrivialSubmonoid("no nonempty generators")
    root = spec.common_root()
    if root is None:
        return Classification.infinite(NONCOMMUTATIVE, ["a pair of generators does not commute"])
    return Classification.one(root, [f"all members are powers of {root}"])


def exponents_over(root: str, words) -> list[int]:
    """``j`` for each word equal to ``root**j`` with ``j >= 1``."""
    n = len(root)
    return sorted(len(w) // n for w in words if w and len(w) % n == 0 and root * (len(w) // n) == w)


def classify_lp_count_words(spec: WordSubmonoidSpec, L: FiniteLanguage) -> Classification:
    """Size class of the set of L-primitive members of the submonoid.

    The commutative case is handled by reduction to integers: ``u**k == w**n``
    forces ``u`` to be a power of ``w``, so only ``L`` restricted to the powers
    of ``w`` matters.
    """
    if not L.words:
        raise EmptyLanguage("the language must be nonempty")
    if not spec.generators:
        raise TrivialSubmonoid("no nonempty generators")
    root = spec.common_root()
    if root is None:
        return Classification.infinite(NONCOMMUTATIVE, ["H is noncommutative; its primitive words are L-primitive"])
    E = exponents_over(root, spec.generators)
    M = exponents_over(root, L)
    trace = [f"common root {root}, exponents {E}, L meets powers of the root at {M}"]
    if not M:
        trace.append("no power of the root lies in L, so every nonempty member is L-primitive")
        return Classification.infinite(NO_POWER_OF_ROOT_IN_L, trace)
    inner = classify_lp_count(SubmonoidSpec(frozenset(E)), M)
    trace += inner.case_trace
    if inner.verdict == "one":
        return Classification.one(root * inner.witness, trace)
    return Classification(inner.verdict, None, inner.reason, tuple(trace))
