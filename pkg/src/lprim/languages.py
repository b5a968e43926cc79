"""Finite languages, L-primitivity and L-primitive roots.

A language argument ``L`` may be a :class:`FiniteLanguage` (taken literally)
or one of the views :class:`Explicit`, :class:`PowClosure` and
:class:`ComplementOf`, which describe infinite languages through a decidable
membership test.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Union

from .errors import BudgetExceeded, ParseError, PreconditionViolated
from .words import (
    EPS_TOKEN,
    Alphabet,
    _require_nonempty,
    format_word,
    primitive_root,
    root_powers,
)

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class FiniteLanguage:
    alphabet: Alphabet
    words: frozenset[str]

    def __post_init__(self):
        for w in self.words:
            for c in w:
                if c not in self.alphabet:
                    raise ParseError(f"letter {c!r} in {w!r} is not in alphabet {self.alphabet}", w)

    @classmethod
    def of(cls, alphabet: Alphabet | str, words: Iterable[str] = ()) -> FiniteLanguage:
        if isinstance(alphabet, str):
            alphabet = Alphabet.of(alphabet)
        return cls(alphabet, frozenset(words))

    def __iter__(self) -> Iterator[str]:
        return iter(self.alphabet.sorted(self.words))

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return w in self.words

    def __le__(self, other: FiniteLanguage) -> bool:
        return self.words <= other.words

    def __str__(self):
        return "{" + ", ".join(format_word(w) for w in self) + "}"

    def with_words(self, words: Iterable[str]) -> FiniteLanguage:
        return FiniteLanguage(self.alphabet, frozenset(words))

    def nonempty(self) -> FiniteLanguage:
        return self.with_words(self.words - {""})

    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def to_text(self) -> str:
        lines = [f"alphabet: {self.alphabet}"]
        lines += [format_word(w) for w in self]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Explicit:
    language: FiniteLanguage

    @property
    def alphabet(self):
        return self.language.alphabet

    def __contains__(self, w):
        return w in self.language


@dataclass(frozen=True)
class PowClosure:
    """``pow(F)``: every ``u**k`` with ``u`` in ``F`` and ``k >= 1``."""

    language: FiniteLanguage

    @property
    def alphabet(self):
        return self.language.alphabet

    def __contains__(self, w):
        if not w:
            return "" in self.language
        return any(u in self.language for u, _ in root_powers(w))


@dataclass(frozen=True)
class ComplementOf:
    language: FiniteLanguage

    @property
    def alphabet(self):
        return self.language.alphabet

    def __contains__(self, w):
        return w not in self.language


LanguageView = Union[FiniteLanguage, Explicit, PowClosure, ComplementOf]

VIEWS = {"explicit": Explicit, "pow": PowClosure, "complement": ComplementOf}


def is_l_primitive(w: str, L: LanguageView) -> bool:
    """True iff ``w`` is not ``u**k`` for any ``u`` in ``L`` and ``k >= 2``."""
    _require_nonempty(w)
    return not any(k >= 2 and u in L for u, k in root_powers(w))


def lp_words_in(X: FiniteLanguage, L: LanguageView) -> FiniteLanguage:
    return X.with_words(w for w in X.words if w and is_l_primitive(w, L))


def l_primitive_roots(w: str, L: LanguageView) -> FiniteLanguage:
    _require_nonempty(w)
    return FiniteLanguage(L.alphabet, frozenset(u for u, _ in root_powers(w) if is_l_primitive(u, L)))


def l_root_of_language(X: FiniteLanguage, L: LanguageView) -> FiniteLanguage:
    roots: set[str] = set()
    for w in X.words:
        if w:
            roots |= l_primitive_roots(w, L).words
    return X.with_words(roots)


def root_of_language(X: FiniteLanguage) -> FiniteLanguage:
    return X.with_words(primitive_root(w).root for w in X.words if w)


def is_prefix_set(X: FiniteLanguage) -> bool:
    # In shortlex order a prefix always precedes its extensions.
    words = list(X)
    return not any(v.startswith(u) for i, u in enumerate(words) for v in words[i + 1:])


def is_commutative(X: FiniteLanguage) -> bool:
    words = list(X)
    return all(u + v == v + u for i, u in enumerate(words) for v in words[i + 1:])


def descend_to_lp_root(w: str, L: FiniteLanguage) -> tuple[str, int]:
    """Walk down from ``w`` to an L-primitive ``x`` in ``L`` with ``x**m == w``.

    Each step replaces the current word by the shortest ``u`` in ``L`` of which
    it is a proper power, so the walk is deterministic.
    """
    if "" in L:
        raise PreconditionViolated("the language must not contain the empty word")
    if w not in L:
        raise PreconditionViolated(f"{format_word(w)} is not a member of the language")
    x, m = w, 1
    while True:
        below = [(u, k) for u, k in root_powers(x) if k >= 2 and u in L]
        if not below:
            return x, m
        u, k = below[0]
        x, m = u, m * k


def lp_set_up_to(L: LanguageView, n: int, alphabet: Alphabet | None = None, *,
                 budget: int = DEFAULT_BUDGET) -> FiniteLanguage:
    """All L-primitive words of length 1..n."""
    if n < 1:
        raise ValueError("length bound must be positive")
    alphabet = alphabet or L.alphabet
    if alphabet.count_up_to(n) > budget:
        raise BudgetExceeded(f"{alphabet.count_up_to(n)} words of length <= {n} exceed budget {budget}")
    return FiniteLanguage(alphabet, frozenset(
        w for w in alphabet.words_up_to(n, nonempty=True) if is_l_primitive(w, L)))


def parse_language(text: str, source: str = "<string>") -> FiniteLanguage:
    """Parse the line format: ``alphabet: <symbols>`` then one word per line."""
    alphabet = None
    words = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if alphabet is None:
            head, sep, symbols = line.partition(":")
            if not sep or head.strip() != "alphabet":
                raise ParseError(f"{source}:{lineno}: expected 'alphabet: <symbols>'", line)
            alphabet = Alphabet.of(symbols)
            continue
        if " " in line:
            raise ParseError(f"{source}:{lineno}: one word per line", line)
        words.append(alphabet.word(line))
    if alphabet is None:
        raise ParseError(f"{source}: missing alphabet line", source)
    return FiniteLanguage(alphabet, frozenset(words))


def load_language(path: str | Path) -> FiniteLanguage:
    path = Path(path)
    return parse_language(path.read_text(encoding="utf-8"), str(path))


__all__ = [
    "EPS_TOKEN", "FiniteLanguage", "Explicit", "PowClosure", "ComplementOf", "LanguageView",
    "is_l_primitive", "lp_words_in", "l_primitive_roots", "l_root_of_language",
    "root_of_language", "is_prefix_set", "is_commutative", "descend_to_lp_root",
    "lp_set_up_to", "parse_language", "load_language",
]
