"""Words over a finite alphabet: periods, primitive roots, powers.

Words are plain ``str`` values; the empty string is the empty word.  An
:class:`Alphabet` validates text into words and fixes the letter order used
for shortlex output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .errors import EmptyWord, ParseError

EPSILON = ""
EPS_TOKEN = "eps"


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise ParseError("alphabet must be nonempty")
        for c in self.letters:
            if len(c) != 1 or c.isspace():
                raise ParseError(f"invalid alphabet symbol {c!r}", c)
        if len(set(self.letters)) != len(self.letters):
            raise ParseError("duplicate symbol in alphabet", "".join(self.letters))

    @classmethod
    def of(cls, symbols: str | Iterable[str]) -> Alphabet:
        """Build from ``"ab"``, ``"a b"``, ``"a,b"`` or an iterable of letters."""
        if isinstance(symbols, str):
            symbols = [c for c in symbols if not c.isspace() and c != ","]
        return cls(tuple(symbols))

    @classmethod
    def infer(cls, *words: str) -> Alphabet:
        """Alphabet of the letters occurring in ``words``, in sorted order."""
        letters = sorted(set("".join(words)))
        return cls(tuple(letters or ["a"]))

    def __len__(self):
        return len(self.letters)

    def __contains__(self, letter):
        return letter in self.letters

    def __str__(self):
        return "".join(self.letters)

    def word(self, text: str) -> str:
        """Parse ``text`` into a word; ``eps`` is the empty word."""
        text = text.strip()
        if text == EPS_TOKEN:
            return EPSILON
        for c in text:
            if c not in self.letters:
                raise ParseError(f"letter {c!r} in {text!r} is not in alphabet {self}", text)
        return text

    def shortlex_key(self, w: str) -> tuple[int, tuple[int, ...]]:
        return len(w), tuple(self.letters.index(c) for c in w)

    def sorted(self, words: Iterable[str]) -> list[str]:
        return sorted(words, key=self.shortlex_key)

    def words_of_length(self, n: int) -> Iterator[str]:
        for t in product(self.letters, repeat=n):
            yield "".join(t)

    def words_up_to(self, n: int, *, nonempty: bool = False) -> Iterator[str]:
        """All words of length <= n in shortlex order."""
        for k in range(1 if nonempty else 0, n + 1):
            yield from self.words_of_length(k)

    def count_up_to(self, n: int) -> int:
        return sum(len(self) ** k for k in range(n + 1))


class RootDecomposition(NamedTuple):
    root: str
    exponent: int

    def __str__(self):
        return f"{self.root}^{self.exponent}"


def format_word(w: str) -> str:
    return w if w else EPS_TOKEN


def _require_nonempty(w: str):
    if not w:
        raise EmptyWord("operation is defined on nonempty words only")


def border_array(w: str) -> list[int]:
    """``b[i]`` is the length of the longest proper border of ``w[:i+1]``."""
    b = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k > 0 and w[i] != w[k]:
            k = b[k - 1]
        if w[i] == w[k]:
            k += 1
        b[i] = k
    return b


def smallest_period(w: str) -> int:
    _require_nonempty(w)
    return len(w) - border_array(w)[-1]


@lru_cache(maxsize=1 << 16)
def primitive_root(w: str) -> RootDecomposition:
    _require_nonempty(w)
    n = len(w)
    p = smallest_period(w)
    if n % p == 0:
        return RootDecomposition(w[:p], n // p)
    return RootDecomposition(w, 1)


def is_primitive(w: str) -> bool:
    return primitive_root(w).exponent == 1


def power(u: str, k: int) -> str:
    if k < 0:
        raise ValueError("exponent must be a natural number")
    return u * k


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in increasing order."""
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


@lru_cache(maxsize=1 << 16)
def root_powers(w: str) -> tuple[tuple[str, int], ...]:
    """Every ``(u, k)`` with ``u**k == w``, shortest ``u`` first.

    These are exactly ``(root**j, e // j)`` for the divisors ``j`` of the
    exponent ``e`` of ``w``.
    """
    root, e = primitive_root(w)
    return tuple((root * j, e // j) for j in divisors(e))
