"""The unary case: submonoids of (N, +) and L-primitive elements in them.

Under ``a**k -> k`` a proper power ``u**k`` of a unary word becomes a proper
multiple ``k * l``, so an integer ``h`` is L-primitive when no member of
``L`` divides it with cofactor at least 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd, isqrt
from typing import Iterable

from .errors import EmptyLanguage, NotNumerical, ParseError, PreconditionViolated, TrivialSubmonoid
from .verdict import GCD_ONE, NO_DIVISOR_OF_D, Classification
from .words import divisors


@dataclass(frozen=True)
class SubmonoidSpec:
    """Finite generator set of the submonoid ``<generators>`` of N."""

    generators: frozenset[int]

    def __post_init__(self):
        if not self.generators:
            raise TrivialSubmonoid("no generators: the submonoid is {0}")
        bad = [g for g in self.generators if not isinstance(g, int) or g < 1]
        if bad:
            raise PreconditionViolated(f"generators must be positive integers, got {bad[0]!r}")

    @classmethod
    def of(cls, *gens: int | Iterable[int]) -> SubmonoidSpec:
        if len(gens) == 1 and not isinstance(gens[0], int):
            gens = tuple(gens[0])
        return cls(frozenset(gens))

    def sorted(self) -> list[int]:
        return sorted(self.generators)

    def __str__(self):
        return ",".join(map(str, self.sorted()))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % p for p in range(3, isqrt(n) + 1, 2))


def prime_sieve(n: int) -> bytearray:
    """``flags[k] == 1`` iff ``k`` is prime, for ``0 <= k <= n``."""
    flags = bytearray([1]) * (n + 1)
    flags[:2] = b"\x00\x00"[: min(2, n + 1)]
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            flags[p * p::p] = bytes(len(range(p * p, n + 1, p)))
    return flags


@dataclass(frozen=True)
class NumericLanguage:
    """``finite`` together with, optionally, every prime outside ``excluded_primes``.

    ``excluded_primes is None`` switches the primes part off.
    """

    finite: frozenset[int] = frozenset()
    excluded_primes: frozenset[int] | None = None

    def __post_init__(self):
        bad = [x for x in self.finite if x < 1]
        if bad:
            raise PreconditionViolated(f"language members must be positive, got {bad[0]}")
        for p in self.excluded_primes or ():
            if not is_prime(p):
                raise PreconditionViolated(f"excluded value {p} is not prime")

    @classmethod
    def of(cls, finite: Iterable[int] = (), excluded_primes: Iterable[int] | None = None):
        return cls(frozenset(finite), None if excluded_primes is None else frozenset(excluded_primes))

    @property
    def is_finite(self) -> bool:
        return self.excluded_primes is None

    def __contains__(self, h):
        if h in self.finite:
            return True
        return self.excluded_primes is not None and h not in self.excluded_primes and is_prime(h)

    def __str__(self):
        parts = []
        if self.finite or self.is_finite:
            parts.append("finite:" + ",".join(map(str, sorted(self.finite))))
        if not self.is_finite:
            parts.append("primes-except:" + ",".join(map(str, sorted(self.excluded_primes))))
        return "+".join(parts)

    def flags_up_to(self, n: int) -> bytearray:
        """Membership flags for ``0..n``."""
        flags = prime_sieve(n) if not self.is_finite else bytearray(n + 1)
        for p in self.excluded_primes or ():
            if p <= n:
                flags[p] = 0
        for x in self.finite:
            if x <= n:
                flags[x] = 1
        return flags


def gcd_of(spec: SubmonoidSpec) -> int:
    return reduce(gcd, spec.generators)


def is_numerical_monoid(spec: SubmonoidSpec) -> bool:
    return gcd_of(spec) == 1


def normalize(spec: SubmonoidSpec) -> tuple[int, SubmonoidSpec]:
    d = gcd_of(spec)
    return d, SubmonoidSpec(frozenset(g // d for g in spec.generators))


@lru_cache(maxsize=512)
def _reach(gens: tuple[int, ...]) -> tuple[int, int]:
    """Members of ``<gens>`` (gcd 1) in ``[0, limit]`` as a bitset, and ``limit``.

    ``limit = max(gens)**2`` exceeds the Frobenius number, so everything above
    it is a member.
    """
    limit = max(gens) ** 2
    mask = (1 << (limit + 1)) - 1
    bits = 1
    for g in gens:
        # after shifting by g, 2g, 4g, ... every multiple of g up to limit is covered
        shift = g
        while shift <= limit:
            bits |= (bits << shift) & mask
            shift *= 2
    return bits, limit


def _reduced_reach(spec: SubmonoidSpec) -> tuple[int, int, int]:
    d, reduced = normalize(spec)
    bits, limit = _reach(tuple(reduced.sorted()))
    return d, bits, limit


def membership(h: int, spec: SubmonoidSpec) -> bool:
    if h < 0:
        return False
    d, bits, limit = _reduced_reach(spec)
    if h % d:
        return False
    q = h // d
    return q > limit or bool(bits >> q & 1)


def member_flags(spec: SubmonoidSpec, bound: int) -> bytearray:
    """``flags[h] == 1`` iff ``h`` is in the submonoid, for ``0 <= h <= bound``."""
    d, bits, limit = _reduced_reach(spec)
    flags = bytearray(bound + 1)
    for q in range(bound // d + 1):
        if q > limit or bits >> q & 1:
            flags[q * d] = 1
    return flags


def frobenius(spec: SubmonoidSpec) -> int:
    """Largest natural number outside a numerical monoid; -1 when it is all of N."""
    if not is_numerical_monoid(spec):
        raise NotNumerical(f"gcd of {spec} is {gcd_of(spec)}, the complement is infinite")
    bits, limit = _reach(tuple(spec.sorted()))
    gaps = ~bits & ((1 << (limit + 1)) - 1)
    return gaps.bit_length() - 1


def minimal_generators(spec: SubmonoidSpec) -> SubmonoidSpec:
    d, reduced = normalize(spec)
    kept: list[int] = []
    for g in reduced.sorted():
        if not kept or not membership(g, SubmonoidSpec(frozenset(kept))):
            kept.append(g)
    return SubmonoidSpec(frozenset(g * d for g in kept))


def numeric_is_l_primitive(h: int, L: NumericLanguage | Iterable[int]) -> bool:
    if h < 1:
        raise PreconditionViolated("L-primitivity is defined for positive integers")
    if not isinstance(L, NumericLanguage):
        L = NumericLanguage.of(L)
    return not any(l in L for l in divisors(h)[:-1])


def enumerate_lp_in_H(spec: SubmonoidSpec, L: NumericLanguage | Iterable[int], bound: int) -> list[int]:
    """L-primitive members of the submonoid in ``[1, bound]``, ascending."""
    if bound < 1:
        raise ValueError("bound must be positive")
    if not isinstance(L, NumericLanguage):
        L = NumericLanguage.of(L)
    in_h = member_flags(spec, bound)
    in_l = L.flags_up_to(bound // 2)
    blocked = bytearray(bound + 1)
    for l in range(1, bound // 2 + 1):
        if in_l[l]:
            blocked[2 * l::l] = b"\x01" * len(range(2 * l, bound + 1, l))
    return [h for h in range(1, bound + 1) if in_h[h] and not blocked[h]]


def classify_lp_count(spec: SubmonoidSpec, L: NumericLanguage | Iterable[int]) -> Classification:
    """Exact size class of the set of L-primitive elements of ``<spec>`` for finite ``L``."""
    if isinstance(L, NumericLanguage):
        if not L.is_finite:
            raise PreconditionViolated("classification needs a finite language; use enumeration instead")
        L = L.finite
    L = frozenset(L)
    if not L:
        raise EmptyLanguage("the language must be nonempty")
    if min(L) < 1:
        raise PreconditionViolated("language members must be positive")

    trace = []
    if 1 in L:
        trace.append("1 in L")
        if membership(1, spec):
            trace.append("1 in H")
            return Classification.one(1, trace)
        trace.append("1 not in H")
        return Classification.zero(trace)

    Y = minimal_generators(spec)
    d = gcd_of(Y)
    trace.append(f"minimal generators {Y}, d = {d}")
    if d == 1:
        trace.append("d = 1: H is numerical and holds infinitely many primes")
        return Classification.infinite(GCD_ONE, trace)
    dividing = sorted(l for l in L if d % l == 0)
    if not dividing:
        trace.append("no l in L divides d: p*d is L-primitive for every large prime p in H/d")
        return Classification.infinite(NO_DIVISOR_OF_D, trace)
    trace.append(f"members of L dividing d: {dividing}")
    if d not in L:
        trace.append("d not in L")
        return Classification.zero(trace)
    if not membership(d, spec):
        trace.append("d in L, d not in H")
        return Classification.zero(trace)
    if len(dividing) > 1:
        trace.append("d in L, d in H, a proper divisor of d is in L")
        return Classification.zero(trace)
    trace.append("d in L, d in H, no proper divisor of d in L")
    return Classification.one(d, trace)


def _parse_ints(text: str, what: str) -> list[int]:
    if not text.strip():
        return []
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise ParseError(f"invalid {what} {tok!r}", tok)
        if int(tok) == 0:
            raise ParseError(f"0 is not allowed as a {what}", tok)
        out.append(int(tok))
    return out


def parse_generators(text: str) -> SubmonoidSpec:
    gens = _parse_ints(text, "generator")
    if not gens:
        raise ParseError("at least one generator is required", text)
    return SubmonoidSpec(frozenset(gens))


def parse_numeric_language(text: str) -> NumericLanguage:
    """Parse ``finite:4,10``, ``primes-except:2,5`` or both joined by ``+``."""
    finite: list[int] = []
    excluded = None
    for part in text.split("+"):
        kind, sep, body = part.strip().partition(":")
        if not sep:
            raise ParseError(f"invalid language term {part!r}", part)
        if kind == "finite":
            finite += _parse_ints(body, "language member")
        elif kind == "primes-except":
            excluded = _parse_ints(body, "excluded prime")
            for p in excluded:
                if not is_prime(p):
                    raise ParseError(f"excluded value {p} is not prime", str(p))
        else:
            raise ParseError(f"unknown language kind {kind!r}", kind)
    return NumericLanguage.of(finite, excluded)
