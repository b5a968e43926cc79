"""Brute-force oracles for the test suite.

Nothing here calls into lprim: roots come from trying every prefix, monoid
membership from a plain coin-change table, submonoid members from repeated
concatenation.
"""

from itertools import product


def words_up_to(letters, n, nonempty=True):
    for k in range(1 if nonempty else 0, n + 1):
        for t in product(letters, repeat=k):
            yield "".join(t)


def factorizations(w):
    """All (u, k) with u**k == w."""
    n = len(w)
    return [(w[:p], n // p) for p in range(1, n + 1) if n % p == 0 and w[:p] * (n // p) == w]


def is_primitive(w):
    return len(factorizations(w)) == 1


def primitive_pairs(w):
    return [(u, k) for u, k in factorizations(w) if is_primitive(u)]


def period(w):
    return next(p for p in range(1, len(w) + 1) if all(w[i] == w[i + p] for i in range(len(w) - p)))


def is_lp(w, member):
    return not any(k >= 2 and u in member for u, k in factorizations(w))


def lp_roots(w, member, letters):
    """Try every u over the alphabet whose length divides |w|."""
    n = len(w)
    out = set()
    for d in range(1, n + 1):
        if n % d == 0:
            for t in product(letters, repeat=d):
                u = "".join(t)
                if u * (n // d) == w and is_lp(u, member):
                    out.add(u)
    return out


def closure(gens, n):
    gens = [g for g in gens if g]
    seen, frontier = {""}, [""]
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


def coin_table(gens, bound):
    reach = [False] * (bound + 1)
    reach[0] = True
    for g in sorted(set(gens)):
        for h in range(g, bound + 1):
            if reach[h - g]:
                reach[h] = True
    return reach


def lp_numbers(gens, member, bound):
    """L-primitive elements of <gens> in [1, bound], by trial of every cofactor."""
    reach = coin_table(gens, bound)
    return [h for h in range(1, bound + 1)
            if reach[h] and not any(h % l == 0 and h // l >= 2 and member(l) for l in range(1, h // 2 + 1))]
