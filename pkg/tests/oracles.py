"""Brute-force reference implementations, deliberately naive and package-free."""

from __future__ import annotations

from itertools import combinations, product
from math import comb


def partitions_of(n, max_part=None):
    """Every partition of n as a dict part -> frequency."""
    max_part = n if max_part is None else min(max_part, n)
    if n == 0:
        yield {}
        return
    for k in range(max_part, 0, -1):
        for rest in partitions_of(n - k, k):
            d = dict(rest)
            d[k] = d.get(k, 0) + 1
            yield d


def is_power(n, e):
    i = 0
    while i ** e < n:
        i += 1
    return i ** e == n


def member(freq, L, s, V, kind):
    parts = set(freq)
    top = L + s
    t = len(V)
    if kind == "I":
        return s in parts and all(s <= p <= top and p not in V for p in parts)
    if kind == "S":
        return s in parts and all(s <= p <= top for p in parts)
    if not parts or not all(s + 1 <= p <= top for p in parts):
        return False
    if kind == "D":
        return True
    e = t if kind == "DV" else t - 1
    return all(is_power(freq.get(k, 0), e) for k in V)


def grid(kinds=("I", "D", "DV", "E", "S")):
    """(L, s, V, kind) over L in {3,4,5}, s in {1,2}, |V| <= 2."""
    out = []
    for L in (3, 4, 5):
        for s in (1, 2):
            allowed = range(s + 1, L + s + 1)
            Vs = [()] + [(v,) for v in allowed] + list(combinations(allowed, 2))
            for V in Vs:
                for kind in kinds:
                    if kind in ("DV", "P") and not V or kind == "E" and len(V) < 2:
                        continue
                    out.append((L, s, V, kind))
    return out


def representable(a, b, n):
    return any((n - a * x) % b == 0 for x in range(n // a + 1))


def cns_formula(m):
    return sum(comb(sum(m[:j]), j) for j in range(1, len(m) + 1))


def shell_order(t, h_max):
    """Points of [1, h_max]^t listed shell by shell, lexicographically inside a shell."""
    out = []
    for h in range(1, h_max + 1):
        out.extend(sorted(m for m in product(range(1, h + 1), repeat=t) if max(m) == h))
    return out
