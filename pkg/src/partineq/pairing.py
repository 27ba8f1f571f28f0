"""Injections from tuples of naturals into the naturals.

Four families:

* ``cantor_pair`` / ``cantor_unpair``: the diagonal enumeration of N^2,
  (m, n) -> C(m+n-1, 2) + m.
* ``cns_rank`` / ``cns_unrank``: sum of C(m_1 + ... + m_j, j) over j, i.e. the
  combinatorial number system applied to the partial sums. For t = 2 this is
  the shifted diagonal map (m, n) -> C(m+n, 2) + m.
* ``spiral_pair`` / ``spiral_unpair``: square shells of N^2.
* ``psi0_rank`` / ``psi_rank``: cube shells of N^t (resp. W^t), points of one
  shell taken in ascending lexicographic order. The shell of side h occupies
  ranks ((h-1)^t, h^t].
"""

from __future__ import annotations

from math import comb, isqrt
from typing import Sequence

from ._intmath import ceil_root
from .errors import DomainError


def _check_positive(*vals):
    for v in vals:
        if v < 1:
            raise DomainError(f"expected a positive integer, got {v}")


def cantor_pair(m: int, n: int) -> int:
    _check_positive(m, n)
    return comb(m + n - 1, 2) + m


def cantor_unpair(v: int) -> tuple[int, int]:
    _check_positive(v)
    # diagonal d = m + n - 1 holds ranks C(d,2)+1 .. C(d,2)+d
    d = (1 + isqrt(8 * v - 7)) // 2
    while comb(d, 2) >= v:
        d -= 1
    while comb(d + 1, 2) < v:
        d += 1
    m = v - comb(d, 2)
    return m, d + 1 - m


def cantor_pair_shifted(m: int, n: int) -> int:
    """(m, n) -> C(m+n, 2) + m; equal to ``cns_rank((m, n))``."""
    _check_positive(m, n)
    return comb(m + n, 2) + m


def cns_rank(m: Sequence[int]) -> int:
    if len(m) < 1:
        raise DomainError("arity must be at least 1")
    # zeros break injectivity: (1, 0) and (0, 2) both give 1
    if any(x < 1 for x in m):
        raise DomainError(f"cns_rank needs strictly positive entries, got {tuple(m)}")
    total, acc = 0, 0
    for j, x in enumerate(m, start=1):
        acc += x
        total += comb(acc, j)
    return total


def _largest_c(value: int, j: int) -> int:
    """Largest c >= 0 with C(c, j) <= value."""
    lo, hi = j - 1, max(j, 1)
    while comb(hi, j) <= value:
        lo, hi = hi, hi * 2
    # comb(lo, j) <= value < comb(hi, j)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, j) <= value:
            lo = mid
        else:
            hi = mid
    return max(lo, 0)


def cns_unrank(v: int, t: int) -> tuple[int, ...] | None:
    """Inverse of ``cns_rank`` at arity t; ``None`` when v has no preimage."""
    _check_positive(v, t)
    sums = []
    rest = v
    for j in range(t, 0, -1):
        c = _largest_c(rest, j)
        sums.append(c)
        rest -= comb(c, j)
    sums.reverse()
    if rest != 0 or sums[0] < 1:
        return None
    return tuple([sums[0]] + [b - a for a, b in zip(sums, sums[1:])])


def spiral_pair(m: int, n: int) -> int:
    _check_positive(m, n)
    if m >= n:
        return (m - 1) ** 2 + 2 * n - 1
    return (n - 1) ** 2 + 2 * m


def spiral_unpair(v: int) -> tuple[int, int]:
    _check_positive(v)
    h = ceil_root(v, 2)
    r = v - (h - 1) ** 2
    if r % 2:
        return h, (r + 1) // 2
    return r // 2, h


def psi0_rank(m: Sequence[int]) -> int:
    t = len(m)
    if t < 1:
        raise DomainError("arity must be at least 1")
    if any(x < 1 for x in m):
        raise DomainError(f"psi0 needs entries >= 1, got {tuple(m)}")
    h = max(m)
    offset = 0
    seen_max = False
    for i, x in enumerate(m):
        r = t - i - 1
        # tuples sharing the prefix, smaller at position i, still inside shell h
        block = h ** r if seen_max else h ** r - (h - 1) ** r
        offset += (x - 1) * block
        seen_max = seen_max or x == h
    return (h - 1) ** t + offset + 1


def psi0_unrank(v: int, t: int) -> tuple[int, ...]:
    _check_positive(v, t)
    h = ceil_root(v, t)
    k = v - (h - 1) ** t - 1
    out = []
    seen_max = False
    for i in range(t):
        r = t - i - 1
        block = h ** r if seen_max else h ** r - (h - 1) ** r
        if block == 0:
            x = h
        else:
            q = k // block
            x = q + 1 if q < h - 1 else h
            k -= (x - 1) * block
        out.append(x)
        seen_max = seen_max or x == h
    if k != 0:
        raise AssertionError(f"psi0_unrank left remainder {k} for v={v}, t={t}")
    return tuple(out)


def psi_rank(m: Sequence[int]) -> int:
    if any(x < 0 for x in m):
        raise DomainError(f"psi needs entries >= 0, got {tuple(m)}")
    return psi0_rank([x + 1 for x in m])


def psi_unrank(v: int, t: int) -> tuple[int, ...]:
    return tuple(x - 1 for x in psi0_unrank(v, t))

