"""Truncated power series in q with exact integer coefficients.

The three comparison series are assembled here from Pochhammer-type
primitives and never from :mod:`partineq.counting`, so each pipeline can be
used to check the other.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError


@dataclass(frozen=True)
class Series:
    nmax: int
    coeff: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeff) != self.nmax + 1:
            raise DomainError(f"series of order {self.nmax} needs {self.nmax + 1} coefficients")

    def __getitem__(self, n):
        return self.coeff[n]

    def __mul__(self, other):
        return mul(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "coeff"])
        for n, c in enumerate(self.coeff):
            w.writerow([n, c])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"nmax": self.nmax, "coeff": [str(c) for c in self.coeff]}


def _same_order(a: Series, b: Series) -> None:
    if a.nmax != b.nmax:
        raise DomainError(f"truncation orders differ: {a.nmax} vs {b.nmax}")


def zero(nmax: int) -> Series:
    return Series(nmax, (0,) * (nmax + 1))


def one(nmax: int) -> Series:
    return monomial(0, nmax)


def monomial(k: int, nmax: int, c: int = 1) -> Series:
    out = [0] * (nmax + 1)
    if k <= nmax:
        out[k] = c
    return Series(nmax, tuple(out))


def from_coeffs(coeffs: Sequence[int], nmax: int) -> Series:
    out = list(coeffs[: nmax + 1]) + [0] * max(0, nmax + 1 - len(coeffs))
    return Series(nmax, tuple(out))


def sub(a: Series, b: Series) -> Series:
    _same_order(a, b)
    return Series(a.nmax, tuple(x - y for x, y in zip(a.coeff, b.coeff)))


def add(a: Series, b: Series) -> Series:
    _same_order(a, b)
    return Series(a.nmax, tuple(x + y for x, y in zip(a.coeff, b.coeff)))


def mul(a: Series, b: Series) -> Series:
    """Truncated product; loops over the nonzero terms of the sparser factor."""
    _same_order(a, b)
    nmax = a.nmax
    sa = [(i, c) for i, c in enumerate(a.coeff) if c]
    sb = [(i, c) for i, c in enumerate(b.coeff) if c]
    if len(sa) > len(sb):
        sa, sb, b = sb, sa, a
    dense = b.coeff
    out = [0] * (nmax + 1)
    for i, c in sa:
        for n in range(i, nmax + 1):
            out[n] += c * dense[n - i]
    return Series(nmax, tuple(out))


def div_one_minus(a: Series, k: int) -> Series:
    """a / (1 - q^k)."""
    if k < 1:
        raise DomainError("k must be >= 1")
    out = list(a.coeff)
    for n in range(k, a.nmax + 1):
        out[n] += out[n - k]
    return Series(a.nmax, tuple(out))


def one_minus_q_product(ks: Sequence[int], nmax: int) -> Series:
    """prod_k (1 - q^k) as a truncated series."""
    poly = {0: 1}
    for k in ks:
        nxt = dict(poly)
        for e, c in poly.items():
            nxt[e + k] = nxt.get(e + k, 0) - c
        poly = nxt
    out = [0] * (nmax + 1)
    for e, c in poly.items():
        if e <= nmax:
            out[e] += c
    return Series(nmax, tuple(out))


def inv_pochhammer(a_exp: int, L_terms: int, nmax: int) -> Series:
    """1 / (q^a_exp; q)_L_terms: partitions into parts a_exp .. a_exp + L_terms - 1."""
    if a_exp < 1 or L_terms < 0 or nmax < 0:
        raise DomainError("need a_exp >= 1, L_terms >= 0, nmax >= 0")
    out = one(nmax)
    for j in range(L_terms):
        out = div_one_minus(out, a_exp + j)
    return out


def power_freq_series(k: int, t: int, nmax: int) -> Series:
    """sum_{i >= 0} q^(k * i^t)."""
    if k < 1 or t < 1 or nmax < 0:
        raise DomainError("need k >= 1, t >= 1, nmax >= 0")
    out = [0] * (nmax + 1)
    i = 0
    while k * i ** t <= nmax:
        out[k * i ** t] = 1
        i += 1
    return Series(nmax, tuple(out))


def _check_params(L, s, V, nmax):
    if L < 1 or s < 1 or nmax < 0:
        raise DomainError("need L, s >= 1 and nmax >= 0")
    if any(not (s + 1 <= k <= L + s) for k in V):
        raise DomainError(f"V must lie in [{s + 1}, {L + s}]")


def _smallest_part_s(L, s, V, nmax) -> Series:
    # q^s prod_{k in V}(1 - q^k) / (q^s; q)_{L+1}
    return mul(mul(monomial(s, nmax), one_minus_q_product(V, nmax)), inv_pochhammer(s, L + 1, nmax))


def _power_frequency_product(V, nmax) -> Series:
    out = one(nmax)
    for k in V:
        out = mul(out, power_freq_series(k, len(V), nmax))
    return out


def h_series(L: int, s: int, V: Sequence[int], nmax: int) -> Series:
    _check_params(L, s, V, nmax)
    first = _smallest_part_s(L, s, V, nmax)
    second = sub(inv_pochhammer(s + 1, L, nmax), one(nmax))
    return sub(first, second)


def hprime_series(L: int, s: int, V: Sequence[int], nmax: int) -> Series:
    _check_params(L, s, V, nmax)
    first = _smallest_part_s(L, s, V, nmax)
    second = mul(mul(one_minus_q_product(V, nmax), _power_frequency_product(V, nmax)),
                 inv_pochhammer(s + 1, L, nmax))
    return sub(first, second)


def hdoubleprime_series(L: int, s: int, V: Sequence[int], nmax: int) -> Series:
    _check_params(L, s, V, nmax)
    first = mul(monomial(s, nmax), inv_pochhammer(s, L + 1, nmax))
    second = mul(_power_frequency_product(V, nmax), inv_pochhammer(s + 1, L, nmax))
    return sub(first, second)


SERIES = {"H": h_series, "Hprime": hprime_series, "Hdoubleprime": hdoubleprime_series}


@dataclass(frozen=True)
class SignReport:
    start: int
    nmax: int
    last_negative: int | None
    last_positive: int | None
    terminal_sign: int | None        # sign of the final run of nonzero coefficients
    nonpositive_from: int | None      # coefficients are <= 0 on [nonpositive_from, nmax]
    nonnegative_from: int | None

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def _suffix_start(values, pred, start):
    n = len(values)
    i = n
    while i > start and pred(values[i - 1]):
        i -= 1
    return i if i < n else None


def sign_scan(x: Series, start: int = 0) -> SignReport:
    """Where the coefficients on [start, nmax] last change sign."""
    c = x.coeff
    if not 0 <= start <= x.nmax:
        raise DomainError(f"start {start} outside [0, {x.nmax}]")
    last_neg = last_pos = None
    for n in range(start, x.nmax + 1):
        if c[n] < 0:
            last_neg = n
        elif c[n] > 0:
            last_pos = n
    if last_neg is None and last_pos is None:
        terminal = None
    else:
        terminal = -1 if (last_pos is None or (last_neg is not None and last_neg > last_pos)) else 1
    return SignReport(
        start=start,
        nmax=x.nmax,
        last_negative=last_neg,
        last_positive=last_pos,
        terminal_sign=terminal,
        nonpositive_from=_suffix_start(c, lambda v: v <= 0, start),
        nonnegative_from=_suffix_start(c, lambda v: v >= 0, start),
    )
