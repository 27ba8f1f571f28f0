"""Per-weight class counts.

``count_series`` multiplies generating-function factors into one coefficient
array. ``enumerate_class`` and ``enumerate_two_colored`` list partitions
explicitly and serve as the oracle the DP is checked against.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterator

from .errors import DomainError, ResourceError, UnsupportedPredicateError
from .partitions import ClassParams, Partition, is_member

MAX_RESULTS = 10 ** 7


@dataclass(frozen=True)
class CountTable:
    params: ClassParams
    nmax: int
    counts: tuple[int, ...]

    def __getitem__(self, n):
        return self.counts[n]

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "nmax": self.nmax,
            "counts": [str(c) for c in self.counts],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "count"])
        for n, c in enumerate(self.counts):
            w.writerow([n, c])
        return buf.getvalue()


# -- generating-function DP -------------------------------------------------

def _times_geometric(arr: list[int], part: int) -> None:
    """In place: arr <- arr / (1 - q^part)."""
    for n in range(part, len(arr)):
        arr[n] += arr[n - part]


def _times_power_frequencies(arr: list[int], part: int, e: int) -> list[int]:
    """arr times sum_{i>=0} q^(part * i^e), truncated."""
    nmax = len(arr) - 1
    shifts = []
    i = 0
    while part * i ** e <= nmax:
        shifts.append(part * i ** e)
        i += 1
    out = [0] * len(arr)
    for sh in shifts:
        for n in range(sh, nmax + 1):
            out[n] += arr[n - sh]
    return out


def count_series(c: ClassParams, nmax: int) -> CountTable:
    if nmax < 0:
        raise DomainError("nmax must be >= 0")
    s, top, V = c.s, c.top, set(c.V)
    arr = [0] * (nmax + 1)
    arr[0] = 1
    if c.kind in ("I", "S"):
        for j in range(s, top + 1):
            if c.kind == "I" and j in V:
                continue
            _times_geometric(arr, j)
        # at least one part s: multiply by q^s
        arr = [0] * min(s, nmax + 1) + arr[: max(nmax + 1 - s, 0)]
    else:
        e = {"D": None, "DV": c.t, "E": c.t - 1, "P": c.t}[c.kind]
        for j in range(s + 1, top + 1):
            if j in V and e is not None:
                arr = _times_power_frequencies(arr, j, e)
                if c.kind == "P":
                    _times_geometric(arr, j)
            else:
                _times_geometric(arr, j)
        if c.kind != "P":
            arr[0] = 0
    return CountTable(c, nmax, tuple(arr))


# -- explicit enumeration ---------------------------------------------------

def _power_list(e: int, limit: int) -> list[int]:
    out, i = [], 0
    while i ** e <= limit:
        out.append(i ** e)
        i += 1
    return out


def _frequency_rules(c: ClassParams) -> list[tuple[int, str, int]]:
    """(part, rule, exponent) for every part the class may use.

    rule is 'any' (f >= 0), 'pos' (f >= 1) or 'pow' (f a perfect e-th power).
    """
    s, top, V = c.s, c.top, set(c.V)
    if c.kind == "I":
        return [(s, "pos", 0)] + [(j, "any", 0) for j in range(s + 1, top + 1) if j not in V]
    if c.kind == "S":
        return [(s, "pos", 0)] + [(j, "any", 0) for j in range(s + 1, top + 1)]
    e = {"D": None, "DV": c.t, "E": c.t - 1}[c.kind]
    return [(j, "pow", e) if (e is not None and j in V) else (j, "any", 0) for j in range(s + 1, top + 1)]


def _walk(rules, n) -> Iterator[dict[int, int]]:
    """All frequency assignments of total weight n, largest part chosen first."""
    if not rules:
        if n == 0:
            yield {}
        return
    part, rule, e = rules[-1]
    rest = rules[:-1]
    cap = n // part
    if rule == "pow":
        options = _power_list(e, cap)
    else:
        options = range(1 if rule == "pos" else 0, cap + 1)
    if not rest:
        if n % part == 0 and (n // part) in options:
            yield {part: n // part} if n else {}
        return
    for f in options:
        for sub in _walk(rest, n - f * part):
            if f:
                sub = dict(sub)
                sub[part] = f
            yield sub


def enumerate_class(c: ClassParams, n: int, max_results: int = MAX_RESULTS) -> list[Partition]:
    """Members of class c with weight n, sorted by their (part, frequency) pairs."""
    if c.kind == "P":
        raise UnsupportedPredicateError("use enumerate_two_colored for class P")
    if n < 0:
        raise DomainError("weight must be >= 0")
    out = []
    for freqs in _walk(_frequency_rules(c), n):
        p = Partition(freqs)
        # the walk builds the class by construction; the predicate is a second opinion
        if not is_member(p, c):
            continue
        out.append(p)
        if len(out) >= max_results:
            raise ResourceError(f"more than {max_results} members of weight {n}")
    out.sort()
    return out


def enumerate_two_colored(c: ClassParams, n: int, max_results: int = MAX_RESULTS) -> list[tuple[Partition, Partition]]:
    """Class P of weight n as (green, red) pairs; only parts of V carry a red copy."""
    if c.kind != "P":
        raise DomainError("enumerate_two_colored is for class P")
    rules = [(j, "any", 0) for j in range(c.s + 1, c.top + 1)]
    out = []
    for k_red in _red_choices(c, n):
        red = Partition(k_red)
        for green in _walk(rules, n - red.weight):
            out.append((Partition(green), red))
            if len(out) >= max_results:
                raise ResourceError(f"more than {max_results} coloured partitions of weight {n}")
    out.sort()
    return out


def _red_choices(c: ClassParams, n: int) -> Iterator[dict[int, int]]:
    rules = [(k, "pow", c.t) for k in c.V]
    for budget in range(n + 1):
        yield from _walk(rules, budget)


# -- comparisons ------------------------------------------------------------

@dataclass
class ScanReport:
    a: ClassParams
    b: ClassParams
    nmax: int
    signs: list[int]
    last_index: dict[str, int | None] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "nmax": self.nmax,
            "last_positive": self.last_index["+"],
            "last_zero": self.last_index["0"],
            "last_negative": self.last_index["-"],
            "signs": "".join({1: "+", 0: "0", -1: "-"}[x] for x in self.signs),
        }


def inequality_scan(a: ClassParams, b: ClassParams, nmax: int) -> ScanReport:
    """Sign of count_a(n) - count_b(n) for n = 0..nmax, with the last n of each sign."""
    ca, cb = count_series(a, nmax).counts, count_series(b, nmax).counts
    signs = [(x > y) - (x < y) for x, y in zip(ca, cb)]
    last = {"+": None, "0": None, "-": None}
    for n, sg in enumerate(signs):
        last["+0-"[1 - sg]] = n
    return ScanReport(a, b, nmax, signs, last)
