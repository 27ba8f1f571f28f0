"""Partitions as part -> frequency maps, the six partition classes, and JSON I/O."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from ._intmath import is_perfect_power
from .errors import DomainError, ParseError, UnsupportedPredicateError

KINDS = ("I", "D", "DV", "E", "P", "S")

_DIGITS = re.compile(r"[0-9]+")


class Partition:
    """Immutable multiset of positive parts.

    Stored as ascending ``(part, frequency)`` pairs; zero frequencies are never
    stored. Frequencies are Python ints, so a part repeated ``(39*s*s*t**3)**t``
    times costs nothing extra.
    """

    __slots__ = ("_pairs", "_freq")

    def __init__(self, freqs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = freqs.items() if isinstance(freqs, Mapping) else freqs
        table: dict[int, int] = {}
        for part, f in items:
            part, f = int(part), int(f)
            if part < 1:
                raise DomainError(f"part must be >= 1, got {part}")
            if f < 0:
                raise DomainError(f"frequency of {part} is negative ({f})")
            if part in table:
                raise DomainError(f"duplicate part {part}")
            if f:
                table[part] = f
        self._pairs = tuple(sorted(table.items()))
        self._freq = table

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return self._pairs

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self._pairs)

    def freq(self, part: int) -> int:
        return self._freq.get(part, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self._pairs)

    @property
    def weight(self) -> int:
        return weight(self)

    def __len__(self):
        return len(self._pairs)

    def __bool__(self):
        return bool(self._pairs)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self):
        return hash(self._pairs)

    def __lt__(self, other):
        return self._pairs < other._pairs

    def __repr__(self):
        inner = ", ".join(f"{p}: {f}" for p, f in self._pairs)
        return f"Partition({{{inner}}})"

    def adjusted(self, delta: Mapping[int, int]) -> "Partition":
        """Return a copy with frequencies shifted by ``delta``; going negative is an error."""
        table = dict(self._freq)
        for part, d in delta.items():
            new = table.get(part, 0) + d
            if new < 0:
                raise DomainError(f"frequency of part {part} would become {new}")
            table[part] = new
        return Partition(table)


def weight(p: Partition) -> int:
    return sum(part * f for part, f in p.pairs)


@dataclass(frozen=True)
class ClassParams:
    """Identifies one of the classes I, D, DV, E, P, S for given (L, s, V)."""

    L: int
    s: int
    V: tuple[int, ...] = ()
    kind: str = "I"

    def __post_init__(self):
        object.__setattr__(self, "V", tuple(int(v) for v in self.V))
        if self.L < 1 or self.s < 1:
            raise DomainError("L and s must be positive")
        if self.kind not in KINDS:
            raise DomainError(f"unknown class kind {self.kind!r}")
        if any(b <= a for a, b in zip(self.V, self.V[1:])):
            raise DomainError("V must be strictly increasing")
        if self.V and (self.V[0] < self.s + 1 or self.V[-1] > self.L + self.s):
            raise DomainError(f"V must lie in [{self.s + 1}, {self.L + self.s}]")
        if self.kind in ("DV", "P") and self.t < 1:
            raise DomainError(f"class {self.kind} needs |V| >= 1")
        if self.kind == "E" and self.t < 2:
            raise DomainError("class E needs |V| >= 2")

    @property
    def t(self) -> int:
        return len(self.V)

    @property
    def ks(self) -> tuple[int, ...]:
        """V in the descending order k_1 > k_2 > ... > k_t."""
        return self.V[::-1]

    @property
    def top(self) -> int:
        return self.L + self.s

    def with_kind(self, kind: str) -> "ClassParams":
        return ClassParams(self.L, self.s, self.V, kind)

    def to_json(self) -> dict:
        return {"L": self.L, "s": self.s, "V": list(self.V), "kind": self.kind}

    @classmethod
    def from_json(cls, obj) -> "ClassParams":
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad ClassParams JSON: {exc}") from None
        try:
            return cls(int(obj["L"]), int(obj["s"]), tuple(sorted(int(v) for v in obj["V"])), obj["kind"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad ClassParams JSON: {exc}") from None


def _frequency_exponent(c: ClassParams) -> int | None:
    if c.kind == "DV":
        return c.t
    if c.kind == "E":
        return c.t - 1
    return None


def is_member(p: Partition, c: ClassParams) -> bool:
    if c.kind == "P":
        raise UnsupportedPredicateError("class P has coloured parts; it can be counted but not tested")
    s, top = c.s, c.top
    if c.kind in ("I", "S"):
        if p.freq(s) < 1 or p.parts[0] < s or p.parts[-1] > top:
            return False
        return c.kind == "S" or not any(p.freq(k) for k in c.V)
    # D, DV, E
    if not p or p.parts[0] < s + 1 or p.parts[-1] > top:
        return False
    e = _frequency_exponent(c)
    if e is None:
        return True
    return all(is_perfect_power(p.freq(k), e) for k in c.V)


def serialize(p: Partition) -> str:
    return json.dumps([[str(part), str(f)] for part, f in p.pairs], separators=(",", ":"))


def parse(text: str) -> Partition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not JSON: {exc}") from None
    if not isinstance(data, list):
        raise ParseError("partition must be a JSON array of [part, frequency] pairs")
    seen: dict[int, int] = {}
    for entry in data:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ParseError(f"malformed pair {entry!r}")
        vals = []
        for x in entry:
            if isinstance(x, bool) or not isinstance(x, (str, int)):
                raise ParseError(f"expected decimal string, got {x!r}")
            x = str(x)
            if not _DIGITS.fullmatch(x):
                raise ParseError(f"not a nonnegative decimal integer: {x!r}")
            vals.append(int(x))
        part, f = vals
        if part == 0 or f == 0:
            raise ParseError(f"zero entry in pair {entry!r}")
        if part in seen:
            raise ParseError(f"duplicate part {part}")
        seen[part] = f
    return Partition(seen)
