"""Named constants and weight thresholds, evaluated exactly."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import DomainError


def t1_bound(L: int, s: int) -> int:
    """Weight from which |I_{L,s,V}| <= |D_{L,s}| is guaranteed (|V| >= 2)."""
    return 2 * (L + s) ** 7 + (L + s) ** 5


def t3_bound(s: int, t: int) -> int:
    """Weight from which |I_{L,s,V}| >= |D_{L,s,V}| is guaranteed."""
    return (10 * s) ** 5 * (t + 1) ** 4 * (39 * s * s * t ** 3) ** (5 * t)


def A(s: int, t: int) -> int:
    return (12 * s * t ** 3) ** t


def B(s: int, t: int) -> int:
    return (39 * s * s * t ** 3) ** t


def F_st(s: int, t: int) -> int:
    """Parts below this size are searched for a large frequency by the cube-shell map."""
    return 156 * s * s * (t + 1) ** 2 * B(s, t)


def F_s(s: int) -> int:
    return (10 * s - 2) * (15 * s - 3) + 8 * s


def kappa_s(s: int) -> int:
    # (12s-1) * ((s+1) + ... + (F(s)-1)) + 1
    top = F_s(s) - 1
    arith = (top * (top + 1) - s * (s + 1)) // 2
    return (12 * s - 1) * arith + 1


def alt_kt_bound(s: int, t: int) -> Fraction:
    """Smallest admissible k_t for the binary-encoding map."""
    return Fraction((2 ** (t + 4) * s + s * s) * t ** t, factorial(t))


_TABLE = {
    "t1_bound": (t1_bound, ("L", "s")),
    "t3_bound": (t3_bound, ("s", "t")),
    "F_st": (F_st, ("s", "t")),
    "F_s": (F_s, ("s",)),
    "kappa_s": (kappa_s, ("s",)),
    "A": (A, ("s", "t")),
    "B": (B, ("s", "t")),
    "alt_kt_bound": (alt_kt_bound, ("s", "t")),
}

NAMES = tuple(_TABLE)


def signature(name: str) -> tuple[str, ...]:
    if name not in _TABLE:
        raise DomainError(f"unknown constant {name!r}; known: {', '.join(NAMES)}")
    return _TABLE[name][1]


def evaluate(name: str, *args: int):
    fn, params = _TABLE[name] if name in _TABLE else (None, signature(name))
    if len(args) != len(params):
        raise DomainError(f"{name} takes ({', '.join(params)}), got {len(args)} argument(s)")
    if any(a < 1 for a in args):
        raise DomainError("arguments must be positive integers")
    return fn(*args)
