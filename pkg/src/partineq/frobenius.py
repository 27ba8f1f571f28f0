"""Two-generator Frobenius problem: ax + by = n over nonnegative integers.

Solutions are found by modular inversion, never by search, so n may be as
large as the maps in :mod:`partineq.injections` require. When several
solutions exist the one with the smallest x is returned.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple

from .errors import DomainError, NoSolutionError, PreconditionError


class FrobSolution(NamedTuple):
    x: int
    y: int


def frobenius_number(a: int, b: int) -> int:
    if a < 2 or b < 2:
        raise DomainError("generators must be at least 2")
    if gcd(a, b) != 1:
        raise DomainError(f"gcd({a}, {b}) = {gcd(a, b)}; the Frobenius number is undefined")
    return a * b - a - b


def _min_x(a: int, b: int, n: int) -> int | None:
    """Smallest x >= 0 with b | n - a*x, or None if the congruence is insoluble."""
    g = gcd(a, b)
    if n % g:
        return None
    a, b, n = a // g, b // g, n // g
    if b == 1:
        return 0
    return n * pow(a, -1, b) % b


def solve_sylvester(a: int, b: int, n: int) -> FrobSolution:
    """Solution of ax + by = n with minimal x.

    Guaranteed to exist for coprime a, b once n >= (a-1)(b-1); below that bound
    a solution is still returned when there is one.
    """
    if a < 1 or b < 1:
        raise DomainError("generators must be positive")
    if n < 0:
        raise NoSolutionError(f"{n} is negative")
    x = _min_x(a, b, n)
    if x is None or a * x > n:
        raise NoSolutionError(f"{n} is not of the form {a}x + {b}y with x, y >= 0")
    return FrobSolution(x, (n - a * x) // b)


def solve_refined(a: int, b: int, n: int, h: int) -> FrobSolution:
    """Solution of ax + by = n with b*h <= x < b*(h+1), minimal x in that window.

    Requires gcd(a, b) | n and n >= (a-1)(b-1) + a*b*h. Built by solving for
    n - a*b*h with x below b and then shifting x by b*h.
    """
    if a < 1 or b < 1 or h < 0:
        raise DomainError("need a, b >= 1 and h >= 0")
    g = gcd(a, b)
    if n % g:
        raise PreconditionError(f"gcd({a}, {b}) = {g} does not divide {n}")
    if n < (a - 1) * (b - 1) + a * b * h:
        raise PreconditionError(f"{n} < (a-1)(b-1) + abh = {(a - 1) * (b - 1) + a * b * h}")
    x0, y0 = solve_sylvester(a, b, n - a * b * h)
    assert x0 < b
    return FrobSolution(x0 + b * h, y0)
