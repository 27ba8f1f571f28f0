"""Exact integer helpers shared by several modules."""


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer, exact for any size."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    # Newton iteration from an overestimate
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def ceil_root(n: int, k: int) -> int:
    r = iroot(n, k)
    return r if r ** k == n else r + 1


def exact_root(n: int, k: int):
    """Return r with r**k == n, or None."""
    r = iroot(n, k)
    return r if r ** k == n else None


def is_perfect_power(n: int, k: int) -> bool:
    # k-th powers of i >= 0: 0, 1, 2^k, ...
    return n >= 0 and exact_root(n, k) is not None
