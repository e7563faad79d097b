"""Slowly-growing depth-selection functions: lambda_d, the star operator,
and the two-parameter inverse Ackermann function."""

import math
from functools import lru_cache

from .errors import InvalidArguments, NonDecreasingFunction

# Memoized lambda values stay exact; the argument bound keeps iteration
# counts finite for adversarial callers.
MAX_ARGUMENT = 2**40


def f_star(f, n: int) -> int:
    """Smallest i such that the i-fold composition f(f(...f(n))) <= 1.

    Requires f(x) < x for x > 1; checked dynamically while iterating.
    """
    if n < 1:
        raise InvalidArguments(f"n must be >= 1, got {n}")
    count = 0
    x = n
    while x > 1:
        nxt = f(x)
        if nxt >= x:
            raise NonDecreasingFunction(f"f({x}) = {nxt} does not decrease")
        x = nxt
        count += 1
    return count


def lam(d: int, n: int) -> int:
    """lambda_d(n): floor sqrt for d=1, ceil log2 for d=2, and the star of
    lambda_{d-2} for higher d."""
    if d < 1 or n < 1:
        raise InvalidArguments(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    if n > MAX_ARGUMENT:
        raise InvalidArguments("n exceeds supported bound 2**40")
    if d == 1:
        return math.isqrt(n)
    if d == 2:
        return (n - 1).bit_length()  # exact ceil(log2 n) for n >= 1
    return _lam_star(d, n)


# The base cases are cheaper than a cache lookup; only the recursive star
# levels are memoized, with a bound so full-range sweeps stay in memory.
@lru_cache(maxsize=1 << 16)
def _lam_star(d: int, n: int) -> int:
    return f_star(lambda x: lam(d - 2, x), n)


def log_star(n: int) -> int:
    """Iterated base-2 logarithm: iterations of log2 until the value is <= 1."""
    if n < 1:
        raise InvalidArguments(f"n must be >= 1, got {n}")
    count = 0
    x = float(n)
    while x > 1:
        x = math.log2(x)
        count += 1
    return count


def alpha(m: int, n: int) -> int:
    """Two-parameter inverse Ackermann: the minimal depth index d at which
    lambda_d(n) drops below the aspect ratio m/n (or below 4 when m < 128n).

    The ratio test is exact: m >= n * lambda_d(n).
    """
    if m < n or n < 1:
        raise InvalidArguments(f"need m >= n >= 1, got m={m}, n={n}")
    if m >= 128 * n:
        d = 1
        while m < n * lam(d, n):
            d += 1
        return d
    d = 1
    while lam(d, n) > 4:
        d += 1
    return d
