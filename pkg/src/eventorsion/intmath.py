"""Exact integer primitives: perfect squares, squarefree splitting, divisors.

Everything runs on Python's arbitrary-precision integers (and Fraction for
the one rational helper); no floating point is used anywhere in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple

DEFAULT_TRIAL_BOUND = 10**6


class SquarefreeSplitError(ValueError):
    """The unfactored cofactor could not be certified squarefree."""


class SquarefreeSplit(NamedTuple):
    square_part: int      # d >= 1
    squarefree_part: int  # carries the sign of the input


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return tuple(i for i, f in enumerate(flags) if f)


_SMALL_PRIMES = _sieve(1000)


def _trial_candidates() -> Iterator[int]:
    # Primes below 1000, then all odd numbers; composite candidates are
    # harmless because their prime factors were already divided out.
    yield from _SMALL_PRIMES
    k = 1001
    while True:
        yield k
        k += 2


def int_sqrt(x: int) -> int | None:
    """r >= 0 with r*r == x, or None when x is not a perfect square."""
    if x < 0:
        return None
    r = math.isqrt(x)
    return r if r * r == x else None


def rat_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None when x is not a square."""
    if x < 0:
        return None
    num = int_sqrt(x.numerator)
    if num is None:
        return None
    den = int_sqrt(x.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def gcd(x: int, y: int) -> int:
    """Nonnegative gcd; gcd(0, 0) is rejected."""
    if x == 0 and y == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(x, y)


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _power_base(c: int) -> tuple[int, int]:
    """Write c >= 2 as base**exp with exp maximal (base not a perfect power)."""
    exp = 1
    reduced = True
    while reduced:
        reduced = False
        for k in _SMALL_PRIMES:
            if (1 << k) > c:
                break
            r = _iroot(c, k)
            if r**k == c:
                c, exp = r, exp * k
                reduced = True
                break
    return c, exp


def squarefree_split(x: int, trial_bound: int = DEFAULT_TRIAL_BOUND) -> SquarefreeSplit:
    """Split x != 0 as d*d * s with s squarefree, returning (d, s).

    Trial division runs up to trial_bound.  A surviving cofactor is reduced
    to base**exp; the base is accepted as squarefree only when that is forced
    (no prime factor below trial_bound, not a perfect power, and small enough
    that a repeated prime factor is impossible).  Anything else raises
    SquarefreeSplitError instead of guessing.
    """
    if x == 0:
        raise ValueError("cannot split 0 into square and squarefree parts")
    sign = -1 if x < 0 else 1
    a = abs(x)
    d = 1
    s = 1
    exceeded_bound = False
    for p in _trial_candidates():
        if p > trial_bound:
            exceeded_bound = True
            break
        if p * p > a:
            break
        if a % p == 0:
            e = 0
            while a % p == 0:
                a //= p
                e += 1
            d *= p ** (e // 2)
            if e % 2:
                s *= p
    if a > 1:
        if not exceeded_bound:
            s *= a  # a has no divisor at most sqrt(a), hence is prime
        else:
            base, e = _power_base(a)
            # base has no prime factor <= trial_bound and is not a perfect
            # power, so base non-squarefree would force base > trial_bound**3.
            if base > trial_bound**3:
                raise SquarefreeSplitError(
                    f"cannot certify cofactor {a} squarefree "
                    f"(trial bound {trial_bound})"
                )
            d *= base ** (e // 2)
            if e % 2:
                s *= base
    return SquarefreeSplit(d, sign * s)


@lru_cache(maxsize=None)
def is_squarefree(x: int) -> bool:
    return squarefree_split(x).square_part == 1


@lru_cache(maxsize=1 << 15)
def factorization(x: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of |x| as ((p, e), ...) with ascending p.  x != 0.

    Plain trial division; intended for the modest integers that occur in
    sweeps, not for cryptographic sizes.
    """
    if x == 0:
        raise ValueError("cannot factor 0")
    a = abs(x)
    out: list[tuple[int, int]] = []
    for p in _trial_candidates():
        if p * p > a:
            break
        if a % p == 0:
            e = 0
            while a % p == 0:
                a //= p
                e += 1
            out.append((p, e))
    if a > 1:
        out.append((a, 1))
    return tuple(out)


def divisors(x: int) -> tuple[int, ...]:
    """Positive divisors of |x| != 0 in ascending order."""
    vals = [1]
    for p, e in factorization(x):
        vals = [v * p**k for v in vals for k in range(e + 1)]
    return tuple(sorted(vals))


def signed_divisor_pairs(x: int) -> Iterator[tuple[int, int]]:
    """Every ordered pair (p, q) with p*q == x, both signs included.

    Deterministic order: ascending |p|, positive p before negative p.
    Yields exactly 2*tau(|x|) pairs.
    """
    if x == 0:
        raise ValueError("0 has no divisor pairs")
    for d in divisors(x):
        q = x // d
        yield d, q
        yield -d, -q
