"""Classical Bernoulli numbers and polynomials, with exact denominators.

The cache holds B_0..B_capacity under the convention B_1 = -1/2 and is sealed
after construction, so concurrent reads never race a resize.  The closed
denominator formula and the von Staudt-Clausen witness give two independent
handles on the fractional part of B_n that the test suite plays against the
cached values.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import CapacityError, InvariantViolation
from .exact_arith import Poly, is_prime, primes_up_to


class BernoulliCache:
    """Sealed table of B_0..B_capacity (B_1 = -1/2).

    Built once by the defining recurrence sum(C(n+1, k) * B_k for k in
    0..n) = 0, solved for B_n with exact rationals; immutable afterwards.
    """

    __slots__ = ("_values",)

    def __init__(self, capacity: int) -> None:
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        values: list[Fraction] = [Fraction(1)]
        for n in range(1, capacity + 1):
            acc = Fraction(0)
            for k in range(n):
                bk = values[k]
                if bk:
                    acc += comb(n + 1, k) * bk
            values.append(-acc / (n + 1))
        self._values = tuple(values)

    @property
    def capacity(self) -> int:
        return len(self._values) - 1

    def __repr__(self) -> str:
        return f"BernoulliCache(capacity={self.capacity})"


def bernoulli_number(cache: BernoulliCache, n: int) -> Fraction:
    """Exact B_n from the sealed cache."""
    if n < 0:
        raise ValueError("bernoulli_number: n must be non-negative")
    if n > cache.capacity:
        raise CapacityError(f"B_{n} requested but cache is sealed at capacity {cache.capacity}")
    return cache._values[n]


def bernoulli_polynomial(cache: BernoulliCache, n: int) -> Poly:
    """B_n(x) = sum(C(n, v) * B_{n-v} * x^v), a monic polynomial of degree n."""
    if n < 0:
        raise ValueError("bernoulli_polynomial: n must be non-negative")
    if n > cache.capacity:
        raise CapacityError(f"B_{n}(x) requested but cache is sealed at capacity {cache.capacity}")
    return Poly([comb(n, v) * cache._values[n - v] for v in range(n + 1)])


def bernoulli_denominator(n: int) -> int:
    """Closed form for denom(B_n): product of primes p with p-1 | n for even n.

    Equals 1 for n = 0 and odd n >= 3, and 2 for n = 1.
    """
    if n < 0:
        raise ValueError("bernoulli_denominator: n must be non-negative")
    if n == 0:
        return 1
    if n == 1:
        return 2
    if n % 2:
        return 1
    value = 1
    for p in primes_up_to(n + 1):
        if n % (p - 1) == 0:
            value *= p
    return value


def von_staudt_clausen_witness(cache: BernoulliCache, n: int) -> int:
    """The integer B_n + sum(1/p for primes p with p-1 | n), for even n >= 2.

    Raises InvariantViolation if the sum is not an integer, which would
    falsify the von Staudt-Clausen relation; the error path is a test hook
    and must never fire.
    """
    if n < 2 or n % 2:
        raise ValueError("von_staudt_clausen_witness: n must be even and >= 2")
    total = bernoulli_number(cache, n)
    for p in primes_up_to(n + 1):
        if n % (p - 1) == 0:
            total += Fraction(1, p)
    if total.denominator != 1:
        raise InvariantViolation(f"B_{n} + sum(1/p) = {total} is not an integer")
    return int(total)


def hermite_stern_check(m: int, p: int) -> int:
    """Residue mod p of sum(C(m, v) for 0 < v < m with p-1 | v); contract: 0.

    The empty sum (m = 1, or no multiple of p-1 below m) gives 0 directly.
    """
    if m < 1:
        raise ValueError("hermite_stern_check: m must be >= 1")
    if not is_prime(p):
        raise ValueError(f"hermite_stern_check: {p} is not prime")
    total = 0
    for v in range(p - 1, m, p - 1):
        total += comb(m, v)
    return total % p
