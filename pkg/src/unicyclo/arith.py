"""Multiplicative arithmetic functions, factorization and unitary divisors.

A divisor d of n is *unitary* (written d || n) when gcd(d, n/d) = 1.  The
functions here are pure and operate on plain Python ints, so they are safe
to call from any number of threads or processes.
"""
from __future__ import annotations

from math import gcd, isqrt, prod

SIEVE_BOUND = 1_000_000

_primes: list[int] | None = None


def primes() -> list[int]:
    """Ascending list of all primes up to SIEVE_BOUND (sieved once, cached)."""
    global _primes
    if _primes is None:
        flags = bytearray([1]) * (SIEVE_BOUND + 1)
        flags[0:2] = b"\x00\x00"
        for i in range(2, isqrt(SIEVE_BOUND) + 1):
            if flags[i]:
                flags[i * i :: i] = b"\x00" * len(flags[i * i :: i])
        _primes = [i for i, f in enumerate(flags) if f]
    return _primes


# Bases making Miller-Rabin deterministic for every n < 3.3e24, far beyond
# anything reachable here.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test: small trial division, then Miller-Rabin."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = max(n + 1, 2)
    while not is_prime(k):
        k += 1
    return k


def factorize(n: int) -> list[tuple[int, int]]:
    """Canonical factorization of n >= 1 as [(p, e), ...] with p ascending.

    factorize(1) is the empty list.  Trial division runs over the prime
    sieve; a surviving cofactor is accepted only if it passes the
    deterministic primality test.
    """
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    parts = []
    rem = n
    for p in primes():
        if p * p > rem:
            break
        if rem % p == 0:
            e = 1
            rem //= p
            while rem % p == 0:
                e += 1
                rem //= p
            parts.append((p, e))
    else:
        if rem > 1 and not is_prime(rem):
            raise ValueError(f"cofactor {rem} exceeds the factorization range")
    if rem > 1:
        parts.append((rem, 1))
    return parts


def omega(n: int) -> int:
    """Number of distinct prime factors."""
    return len(factorize(n))


def mobius(n: int) -> int:
    """Mobius function: 0 if n has a squared factor, else (-1)^omega(n)."""
    parts = factorize(n)
    if any(e > 1 for _, e in parts):
        return 0
    return -1 if len(parts) % 2 else 1


def mobius_star(n: int) -> int:
    """Unitary Mobius function (-1)^omega(n); never zero."""
    return -1 if len(factorize(n)) % 2 else 1


def squarefree_kernel(n: int) -> int:
    """Product of the distinct primes dividing n (1 for n = 1)."""
    return prod(p for p, _ in factorize(n))


def euler_phi(n: int) -> int:
    """Euler's totient, via the factorization."""
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


def unitary_phi(n: int) -> int:
    """Unitary totient: product of (p^e - 1) over the prime-power parts of n."""
    return prod(p**e - 1 for p, e in factorize(n))


def prime_power_parts(n: int) -> list[int]:
    """The pairwise-coprime prime-power components p^e of n, ascending."""
    return [p**e for p, e in factorize(n)]


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorize(n)) == 1


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def unitary_divisors(n: int) -> list[int]:
    """The 2^omega(n) unitary divisors of n, ascending."""
    out = [1]
    for q in prime_power_parts(n):
        out += [d * q for d in out]
    return sorted(out)


def is_unitary_divisor(d: int, n: int) -> bool:
    return d >= 1 and n % d == 0 and gcd(d, n // d) == 1


def unitary_gcd(j: int, n: int) -> int:
    """max{d : d | j and d || n}; by that rule, unitary_gcd(0, n) = n.

    Equals the product of the prime-power components of n dividing j.
    """
    if j < 0:
        raise ValueError("unitary_gcd expects j >= 0")
    if j == 0:
        return n
    return prod(q for q in prime_power_parts(n) if j % q == 0)
