import random
from math import gcd, prod

import pytest

from unicyclo import arith

from helpers import brute_unitary_gcd


def test_factorize_examples():
    assert arith.factorize(1) == []
    assert arith.factorize(60) == [(2, 2), (3, 1), (5, 1)]
    assert arith.factorize(10465) == [(5, 1), (7, 1), (13, 1), (23, 1)]
    assert arith.factorize(2**10) == [(2, 10)]


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        arith.factorize(0)


def test_factorize_invariants_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(1, 10**9)
        parts = arith.factorize(n)
        assert prod(p**e for p, e in parts) == n
        assert all(e >= 1 for _, e in parts)
        ps = [p for p, _ in parts]
        assert ps == sorted(ps) and len(set(ps)) == len(ps)
        assert all(arith.is_prime(p) for p in ps)


def test_mobius_and_kernel():
    assert arith.mobius(12) == 0
    assert arith.mobius_star(12) == 1
    assert arith.squarefree_kernel(12) == 6
    assert arith.omega(12) == 2
    assert arith.mobius_star(1) == 1
    assert arith.squarefree_kernel(1) == 1
    assert arith.mobius(30) == -1 == arith.mobius_star(30)


def test_mobius_star_sums_to_zero_over_unitary_divisors():
    for n in range(2, 10001):
        assert sum(arith.mobius_star(d) for d in arith.unitary_divisors(n)) == 0


def test_totients():
    assert arith.unitary_phi(12) == 6
    assert arith.unitary_phi(60) == 24
    for p in (2, 3, 5, 7, 97, 7919):
        assert arith.unitary_phi(p) == p - 1 == arith.euler_phi(p)
    assert arith.euler_phi(1) == 1 == arith.unitary_phi(1)
    for n in range(1, 500):
        assert arith.unitary_phi(n) >= arith.euler_phi(n)


def test_multiplicativity_on_coprime_pairs():
    rng = random.Random(11)
    fns = (arith.euler_phi, arith.unitary_phi, arith.squarefree_kernel, arith.mobius_star)
    count = 0
    while count < 60:
        a, b = rng.randrange(1, 4000), rng.randrange(1, 4000)
        if gcd(a, b) != 1:
            continue
        count += 1
        for fn in fns:
            assert fn(a * b) == fn(a) * fn(b), (fn.__name__, a, b)


def test_unitary_divisors():
    assert arith.unitary_divisors(12) == [1, 3, 4, 12]
    assert arith.unitary_divisors(1) == [1]
    for n in range(1, 500):
        ds = arith.unitary_divisors(n)
        assert len(ds) == 2 ** arith.omega(n)
        assert sorted(n // d for d in ds) == ds  # closed under d -> n/d
        assert all(arith.is_unitary_divisor(d, n) for d in ds)


def test_unitary_gcd_examples_and_oracle():
    assert arith.unitary_gcd(8, 12) == 4
    assert arith.unitary_gcd(5, 12) == 1
    assert arith.unitary_gcd(0, 12) == 12
    rng = random.Random(13)
    for _ in range(150):
        n = rng.randrange(1, 300)
        j = rng.randrange(0, 3 * n)
        assert arith.unitary_gcd(j, n) == brute_unitary_gcd(j, n), (j, n)
    with pytest.raises(ValueError):
        arith.unitary_gcd(-1, 12)


def test_unitary_phi_counts_unitary_coprime_residues():
    # #{1 <= j <= n : unitary_gcd(j, n) = 1} equals the product formula.  A j
    # fails iff some prime-power component of n divides it, so mark multiples
    # of each component and count the survivors.
    for n in range(1, 10001):
        marks = bytearray(n)  # index i represents j = i + 1
        for q in arith.prime_power_parts(n):
            marks[q - 1 :: q] = b"\x01" * ((n - q) // q + 1)
        assert n - sum(marks) == arith.unitary_phi(n), n


def test_is_prime_matches_sieve():
    table = set(arith.primes()[:1000])
    limit = arith.primes()[999]
    for n in range(limit + 1):
        assert arith.is_prime(n) == (n in table), n
    assert arith.is_prime(2**61 - 1)
    assert not arith.is_prime(2**67 - 1)


def test_next_prime():
    assert arith.next_prime(34) == 37
    assert arith.next_prime(2) == 3
    assert arith.next_prime(0) == 2


def test_prime_powers():
    assert arith.is_prime_power(27) and arith.is_prime_power(2)
    assert not arith.is_prime_power(1) and not arith.is_prime_power(12)
    assert arith.prime_power_parts(10465) == [5, 7, 13, 23]
    assert arith.prime_power_parts(1) == []
    assert arith.divisors(12) == [1, 2, 3, 4, 6, 12]
