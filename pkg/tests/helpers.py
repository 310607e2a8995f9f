"""Independent brute-force oracles used by the tests.

Nothing here shares code with the package beyond plain tuples of ints, so
agreement between the two is meaningful evidence.
"""
from functools import lru_cache


def naive_mul(a, b):
    """Schoolbook product of two coefficient tuples."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def naive_divmod(num, den):
    """Long division of coefficient tuples; every step must divide exactly."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 0)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        factor, rem = divmod(num[-1], den[-1])
        assert rem == 0, "non-integer quotient step"
        shift = len(num) - len(den)
        q[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
    while num and num[-1] == 0:
        num.pop()
    while q and q[-1] == 0:
        q.pop()
    return tuple(q), tuple(num)


def x_pow_minus_one(n):
    return (-1,) + (0,) * (n - 1) + (1,)


@lru_cache(maxsize=None)
def naive_cyclotomic(n):
    """Phi_n by the recursion: divide x^n - 1 by Phi_d for proper divisors d."""
    poly = x_pow_minus_one(n)
    for d in range(1, n):
        if n % d == 0:
            poly, rem = naive_divmod(poly, naive_cyclotomic(d))
            assert rem == ()
    return poly


def brute_unitary_gcd(j, n):
    """max over divisors d of j that are also unitary divisors of n."""
    from math import gcd

    best = 0
    for d in range(1, n + 1):
        if n % d == 0 and gcd(d, n // d) == 1 and (j == 0 or j % d == 0):
            best = max(best, d)
    return best


def brute_semigroup_members(gens, bound):
    """All sums of generators up to bound, by exhaustive closure."""
    member = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = v + g
            if w <= bound and w not in member:
                member.add(w)
                frontier.append(w)
    return member
