"""The four polynomial families and inclusion-exclusion polynomials.

Four families of integer polynomials partition x^n - 1 in two ways:

* ``cyclotomic(n)``                  Phi_n,   via prod_{d|n}  (x^{n/d}-1)^{mu(d)}
* ``inverse_cyclotomic(n)``          Psi_n  = (x^n-1)/Phi_n
* ``unitary_cyclotomic(n)``          Phi*_n,  via prod_{d||n} (x^{n/d}-1)^{mu*(d)}
* ``inverse_unitary_cyclotomic(n)``  Psi*_n = (x^n-1)/Phi*_n

Every builder applies binomial multiplications first and the exact
divisions second, so a wrong divisor set can never hide: the division
raises NonExactDivision immediately.

``unitary_cyclotomic_kernel_product`` recomputes Phi*_n as the product of
the ordinary cyclotomics Phi_d over the divisors d of n sharing the
square-free kernel of n.  It shares nothing with the binomial route beyond
raw polynomial arithmetic and serves as an independent cross-check.
"""
from __future__ import annotations

import os
from math import gcd, prod

from .arith import divisors, factorize, prime_power_parts, squarefree_kernel
from .polynomial import ONE, IntPolynomial, TruncatedSeries, _div_xd_minus_1, _mul_xd_minus_1


class InvalidBasis(ValueError):
    """An inclusion-exclusion basis was not pairwise coprime (or had r < 2)."""


FAMILIES = ("phi", "psi", "phi-star", "psi-star")

DEFAULT_CACHE_BOUND = 6000


def _squarefree_divisors_mu(n: int) -> list[tuple[int, int]]:
    """(d, mu(d)) for the square-free divisors d of n."""
    out = [(1, 1)]
    for p, _ in factorize(n):
        out += [(d * p, -m) for d, m in out]
    return out


def _unitary_divisors_mu_star(n: int) -> list[tuple[int, int]]:
    """(d, mu*(d)) for the unitary divisors d of n."""
    out = [(1, 1)]
    for q in prime_power_parts(n):
        out += [(d * q, -m) for d, m in out]
    return out


def _apply_binomials(mul_exps: list[int], div_exps: list[int]) -> list[int]:
    c = [1]
    for e in mul_exps:
        c = _mul_xd_minus_1(c, e)
    for e in div_exps:
        c = _div_xd_minus_1(c, e)
    return c


def _split(pairs, n, skip_trivial: bool, negate: bool):
    muls, divs = [], []
    for d, mu in pairs:
        if skip_trivial and d == 1:
            continue
        if negate:
            mu = -mu
        (muls if mu == 1 else divs).append(n // d)
    return muls, divs


def _coeffs(family: str, n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    if family == "phi":
        muls, divs = _split(_squarefree_divisors_mu(n), n, False, False)
    elif family == "psi":
        muls, divs = _split(_squarefree_divisors_mu(n), n, True, True)
    elif family == "phi-star":
        muls, divs = _split(_unitary_divisors_mu_star(n), n, False, False)
    elif family == "psi-star":
        muls, divs = _split(_unitary_divisors_mu_star(n), n, True, True)
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return _apply_binomials(muls, divs)


def cyclotomic(n: int) -> IntPolynomial:
    """Phi_n: monic of degree euler_phi(n), the n-th irreducible factor of x^n - 1."""
    return IntPolynomial(_coeffs("phi", n))


def inverse_cyclotomic(n: int) -> IntPolynomial:
    """Psi_n = (x^n - 1) / Phi_n, of degree n - euler_phi(n)."""
    return IntPolynomial(_coeffs("psi", n))


def unitary_cyclotomic(n: int) -> IntPolynomial:
    """Phi*_n: monic of degree unitary_phi(n), built from unitary-divisor binomials."""
    return IntPolynomial(_coeffs("phi-star", n))


def inverse_unitary_cyclotomic(n: int) -> IntPolynomial:
    """Psi*_n = (x^n - 1) / Phi*_n, of degree n - unitary_phi(n)."""
    return IntPolynomial(_coeffs("psi-star", n))


def unitary_cyclotomic_kernel_product(n: int) -> IntPolynomial:
    """Phi*_n as prod of Phi_d over divisors d of n with the same square-free kernel."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    kernel = squarefree_kernel(n)
    out = ONE
    for e in sorted(divisors(n // kernel)):
        out = out * family_polynomial("phi", kernel * e)
    return out


def inclusion_exclusion(basis) -> IntPolynomial:
    """The inclusion-exclusion polynomial of a pairwise-coprime basis.

    With n0 the product of the basis and n_T = n0 / prod(T) for a subset T,
    binomials x^{n_T} - 1 over even-sized subsets are multiplied and those
    over odd-sized subsets divided out.  On the prime-power components of n
    this reproduces Phi*_n; on a coprime pair {a, b} it is the semigroup
    polynomial of S(a, b).
    """
    rho = sorted(basis)
    for r in rho:
        if not isinstance(r, int) or r < 2:
            raise InvalidBasis(f"basis entries must be integers >= 2, got {r!r}")
    for i in range(len(rho)):
        for j in range(i + 1, len(rho)):
            if gcd(rho[i], rho[j]) != 1:
                raise InvalidBasis(f"{rho[i]} and {rho[j]} are not coprime")
    n0 = prod(rho)
    muls, divs = [], []
    for mask in range(1 << len(rho)):
        n_t = n0 // prod(rho[i] for i in range(len(rho)) if mask >> i & 1)
        (muls if mask.bit_count() % 2 == 0 else divs).append(n_t)
    return IntPolynomial(_apply_binomials(muls, divs))


def reciprocal_series(m: int, order: int) -> TruncatedSeries:
    """Taylor coefficients of 1/Phi*_m(x) at 0, modulo x^order.

    The coefficient at j depends only on j mod m, because 1/Phi*_m equals
    -Psi*_m * (1 + x^m + x^{2m} + ...) and Psi*_m has degree below m.
    """
    return family_polynomial("phi-star", m).truncated(order).inverse()


# ---------------------------------------------------------------------------
# memoized family access

_BUILDERS = {
    "phi": cyclotomic,
    "psi": inverse_cyclotomic,
    "phi-star": unitary_cyclotomic,
    "psi-star": inverse_unitary_cyclotomic,
}

# Plain dict: reads and single-key inserts are atomic under the GIL, and the
# builders are pure, so a concurrent duplicate computation is harmless.
_cache: dict[tuple[str, int], IntPolynomial] = {}


def cache_bound() -> int:
    """Largest index memoized; the UNICYCLO_CACHE_BOUND env var overrides it."""
    return int(os.environ.get("UNICYCLO_CACHE_BOUND", DEFAULT_CACHE_BOUND))


def clear_cache() -> None:
    _cache.clear()


def family_polynomial(family: str, n: int) -> IntPolynomial:
    """Memoized access to any of the four families by tag."""
    if family not in _BUILDERS:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    key = (family, n)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    f = _BUILDERS[family](n)
    if n <= cache_bound():
        _cache[key] = f
    return f
