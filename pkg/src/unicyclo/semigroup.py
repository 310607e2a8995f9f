"""Numerical semigroups, their gaps, Frobenius numbers and polynomials.

S(a_1, ..., a_m) is the set of non-negative integer combinations of the
generators; it is numerical (finite complement) iff gcd(a_1, ..., a_m) = 1.
The semigroup polynomial P_S = (1 - x) * H_S, with H_S the Hilbert series
sum_{s in S} x^s, encodes the gap structure: deg P_S = F(S) + 1 and the
non-zero coefficients alternate between +1 and -1.

For coprime prime powers p, q the polynomial P_{S(p,q)} coincides with the
unitary cyclotomic polynomial of index pq; ``verify_binary_identities``
checks that bridge and its consequences instance by instance.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import is_prime_power
from .cyclotomic import family_polynomial
from .polynomial import IntPolynomial, TruncatedSeries


class NotNumerical(ValueError):
    """The generators have a common factor, so the complement is infinite."""


class IdentityViolation(ArithmeticError):
    """A semigroup/cyclotomic identity failed; names the identity and index."""


class NumericalSemigroup:
    """Membership, gaps and Frobenius number of S(generators).

    The membership table is built by dynamic programming up to a bound
    certified to exceed the conductor: for two generators a*b suffices,
    otherwise bounds are doubled until a run of min(generators) consecutive
    members appears (from there on every integer is a member).
    """

    __slots__ = ("generators", "gaps", "frobenius", "_member")

    def __init__(self, generators):
        gens = sorted(set(generators))
        if not gens:
            raise ValueError("at least one generator is required")
        for g in gens:
            if not isinstance(g, int) or g < 2:
                raise ValueError(f"generators must be integers >= 2, got {g!r}")
        g = gcd(*gens)
        if g != 1:
            raise NotNumerical(f"gcd of generators is {g}")
        self.generators = tuple(gens)
        if len(gens) == 2:
            bound = gens[0] * gens[1]
            member = self._table(bound)
        else:
            bound = 2 * max(gens)
            while True:
                member = self._table(bound)
                if self._has_run(member, gens[0]):
                    break
                bound *= 2
        self._member = member
        self.gaps = tuple(k for k, m in enumerate(member) if not m)
        self.frobenius = self.gaps[-1] if self.gaps else 0

    def _table(self, bound: int) -> bytearray:
        member = bytearray(bound + 1)
        member[0] = 1
        gens = self.generators
        for k in range(gens[0], bound + 1):
            for g in gens:
                if g > k:
                    break
                if member[k - g]:
                    member[k] = 1
                    break
        return member

    @staticmethod
    def _has_run(member: bytearray, length: int) -> bool:
        run = 0
        for m in member:
            run = run + 1 if m else 0
            if run >= length:
                return True
        return False

    def contains(self, k: int) -> bool:
        if k < 0:
            return False
        if k < len(self._member):
            return bool(self._member[k])
        return k > self.frobenius

    def hilbert_series(self, order: int) -> TruncatedSeries:
        """sum_{s in S} x^s modulo x^order."""
        return TruncatedSeries([1 if self.contains(k) else 0 for k in range(order)], order)


def semigroup_polynomial(s: NumericalSemigroup) -> IntPolynomial:
    """P_S = 1 + (x - 1) * sum over gaps of x^gap; degree F(S) + 1."""
    coeffs = [0] * (s.frobenius + 2)
    coeffs[0] = 1
    for g in s.gaps:
        coeffs[g] -= 1
        coeffs[g + 1] += 1
    return IntPolynomial(coeffs)


@dataclass(frozen=True)
class BinaryIdentityReport:
    """Outcome of the identity checks for one coprime pair (p, q)."""

    p: int
    q: int
    prime_powers: bool
    frobenius: int
    checked: tuple[str, ...]
    ok: bool


def verify_binary_identities(p: int, q: int) -> BinaryIdentityReport:
    """Check the product/membership identities tying S(p, q) to the polynomials.

    For any coprime p, q > 1:
      (i)   P_{S(p,q)} * (x^p - 1)(x^q - 1) = (x^{pq} - 1)(x - 1)
      and F(S(p,q)) = pq - p - q = deg(P) - 1.
    When p and q are moreover prime powers:
      (ii)  P_{S(p,q)} = Phi*_{pq}
      (iii) each coefficient of Phi*_{pq} follows the three-case membership
            rule (+1 when k in S but k-1 not, -1 when k-1 in S but k not, 0
            otherwise)
      (iv)  Psi*_{pq} = -1 - x - ... - x^{a-1} + x^b + ... + x^{a+b-1}
            with {a, b} = {p, q}, a < b.

    Raises IdentityViolation on the first failure, NotNumerical when the
    pair is not coprime.
    """
    if p < 2 or q < 2:
        raise ValueError("p and q must exceed 1")
    if gcd(p, q) != 1:
        raise NotNumerical(f"{p} and {q} are not coprime")
    s = NumericalSemigroup((p, q))
    ps = semigroup_polynomial(s)
    checked = []

    lhs = ps * IntPolynomial.binomial(p) * IntPolynomial.binomial(q)
    rhs = IntPolynomial.binomial(p * q) * IntPolynomial.binomial(1)
    if lhs != rhs:
        raise IdentityViolation("product identity for P_S(p,q) failed")
    checked.append("product")

    expected_f = p * q - p - q
    if s.frobenius != expected_f or ps.degree != expected_f + 1:
        raise IdentityViolation(
            f"Frobenius number {s.frobenius} / degree {ps.degree} disagree with {expected_f}"
        )
    checked.append("frobenius")

    prime_powers = is_prime_power(p) and is_prime_power(q)
    if prime_powers:
        phi_star = family_polynomial("phi-star", p * q)
        if ps != phi_star:
            raise IdentityViolation("P_S(p,q) differs from the unitary cyclotomic polynomial")
        checked.append("phi-star")

        for k in range(phi_star.degree + 1):
            in_k = s.contains(k)
            in_k1 = s.contains(k - 1)
            expected = 1 if in_k and not in_k1 else (-1 if in_k1 and not in_k else 0)
            if phi_star.coefficient(k) != expected:
                raise IdentityViolation(f"membership coefficient rule failed at index {k}")
        checked.append("membership-rule")

        a, b = min(p, q), max(p, q)
        expected_psi = IntPolynomial([-1] * a + [0] * (b - a) + [1] * a)
        if family_polynomial("psi-star", p * q) != expected_psi:
            raise IdentityViolation("closed form for the inverse polynomial failed")
        checked.append("psi-star-closed-form")

    return BinaryIdentityReport(p, q, prime_powers, s.frobenius, tuple(checked), True)
