"""Constructive realization of arbitrary integers as family coefficients.

Given m > 1 and t >= 1, the procedure picks the smallest base n >= 8m whose
open window (n, 15n/8) contains at least t primes congruent to 1 mod m,
multiplies the t smallest of them (adjoining a prime q > 2*p_1 when t is
even) into a square-free n1 coprime to m with mu*(n1) = -1, and inspects
the coefficients of Phi*_{m*n1} below x^{2*p_1}.  In that window only the
binomial factors indexed by the unitary divisors of m and by the chosen
primes survive, which pins the coefficients down to explicit values such
as 1 - t and t - 1; letting t run over the positive integers therefore
realizes every integer.  A companion index n2 with the opposite parity
rule does the same for the inverse family via c*(k) = -a*(k) on the window.

Every window here is computed twice from independent derivations (and,
when the full polynomial is small enough to build, a third time), so a
mismatch anywhere raises instead of passing silently.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import gcd, prod

from .arith import is_prime, mobius_star, next_prime, primes, unitary_divisors
from .cyclotomic import family_polynomial, reciprocal_series
from .polynomial import TruncatedSeries


class SearchCeilingExceeded(RuntimeError):
    """The base-n search hit its configured ceiling."""


class InternalMismatch(ArithmeticError):
    """Two independent window computations disagree: an implementation bug."""


class CeilingExceeded(RuntimeError):
    """The full polynomial backing the direct oracle is too large to build."""


class PredictionMismatch(ArithmeticError):
    """An observed window coefficient differs from its predicted value."""

    def __init__(self, report, message):
        self.report = report
        super().__init__(message)


@dataclass(frozen=True)
class WitnessPlan:
    m: int
    t: int
    n: int
    primes: tuple[int, ...]
    q: int
    n1: int
    n2: int


@dataclass(frozen=True)
class CoefficientCheck:
    family: str
    k: int
    observed: int
    predicted: int

    @property
    def ok(self) -> bool:
        return self.observed == self.predicted


@dataclass(frozen=True)
class WitnessReport:
    plan: WitnessPlan
    case_tag: str
    checks: tuple[CoefficientCheck, ...]
    window_formula_ok: bool
    reduction_ok: bool
    phi_star_oracle: bool | None  # None when the full polynomial exceeds the ceiling
    psi_star_oracle: bool | None
    realized_unitary: tuple[int, ...]
    realized_inverse: tuple[int, ...]
    all_match: bool


def _window_primes(n: int, m: int, t: int) -> list[int]:
    """Up to t primes p = 1 (mod m) with n < p and 8p < 15n, smallest first."""
    ps = primes()
    out = []
    if 15 * n < 8 * ps[-1]:
        for p in ps[bisect_right(ps, n) :]:
            if 8 * p >= 15 * n:
                break
            if p % m == 1:
                out.append(p)
                if len(out) == t:
                    break
    else:
        k = n + 1 + (1 - (n + 1)) % m  # first candidate > n congruent to 1 mod m
        while 8 * k < 15 * n:
            if is_prime(k):
                out.append(k)
                if len(out) == t:
                    break
            k += m
    return out


def build_plan(m: int, t: int, search_ceiling: int = 1_000_000) -> WitnessPlan:
    """Smallest-choice plan: minimal n >= 8m, minimal primes, minimal q."""
    if m < 2:
        raise ValueError("m must exceed 1")
    if t < 1:
        raise ValueError("t must be >= 1")
    n = 8 * m
    while n <= search_ceiling:
        sel = _window_primes(n, m, t)
        if len(sel) == t:
            break
        n += 1
    else:
        raise SearchCeilingExceeded(f"no admissible base below {search_ceiling} for m={m}, t={t}")
    q = next_prime(2 * sel[0])
    core = prod(sel)
    n1, n2 = (core * q, core) if t % 2 == 0 else (core, core * q)

    assert sel[-1] < 2 * sel[0] and gcd(m, n1 * n2) == 1
    assert mobius_star(n1) == -1 and mobius_star(n2) == 1
    return WitnessPlan(m, t, n, tuple(sel), q, n1, n2)


def _window(plan: WitnessPlan, sign: int) -> TruncatedSeries:
    """Phi*_{m*n} modulo x^{2*p_1} for n = n1 (sign -1) or n2 (sign +1).

    Within the window the only surviving factors of the unitary binomial
    product are (1 - x^d)^(mu*(m n / d)) for d a unitary divisor of m or
    one of the chosen primes; ``sign`` is mu*(n).
    """
    order = 2 * plan.primes[0]
    mu_m = mobius_star(plan.m)
    win = TruncatedSeries.one(order)
    for d in unitary_divisors(plan.m):
        e = sign * mobius_star(plan.m // d)
        win = win.mul_one_minus(d) if e == 1 else win.div_one_minus(d)
    for p in plan.primes:
        e = -sign * mu_m
        win = win.mul_one_minus(p) if e == 1 else win.div_one_minus(p)
    return win


def truncated_phi_star(plan: WitnessPlan) -> TruncatedSeries:
    """Phi*_{m*n1} modulo x^{2*p_1}, computed two independent ways.

    Route one keeps the surviving binomial factors of the unitary product;
    route two multiplies the reciprocal series of Phi*_m by
    1 - mu*(m) * (x^{p_1} + ... + x^{p_t}).  They must agree exactly.
    """
    order = 2 * plan.primes[0]
    direct = _window(plan, -1)
    mu_m = mobius_star(plan.m)
    mask = [0] * order
    mask[0] = 1
    for p in plan.primes:
        mask[p] -= mu_m
    closed = reciprocal_series(plan.m, order) * TruncatedSeries(mask, order)
    if direct != closed:
        raise InternalMismatch(f"window routes disagree for m={plan.m}, t={plan.t}")
    return direct


def coefficient_window_direct(plan: WitnessPlan, ceiling: int = 1_000_000) -> TruncatedSeries:
    """Window of the *full* Phi*_{m*n1}: the independent heavyweight oracle."""
    index = plan.m * plan.n1
    if index > ceiling:
        raise CeilingExceeded(f"index {index} exceeds the ceiling {ceiling}")
    return family_polynomial("phi-star", index).truncated(2 * plan.primes[0])


def verify_witness(
    m: int,
    t: int,
    *,
    oracle_ceiling: int = 1_000_000,
    search_ceiling: int = 1_000_000,
) -> WitnessReport:
    """Build the plan for (m, t), predict the window coefficients, verify all.

    The checked facts: the closed window formula holds across the whole tail
    of the window; the two case-specific coefficients of Phi*_{m*n1} take
    their predicted values (realizing 1-t and t-1, or t-1 and one of 1-t/-t,
    depending on mu*(m) and m mod 4); the window of Phi*_{m*n2} is the
    series inverse of the n1 window, forcing c*_{m*n2}(k) = -a*_{m*n1}(k)
    below x^{2*p_1}; and whenever the full polynomials are small enough to
    construct, their truncations reproduce both windows.

    Raises PredictionMismatch (carrying the report) if anything disagrees.
    """
    plan = build_plan(m, t, search_ceiling)
    order = 2 * plan.primes[0]
    mu_m = mobius_star(m)
    p_t = plan.primes[-1]

    win1 = truncated_phi_star(plan)

    u = reciprocal_series(m, m)
    ustar = lambda j: u.coefficient(j % m)
    window_formula_ok = all(
        win1.coefficient(k) == ustar(k) - mu_m * t * ustar(k - 1) for k in range(p_t, order)
    )

    if mu_m == 1:
        q2 = unitary_divisors(m)[2]  # second-smallest unitary divisor > 1
        assert p_t + q2 < order
        case_tag = "mu-star-plus"
        predictions = ((p_t, 1 - t), (p_t + q2, t - 1))
    elif m % 4 == 2:
        case_tag = "mu-star-minus-2mod4"
        predictions = ((p_t, t - 1), (p_t + 1, 1 - t))
    else:
        case_tag = "mu-star-minus-other"
        predictions = ((p_t, t - 1), (p_t + 1, -t))

    win2 = _window(plan, +1)
    c_window = -win2.inverse()  # Psi*_{m*n2} = -1/Phi*_{m*n2} below x^{m*n2}
    reduction_ok = c_window == -win1

    checks = [
        CoefficientCheck("phi-star", k, win1.coefficient(k), value)
        for k, value in predictions
    ]
    checks += [
        CoefficientCheck("psi-star", k, c_window.coefficient(k), -value)
        for k, value in predictions
    ]

    phi_star_oracle = psi_star_oracle = None
    if m * plan.n1 <= oracle_ceiling:
        phi_star_oracle = coefficient_window_direct(plan, oracle_ceiling) == win1
    if m * plan.n2 <= oracle_ceiling:
        full_psi = family_polynomial("psi-star", m * plan.n2).truncated(order)
        psi_star_oracle = full_psi == c_window

    all_match = (
        window_formula_ok
        and reduction_ok
        and all(c.ok for c in checks)
        and phi_star_oracle is not False
        and psi_star_oracle is not False
    )
    report = WitnessReport(
        plan=plan,
        case_tag=case_tag,
        checks=tuple(checks),
        window_formula_ok=window_formula_ok,
        reduction_ok=reduction_ok,
        phi_star_oracle=phi_star_oracle,
        psi_star_oracle=psi_star_oracle,
        realized_unitary=tuple(v for _, v in predictions),
        realized_inverse=tuple(-v for _, v in predictions),
        all_match=all_match,
    )
    if not all_match:
        raise PredictionMismatch(report, f"witness verification failed for m={m}, t={t}")
    return report
