"""Coefficient-level investigations over the four polynomial families.

``minimal_n_table`` regenerates minimal-index tables: for each target
magnitude m it finds the smallest index n at which some coefficient of the
family polynomial has absolute value exactly m, together with the smallest
such exponent k and the signed value found there.

The remaining checks verify, instance by instance, structural facts about
polynomials with three pairwise-coprime prime-power components: their
coefficient set is a block of consecutive integers, it transfers along
congruences of the third component, heights jump by at most one, certain
constructed indices stay flat, and the inverse family obeys an explicit
height bound together with a convolution identity.
"""
from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from math import gcd

from .arith import is_prime, is_prime_power
from .cyclotomic import FAMILIES, _coeffs, family_polynomial

_CHUNK = 256  # fixed scan-chunk size; results never depend on worker count


class PreconditionUnmet(ValueError):
    """A hypothesis of the requested check fails for these inputs."""


class RangeExhausted(RuntimeError):
    """Some target magnitude was not attained within the scanned range."""

    def __init__(self, missing, records):
        self.missing = tuple(missing)
        self.records = tuple(records)
        super().__init__(f"no index up to the bound attains magnitude(s) {list(missing)}")


@dataclass(frozen=True)
class CoeffRecord:
    """Smallest n whose family polynomial contains a coefficient of size m."""

    m: int
    n: int
    degree: int
    k: int
    value: int


def _scan_chunk(family: str, m_max: int, lo: int, hi: int) -> dict:
    """First attainment of each magnitude 2..m_max for n in [lo, hi)."""
    found = {}
    pending = set(range(2, m_max + 1))
    for n in range(lo, hi):
        c = _coeffs(family, n)
        if not c:
            continue
        if min(pending, default=m_max + 1) <= max(map(abs, c)):
            for k, v in enumerate(c):
                a = abs(v)
                if a in pending:
                    found[a] = CoeffRecord(a, n, len(c) - 1, k, v)
                    pending.discard(a)
                    if not pending:
                        return found
    return found


def minimal_n_table(family: str, m_max: int, n_max: int, jobs: int = 1) -> list[CoeffRecord]:
    """CoeffRecords for m = 2..m_max scanning n = 1..n_max ascending.

    The scan runs over fixed-size chunks merged in order, so the result is
    identical for any number of worker processes.  Raises RangeExhausted
    (carrying the completed records) if some magnitude never appears.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    chunks = [(lo, min(lo + _CHUNK, n_max + 1)) for lo in range(1, n_max + 1, _CHUNK)]
    found: dict[int, CoeffRecord] = {}

    def merge(chunk_found: dict) -> bool:
        for m, rec in chunk_found.items():
            if m not in found:
                found[m] = rec
        return len(found) == m_max - 1

    if jobs <= 1:
        for lo, hi in chunks:
            if merge(_scan_chunk(family, m_max, lo, hi)):
                break
    else:
        with multiprocessing.Pool(processes=jobs) as pool:
            args = ((family, m_max, lo, hi) for lo, hi in chunks)
            for chunk_found in pool.imap(_scan_chunk_star, args):
                if merge(chunk_found):
                    break

    records = [found[m] for m in sorted(found)]
    missing = [m for m in range(2, m_max + 1) if m not in found]
    if missing:
        raise RangeExhausted(missing, records)
    return records


def _scan_chunk_star(args):
    return _scan_chunk(*args)


# ---------------------------------------------------------------------------
# ternary checks


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionUnmet(message)


def _require_coprime_prime_powers(values, minimum=3) -> None:
    for v in values:
        _require(is_prime_power(v), f"{v} is not a prime power")
        _require(v >= minimum, f"{v} is below the minimum {minimum}")
    vs = list(values)
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            _require(gcd(vs[i], vs[j]) == 1, f"{vs[i]} and {vs[j]} are not coprime")


@dataclass(frozen=True)
class TernaryCheckReport:
    triple: tuple[int, int, int]
    coeff_set: tuple[int, ...]
    minimum: int
    maximum: int
    is_consecutive: bool
    height: int
    missing: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.is_consecutive


def ternary_consecutive_check(p: int, q: int, r: int) -> TernaryCheckReport:
    """Is the coefficient set of Phi*_{pqr} an interval of consecutive integers?"""
    _require_coprime_prime_powers((p, q, r))
    f = family_polynomial("phi-star", p * q * r)
    cs = sorted(f.coeff_set())
    full = range(cs[0], cs[-1] + 1)
    missing = tuple(v for v in full if v not in set(cs))
    return TernaryCheckReport(
        (p, q, r), tuple(cs), cs[0], cs[-1], not missing, f.height(), missing
    )


@dataclass(frozen=True)
class CongruenceTransferReport:
    p: int
    q: int
    r: int
    s: int
    relation: str  # "same" or "negated"
    set_r: tuple[int, ...]
    set_s: tuple[int, ...]
    ok: bool


def congruence_transfer_check(p: int, q: int, r: int, s: int) -> CongruenceTransferReport:
    """Coefficient sets agree (resp. negate) when r = +s (resp. -s) mod pq."""
    _require_coprime_prime_powers((p, q, r, s))
    _require(r > max(p, q), f"r = {r} must exceed max(p, q) = {max(p, q)}")
    _require(s > max(p, q), f"s = {s} must exceed max(p, q) = {max(p, q)}")
    if (r - s) % (p * q) == 0:
        relation = "same"
    elif (r + s) % (p * q) == 0:
        relation = "negated"
    else:
        raise PreconditionUnmet(f"{r} is not congruent to +-{s} modulo {p * q}")
    set_r = family_polynomial("phi-star", p * q * r).coeff_set()
    set_s = family_polynomial("phi-star", p * q * s).coeff_set()
    expected = set_s if relation == "same" else {-v for v in set_s}
    return CongruenceTransferReport(
        p, q, r, s, relation, tuple(sorted(set_r)), tuple(sorted(set_s)), set_r == expected
    )


@dataclass(frozen=True)
class HeightJumpReport:
    p: int
    q: int
    s: int
    r: int
    height_s: int
    height_r: int
    lower_attained: bool
    upper_attained: bool
    ok: bool


def height_jump_check(p: int, q: int, s: int, r: int) -> HeightJumpReport:
    """H(Phi*_{pqs}) <= H(Phi*_{pqr}) <= H(Phi*_{pqs}) + 1 for r = +-s mod pq.

    Reports which of the two bounds is attained; no prediction is made as
    to which one it will be.
    """
    _require_coprime_prime_powers((p, q, r, s))
    _require(s >= 3, f"s = {s} must be >= 3")
    _require(max(p, q) > s, f"max(p, q) = {max(p, q)} must exceed s = {s}")
    _require(r > max(p, q), f"r = {r} must exceed max(p, q) = {max(p, q)}")
    _require((r - s) % (p * q) == 0 or (r + s) % (p * q) == 0,
             f"{r} is not congruent to +-{s} modulo {p * q}")
    h_s = family_polynomial("phi-star", p * q * s).height()
    h_r = family_polynomial("phi-star", p * q * r).height()
    return HeightJumpReport(
        p, q, s, r, h_s, h_r,
        lower_attained=h_r == h_s,
        upper_attained=h_r == h_s + 1,
        ok=h_s <= h_r <= h_s + 1,
    )


@dataclass(frozen=True)
class KaplanFlatnessReport:
    base_p: int
    base_q: int
    r: int
    cases: tuple[tuple[int, int, bool], ...]  # (c, sign of r^c mod base, flat?)
    ok: bool


def kaplan_flatness_check(p_a: int, q_b: int, r: int, c_max: int) -> KaplanFlatnessReport:
    """Phi*_{p^a q^b r^c} is flat for every c <= c_max with r^c = +-1 mod p^a q^b."""
    _require(is_prime_power(p_a), f"{p_a} is not a prime power")
    _require(is_prime_power(q_b), f"{q_b} is not a prime power")
    _require(gcd(p_a, q_b) == 1, f"{p_a} and {q_b} are not coprime")
    _require(is_prime(r), f"{r} is not prime")
    _require(gcd(r, p_a * q_b) == 1, f"{r} divides {p_a * q_b}")
    _require(c_max >= 1, "c_max must be >= 1")
    base = p_a * q_b
    cases = []
    for c in range(1, c_max + 1):
        rc = pow(r, c, base)
        if rc == 1:
            sign = 1
        elif rc == base - 1:
            sign = -1
        else:
            continue
        flat = family_polynomial("phi-star", base * r**c).is_flat()
        cases.append((c, sign, flat))
    return KaplanFlatnessReport(p_a, q_b, r, tuple(cases), all(f for _, _, f in cases))


@dataclass(frozen=True)
class PsiTernaryBoundReport:
    p: int
    q: int
    r: int
    height: int
    bound: int          # floor((p-1)(q-1)/r) + 1
    outer_bound: int    # p - 1
    factorization_ok: bool
    convolution_ok: bool
    ok: bool


def psi_star_ternary_bound_check(p: int, q: int, r: int) -> PsiTernaryBoundReport:
    """Height bound and convolution identity for Psi*_{pqr} with p < q < r.

    Checks H(Psi*_{pqr}) <= floor((p-1)(q-1)/r) + 1 <= p - 1, the
    factorization Psi*_{pqr}(x) = Phi*_{pq}(x) * Psi*_{pq}(x^r), and the
    equivalent coefficient convolution computed term by term.
    """
    _require_coprime_prime_powers((p, q, r), minimum=2)
    _require(p < q < r, f"need p < q < r, got {(p, q, r)}")
    psi = family_polynomial("psi-star", p * q * r)
    height = psi.height()
    bound = (p - 1) * (q - 1) // r + 1
    outer = p - 1

    phi_pq = family_polynomial("phi-star", p * q)
    psi_pq = family_polynomial("psi-star", p * q)
    factorization_ok = psi == phi_pq * psi_pq.inflate(r)

    convolution_ok = True
    for k in range(psi.degree + 1):
        total = sum(
            phi_pq.coefficient(k - j * r) * psi_pq.coefficient(j) for j in range(k // r + 1)
        )
        if total != psi.coefficient(k):
            convolution_ok = False
            break

    return PsiTernaryBoundReport(
        p, q, r, height, bound, outer, factorization_ok, convolution_ok,
        ok=height <= bound <= outer and factorization_ok and convolution_ok,
    )
