"""Exact dense integer polynomials and truncated integer power series.

A polynomial is a tuple of arbitrary-precision ints, ``coeffs[j]`` holding
the coefficient of x^j.  The tuple never ends in a zero; the zero
polynomial is the empty tuple and has degree -1 by convention.

Multiplication and division by binomials x^d - 1 run in O(degree) time and
are the workhorses of every product formula in the package.  General
multiplication switches to Kronecker substitution (packing coefficients
into one big integer) once operands are large enough for schoolbook
convolution to hurt.
"""
from __future__ import annotations

from itertools import accumulate, zip_longest
from operator import sub


class NonExactDivision(ArithmeticError):
    """A polynomial division that was required to be exact left a remainder."""


class NonUnitConstantTerm(ArithmeticError):
    """Series inversion needs a constant term of +1 or -1."""


# ---------------------------------------------------------------------------
# list-level kernels (shared with the cyclotomic sweep code)

def _mul_xd_minus_1(c: list, d: int) -> list:
    """Coefficients of f * (x^d - 1): out[j] = c[j-d] - c[j]."""
    z = [0] * d
    return list(map(sub, z + c, c + z))


def _div_xd_minus_1(c: list, d: int) -> list:
    """Coefficients of f / (x^d - 1); raises NonExactDivision on a remainder.

    From g*(x^d - 1) = f one gets g[j] = g[j-d] - f[j], i.e. each residue
    class mod d of g is the negated prefix sum of the same class of f.  The
    division is exact iff the top d entries of the recurrence vanish.
    """
    n = len(c)
    if n <= d:
        raise NonExactDivision(f"degree {n - 1} polynomial not divisible by x^{d} - 1")
    out = [0] * n
    for r in range(d):
        out[r::d] = [-s for s in accumulate(c[r::d])]
    if any(out[n - d :]):
        raise NonExactDivision(f"remainder after division by x^{d} - 1")
    del out[n - d :]
    return out


def _mul_schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _pack(cs, width: int) -> int:
    return int.from_bytes(b"".join(c.to_bytes(width, "little") for c in cs), "little")


def _unpack(v: int, width: int, count: int) -> list:
    raw = v.to_bytes(width * count, "little")
    return [int.from_bytes(raw[i : i + width], "little") for i in range(0, width * count, width)]


def _mul_kronecker(a, b):
    """Exact product via evaluation at x = 2^(8*width).

    Signed inputs are split into non-negative parts P - N; with
    P1 = Pa*Pb, P2 = Na*Nb and P3 = (Pa+Na)*(Pb+Nb) the product is
    2*(P1 + P2) - P3 per coefficient, so three non-negative
    multiplications suffice.
    """
    count = len(a) + len(b) - 1
    bound = min(len(a), len(b)) * max(map(abs, a)) * max(map(abs, b))
    width = bound.bit_length() // 8 + 1
    if all(x >= 0 for x in a) and all(x >= 0 for x in b):
        return _unpack(_pack(a, width) * _pack(b, width), width, count)
    pa = _pack([x if x > 0 else 0 for x in a], width)
    na = _pack([-x if x < 0 else 0 for x in a], width)
    pb = _pack([x if x > 0 else 0 for x in b], width)
    nb = _pack([-x if x < 0 else 0 for x in b], width)
    p1 = _unpack(pa * pb, width, count)
    p2 = _unpack(na * nb, width, count)
    p3 = _unpack((pa + na) * (pb + nb), width, count)
    return [2 * (x + y) - z for x, y, z in zip(p1, p2, p3)]


_KRONECKER_CUTOFF = 4096


def _mul(a, b):
    if not a or not b:
        return []
    if len(a) * len(b) <= _KRONECKER_CUTOFF:
        return _mul_schoolbook(a, b)
    return _mul_kronecker(a, b)


def _trim(cs) -> tuple:
    cs = tuple(cs)
    end = len(cs)
    while end and cs[end - 1] == 0:
        end -= 1
    return cs[:end]


# ---------------------------------------------------------------------------


class IntPolynomial:
    """Immutable dense polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs: tuple = _trim(coeffs)

    @classmethod
    def binomial(cls, d: int) -> "IntPolynomial":
        """x^d - 1."""
        if d < 1:
            raise ValueError("binomial exponent must be >= 1")
        return cls((-1,) + (0,) * (d - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, j: int) -> int:
        """Coefficient of x^j (0 beyond the degree)."""
        if j < 0:
            raise ValueError("negative exponent")
        return self.coeffs[j] if j < len(self.coeffs) else 0

    def height(self) -> int:
        """Maximum coefficient in absolute value (0 for the zero polynomial)."""
        return max(map(abs, self.coeffs)) if self.coeffs else 0

    def coeff_set(self) -> set:
        """Set of all coefficients appearing up to the degree."""
        return set(self.coeffs)

    def is_flat(self) -> bool:
        """True when every coefficient lies in {-1, 0, 1}."""
        return self.height() <= 1

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return IntPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return IntPolynomial(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        if isinstance(other, IntPolynomial):
            return IntPolynomial(_mul(list(self.coeffs), list(other.coeffs)))
        return NotImplemented

    __rmul__ = __mul__

    def mul_binomial(self, d: int) -> "IntPolynomial":
        """Multiply by x^d - 1 in O(degree) operations."""
        if d < 1:
            raise ValueError("binomial exponent must be >= 1")
        if not self.coeffs:
            return self
        return IntPolynomial(_mul_xd_minus_1(list(self.coeffs), d))

    def div_binomial_exact(self, d: int) -> "IntPolynomial":
        """Divide by x^d - 1, raising NonExactDivision unless it divides exactly."""
        if d < 1:
            raise ValueError("binomial exponent must be >= 1")
        if not self.coeffs:
            return self
        return IntPolynomial(_div_xd_minus_1(list(self.coeffs), d))

    def inflate(self, r: int) -> "IntPolynomial":
        """The polynomial f(x^r)."""
        if r < 1:
            raise ValueError("inflation factor must be >= 1")
        if r == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * r + 1)
        for j, c in enumerate(self.coeffs):
            out[j * r] = c
        return IntPolynomial(out)

    def truncated(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_polynomial(self, order)

    def __repr__(self):
        return f"IntPolynomial({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if j == 1 else f"x^{j}")
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))


class TruncatedSeries:
    """Integer power series known modulo x^order.

    Arithmetic between two series requires identical truncation orders.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int):
        if order < 1:
            raise ValueError("order must be >= 1")
        cs = list(coeffs)[:order]
        cs += [0] * (order - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def from_polynomial(cls, f: IntPolynomial, order: int) -> "TruncatedSeries":
        return cls(f.coeffs, order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,), order)

    def coefficient(self, j: int) -> int:
        if not 0 <= j < self.order:
            raise ValueError(f"series only known modulo x^{self.order}")
        return self.coeffs[j]

    def _check_order(self, other):
        if self.order != other.order:
            raise ValueError("series arithmetic requires equal truncation orders")

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        a, b = _trim(self.coeffs), _trim(other.coeffs)
        return TruncatedSeries(_mul(list(a), list(b))[: self.order], self.order)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse modulo x^order; the constant term must be +-1."""
        a = self.coeffs
        c0 = a[0]
        if c0 not in (1, -1):
            raise NonUnitConstantTerm(f"constant term {c0} is not a unit")
        nz = [(j, aj) for j, aj in enumerate(a) if aj and j > 0]
        b = [0] * self.order
        b[0] = c0
        for k in range(1, self.order):
            s = 0
            for j, aj in nz:
                if j > k:
                    break
                s += aj * b[k - j]
            b[k] = -c0 * s
        return TruncatedSeries(b, self.order)

    def mul_one_minus(self, d: int) -> "TruncatedSeries":
        """Multiply by 1 - x^d, truncated."""
        if d < 1:
            raise ValueError("exponent must be >= 1")
        c = list(self.coeffs)
        if d < self.order:
            head = c[: self.order - d]
            c[d:] = [x - y for x, y in zip(c[d:], head)]
        return TruncatedSeries(c, self.order)

    def div_one_minus(self, d: int) -> "TruncatedSeries":
        """Divide by 1 - x^d (always exact on series), truncated."""
        if d < 1:
            raise ValueError("exponent must be >= 1")
        c = list(self.coeffs)
        if d < self.order:
            for r in range(d):
                c[r::d] = accumulate(c[r::d])
        return TruncatedSeries(c, self.order)

    def __repr__(self):
        return f"TruncatedSeries({self.coeffs!r}, order={self.order})"
