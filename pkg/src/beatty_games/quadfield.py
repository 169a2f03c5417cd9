"""Exact arithmetic in real quadratic fields and exact Beatty-sequence primitives.

Every value is an exact (p + q*sqrt(D))/r with integer p, q, r > 0 and a
square-free radicand D.  Floors, comparisons and sequence memberships are
decided with integer square roots only — no floating point anywhere, because
Beatty membership flips on knife-edge values that floats cannot represent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Tuple


def _square_free(d: int) -> Tuple[int, int]:
    """Split d = s*s * d' with d' square-free; returns (s, d')."""
    s = 1
    f = 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            s *= f
        f += 1
    return s, d


_QUAD_RE = re.compile(
    r"""^\(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*([+-]?\d+)$"""
)


class QuadraticNumber:
    """Immutable exact value (p + q*sqrt(D))/r.

    Normal form: r > 0, gcd(p, q, r) = 1, D square-free.  A perfect-square
    radicand folds into the rational part (q becomes 0), so q != 0 implies the
    value is irrational.  Values with q = 0 are rational and compare equal
    across different radicands.
    """

    __slots__ = ("p", "q", "r", "D")

    def __init__(self, p: int, q: int, r: int, D: int):
        if r == 0:
            raise ZeroDivisionError("denominator r must be nonzero")
        if D < 1:
            raise ValueError(f"radicand must be positive, got {D}")
        s, d = _square_free(D)
        q *= s
        if d == 1:
            # sqrt(1) == 1: the value is rational
            p += q
            q = 0
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(abs(p), abs(q)), r)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)
        object.__setattr__(self, "r", r // g)
        object.__setattr__(self, "D", d)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("QuadraticNumber is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def rational(cls, num: int, den: int = 1, D: int = 2) -> "QuadraticNumber":
        """Rational value carried inside the field Q(sqrt(D))."""
        return cls(num, 0, den, D)

    @classmethod
    def sqrt(cls, D: int) -> "QuadraticNumber":
        return cls(0, 1, 1, D)

    @classmethod
    def from_string(cls, text: str) -> "QuadraticNumber":
        """Parse the canonical text form "(p+q*sqrt(D))/r"."""
        m = _QUAD_RE.match(text.strip())
        if m is None:
            raise ValueError(f"cannot parse quadratic number: {text!r}")
        p = int(m.group(1))
        q = int(m.group(3)) * (-1 if m.group(2) == "-" else 1)
        d = int(m.group(4))
        r = int(m.group(5))
        return cls(p, q, r, d)

    def __str__(self) -> str:
        sign = "-" if self.q < 0 else "+"
        d = self.D if self.q != 0 else 1
        return f"({self.p}{sign}{abs(self.q)}*sqrt({d}))/{self.r}"

    def __repr__(self) -> str:
        return f"QuadraticNumber({self.p}, {self.q}, {self.r}, {self.D})"

    # -- predicates ------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    @property
    def is_integer(self) -> bool:
        return self.q == 0 and self.r == 1

    def as_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError("value is irrational")
        return Fraction(self.p, self.r)

    # -- arithmetic ------------------------------------------------------------

    def _pair(self, other) -> Optional[Tuple["QuadraticNumber", "QuadraticNumber"]]:
        """Coerce to a common field.  Rationals lift freely; true mixed-D raises."""
        if isinstance(other, int):
            other = QuadraticNumber(other, 0, 1, self.D)
        elif isinstance(other, Fraction):
            other = QuadraticNumber(other.numerator, 0, other.denominator, self.D)
        elif not isinstance(other, QuadraticNumber):
            return None
        a, b = self, other
        if a.D != b.D:
            if b.q == 0:
                b = QuadraticNumber(b.p, 0, b.r, a.D)
            elif a.q == 0:
                a = QuadraticNumber(a.p, 0, a.r, b.D)
            else:
                raise ValueError(f"mismatched radicands: {a.D} vs {b.D}")
        return a, b

    def __add__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return QuadraticNumber(a.p * b.r + b.p * a.r, a.q * b.r + b.q * a.r, a.r * b.r, a.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.p, -self.q, self.r, self.D)

    def __sub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return a + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return QuadraticNumber(
            a.p * b.p + a.q * b.q * a.D, a.p * b.q + a.q * b.p, a.r * b.r, a.D
        )

    __rmul__ = __mul__

    def inv(self) -> "QuadraticNumber":
        """Multiplicative inverse; exact rationalization by the conjugate."""
        if self.p == 0 and self.q == 0:
            raise ZeroDivisionError("inverse of zero")
        den = self.p * self.p - self.q * self.q * self.D
        # den == 0 would force p*p == q*q*D with D square-free, i.e. p == q == 0
        return QuadraticNumber(self.r * self.p, -self.r * self.q, den, self.D)

    def __truediv__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return a * b.inv()

    def __rtruediv__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return b * a.inv()

    def conjugate(self) -> "QuadraticNumber":
        """Field conjugate (p - q*sqrt(D))/r."""
        return QuadraticNumber(self.p, -self.q, self.r, self.D)

    # -- order -----------------------------------------------------------------

    def sign(self) -> int:
        """Sign of the value, decided by exact integer reasoning."""
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return (q > 0) - (q < 0)
        if (p > 0) == (q > 0):
            return 1 if p > 0 else -1
        # opposite signs: compare |p| against |q|*sqrt(D) by squaring
        if p * p > q * q * self.D:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    def _cmp(self, other) -> int:
        diff = self - other
        if diff is NotImplemented:
            raise TypeError(f"cannot compare QuadraticNumber with {type(other)!r}")
        return diff.sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and Fraction(self.p, self.r) == other
        if not isinstance(other, QuadraticNumber):
            return NotImplemented
        if self.q == 0 and other.q == 0:
            return (self.p, self.r) == (other.p, other.r)
        return (self.p, self.q, self.r, self.D) == (other.p, other.q, other.r, other.D)

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.r, self.D))

    def __bool__(self):
        return self.p != 0 or self.q != 0

    # -- exact floors ------------------------------------------------------------

    def floor(self) -> int:
        """Exact floor of the value."""
        w = _floor_mul_sqrt(self.q, self.D)
        return (self.p + w) // self.r

    def decimal(self, digits: int = 12) -> str:
        """Truncated decimal rendering (display aid only, never authoritative)."""
        scale = 10 ** digits
        num = self.p * scale + _floor_mul_sqrt(self.q * scale, self.D)
        v = num // self.r
        sign = "-" if v < 0 else ""
        v = abs(v)
        return f"{sign}{v // scale}.{v % scale:0{digits}d}"


def _floor_mul_sqrt(t: int, D: int) -> int:
    """floor(t * sqrt(D)) for integer t.

    t*t*D is never a perfect square for t != 0 and square-free D > 1, so the
    negative branch needs no exactness correction.
    """
    if t == 0:
        return 0
    if t > 0:
        return isqrt(t * t * D)
    return -isqrt(t * t * D) - 1


def beatty_floor(alpha: QuadraticNumber, n: int) -> int:
    """Exact floor(n * alpha) for n >= 0."""
    if n < 0:
        raise ValueError("index must be non-negative")
    return (n * alpha.p + _floor_mul_sqrt(n * alpha.q, alpha.D)) // alpha.r


def fractional_part(x: QuadraticNumber) -> QuadraticNumber:
    """x - floor(x), exact, in [0, 1)."""
    return x - x.floor()


@dataclass(frozen=True)
class BeattyPair:
    """Slopes (alpha, beta) of a complementary Beatty pair: 1/alpha + 1/beta = 1."""

    alpha: QuadraticNumber
    beta: QuadraticNumber

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if a.q == 0:
            raise ValueError("alpha must be irrational")
        if not (1 < a < 2):
            raise ValueError(f"alpha must lie in (1, 2), got {a}")
        if not (2 < b):
            raise ValueError(f"beta must exceed 2, got {b}")
        if a.inv() + b.inv() != 1:
            raise ValueError("1/alpha + 1/beta = 1 fails")


def conjugate_beatty(alpha: QuadraticNumber) -> BeattyPair:
    """Complete alpha in (1,2) to its complementary pair: beta = alpha/(alpha-1)."""
    if alpha.q == 0:
        raise ValueError("alpha must be irrational")
    if not (1 < alpha < 2):
        raise ValueError(f"alpha must lie in (1, 2), got {alpha}")
    beta = alpha / (alpha - 1)
    return BeattyPair(alpha, beta)


def beatty_membership(gamma: QuadraticNumber, n: int) -> bool:
    """True iff n appears in the sequence {floor(m * gamma) : m >= 0}.

    Candidate-index test: the only m that can work is ceil(n / gamma), so one
    exact floor confirms or refutes membership in O(1) big-integer work.
    """
    if gamma.q == 0 or not gamma > 1:
        raise ValueError("gamma must be an irrational greater than 1")
    if n < 0:
        return False
    if n == 0:
        return True
    m = beatty_floor(gamma.inv(), n) + 1  # ceil(n/gamma); n/gamma is irrational
    return beatty_floor(gamma, m) == n


def delta2(alpha: QuadraticNumber, n: int) -> int:
    """Second difference (floor(n*beta)-floor((n-1)*beta)) - (floor(n*alpha)-floor((n-1)*alpha))."""
    if n < 1:
        raise ValueError("delta2 is defined for n >= 1")
    beta = conjugate_beatty(alpha).beta
    return (beatty_floor(beta, n) - beatty_floor(beta, n - 1)) - (
        beatty_floor(alpha, n) - beatty_floor(alpha, n - 1)
    )


class Trichotomy(Enum):
    """Which of the two derived index sequences n belongs to."""

    ZERO = 0
    PLUS = 1
    MINUS = -1


def trichotomy_class(alpha: QuadraticNumber, n: int) -> Trichotomy:
    """Classify n by membership in X = {floor(m/{alpha})} and Y = {floor(m/{beta})}.

    delta2(alpha, n+1) always equals floor(beta) - 1 + d with d the value of
    the returned class.
    """
    pair = conjugate_beatty(alpha)
    in_x = beatty_membership(fractional_part(pair.alpha).inv(), n)
    in_y = beatty_membership(fractional_part(pair.beta).inv(), n)
    if in_x == in_y:
        return Trichotomy.ZERO
    return Trichotomy.PLUS if in_y else Trichotomy.MINUS


def rayleigh_verify(pair: BeattyPair, limit: int) -> bool:
    """Check that the two Beatty sequences tile [0, limit] with only 0 shared."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    hits = bytearray(limit + 1)
    for gamma in (pair.alpha, pair.beta):
        n = 0
        while True:
            v = beatty_floor(gamma, n)
            if v > limit:
                break
            hits[v] += 1
            n += 1
    return hits[0] == 2 and all(h == 1 for h in hits[1:])


def solve_unit_combination(
    u: QuadraticNumber, v: QuadraticNumber
) -> Optional[Tuple[int, int]]:
    """Unique positive integers (p, q) with p*u + q*v = 1, if they exist.

    Splitting into rational and sqrt(D) coordinates gives two rational linear
    equations; the solution is accepted only when integral and positive.  A
    singular system means u and v are rational multiples of each other, in
    which case no solution exists for irrational u, v.
    """
    if u.q == 0 or v.q == 0:
        raise ValueError("u and v must be irrational")
    if u.D != v.D:
        raise ValueError(f"mismatched radicands: {u.D} vs {v.D}")
    det = Fraction(u.p, u.r) * Fraction(v.q, v.r) - Fraction(v.p, v.r) * Fraction(u.q, u.r)
    if det == 0:
        return None
    p = Fraction(v.q, v.r) / det
    q = -Fraction(u.q, u.r) / det
    if p.denominator != 1 or q.denominator != 1 or p <= 0 or q <= 0:
        return None
    return int(p), int(q)
