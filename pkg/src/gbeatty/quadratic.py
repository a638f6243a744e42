"""Exact arithmetic on real quadratic irrationals (a + b*sqrt(d)) / c.

Everything here is integer-only; no floating point is used to decide a
floor or a comparison.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
import math


def isqrt(m):
    """Return floor(sqrt(m)) for a non-negative integer m."""
    if m < 0:
        raise ValueError(f"isqrt of negative number {m}")
    return math.isqrt(m)


def _square_part(d):
    """Split d = s*s * core with core squarefree."""
    s, core, f = 1, d, 2
    while f * f <= core:
        while core % (f * f) == 0:
            core //= f * f
            s *= f
        f += 1
    return s, core


def surd_sign(x, y, d):
    """Sign of x + y*sqrt(d) for integers x, y and d >= 0."""
    if y == 0:
        return (x > 0) - (x < 0)
    if x >= 0 and y >= 0:
        return 1
    if x <= 0 and y <= 0:
        return -1
    # opposite signs: compare squares
    lhs, rhs = x * x, y * y * d
    if lhs == rhs:
        return 0
    if x > 0:
        return 1 if lhs > rhs else -1
    return 1 if rhs > lhs else -1


def floor_surd(x, y, d):
    """floor(x + y*sqrt(d)) for integers, d not a perfect square (or y == 0)."""
    if y == 0:
        return x
    root = isqrt(y * y * d)
    if root * root == y * y * d:
        return x + (root if y > 0 else -root)
    return x + (root if y > 0 else -root - 1)


@dataclass(frozen=True)
class QuadraticIrrational:
    """The number (a + b*sqrt(d)) / c, kept in normal form.

    Normal form: d squarefree and >= 2, b != 0, c > 0, gcd(a, b, c) == 1.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        a, b, c, d = (int(v) for v in (self.a, self.b, self.c, self.d))
        if c == 0:
            raise ValueError("denominator must be non-zero")
        if d < 2:
            raise ValueError(f"radicand must be >= 2, got {d}")
        s, d = _square_part(d)
        b *= s
        if d == 1 or b == 0:
            raise ValueError("value is rational")
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(a, b), c)
        object.__setattr__(self, "a", a // g)
        object.__setattr__(self, "b", b // g)
        object.__setattr__(self, "c", c // g)
        object.__setattr__(self, "d", d)

    # -- construction ---------------------------------------------------

    @classmethod
    def parse(cls, text):
        """Parse ``golden``, ``sqrt:<d>`` or ``quad:<a>,<b>,<c>,<d>``."""
        text = text.strip()
        if text in ("golden", "phi"):
            return PHI
        kind, _, rest = text.partition(":")
        try:
            if kind == "sqrt":
                return cls(0, 1, 1, int(rest))
            if kind == "quad":
                a, b, c, d = (int(v) for v in rest.split(","))
                return cls(a, b, c, d)
        except ValueError as exc:
            raise ValueError(f"bad alpha {text!r}: {exc}") from None
        raise ValueError(f"bad alpha {text!r}; expected golden, sqrt:<d> or quad:<a>,<b>,<c>,<d>")

    def to_text(self):
        if self == PHI:
            return "golden"
        if self.a == 0 and self.b > 0 and self.c == 1:
            return f"sqrt:{self.b * self.b * self.d}"
        return f"quad:{self.a},{self.b},{self.c},{self.d}"

    def __str__(self):
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        root = f"√{self.d}" if mag == 1 else f"{mag}√{self.d}"
        num = f"{self.a}{sign}{root}" if self.a else (root if self.b > 0 else f"-{root}")
        return num if self.c == 1 else f"({num})/{self.c}"

    # -- exact evaluation -----------------------------------------------

    def floor_mul(self, n):
        """floor(n * self), exact."""
        return floor_surd(self.a * n, self.b * n, self.d) // self.c

    def floor(self):
        return self.floor_mul(1)

    def conjugate(self):
        return QuadraticIrrational(self.a, -self.b, self.c, self.d)

    def compare(self, x):
        """Sign of self - x for a rational x (int or Fraction)."""
        x = Fraction(x)
        u, v = x.numerator, x.denominator
        return surd_sign(self.a * v - u * self.c, self.b * v, self.d)

    def in_open_interval(self, lo, hi):
        return self.compare(lo) > 0 and self.compare(hi) < 0

    def frac(self):
        """The fractional part self - floor(self)."""
        return self - self.floor()

    def __float__(self):
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    # -- arithmetic with integers ----------------------------------------

    def __add__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return QuadraticIrrational(self.a + k * self.c, self.b, self.c, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticIrrational(-self.a, -self.b, self.c, self.d)

    def __sub__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return self + (-k)

    def __rsub__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return (-self) + k

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            raise ValueError("product is rational")
        return QuadraticIrrational(self.a * k, self.b * k, self.c, self.d)

    __rmul__ = __mul__


PHI = QuadraticIrrational(1, 1, 2, 5)
SQRT2 = QuadraticIrrational(0, 1, 1, 2)
SQRT8 = QuadraticIrrational(0, 1, 1, 8)


def floor_mul(alpha, n):
    return alpha.floor_mul(n)


def conjugate(alpha):
    return alpha.conjugate()


def is_sturm(alpha):
    """True iff alpha lies in (0, 1) and its conjugate does not."""
    return alpha.in_open_interval(0, 1) and not alpha.conjugate().in_open_interval(0, 1)


class PeriodNotDetected(Exception):
    """Raised when cf_expansion runs out of terms before the period closes."""

    def __init__(self, quotients):
        super().__init__(f"period not yet detected after {len(quotients)} partial quotients")
        self.quotients = quotients


def _surd_state(alpha):
    # rewrite alpha as (P + sqrt(D)) / Q with Q | D - P^2
    a, b, c, d = alpha.a, alpha.b, alpha.c, alpha.d
    P, D, Q = a, b * b * d, c
    if b < 0:
        P, Q = -a, -c
    if (D - P * P) % Q:
        m = abs(Q)
        P, D, Q = P * m, D * m * m, Q * m
    return P, D, Q


def cf_expansion(alpha, k=200):
    """Continued fraction of alpha as (preperiod, period).

    The integer part always belongs to the preperiod, so the golden ratio
    gives ([1], [1]).  The period is found by the first repeated (P, Q)
    state of the surd recursion; at most ``k`` quotients are computed.
    """
    P, D, Q = _surd_state(alpha)
    quotients = []
    seen = {}
    while len(quotients) < k:
        if quotients and (P, Q) in seen:
            start = seen[(P, Q)]
            return quotients[:start], quotients[start:]
        if quotients:
            seen[(P, Q)] = len(quotients)
        # floor((P + sqrt(D)) / Q); sqrt(D) is irrational so the ceiling is floor + 1
        x = floor_surd(P, 1, D)
        q = x // Q if Q > 0 else -(x // -Q + 1)
        quotients.append(q)
        P = q * Q - P
        Q = (D - P * P) // Q
    raise PeriodNotDetected(quotients)

