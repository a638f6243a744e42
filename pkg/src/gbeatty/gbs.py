"""Generalized Beatty sequences n -> p*floor(n*alpha) + q*n + r."""

from dataclasses import dataclass, replace
from fractions import Fraction

from .quadratic import PHI, QuadraticIrrational


@dataclass(frozen=True)
class GBS:
    p: int
    q: int
    r: int
    alpha: QuadraticIrrational = PHI
    start: int = 1

    def __post_init__(self):
        if self.start not in (0, 1):
            raise ValueError(f"start index must be 0 or 1, got {self.start}")

    @property
    def params(self):
        return (self.p, self.q, self.r)

    @property
    def trivial(self):
        return self.p == 0

    def __call__(self, n):
        return self.eval(n)

    def eval(self, n):
        if n < self.start:
            raise ValueError(f"index {n} below start {self.start}")
        return self.p * self.alpha.floor_mul(n) + self.q * n + self.r

    def terms(self, count):
        """The first ``count`` terms, beginning at the start index."""
        return [self.eval(n) for n in range(self.start, self.start + count)]

    def letters(self):
        """The two possible first differences, smaller-floor step first."""
        f = self.alpha.floor()
        return (self.p * f + self.q, self.p * (f + 1) + self.q)

    def is_increasing(self):
        return min(self.letters()) > 0

    def slope_sign(self):
        """Sign of p*alpha + q, the asymptotic growth rate."""
        return (self.alpha * self.p).compare(-self.q) if self.p else (self.q > 0) - (self.q < 0)

    def values_upto(self, bound):
        """All (n, V(n)) with V(n) <= bound, for a sequence of positive slope.

        Uses p*floor(n*alpha) > p*n*alpha - |p| to know when no later term
        can drop back to ``bound``.
        """
        if self.slope_sign() <= 0:
            raise ValueError(f"{self} does not tend to +infinity")
        out = []
        n = self.start
        while True:
            v = self.eval(n)
            if v <= bound:
                out.append((n, v))
            # lower bound for every term from n on: slope*n + r - |p|
            elif n > 0 and self._lower_bound_exceeds(n, bound):
                return out
            n += 1

    def _lower_bound_exceeds(self, n, bound):
        # p*n*alpha + q*n + r - |p| > bound, with slope > 0
        rhs = bound - self.q * n - self.r + abs(self.p)
        if self.p == 0:
            return 0 > rhs
        return (self.alpha * (self.p * n)).compare(rhs) > 0

    def to_text(self):
        s = f"gbs:{self.p},{self.q},{self.r}@{self.alpha.to_text()}"
        return s if self.start == 1 else f"{s}#{self.start}"

    @classmethod
    def parse(cls, text, alpha=None, start=None):
        """Parse ``gbs:<p>,<q>,<r>@<alpha>[#<start>]``; a bare ``p,q,r`` is also accepted."""
        text = text.strip()
        if text.startswith("gbs:"):
            text = text[4:]
        body, _, st = text.partition("#")
        triple, _, alpha_text = body.partition("@")
        try:
            p, q, r = (int(v) for v in triple.split(","))
        except ValueError:
            raise ValueError(f"bad GBS {text!r}") from None
        if alpha_text:
            alpha = QuadraticIrrational.parse(alpha_text)
        if st:
            start = int(st)
        return cls(p, q, r, alpha if alpha is not None else PHI, 1 if start is None else start)

    def __str__(self):
        return f"({self.p},{self.q},{self.r})" + ("" if self.start == 1 else "@0")


def difference_word(v, n):
    """The n-1 first differences of v, beginning at its start index."""
    if n < 2:
        raise ValueError("need at least 2 terms")
    t = v.terms(n)
    return [b - a for a, b in zip(t, t[1:])]


class FitError(ValueError):
    """Terms are not those of any GBS over the given alpha."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class Underdetermined(FitError):
    """Too few terms to pin down p, q and r."""


def _solve3(rows, rhs):
    # Cramer's rule over the rationals
    def det(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    d = det(rows)
    out = []
    for col in range(3):
        m = [list(r) for r in rows]
        for i in range(3):
            m[i][col] = rhs[i]
        out.append(Fraction(det(m), d))
    return out


def _rank(rows):
    # rank of an integer matrix via fraction-free elimination
    m = [list(r) for r in rows]
    rank, ncol = 0, len(m[0]) if m else 0
    for col in range(ncol):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f, g = m[i][col], m[rank][col]
                m[i] = [g * a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _design_rows(alpha, count, start):
    return [(alpha.floor_mul(n), n, 1) for n in range(start, start + count)]


def is_consistent_prefix(alpha, terms, start=1):
    """Whether some real (p, q, r) reproduces ``terms``.

    This is the rank test rank(M) == rank([M | terms]); used to prune a
    search before enough terms are known to pin the parameters down.
    """
    if not terms:
        return True
    rows = _design_rows(alpha, len(terms), start)
    return _rank(rows) == _rank([r + (t,) for r, t in zip(rows, terms)])


def fit_from_terms(alpha, terms, start=1):
    """Recover the GBS over alpha whose first terms are ``terms``.

    For 3/2 < alpha < 5/3 and start 1 this reduces to
    p = -V(1) + 2V(2) - V(3), q = V(1) - 3V(2) + 2V(3), r = V(1) + V(2) - V(3);
    in general the first three linearly independent rows of
    (floor(n alpha), n, 1) are used.  When {alpha} lies in (1/3, 2/3) three
    terms always suffice; for other alpha more may be needed.  Every given
    term is re-checked.  Raises FitError on failure.
    """
    terms = list(terms)
    rows = _design_rows(alpha, len(terms), start)
    chosen = []
    for i, row in enumerate(rows):
        if _rank([rows[j] for j in chosen] + [row]) > len(chosen):
            chosen.append(i)
            if len(chosen) == 3:
                break
    if len(chosen) < 3:
        raise Underdetermined(f"{len(terms)} terms do not determine a GBS over {alpha}")
    sol = _solve3([rows[i] for i in chosen], [terms[i] for i in chosen])
    if any(x.denominator != 1 for x in sol):
        raise FitError("no integer solution", index=start + chosen[-1])
    v = GBS(int(sol[0]), int(sol[1]), int(sol[2]), alpha, start)
    for i, t in enumerate(terms):
        if v.eval(start + i) != t:
            raise FitError(f"term {start + i} is {t}, fitted GBS gives {v.eval(start + i)}", index=start + i)
    return v


def gbs_from_difference_word(a, b, first_term, alpha=PHI):
    """The GBS over the golden ratio whose differences are x_F on {a, b}.

    x_F is 0 -> a, 1 -> b (so the word starts a, b, a, a, b).  Start index 1,
    first term V(1) = first_term.
    """
    p, q = a - b, 2 * b - a
    return GBS(p, q, first_term - p - q, alpha, 1)


def _require_golden(v):
    if v.alpha != PHI:
        raise ValueError("composition with A and B is only valid for the golden ratio")


def compose_A(v):
    """V o A with A(n) = floor(n phi)."""
    _require_golden(v)
    return GBS(v.p + v.q, v.p, v.r - v.p, PHI, 1)


def compose_B(v):
    """V o B with B(n) = floor(n phi^2)."""
    _require_golden(v)
    return GBS(2 * v.p + v.q, v.p + v.q, v.r, PHI, 1)


IDENTITY = GBS(0, 1, 0, PHI, 1)
A = GBS(1, 0, 0, PHI, 1)
B = GBS(1, 1, 0, PHI, 1)


def fib(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class CSHResult:
    coeff_A: int
    coeff_id: int
    lam: int


def csh_compose(word):
    """Compose A's and B's as written (``"AB"`` is A o B) into one GBS.

    Returns the GBS and the coefficients (F_{i+2j}, F_{i+2j-1}, lambda)
    where i, j count A's and B's and U(n) = F_{i+2j} A(n) + F_{i+2j-1} n - lambda.
    """
    if not word:
        raise ValueError("empty composition word")
    v = IDENTITY
    # U = X1 o X2 o ... ; right-composing keeps U o X valid at every step
    for x in word:
        if x == "A":
            v = compose_A(v)
        elif x == "B":
            v = compose_B(v)
        else:
            raise ValueError(f"composition letters are A and B, got {x!r}")
    i, j = word.count("A"), word.count("B")
    res = CSHResult(v.p, v.q, -v.r)
    assert res.coeff_A == fib(i + 2 * j) and res.coeff_id == fib(i + 2 * j - 1)
    return v, res


def hom_image(a, b):
    """The two GBS whose union is the set of a*#0(w) + b*#1(w) over Fibonacci factors w."""
    p, q = a - b, 2 * b - a
    return GBS(p, q, 0, PHI, 1), GBS(p, q, a - b, PHI, 1)


def with_start(v, start):
    return replace(v, start=start)
