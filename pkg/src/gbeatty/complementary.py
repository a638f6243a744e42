"""Complementary pairs and triples of generalized Beatty sequences."""

from collections import Counter
from dataclasses import dataclass, field
import logging

from .gbs import GBS, FitError, Underdetermined, compose_A, compose_B, fit_from_terms, is_consistent_prefix
from .quadratic import PHI, isqrt
from .words import fixed_point, positions_of

log = logging.getLogger(__name__)


@dataclass
class PartitionReport:
    depth: int
    missing: list = field(default_factory=list)
    collisions: list = field(default_factory=list)  # (value, count)
    out_of_range: list = field(default_factory=list)  # values < 1
    mismatches: list = field(default_factory=list)  # filled by morphic_partition_check

    @property
    def exact(self):
        return not (self.missing or self.collisions or self.out_of_range or self.mismatches)

    @property
    def verdict(self):
        return "exact-partition" if self.exact else "failed"

    def to_dict(self):
        d = {"verdict": self.verdict, "depth": self.depth,
             "missing": self.missing, "collisions": [list(c) for c in self.collisions]}
        if self.out_of_range:
            d["out_of_range"] = self.out_of_range
        if self.mismatches:
            d["mismatches"] = [list(m) for m in self.mismatches]
        return d


class StreamBudgetExceeded(RuntimeError):
    pass


def _stream_values(stream, n, budget):
    """Values of a plain iterable up to its first value > n, and its safe depth."""
    values, last = [], None
    for i, v in enumerate(stream):
        if v > n:
            return values, (last if last is not None else n)
        values.append(v)
        last = v
        if i >= budget:
            break
    raise StreamBudgetExceeded(f"stream did not exceed {n} within {budget} terms")


def partition_check(seqs, n, budget=None):
    """Check that the sequences partition {1, ..., n} as a multiset.

    GBS arguments are enumerated exhaustively below n (they need not be
    monotone or injective).  Any other argument is treated as a
    non-decreasing stream and read up to its first value above n; the
    checked depth is then cut to the last value it produced at or below n.
    """
    if budget is None:
        budget = 100 * n + 1000
    counts = Counter()
    safe = n
    for s in seqs:
        if isinstance(s, GBS):
            vals = [v for _, v in s.values_upto(n)]
        else:
            vals, s_safe = _stream_values(iter(s), n, budget)
            safe = min(safe, s_safe)
        counts.update(vals)
    report = PartitionReport(depth=safe)
    report.out_of_range = sorted(v for v in counts if v < 1)
    report.missing = [m for m in range(1, safe + 1) if m not in counts]
    report.collisions = sorted((v, c) for v, c in counts.items() if c > 1 and 1 <= v <= safe)
    return report


# -- necessary conditions ------------------------------------------------------

def density_condition(p, q, s, t):
    """The two integer equations equivalent to 1/(p phi + q) + 1/(s phi + t) = 1."""
    return p * s + p * t + q * s - p - s == 0 and q + t - p * s - q * t == 0


def density_holds(alpha, p, q, s, t):
    """1/(p alpha + q) + 1/(s alpha + t) = 1, decided exactly in Q(sqrt d).

    Written as x + y = x*y with x = (u1 + v1 sqrt d)/c, y = (u2 + v2 sqrt d)/c.
    """
    a, b, c, d = alpha.a, alpha.b, alpha.c, alpha.d
    u1, v1 = p * a + q * c, p * b
    u2, v2 = s * a + t * c, s * b
    if (u1 == 0 and v1 == 0) or (u2 == 0 and v2 == 0):
        return False
    return c * (u1 + u2) == u1 * u2 + v1 * v2 * d and c * (v1 + v2) == u1 * v2 + u2 * v1


def delta_is_square(p, s):
    delta = 5 * p * p * s * s - 4 * p * s
    return delta >= 0 and isqrt(delta) ** 2 == delta


def _odd_index_fib_zero(p):
    """Smallest odd i with p | F_i, or None; scans one Pisano period."""
    if p < 1:
        raise ValueError("p must be positive")
    if p == 1:
        return 1
    a, b, i = 0, 1, 0  # (F_i, F_{i+1}) mod p
    while True:
        if i % 2 == 1 and a == 0:
            return i
        a, b, i = b, (a + b) % p, i + 1
        if (a, b) == (0, 1):
            # back at the start: F_i = 0 mod p, and nothing odd came before
            return i if i % 2 == 1 else None


def divides_odd_index_fib(p):
    return _odd_index_fib_zero(p) is not None


def pell_witness(p):
    """(x, y) with 5 p^2 x^2 - 4x = y^2, built from the least odd-index F divisible by p."""
    i = _odd_index_fib_zero(p)
    if i is None:
        return None
    a, b = 0, 1
    for _ in range(i):
        a, b = b, a + b
    beta = a // p
    gamma = isqrt(5 * a * a - 4)
    assert gamma * gamma == 5 * a * a - 4
    x, y = beta * beta, beta * gamma
    assert 5 * p * p * x * x - 4 * x == y * y
    return x, y


def neg_one_square_mod(p):
    if p < 1:
        raise ValueError("p must be positive")
    return any((y * y + 1) % p == 0 for y in range(p))


# -- pair search -----------------------------------------------------------------

class BranchBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PairSolution:
    v: GBS
    w: GBS
    verified_depth: int

    @property
    def sixtuple(self):
        return self.v.params + self.w.params


def _extend(alpha, terms, fitted, m):
    """Append m to an unfitted sequence; returns (terms, fit) or None if ruled out."""
    terms = terms + [m]
    if fitted is not None:
        return terms, fitted
    if not is_consistent_prefix(alpha, terms):
        return None
    try:
        v = fit_from_terms(alpha, terms)
    except Underdetermined:
        return terms, None
    except FitError:
        return None
    if v.trivial or not v.is_increasing():
        return None
    return terms, v


def pair_search(alpha, depth=10**4, branch_bound=10**6):
    """All non-trivial increasing complementary pairs over alpha, V(1) = 1.

    Integers 2, 3, ... are handed to V or W in order.  A sequence's
    parameters are fixed as soon as its terms determine them; from then on
    its values are forced.  Once both are fixed the pair is checked with
    partition_check to ``depth`` and with the density equation.
    """
    found = {}
    nodes = 0

    def visit(vt, vf, wt, wf, m):
        nonlocal nodes
        nodes += 1
        if nodes > branch_bound:
            raise BranchBoundExceeded(f"more than {branch_bound} search nodes")
        if vf is not None and wf is not None:
            report = partition_check([vf, wf], depth)
            if report.exact and density_holds(alpha, vf.p, vf.q, wf.p, wf.q):
                found[vf.params + wf.params] = PairSolution(vf, wf, depth)
            return
        nv = vf.eval(len(vt) + 1) if vf is not None else None
        nw = wf.eval(len(wt) + 1) if wf is not None else None
        if (nv is not None and nv < m) or (nw is not None and nw < m):
            return
        to_v = nv == m if vf is not None else not (wf is not None and nw == m)
        to_w = nw == m if wf is not None else not (vf is not None and nv == m)
        if to_v:
            ext = _extend(alpha, vt, vf, m)
            if ext is not None:
                visit(ext[0], ext[1], wt, wf, m + 1)
        if to_w:
            ext = _extend(alpha, wt, wf, m)
            if ext is not None:
                visit(vt, vf, ext[0], ext[1], m + 1)

    start = _extend(alpha, [], None, 1)
    if start is not None:
        visit(start[0], start[1], [], None, 2)
    log.info("pair_search(%s): %d nodes, %d solutions", alpha, nodes, len(found))
    return [found[k] for k in sorted(found)]


def pair_to_triple(v, w):
    """(V o A, V o B, W): a complementary triple from a golden-mean pair."""
    if v.alpha != PHI or w.alpha != PHI:
        raise ValueError("pair_to_triple needs the golden ratio")
    return compose_A(v), compose_B(v), w


def morphic_partition_check(mu, seed, expected, n, post_map=None):
    """Compare letter positions in a morphic word with expected GBS.

    The word is the fixed point of mu from ``seed``, optionally passed
    through ``post_map``, cut to length n.  ``expected`` pairs each letter
    with its GBS.  Mismatches are recorded as (letter, k, expected, got)
    with k the 1-based rank of the first differing term.
    """
    word = fixed_point(mu, seed, n)
    if post_map is not None:
        word = post_map.apply(word)
    word = word[:n]
    report = partition_check([g for _, g in expected], n)
    listed = {letter for letter, _ in expected}
    for letter in sorted(set(word) - listed):
        report.mismatches.append((letter, 1, None, positions_of(word, letter)[0]))
    for letter, g in expected:
        got = positions_of(word, letter)
        want = sorted(v for _, v in g.values_upto(n))
        if got != want:
            k = next((i for i, (x, y) in enumerate(zip(want, got)) if x != y), min(len(got), len(want)))
            report.mismatches.append((letter, k + 1,
                                      want[k] if k < len(want) else None,
                                      got[k] if k < len(got) else None))
    return report
