"""Return words of Fibonacci-word factors and the Kimberling transform.

All "is a factor" questions are answered against a fixed prefix of x_F
(``CORPUS_LENGTH`` letters).
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .gbs import GBS, gbs_from_difference_word
from .quadratic import PHI
from .words import fibonacci_word, has_overlap, occurrences, positions_of

CORPUS_LENGTH = 10**5


def corpus():
    return fibonacci_word(CORPUS_LENGTH)


def is_factor(w):
    return bool(w) and w in corpus()


@lru_cache(maxsize=None)
def singular_word(k):
    """The singular word s_k of x_F.

    s_0 = 1, s_1 = 00, s_2 = 101, s_3 = 00100 and
    s_{k+1} = s_{k-1} s_{k-2} s_{k-1}.  Running the same recurrence
    backwards gives s_{-1} = 0 and s_{-2} = empty, which lets the single
    letter 0 be handled like every other factor.
    """
    seeds = {-2: "", -1: "0", 0: "1", 1: "00", 2: "101", 3: "00100"}
    if k in seeds:
        return seeds[k]
    if k < -2:
        raise ValueError(f"no singular word of index {k}")
    return singular_word(k - 2) + singular_word(k - 3) + singular_word(k - 2)


def singular_decompose(w):
    """(k, mu1, mu2) with w = mu1 s_k mu2 and s_k the largest singular word in w."""
    if not is_factor(w):
        raise ValueError(f"{w!r} is not a factor of the Fibonacci word")
    k, j = -1, 0
    while len(singular_word(j)) <= len(w):
        if singular_word(j) in w:
            k = j
        j += 1
    s = singular_word(k)
    i = w.find(s)
    if w.find(s, i + 1) >= 0:
        raise ValueError(f"singular word {s!r} occurs twice in {w!r}")
    return k, w[:i], w[i + len(s):]


@dataclass(frozen=True)
class ReturnStructure:
    w: str
    r0: str
    r1: str
    r2: str
    k: int
    mu1: str
    mu2: str

    @property
    def t2(self):
        """r2 = w t2; only meaningful when w has no overlap."""
        if not self.r2.startswith(self.w):
            raise ValueError(f"{self.w!r} overlaps itself; r2 does not start with w")
        return self.r2[len(self.w):]

    @property
    def m1(self):
        """r1 = w m1 t2."""
        t2 = self.t2
        if not self.r1.endswith(t2):
            raise ValueError("t2 is not a suffix of r1")
        return self.r1[len(self.w):len(self.r1) - len(t2)]


def _strip_suffix(word, suffix):
    if not word.endswith(suffix):
        raise ValueError(f"{suffix!r} is not a suffix of {word!r}")
    return word[:len(word) - len(suffix)]


def formula_returns(w):
    """(r0, r1, r2) from the singular decomposition w = mu1 s_k mu2."""
    k, mu1, _ = singular_decompose(w)
    s = singular_word
    r1 = _strip_suffix(mu1 + s(k) + s(k + 1), mu1)
    r2 = _strip_suffix(mu1 + s(k) + s(k - 1), mu1)
    r0 = _strip_suffix(s(k + 1)[1:], mu1)
    return r0, r1, r2


def empirical_returns(w, text=None):
    """(r0, return word list) read off the occurrences of w in ``text``."""
    text = corpus() if text is None else text
    pos = [i - 1 for i in occurrences(text, w)]
    if len(pos) < 3:
        raise ValueError(f"corpus too short: {len(pos)} occurrences of {w!r}")
    return text[:pos[0]], [text[a:b] for a, b in zip(pos, pos[1:])]


def return_words(w, text=None):
    """Return-word structure of w, computed two ways that must agree."""
    r0, seq = empirical_returns(w, text)
    r1 = seq[0]
    others = {x for x in seq if x != r1}
    if len(others) != 1:
        raise ValueError(f"expected exactly two return words for {w!r}, found {len(others) + 1}")
    r2 = others.pop()
    if len(r1) <= len(r2):
        raise AssertionError(f"|r1| <= |r2| for {w!r}")
    if formula_returns(w) != (r0, r1, r2):
        raise AssertionError(f"return words of {w!r}: scan gives {(r0, r1, r2)}, formula gives {formula_returns(w)}")
    k, mu1, mu2 = singular_decompose(w)
    return ReturnStructure(w, r0, r1, r2, k, mu1, mu2)


def return_sequence(w, count, text=None):
    """The first ``count`` return words after r0, coded 0 for r1 and 1 for r2."""
    rs = return_words(w, text)
    _, seq = empirical_returns(w, text)
    if len(seq) < count:
        raise ValueError("corpus too short")
    return "".join("0" if x == rs.r1 else "1" for x in seq[:count])


def _verify(g, expected, what):
    got = g.terms(len(expected))
    if got != expected:
        k = next(i for i, (a, b) in enumerate(zip(got, expected)) if a != b)
        raise AssertionError(f"{what}: term {k + g.start} is {got[k]}, expected {expected[k]}")


def occurrence_gbs(w, depth=1000):
    """GBS over phi, start 1, whose n-th term is the position of the n-th occurrence of w."""
    rs = return_words(w)
    l1, l2 = len(rs.r1), len(rs.r2)
    g = gbs_from_difference_word(l1, l2, len(rs.r0) + 1)
    pos = occurrences(corpus(), w)
    _verify(g, pos[:depth], f"occurrences of {w!r}")
    return g


def kimberling_transform(text, w):
    """Replace occurrences of w by ``2``, scanning left to right without overlaps."""
    if not w:
        raise ValueError("empty word")
    return text.replace(w, "2")


def _transform_lengths(rs):
    n = len(rs.w)
    return len(rs.r1) - n + 1, len(rs.r2) - n + 1


def transform_gbs(w, depth=10**4):
    """Positions of 2 in the transform of x_F by w -> 2, as a GBS over phi.

    With l_i = |r_i| - |w| + 1: p = l1 - l2, q = 2 l2 - l1, r = |r0| - l2 + 1.
    The result is checked against the materialized transform for every
    position up to ``depth``.
    """
    if has_overlap(w, corpus()):
        raise ValueError(f"{w!r} has an overlap in the Fibonacci word; the transform positions are not a GBS")
    rs = return_words(w)
    l1, l2 = _transform_lengths(rs)
    g = GBS(l1 - l2, 2 * l2 - l1, len(rs.r0) - l2 + 1, PHI, 1)
    y = _materialize(w, depth)
    _verify(g, positions_of(y, "2"), f"transform of {w!r}")
    return g


def _materialize(w, depth):
    # transform a long enough prefix, then keep the part fixed by it
    y = kimberling_transform(corpus(), w)
    if len(y) < depth + 1:
        raise ValueError(f"corpus too short for depth {depth}")
    return y[:depth]


def sr0_check(w):
    """Both forms of the SR0 condition; they must agree."""
    rs = return_words(w)
    sr0 = len(rs.r0) <= len(rs.r1) - len(w)
    sr0_prime = len(rs.mu2) <= 1
    if sr0 != sr0_prime:
        raise AssertionError(f"SR0 and SR0' disagree for {w!r}")
    return sr0


@dataclass
class GBSUnion:
    components: list
    exceptions: list = field(default_factory=list)  # positions not covered by any component

    def values_upto(self, bound):
        return sorted(v for g in self.components for _, v in g.values_upto(bound))


def gbs_union_decompose(w, depth=10**4, require_sr0=True):
    """Write the positions of each letter of the w -> 2 transform as GBS unions.

    r1 = w m1 t2 and r2 = w t2.  The letter at offset j of t2 sits at
    Z(n) - |t2| + j, a shift of Z = positions of 2.  The letter at offset i
    of m1 follows the r1-blocks only; those blocks are spaced by the
    Fibonacci word on {l1 + l2, l1}.  Offsets inside the last |r0| letters
    of m1 t2 also occur once inside r0, which is the index-0 term.
    The result is checked against the materialized transform up to
    ``depth``; positions the construction cannot reach are listed in
    ``exceptions`` (this only happens when SR0 fails).
    """
    sr0 = sr0_check(w)
    if require_sr0 and not sr0:
        raise ValueError(f"{w!r} does not satisfy SR0")
    z = transform_gbs(w, depth)
    rs = return_words(w)
    m1, t2 = rs.m1, rs.t2
    l1, l2 = _transform_lengths(rs)
    block = m1 + t2
    if len(rs.r0) < len(t2):
        raise ValueError(f"|r0| < |t2| for {w!r}; the shifted copies of Z would start at index 2")
    head = len(block) - len(rs.r0)  # offsets >= head also occur in r0

    parts = {"2": [z]}
    r1_blocks = gbs_from_difference_word(l1 + l2, l1, z.eval(1))
    for i, letter in enumerate(m1):
        g = GBS(r1_blocks.p, r1_blocks.q, r1_blocks.r + 1 + i, PHI, 0 if i >= head else 1)
        parts.setdefault(letter, []).append(g)
    for j, letter in enumerate(t2):
        parts.setdefault(letter, []).append(GBS(z.p, z.q, z.r - len(t2) + j, PHI, 1))

    y = _materialize(w, depth)
    out = {}
    for letter in sorted(parts):
        comps = sorted(parts[letter], key=lambda g: (g.eval(g.start), g.params))
        union = GBSUnion(comps)
        vals = union.values_upto(depth)
        want = positions_of(y, letter)
        if len(set(vals)) != len(vals) or not set(vals) <= set(want):
            raise AssertionError(f"components for {letter!r} overlap or hit wrong positions")
        union.exceptions = sorted(set(want) - set(vals))
        if sr0 and union.exceptions:
            raise AssertionError(f"letter {letter!r}: positions {union.exceptions[:5]} not covered")
        out[letter] = union
    return out


def factors(m, text=None):
    """Distinct factors of length m, in order of first occurrence."""
    text = corpus()[:max(20 * m, 1000)] if text is None else text
    return list(dict.fromkeys(text[i:i + m] for i in range(len(text) - m + 1)))


def sr0_census(lengths=range(2, 21)):
    """For each m, the non-overlapping factors of length m satisfying SR0'."""
    text = corpus()
    return {m: [w for w in factors(m) if not has_overlap(w, text) and len(singular_decompose(w)[2]) <= 1]
            for m in lengths}
