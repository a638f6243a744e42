"""Slow, independent reference implementations used only by the tests."""

from decimal import Decimal, getcontext, ROUND_FLOOR
import math

getcontext().prec = 220


def dec_value(a, b, c, d):
    """(a + b*sqrt(d)) / c to 200+ digits."""
    return (Decimal(a) + Decimal(b) * Decimal(d).sqrt()) / Decimal(c)


def dec_floor_mul(value, n):
    return int((value * n).to_integral_value(rounding=ROUND_FLOOR))


def dec_isqrt(n):
    return int(Decimal(n).sqrt().to_integral_value(rounding=ROUND_FLOOR))


def fib_word_naive(n):
    # classical s_{k+1} = s_k s_{k-1} concatenation
    a, b = "0", "01"
    while len(b) < n:
        a, b = b, b + a
    return b[:n]


def brute_cover(seqs, n):
    """Multiset of values <= n from explicit term lists."""
    counts = {}
    for terms in seqs:
        for v in terms:
            if v <= n:
                counts[v] = counts.get(v, 0) + 1
    return counts


def fib_numbers(k):
    out = [0, 1]
    while len(out) <= k:
        out.append(out[-1] + out[-2])
    return out


def is_square(n):
    return n >= 0 and math.isqrt(n) ** 2 == n
