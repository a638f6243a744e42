"""Exact tools for generalized Beatty sequences p*floor(n*alpha) + q*n + r.

Modules: ``quadratic`` (exact quadratic irrationals), ``gbs`` (the sequence
type and its algebra), ``words`` (morphisms and Sturmian words),
``complementary`` (partitions, Pell conditions, pair search) and
``returns`` (return words and Kimberling transforms of the Fibonacci word).
"""

from .quadratic import PHI, SQRT2, SQRT8, QuadraticIrrational, cf_expansion, floor_mul, is_sturm
from .gbs import GBS, compose_A, compose_B, csh_compose, difference_word, fit_from_terms
from .words import Morphism, fixed_point, fibonacci_word
from .complementary import PartitionReport, pair_search, partition_check

__version__ = "0.1.0"
