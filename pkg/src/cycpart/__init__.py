"""Counting partitions of residues mod m into distinct parts, and the
bi-color necklaces that match them."""

from .necklaces import count_aperiodic, count_freq_dividing, identity_audit, theorem3_dispatch
from .numtheory import ramanujan_sum
from .partitions import a_coeff, maximizers, q_mod, q_table, urn_distribution

__version__ = "0.1.0"
