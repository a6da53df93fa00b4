"""Shannon-invariant summaries of multivariate information decomposition.

The average degrees of redundancy and vulnerability, the redundancy-synergy
index and its dual are computed exactly from discrete joint distributions,
using only entropies. A brute-force decomposition for small systems and the
antichain lattice are included for verification.
"""
__version__ = "0.1.0"

from .dist import JointDistribution, SampleTable, from_samples, marginal, read_csv
from .infomeasures import conditional_mi, entropy, mutual_information
from .invariants import (
    BoundsReport,
    InvariantReport,
    analyze,
    avg_degree_redundancy,
    avg_degree_vulnerability,
    drsi,
    interpret_bounds,
    redundancy_sum,
    rsi,
    vulnerability_sum,
)
from .lattice import Antichain, enumerate_antichains
from .pid_oracle import AtomTable, atoms_moebius
from .quantize import QuantizerConfig, quantize_table, stochastic_quantize
