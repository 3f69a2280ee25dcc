"""Dimension of the span of symmetric-power characters of S_n.

D(n) is computed as the rank of the matrix of truncated series
1/prod(1 - q^lam_i), lam |- n, alongside the upper bound U(n) and the lower
bounds E(n) >= G(n) >= H(n).
"""

from .bounds import (
    BoundsRecord,
    GreedyDecomposition,
    asymptotics_probe,
    bounds_table,
    check_nu_inequality,
    compute_E,
    compute_G,
    compute_H,
    compute_U,
    gap_statistic,
    nu,
)
from .partitions import (
    Partition,
    conjugate,
    count_partitions,
    d_statistic,
    enumerate_partitions,
    euler_phi,
)
from .rank import (
    CoefficientMatrix,
    RelationCertificate,
    build_matrix,
    nullspace_certificates,
    rank_exact,
    rank_modular,
    verify_certificate,
)
from .series import (
    TruncatedSeries,
    cyclotomic_profile,
    elementary_specialization_row,
    series_modular_row,
    series_row,
    truncation_degree,
)

__version__ = "0.1.0"
