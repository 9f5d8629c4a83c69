"""Deficiency, barriers and criticality of k-matchings in graphs.

Exact classification of generalized factor-critical / bicritical and
k-d-critical graphs, fractional matchings and {K2, cycle}-factors,
certified spectral radii, and an exhaustive theorem-checking harness.
"""

__version__ = "0.1.0"

from .graph import Graph, GraphError, from_graph6, to_graph6, from_edge_list  # noqa: E402
from .barriers import BarrierReport, deficiency_k  # noqa: E402
from .criticality import (  # noqa: E402
    CriticalityVerdict,
    classify_gbc,
    classify_gfc,
    classify_kd,
    classify_parity,
)
from .matchings import (  # noqa: E402
    FactorDecomposition,
    HalfIntegralMatching,
    WeightedMatching,
    factor_predicates,
    fractional_matching,
)
from .spectral import SpectralResult, quotient_radius_join_family, spectral_radius  # noqa: E402
from .extremal import FamilySpec, parse_family  # noqa: E402

__all__ = [
    "BarrierReport", "CriticalityVerdict", "FactorDecomposition", "FamilySpec", "Graph",
    "GraphError", "HalfIntegralMatching", "SpectralResult", "WeightedMatching",
    "classify_gbc", "classify_gfc", "classify_kd", "classify_parity", "deficiency_k",
    "factor_predicates", "fractional_matching", "from_edge_list", "from_graph6",
    "parse_family", "quotient_radius_join_family", "spectral_radius", "to_graph6",
]
