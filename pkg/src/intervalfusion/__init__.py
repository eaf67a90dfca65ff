"""Evidential multi-criteria decision making with interval-valued weights.

Classical belief assignments rating alternatives against criteria are
discounted by interval-valued weights into interval BPAs, fused per
criterion and per decision maker, collapsed back to a classical assignment,
and ranked by pignistic belief in the ideal hypothesis.
"""

from . import errors
from .errors import IntervalFusionError
from .evidence import Frame, MassFunction, combine_all
from .fuzzy import (
    INTERVAL_DEFAULT_SCALE,
    KAUFMANN_TFN_SCALE,
    LinguisticScale,
    TriangularFuzzyNumber,
    as_interval,
    builtin_scales,
    crisp_to_interval,
)
from .intervals import Interval
from .loading import bundled_dataset_bytes, load_problem
from .pipeline import (
    PER_DM,
    POOLED,
    DecisionProblem,
    IntervalBPA,
    RankingReport,
    bet_ideal,
    collapse_interval_bpa,
    discount_interval_bpa,
    discount_to_interval_bpa,
    fuse_interval_bpas,
    normalize_weight_group,
    part_triple,
    rank_alternatives,
)
from .reporting import FULL_TRACE, HUMAN_TABLE, JSON_FORMAT, SUMMARY, emit_report

__version__ = "0.1.0"

__all__ = [
    "DecisionProblem",
    "Frame",
    "FULL_TRACE",
    "HUMAN_TABLE",
    "INTERVAL_DEFAULT_SCALE",
    "Interval",
    "IntervalBPA",
    "IntervalFusionError",
    "JSON_FORMAT",
    "KAUFMANN_TFN_SCALE",
    "LinguisticScale",
    "MassFunction",
    "PER_DM",
    "POOLED",
    "RankingReport",
    "SUMMARY",
    "TriangularFuzzyNumber",
    "as_interval",
    "bet_ideal",
    "builtin_scales",
    "bundled_dataset_bytes",
    "collapse_interval_bpa",
    "combine_all",
    "crisp_to_interval",
    "discount_interval_bpa",
    "discount_to_interval_bpa",
    "emit_report",
    "errors",
    "fuse_interval_bpas",
    "load_problem",
    "normalize_weight_group",
    "part_triple",
    "rank_alternatives",
    "__version__",
]
