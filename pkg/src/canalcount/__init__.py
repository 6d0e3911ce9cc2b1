"""Exact enumeration and classification of canalizing Boolean functions."""

from .truthtable import (
    CanalizingDirection,
    LayerDecomposition,
    TruthTable,
    canalizing_test,
    classify,
    decompose,
    essential_variables,
    parse_truth_table,
    reconstruct,
)
from .enumeration import (
    CountTable,
    build_table,
    compositions,
    count_by_essential,
    count_depth,
    count_depth_layers,
    count_full,
    count_full_layers,
    count_ncf,
    multinomial,
    nondegenerate_inclusion_exclusion,
    ordered_set_partitions,
    total_functions,
)
from .prevalence import PrevalenceRecord, prevalence, prevalence_series
from .census import (
    CensusReport,
    census_exhaustive,
    census_resumable,
    census_sampled,
    compare,
    compare_sampled,
)

__all__ = [
    "CanalizingDirection",
    "CensusReport",
    "CountTable",
    "LayerDecomposition",
    "PrevalenceRecord",
    "TruthTable",
    "build_table",
    "canalizing_test",
    "census_exhaustive",
    "census_resumable",
    "census_sampled",
    "classify",
    "compare",
    "compare_sampled",
    "compositions",
    "count_by_essential",
    "count_depth",
    "count_depth_layers",
    "count_full",
    "count_full_layers",
    "count_ncf",
    "decompose",
    "essential_variables",
    "multinomial",
    "nondegenerate_inclusion_exclusion",
    "ordered_set_partitions",
    "parse_truth_table",
    "prevalence",
    "prevalence_series",
    "reconstruct",
    "total_functions",
]

__version__ = "0.1.0"
