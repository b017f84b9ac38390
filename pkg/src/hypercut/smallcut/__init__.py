"""Algorithms for min cuts with a small side."""

from hypercut.smallcut.bipartite import (
    BipartiteIncidence,
    Kernel,
    Separator,
    big_lambda_small_cut,
    build_bipartite,
    cut_from_separator,
    find_kernels,
    is_t_scratch,
    kernel_min_separator,
    lift_kernel_separator,
    separator_from_cut,
)
from hypercut.smallcut.directed import (
    DirectedCutGraph,
    build_directed,
    directed_cut_weight,
    original_cut_weight,
    small_lambda_small_cut,
    small_size_small_min_cut,
)
from hypercut.smallcut.dispatch import small_size_min_cut
from hypercut.smallcut.exhaustive import exhaustive_small_min_cut, subset_counts

__all__ = [
    "BipartiteIncidence",
    "DirectedCutGraph",
    "Kernel",
    "Separator",
    "big_lambda_small_cut",
    "build_bipartite",
    "build_directed",
    "cut_from_separator",
    "directed_cut_weight",
    "exhaustive_small_min_cut",
    "find_kernels",
    "is_t_scratch",
    "kernel_min_separator",
    "lift_kernel_separator",
    "original_cut_weight",
    "separator_from_cut",
    "small_lambda_small_cut",
    "small_size_min_cut",
    "small_size_small_min_cut",
    "subset_counts",
]
