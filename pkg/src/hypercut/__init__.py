"""
hypercut
========
Exact minimum cuts of unweighted hypergraphs: an ordering solver, sparse
certificates, expander decomposition with trim and shave, small-side cut
search, adversarial generators and a brute-force oracle.
"""

from hypercut.config import SolverConfig, load_config
from hypercut.core import Cut, Hypergraph, VertexPartition, build, cut_capacity
from hypercut.driver import cx_min_cut, exp_decomp_min_cut, min_cut, run_algorithm, structural_report
from hypercut.errors import HypercutError
from hypercut.graph_loader import load_hgr, read_hgr, save_hgr, write_hgr
from hypercut.oracle import brute_min_cut
from hypercut.ordering import slow_min_cut

__version__ = "0.1.0"

__all__ = [
    "Cut",
    "Hypergraph",
    "HypercutError",
    "SolverConfig",
    "VertexPartition",
    "brute_min_cut",
    "build",
    "cut_capacity",
    "cx_min_cut",
    "exp_decomp_min_cut",
    "load_config",
    "load_hgr",
    "min_cut",
    "read_hgr",
    "run_algorithm",
    "save_hgr",
    "slow_min_cut",
    "structural_report",
    "write_hgr",
]
