"""Spanning-tree cohomology of link diagrams over GF(2) rational functions."""

from .complex import GradedComplex, KauffmanState, assemble, enumerate_states, verify_d_squared
from .diagram import UNKNOT, LinkDiagram, from_braid, mirror, parse_pd, resolve_crossing
from .homology import (
    HomologyReport,
    auto_cohomology,
    cancellation_reduce,
    certify,
    cohomology,
    diagram_cohomology,
    euler_characteristic,
    rank_exact,
    rank_specialized,
)
from .invariants import determinant_goeritz, spanning_tree_count
from .tait import TaitStructure, build_tait

__all__ = [
    "UNKNOT",
    "GradedComplex",
    "HomologyReport",
    "KauffmanState",
    "LinkDiagram",
    "TaitStructure",
    "assemble",
    "auto_cohomology",
    "build_tait",
    "cancellation_reduce",
    "certify",
    "cohomology",
    "determinant_goeritz",
    "diagram_cohomology",
    "enumerate_states",
    "euler_characteristic",
    "from_braid",
    "mirror",
    "parse_pd",
    "rank_exact",
    "rank_specialized",
    "resolve_crossing",
    "spanning_tree_count",
    "verify_d_squared",
]

__version__ = "0.1.0"
