"""Minimum K4-minor-free transversals.

Compute, bound, and verify minimum vertex sets whose removal leaves a
graph with no K4 minor (treewidth at most 2), plus the branch-on-
transversal Max-2-CSP solver built on top of them.
"""

__version__ = "0.1.0"

from .graph import Graph, Separation, format_graph, parse_graph, read_graph, write_graph
from .reduction import (
    DrdWitness,
    ReductionStep,
    ReductionTrace,
    StepKind,
    drd_witness_from_transversal,
    is_k4_minor_free,
    lift_transversal,
    reduce_core,
)
from .oracle import (
    CriticalityReport,
    Method,
    TransversalResult,
    brute_force_s,
    criticality,
    exact_s,
    find_k4_subdivision,
    lemma31_witness,
)
from .potential import (
    FIFTH,
    MAIN,
    PotentialProfile,
    greedy_fifth_transversal,
    lemma42_check,
    phi_graph,
    theorem41_check,
)
from .structure import (
    Degree5Class,
    Degree5Kind,
    EvenCycleReport,
    classify_degree5,
    find_diamonds,
    is_reduced,
    max_stable_set_small,
    neighborhood_graph,
    shortest_even_cycle,
    sparse_bipartitions,
    vertex_connectivity_at_most,
)
from .csp import (
    Assignment,
    CspInstance,
    eliminate_low_degree_variable,
    encode_maxcut,
    solve,
    solve_treewidth2,
)
from .generators import (
    gen_k5_union,
    gen_k6_chain,
    gen_random_connected,
)
from .errors import DomainError, SizeCapError
