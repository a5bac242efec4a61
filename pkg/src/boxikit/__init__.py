"""Cube representations, boxicity bounds and exact oracles for transitive
closures of products of complete graphs, divisor graphs and power graphs of
cyclic groups."""

from .bounds import (
    bound_report,
    comparison_for_n,
    comparison_quantities,
    extract_crown,
    extract_witness,
    general_lower_bound,
    lower_bound,
    upper_bound,
)
from .errors import BoxikitError, CapacityError, InputError, VerificationError
from .families import (
    FamilySpec,
    build_crown,
    build_divisor_graph,
    build_lifted,
    build_power_graph_cyclic,
    build_reduced_power_graph_cyclic,
    build_tc_hypercube,
    build_tcc,
    exponents_of,
)
from .graph import (
    BoxRepresentation,
    CompletionSet,
    Interval,
    LabeledGraph,
    intersection_graph,
    join_graphs,
    strip_universal,
)
from .isomorphism import are_isomorphic
from .oracle import (
    OracleConfig,
    certify_representation_optimal,
    exact_boxicity,
    exact_cubicity,
    interval_completions,
)
from .posets import (
    Poset,
    Realizer,
    build_divisibility_realizer,
    divisibility_poset,
    exact_poset_dimension,
    longest_chain,
    verify_realizer,
)
from .recognition import is_interval_graph, is_unit_interval_graph
from .representation import (
    lift_to_power_graph,
    normalize_to_unit,
    representation_for_divisor_graph,
    representation_for_power_graph_cyclic,
    tcc_cube_representation,
    translate_to_origin,
    verify_representation,
)

__version__ = "0.1.0"
