"""Power graphs of finite groups and reconstruction of the enhanced power graph.

The enhanced power graph is recovered from the power graph alone by counting
closed twins; see :mod:`powergraph.reconstruct`.
"""

from .graphs import Graph, enhanced_power_graph, is_complete, power_graph, universal_vertices
from .groups import (
    CyclicSubgroupPoset,
    FiniteGroup,
    GroupError,
    GroupSpec,
    cyclic_subgroup,
    cyclic_subgroup_poset,
    element_order,
    euler_phi,
    generators_of_cyclic,
    is_prime_power,
    make_group,
    parse_spec,
)
from .reconstruct import (
    ReconstructionReport,
    classify_input,
    decide_pair,
    difference_graph_from_power,
    reconstruct_enhanced,
)
from .twins import (
    NOT_COVERED,
    FormulaCounts,
    TwinCounts,
    check_monotonicity,
    closed_twins,
    formula_twin_counts,
    twin_counts,
)

__version__ = "0.1.0"
