"""degseq: exact degree sequence optimization.

Solvers for the convex multi-criteria problem (prescribed and unprescribed
edge budgets) and the colored separable problem on bounded tree-depth graphs,
with a binary-IP formulation, hardness gadget generators, and brute-force
validation oracles.
"""

from .colored import ColoredSolution, solve_colored_bruteforce, solve_colored_dp
from .errors import (
    CapExceededError,
    DegseqError,
    InfeasibleAssignmentError,
    InvalidInstanceError,
    ParseError,
    PreconditionError,
)
from .graphs import (
    ConvexCallback,
    DegreeSequence,
    EdgeColoring,
    EdgeSubset,
    Graph,
    MaxAffine,
    MultiCriteriaObjective,
    SeparableObjective,
    SumSquaredAffine,
    WeightedInstance,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    degree_sequence,
    edge_degree_vector,
    evaluate_separable,
    identity_objective,
    path_graph,
    perfect_matching_graph,
    star_graph,
)
from .instances import Instance, instance_digest, parse_instance, serialize_instance
from .ip import (
    IpModel,
    build_colored_ip,
    ip_assignment_to_subgraph,
    serialize_ip,
    solve_ip_bruteforce,
    subgraph_to_ip_assignment,
)
from .multicriteria import (
    ChamberPipeline,
    ChamberWitness,
    MultiCriteriaSolution,
    ProjectedGenerators,
    enumerate_chamber_witnesses,
    maximize_multicriteria,
    maximize_multicriteria_unprescribed,
    project_directions,
)
from .oracles import (
    DirectionSet,
    LinOptResult,
    directions_prescribed,
    directions_unprescribed,
    linopt_prescribed,
    linopt_unprescribed,
)
from .treedepth import (
    ConstraintTree,
    EliminationForest,
    build_constraint_tree,
    constraint_graph,
    heuristic_forest,
    treedepth_exact,
    validate_forest,
)

__version__ = "0.1.0"
