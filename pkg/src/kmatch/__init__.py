"""Perfect k-matchings on multigraphs with loops: decide, construct, certify."""

from .certificates import (
    EvenViolator,
    HallViolator,
    OddViolator,
    TutteBarrier,
    TutteViolator,
    eval_delta,
    eval_even,
    eval_odd,
    eval_tutte,
    find_violator,
    verify_certificate,
)
from .graph_core import (
    ComponentSummary,
    EdgeRecord,
    GraphError,
    Multigraph,
    bipartition,
    component_summary,
    degree,
    delete_vertices,
    edge_connectivity,
    edges_between,
    neighborhood,
    regularity,
)
from .oracle import BudgetExceeded, oracle_kfactor, oracle_solve
from .solver import SolveOptions, SolveReport, check_regular_corollary, solve
from .weights import WeightFunction, vertex_load, verify_perfect

__version__ = "0.1.0"
