"""Active learning of causal DAGs from interventional data (oracle case).

Partially directed graphs and chordal-graph kernels, interventional Markov
equivalence and essential graphs, target-selection strategies, and a
reproducible simulation harness.
"""

from .errors import (
    CoveringError,
    FormatError,
    GraphError,
    NotChordalError,
    NotInClassError,
)
from .pdag import (
    PartiallyDirectedGraph,
    chain_components,
    clique_number,
    greedy_coloring,
    is_chordal,
    lex_bfs,
    orient_by_ordering,
    skeleton,
    v_structures,
)
from .equivalence import (
    EssentialGraph,
    TargetFamily,
    enumerate_equivalence_class,
    essential_graph,
    i_markov_equivalent,
    intervention_graph,
    is_strongly_protected,
    is_valid_essential_graph,
    refine,
)
from .strategies import (
    TargetProposal,
    max_nb,
    opt_single,
    opt_unb,
    rand,
    rand_adv,
    separating_targets,
)
from .simulate import (
    ExperimentConfig,
    SurvivalRecord,
    kaplan_meier,
    oracle_run,
    random_dag,
    run_experiment,
    shd,
)

__version__ = "0.1.0"

__all__ = [
    "CoveringError", "FormatError", "GraphError", "NotChordalError", "NotInClassError",
    "PartiallyDirectedGraph", "chain_components", "clique_number", "greedy_coloring",
    "is_chordal", "lex_bfs", "orient_by_ordering", "skeleton", "v_structures",
    "EssentialGraph", "TargetFamily", "enumerate_equivalence_class", "essential_graph",
    "i_markov_equivalent", "intervention_graph", "is_strongly_protected",
    "is_valid_essential_graph", "refine",
    "TargetProposal", "max_nb", "opt_single", "opt_unb", "rand", "rand_adv",
    "separating_targets",
    "ExperimentConfig", "SurvivalRecord", "kaplan_meier", "oracle_run", "random_dag",
    "run_experiment", "shd",
    "__version__",
]
