"""genlp: random (probabilistic) logic program generation by constraint
solving, with an exact counting oracle for self-validation."""

from .parameters import CycleMode, Encoding, ParameterError, Parameters
from .programs import (
    And,
    Atom,
    Clause,
    Not,
    Or,
    Program,
    TOP,
    assign_probabilities,
    body_atoms,
    check_program,
)
from .modeling import (
    ClauseVars,
    DecodeError,
    ProgramModel,
    build_program_model,
    decode_solution,
)
from .dependencies import (
    DepKind,
    Dependency,
    IndependencePropagator,
    LabeledDepGraph,
    StratificationPropagator,
    dependency_closure,
    dependency_graph,
    deps,
    post_adjacency_channeling,
    verify_independence,
    verify_stratified,
)
from .counting import (
    CountingContext,
    CountResult,
    EnumerationBudgetExceeded,
    UnsupportedConfiguration,
    count_by_enumeration,
    count_programs,
    count_with_validation,
)
from .emit import render_clause, render_program
from .config import ConfigError, FactSpec, RunConfig, parse_config
from .facts import generate_facts, pick_query

__version__ = "0.1.0"
