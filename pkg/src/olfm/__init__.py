"""Collective decision making in layered opinion leader-follower-mediator
societies: unanimity and fraction-threshold influence propagation, exact
satisfaction / Rae / Banzhaf scores by exhaustive enumeration, and
mechanical verification of the axioms characterizing the satisfaction
score."""

from .axioms import (
    AxiomReport,
    PairedSystems,
    check_dictated_independence,
    check_dictator,
    check_equal_abs_change,
    check_equal_gain,
    check_horizontal_neutrality,
    check_normalization,
    check_opposite_gain,
    check_power_neutrality_2,
    check_symmetry,
    random_society,
    run_axiom_suite,
    run_negative_control,
    satisfaction_score,
)
from .decision import (
    UNANIMITY,
    DecisionRule,
    DecisionVector,
    FractionRule,
    Outcome,
    UnanimityRule,
    decide,
    propagate,
    with_bit,
)
from .errors import (
    DuplicateEdge,
    InvalidActor,
    InvalidParams,
    LengthMismatch,
    NotLayered,
    OlfmError,
    PreconditionUnmet,
    SelfLoop,
    TieEncountered,
    TooLarge,
)
from .kernels import BACKEND, available_backends
from .scores import (
    InducedGame,
    ScoreTable,
    banzhaf,
    is_dictator,
    is_dummy,
    rae,
    sat,
    sat_all,
    satbar,
)
from .society import (
    ActorClass,
    DegreeProfile,
    Society,
    add_edge,
    build_society,
    classify,
    dumps_society,
    load_society,
    loads_society,
    neighbors,
    society_from_json,
    society_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "ActorClass",
    "AxiomReport",
    "BACKEND",
    "DecisionRule",
    "DecisionVector",
    "DegreeProfile",
    "DuplicateEdge",
    "FractionRule",
    "InducedGame",
    "InvalidActor",
    "InvalidParams",
    "LengthMismatch",
    "NotLayered",
    "OlfmError",
    "Outcome",
    "PairedSystems",
    "PreconditionUnmet",
    "ScoreTable",
    "SelfLoop",
    "Society",
    "TieEncountered",
    "TooLarge",
    "UNANIMITY",
    "UnanimityRule",
    "add_edge",
    "available_backends",
    "banzhaf",
    "build_society",
    "check_dictated_independence",
    "check_dictator",
    "check_equal_abs_change",
    "check_equal_gain",
    "check_horizontal_neutrality",
    "check_normalization",
    "check_opposite_gain",
    "check_power_neutrality_2",
    "check_symmetry",
    "classify",
    "decide",
    "dumps_society",
    "is_dictator",
    "is_dummy",
    "load_society",
    "loads_society",
    "neighbors",
    "propagate",
    "rae",
    "random_society",
    "run_axiom_suite",
    "run_negative_control",
    "sat",
    "sat_all",
    "satbar",
    "satisfaction_score",
    "society_from_json",
    "society_to_json",
    "with_bit",
]
