"""Value-based trust assessment and delegation-chain simulation.

Agents hold sets of named values drawn from a universe with an opposition
relation; trust between agents is scored by comparing those sets, and
delegation chains are built greedily from the scores. The package also
ships an exhaustive verification harness for the algebra's laws and a
seeded simulator with CLI and HTTP frontends.
"""

from .delegation import (
    POLICY_MODES,
    Assessment,
    Scenario,
    StepDetail,
    TheoremOutcome,
    TrustMode,
    TrustSequence,
    aggregate_trust,
    build_sequence,
    candidate_scores,
    oracle_best_sequence,
    select_next,
    theorem_check,
    trace_sequence,
)
from .errors import (
    ConsistencyError,
    GeneratorError,
    NoCandidateError,
    ScenarioError,
    SizeGuardError,
    UniverseError,
    ValueTrustError,
)
from .generator import generate_population
from .runner import partial_report, report_to_csv, run
from .scenario_io import (
    builtin_fixture,
    document_to_scenario,
    dump_document,
    load_document,
    load_scenario,
    scenario_to_document,
)
from .schemas import GeneratorConfig, RunReport, ScenarioDocument, VerifyReport
from .trust import (
    Agent,
    ValueStateDelta,
    Weights,
    combined_trust,
    trust_bold,
    trust_bold_debiased,
    trust_cautious,
    trust_independent,
    trust_semi_independent,
    trust_value_state,
)
from .values import ValueUniverse, conflict_set, is_consistent, opposing_set
from .verification import (
    FUZZ_MAX_AGENTS,
    FUZZ_MAX_CHAIN,
    check_propositions,
    fuzz_theorem,
    minimize_counterexample,
    run_verification,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # values
    "ValueUniverse",
    "opposing_set",
    "is_consistent",
    "conflict_set",
    # trust
    "Agent",
    "Weights",
    "ValueStateDelta",
    "trust_independent",
    "trust_cautious",
    "trust_bold",
    "trust_semi_independent",
    "trust_bold_debiased",
    "trust_value_state",
    "combined_trust",
    # delegation
    "TrustMode",
    "POLICY_MODES",
    "Assessment",
    "TrustSequence",
    "Scenario",
    "StepDetail",
    "candidate_scores",
    "select_next",
    "trace_sequence",
    "build_sequence",
    "aggregate_trust",
    "oracle_best_sequence",
    "TheoremOutcome",
    "theorem_check",
    # scenario I/O and wire models
    "ScenarioDocument",
    "GeneratorConfig",
    "RunReport",
    "VerifyReport",
    "load_document",
    "load_scenario",
    "document_to_scenario",
    "scenario_to_document",
    "dump_document",
    "builtin_fixture",
    # simulation and verification
    "generate_population",
    "run",
    "partial_report",
    "report_to_csv",
    "check_propositions",
    "fuzz_theorem",
    "minimize_counterexample",
    "run_verification",
    "FUZZ_MAX_AGENTS",
    "FUZZ_MAX_CHAIN",
    # errors
    "ValueTrustError",
    "UniverseError",
    "ConsistencyError",
    "ScenarioError",
    "NoCandidateError",
    "SizeGuardError",
    "GeneratorError",
]
