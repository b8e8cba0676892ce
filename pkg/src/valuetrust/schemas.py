"""Wire models: scenario documents, reports, and service request bodies.

These are the JSON shapes shared by scenario files, the HTTP service, and
the CLI. Domain conversion lives in :mod:`valuetrust.scenario_io`; report
construction lives in :mod:`valuetrust.runner` and
:mod:`valuetrust.verification`.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .delegation import POLICY_MODES, TrustMode

SCENARIO_VERSION = 1


def to_json(model: BaseModel) -> str:
    """Canonical JSON emission: 2-space indent, declared field order, trailing newline."""
    return model.model_dump_json(indent=2) + "\n"


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid")


class WeightsDocument(_Model):
    alpha: float = Field(default=1.0, ge=0, allow_inf_nan=False)
    beta: float = Field(default=1.0, ge=0, allow_inf_nan=False)
    gamma: float = Field(default=1.0, ge=0, allow_inf_nan=False)


class AgentDocument(_Model):
    id: str
    core_values: list[str] = Field(default_factory=list)
    action_values: dict[str, list[str]] = Field(default_factory=dict)
    capabilities: list[str] = Field(default_factory=list)


def _require_policy_mode(mode: TrustMode) -> TrustMode:
    if mode not in POLICY_MODES:
        allowed = ", ".join(m.value for m in POLICY_MODES)
        raise ValueError(f"mode must be one of: {allowed}")
    return mode


class ScenarioDocument(_Model):
    """Versioned on-disk / on-wire form of a scenario."""

    version: Literal[1] = SCENARIO_VERSION
    values: list[str] = Field(default_factory=list)
    oppositions: list[tuple[str, str]] = Field(default_factory=list)
    agents: list[AgentDocument] = Field(default_factory=list)
    initiator: str
    action_chain: list[str] = Field(min_length=1)
    mode: TrustMode
    weights: WeightsDocument | None = None

    _mode_is_policy = field_validator("mode")(_require_policy_mode)


class GeneratorConfig(_Model):
    """Knobs for seeded population generation; densities are probabilities."""

    seed: int = Field(ge=0, lt=2**64)
    n_values: int = Field(default=6, ge=1)
    n_agents: int = Field(default=5, ge=2)
    chain_length: int = Field(default=2, ge=1)
    opposition_density: float = Field(default=0.2, ge=0, le=1)
    value_density: float = Field(default=0.5, ge=0, le=1)
    capability_density: float = Field(default=0.5, ge=0, le=1)


class AssessmentRecord(_Model):
    trustor: str
    trustee: str
    action: str
    mode: TrustMode
    score: int


class StepReport(_Model):
    step: int
    trustor: str
    trustee: str
    action: str
    mode: TrustMode
    score: int
    candidates: dict[str, int]


class TheoremReport(_Model):
    """Greedy bold-vs-cautious comparison, plus the oracle form.

    ``holds`` (greedy vs greedy) is informational; ``oracle_holds`` is the
    assertion verification treats as a hard check.
    """

    q_bold: int | None = None
    q_cautious: int | None = None
    holds: bool | None = None
    oracle_q_bold: int | None = None
    oracle_holds: bool | None = None
    bold: list[AssessmentRecord] | None = None
    cautious: list[AssessmentRecord] | None = None
    oracle_bold: list[AssessmentRecord] | None = None
    bold_error: str | None = None
    cautious_error: str | None = None
    oracle_error: str | None = None


class PropositionFailure(_Model):
    proposition: str
    values: list[str]
    oppositions: list[tuple[str, str]]
    sets: dict[str, list[str]]
    detail: str


class PropsReport(_Model):
    max_universe: int
    universes: int
    # universes where no value has two opponents; these also get the
    # stronger conflict-set laws that only hold there
    single_opponent_universes: int
    checks: int
    failures: list[PropositionFailure]
    passed: bool


class FuzzCounterexample(_Model):
    scenario: ScenarioDocument
    q_bold: int | None
    q_cautious: int | None
    oracle_q_bold: int | None
    holds: bool | None
    oracle_holds: bool | None
    bold: list[AssessmentRecord] | None
    cautious: list[AssessmentRecord] | None
    minimized: bool


class FuzzReport(_Model):
    trials: int
    seed: int
    generated: int
    skipped_generation: int
    incomplete: int
    greedy_violations: int
    oracle_failures: int
    counterexamples: list[FuzzCounterexample]
    passed: bool


class VerifyReport(_Model):
    props: PropsReport | None = None
    fuzz: FuzzReport | None = None
    passed: bool


class RunReport(_Model):
    scenario: ScenarioDocument
    steps: list[StepReport]
    aggregate: int
    theorem: TheoremReport | None = None
    props: PropsReport | None = None


class ErrorInfo(_Model):
    code: str
    message: str
    step: int | None = None
    action: str | None = None


class PartialRunReport(_Model):
    """Emitted when a chain dies mid-run: completed steps plus the failure."""

    scenario: ScenarioDocument
    steps: list[StepReport]
    aggregate: int
    error: ErrorInfo


class RunRequest(_Model):
    scenario: ScenarioDocument
    mode: TrustMode | None = None
    check_theorem: bool = False
    check_props: bool = False
    max_universe: int = Field(default=4, ge=0, le=5)

    @field_validator("mode")
    @classmethod
    def _override_is_policy(cls, mode: TrustMode | None) -> TrustMode | None:
        return None if mode is None else _require_policy_mode(mode)


class GenerateRequest(GeneratorConfig):
    mode: TrustMode = TrustMode.CAUTIOUS

    _mode_is_policy = field_validator("mode")(_require_policy_mode)


class VerifyRequest(_Model):
    check_props: bool = True
    max_universe: int = Field(default=4, ge=0, le=5)
    check_theorem: bool = True
    trials: int = Field(default=1000, ge=0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    max_counterexamples: int = Field(default=5, ge=0, le=25)


TrustFunctionName = Literal[
    "independent",
    "cautious",
    "bold",
    "semi_independent",
    "bold_debiased",
    "value_state",
]


class AssessRequest(_Model):
    """One-shot trust computation over explicit value sets."""

    values: list[str]
    oppositions: list[tuple[str, str]] = Field(default_factory=list)
    function: TrustFunctionName
    v_a: list[str] | None = None
    v_b: list[str]
    v_c: list[str] | None = None
    up: list[str] = Field(default_factory=list)
    down: list[str] = Field(default_factory=list)
    weights: WeightsDocument | None = None


class AssessResponse(_Model):
    function: TrustFunctionName
    score: int | float
