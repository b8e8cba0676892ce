"""Greedy delegation chains, aggregate trust, and the exhaustive-search oracle.

A scenario fixes a population, an initiator, an ordered action chain, and a
policy mode. The chain is built step by step: the current trustor scores
every other agent capable of the step's action and delegates to the argmax.
Step 1 always uses the independent (two-party) form; later steps use the
policy's three-party form, where the predecessor is the agent one step back
(a sliding window, not the original initiator).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterator, Mapping

from .errors import NoCandidateError, SizeGuardError
from .trust import (
    Agent,
    trust_bold,
    trust_cautious,
    trust_independent,
    trust_semi_independent,
)
from .values import ValueUniverse

__all__ = [
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
]


class TrustMode(str, Enum):
    """How an assessment was (or will be) scored.

    ``independent`` is reserved for first steps and appears only in recorded
    assessments; a scenario's policy must be one of the other three.
    """

    INDEPENDENT = "independent"
    CAUTIOUS = "cautious"
    BOLD = "bold"
    SEMI_INDEPENDENT = "semi_independent"


POLICY_MODES = (TrustMode.CAUTIOUS, TrustMode.BOLD, TrustMode.SEMI_INDEPENDENT)


@dataclass(frozen=True)
class Assessment:
    """One scored delegation: trustor asked trustee to perform action."""

    trustor: str
    trustee: str
    action: str
    mode: TrustMode
    score: int

    def __post_init__(self):
        object.__setattr__(self, "mode", TrustMode(self.mode))
        if self.trustor == self.trustee:
            raise ValueError(f"agent {self.trustor!r} cannot assess itself")


@dataclass(frozen=True)
class TrustSequence:
    """An unbranched chain of assessments; each trustee is the next trustor.

    An agent may reappear later in the chain, just never as its own
    immediate counterpart.
    """

    assessments: tuple[Assessment, ...]

    def __post_init__(self):
        object.__setattr__(self, "assessments", tuple(self.assessments))
        if not self.assessments:
            raise ValueError("a trust sequence needs at least one assessment")
        for prev, nxt in zip(self.assessments, self.assessments[1:]):
            if prev.trustee != nxt.trustor:
                raise ValueError(
                    f"broken chain: {prev.trustee!r} delegated but {nxt.trustor!r} assessed next"
                )

    def __len__(self) -> int:
        return len(self.assessments)

    def __iter__(self) -> Iterator[Assessment]:
        return iter(self.assessments)

    def __getitem__(self, index: int) -> Assessment:
        return self.assessments[index]


@dataclass(frozen=True)
class Scenario:
    """Immutable simulation input: population, initiator, action chain, policy.

    Agents are stored sorted by id, so two scenarios with the same population
    compare equal regardless of input order.
    """

    universe: ValueUniverse
    agents: tuple[Agent, ...]
    initiator: str
    action_chain: tuple[str, ...]
    mode: TrustMode
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        agents = tuple(sorted(self.agents, key=lambda a: a.id))
        by_id = {a.id: a for a in agents}
        if len(by_id) != len(agents):
            ids = [a.id for a in agents]
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate agent ids: {dupes}")
        if self.initiator not in by_id:
            raise ValueError(f"initiator {self.initiator!r} is not an agent")
        chain = tuple(self.action_chain)
        if not chain:
            raise ValueError("action chain must not be empty")
        mode = TrustMode(self.mode)
        if mode not in POLICY_MODES:
            raise ValueError(
                f"scenario mode must be one of {[m.value for m in POLICY_MODES]}, got {mode.value!r}"
            )
        for agent in agents:
            self.universe.subset(agent.core_values)  # guards against mixed universes
        object.__setattr__(self, "agents", agents)
        object.__setattr__(self, "action_chain", chain)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "_by_id", by_id)

    def agent(self, agent_id: str) -> Agent:
        try:
            return self._by_id[agent_id]
        except KeyError:
            raise ValueError(f"unknown agent {agent_id!r}") from None

    def with_mode(self, mode: TrustMode) -> "Scenario":
        return self if mode == self.mode else replace(self, mode=mode)


@dataclass(frozen=True)
class StepDetail:
    """Everything decided at one chain step, including the losing candidates."""

    index: int
    action: str
    trustor: str
    mode: TrustMode
    scores: Mapping[str, int]
    trustee: str
    score: int

    def to_assessment(self) -> Assessment:
        return Assessment(
            trustor=self.trustor,
            trustee=self.trustee,
            action=self.action,
            mode=self.mode,
            score=self.score,
        )


def _score_step(
    scenario: Scenario,
    step_index: int,
    trustor_agent: Agent,
    predecessor_values: frozenset[str] | None,
    candidate: Agent,
) -> int:
    universe: ValueUniverse = scenario.universe
    action = scenario.action_chain[step_index - 1]
    v_c = candidate.values_for(action)
    if step_index == 1:
        return trust_independent(universe, trustor_agent.values_for(action), v_c)
    v_b = trustor_agent.values_for(scenario.action_chain[step_index - 2])
    if scenario.mode is TrustMode.SEMI_INDEPENDENT:
        return trust_semi_independent(universe, v_b, v_c)
    if predecessor_values is None:
        raise ValueError(
            f"step {step_index} under {scenario.mode.value!r} needs the predecessor's value set"
        )
    if scenario.mode is TrustMode.CAUTIOUS:
        return trust_cautious(universe, predecessor_values, v_b, v_c)
    return trust_bold(universe, predecessor_values, v_b, v_c)


def candidate_scores(
    scenario: Scenario,
    step_index: int,
    trustor: str,
    predecessor_values: frozenset[str] | None = None,
) -> dict[str, int]:
    """Score every agent (other than the trustor) capable of the step's action.

    ``predecessor_values`` is the value set attached to the previous request;
    it is required for cautious and bold steps after the first and ignored
    otherwise. Returns an id-sorted map, empty when nobody is capable.
    """
    if not 1 <= step_index <= len(scenario.action_chain):
        raise IndexError(
            f"step index {step_index} out of range for a chain of length {len(scenario.action_chain)}"
        )
    action = scenario.action_chain[step_index - 1]
    trustor_agent = scenario.agent(trustor)
    scores: dict[str, int] = {}
    for candidate in scenario.agents:  # already sorted by id
        if candidate.id == trustor or not candidate.can_do(action):
            continue
        scores[candidate.id] = _score_step(
            scenario, step_index, trustor_agent, predecessor_values, candidate
        )
    return scores


def select_next(
    scores: Mapping[str, int], *, step: int | None = None, action: str | None = None
) -> str:
    """The highest-scoring candidate; ties break to the smallest id.

    Selection happens even when every score is negative. ``step`` and
    ``action`` only enrich the no-candidate error.
    """
    if not scores:
        where = f"step {step}" if step is not None else "step"
        what = f" action {action!r}" if action is not None else ""
        raise NoCandidateError(
            f"no capable candidate at {where}{what}",
            step=step if step is not None else 0,
            action=action if action is not None else "",
        )
    top = max(scores.values())
    return min(candidate for candidate, score in scores.items() if score == top)


def trace_sequence(scenario: Scenario) -> list[StepDetail]:
    """Run the greedy construction, keeping each step's full candidate table.

    On a dead end, raises a no-candidate error carrying the steps already
    completed.
    """
    details: list[StepDetail] = []
    trustor = scenario.initiator
    predecessor_values: frozenset[str] | None = None
    for index, action in enumerate(scenario.action_chain, start=1):
        scores = candidate_scores(scenario, index, trustor, predecessor_values)
        try:
            trustee = select_next(scores, step=index, action=action)
        except NoCandidateError as err:
            err.trace = details
            raise
        mode = TrustMode.INDEPENDENT if index == 1 else scenario.mode
        details.append(
            StepDetail(
                index=index,
                action=action,
                trustor=trustor,
                mode=mode,
                scores=scores,
                trustee=trustee,
                score=scores[trustee],
            )
        )
        predecessor_values = scenario.agent(trustor).values_for(action)
        trustor = trustee
    return details


def build_sequence(scenario: Scenario) -> TrustSequence:
    """Greedy chain over the scenario's action chain, one assessment per action."""
    return TrustSequence(tuple(d.to_assessment() for d in trace_sequence(scenario)))


def aggregate_trust(sequence: TrustSequence, first: int = 1, last: int | None = None) -> int:
    """Sum of scores over an inclusive 1-based index range; full range by default."""
    last = len(sequence) if last is None else last
    if not 1 <= first <= last <= len(sequence):
        raise IndexError(
            f"range [{first}, {last}] invalid for a sequence of length {len(sequence)}"
        )
    return sum(a.score for a in sequence.assessments[first - 1 : last])


def oracle_best_sequence(
    scenario: Scenario, *, max_agents: int = 8, max_chain: int = 4
) -> tuple[TrustSequence, int]:
    """Exhaustively search all delegate choices and return a Q-maximal sequence.

    Unlike the greedy builder, every capable candidate is explored at every
    step, so the result bounds what greedy can achieve. Ties break to the
    lexicographically smallest tuple of trustee ids. Guarded by explicit size
    bounds since the search is exponential in chain length.
    """
    if len(scenario.agents) > max_agents:
        raise SizeGuardError(
            f"{len(scenario.agents)} agents exceeds the exhaustive-search bound of {max_agents}"
        )
    if len(scenario.action_chain) > max_chain:
        raise SizeGuardError(
            f"chain of length {len(scenario.action_chain)} exceeds the exhaustive-search bound of {max_chain}"
        )
    chain = scenario.action_chain
    best: tuple[int, tuple[str, ...], tuple[Assessment, ...]] | None = None
    dead_end: tuple[int, str] = (1, chain[0])

    def extend(
        index: int,
        trustor: str,
        predecessor_values: frozenset[str] | None,
        acc: list[Assessment],
        total: int,
    ) -> None:
        nonlocal best, dead_end
        if index > len(chain):
            ids = tuple(a.trustee for a in acc)
            if best is None or total > best[0] or (total == best[0] and ids < best[1]):
                best = (total, ids, tuple(acc))
            return
        scores = candidate_scores(scenario, index, trustor, predecessor_values)
        if not scores and index >= dead_end[0]:
            dead_end = (index, chain[index - 1])
        trustor_values = scenario.agent(trustor).values_for(chain[index - 1])
        mode = TrustMode.INDEPENDENT if index == 1 else scenario.mode
        for candidate in sorted(scores):
            acc.append(
                Assessment(
                    trustor=trustor,
                    trustee=candidate,
                    action=chain[index - 1],
                    mode=mode,
                    score=scores[candidate],
                )
            )
            extend(index + 1, candidate, trustor_values, acc, total + scores[candidate])
            acc.pop()

    extend(1, scenario.initiator, None, [], 0)
    if best is None:
        raise NoCandidateError(
            f"no complete delegation chain exists (first dead end at step {dead_end[0]}, "
            f"action {dead_end[1]!r})",
            step=dead_end[0],
            action=dead_end[1],
        )
    return TrustSequence(best[2]), best[0]


@dataclass(frozen=True)
class TheoremOutcome:
    """Bold-vs-cautious comparison on one scenario.

    ``holds`` compares the two greedy chains; ``oracle_holds`` compares the
    best achievable bold chain against the greedy cautious one. Fields are
    None when the corresponding chain could not be completed (the per-mode
    error strings say why).
    """

    q_bold: int | None
    q_cautious: int | None
    holds: bool | None
    oracle_q_bold: int | None
    oracle_holds: bool | None
    bold: TrustSequence | None
    cautious: TrustSequence | None
    oracle_bold: TrustSequence | None
    bold_error: str | None = None
    cautious_error: str | None = None
    oracle_error: str | None = None


def theorem_check(
    scenario: Scenario,
    *,
    include_oracle: bool = True,
    oracle_max_agents: int = 8,
    oracle_max_chain: int = 4,
) -> TheoremOutcome:
    """Compare greedy bold vs greedy cautious on one scenario, plus the oracle form.

    The scenario's own mode is ignored; both policies are applied to the same
    population. A no-candidate failure in one mode is recorded, not raised.
    """
    bold_seq = cautious_seq = oracle_seq = None
    bold_err = cautious_err = oracle_err = None
    try:
        bold_seq = build_sequence(scenario.with_mode(TrustMode.BOLD))
    except NoCandidateError as err:
        bold_err = str(err)
    try:
        cautious_seq = build_sequence(scenario.with_mode(TrustMode.CAUTIOUS))
    except NoCandidateError as err:
        cautious_err = str(err)
    oracle_q = None
    if include_oracle:
        try:
            oracle_seq, oracle_q = oracle_best_sequence(
                scenario.with_mode(TrustMode.BOLD),
                max_agents=oracle_max_agents,
                max_chain=oracle_max_chain,
            )
        except (NoCandidateError, SizeGuardError) as err:
            oracle_err = str(err)
    q_bold = aggregate_trust(bold_seq) if bold_seq else None
    q_cautious = aggregate_trust(cautious_seq) if cautious_seq else None
    holds = (q_bold >= q_cautious) if q_bold is not None and q_cautious is not None else None
    oracle_holds = (
        (oracle_q >= q_cautious) if oracle_q is not None and q_cautious is not None else None
    )
    return TheoremOutcome(
        q_bold=q_bold,
        q_cautious=q_cautious,
        holds=holds,
        oracle_q_bold=oracle_q,
        oracle_holds=oracle_holds,
        bold=bold_seq,
        cautious=cautious_seq,
        oracle_bold=oracle_seq,
        bold_error=bold_err,
        cautious_error=cautious_err,
        oracle_error=oracle_err,
    )
