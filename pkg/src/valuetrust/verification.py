"""Exhaustive law checking and the randomized delegation campaign.

``check_propositions`` enumerates every universe up to a size bound (all
value counts, all opposition relations) and verifies the algebra and
trust-function laws over all subset pairs/triples. Two conflict-set laws
hold only when no value has more than one opponent (see tests for the
multi-opponent witnesses that break them), so those are asserted on exactly
the single-opponent relations; everywhere else the suite asserts the
fragments that are theorems over arbitrary relations. Every law is proven
on the domain it is checked over, so any counterexample indicates an
implementation bug; failures are reported with the full universe and sets
involved, never silently.

``fuzz_theorem`` runs seeded random scenarios through the bold-vs-cautious
comparison. The oracle form (best achievable bold chain vs greedy cautious
chain) is a hard check; the greedy-vs-greedy form is known not to hold in
general and is recorded, with violating scenarios shrunk by
``minimize_counterexample`` into small reproducible artifacts.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Iterator

from .delegation import Scenario, theorem_check
from .errors import GeneratorError, ValueTrustError
from .generator import generate_population
from .runner import assessment_records
from .schemas import (
    FuzzCounterexample,
    FuzzReport,
    GeneratorConfig,
    PropositionFailure,
    PropsReport,
    VerifyReport,
    VerifyRequest,
)
from .scenario_io import scenario_to_document
from .trust import Agent, trust_bold, trust_cautious, trust_semi_independent
from .values import ValueUniverse, conflict_set, is_consistent

__all__ = [
    "check_propositions",
    "fuzz_theorem",
    "minimize_counterexample",
    "run_verification",
    "FUZZ_MAX_AGENTS",
    "FUZZ_MAX_CHAIN",
]

FUZZ_MAX_AGENTS = 8
FUZZ_MAX_CHAIN = 3

_FAILURE_CAP = 25

_subset_cache: dict[int, list[frozenset[str]]] = {}


def _value_names(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def _subsets(n: int) -> list[frozenset[str]]:
    """All subsets of the n-value vocabulary, indexed by bitmask."""
    if n not in _subset_cache:
        names = _value_names(n)
        _subset_cache[n] = [
            frozenset(names[i] for i in range(n) if mask >> i & 1) for mask in range(1 << n)
        ]
    return _subset_cache[n]


class _FailureLog:
    def __init__(self, cap: int):
        self.cap = cap
        self.failures: list[PropositionFailure] = []

    def add(
        self,
        universe: ValueUniverse,
        proposition: str,
        sets: dict[str, frozenset[str]],
        detail: str,
    ) -> None:
        if len(self.failures) >= self.cap:
            return
        self.failures.append(
            PropositionFailure(
                proposition=proposition,
                values=sorted(universe.values),
                oppositions=sorted(universe.oppositions),
                sets={name: sorted(vals) for name, vals in sets.items()},
                detail=detail,
            )
        )


def _check_universe(universe: ValueUniverse, n: int, log: _FailureLog) -> tuple[int, bool]:
    """All law checks for one universe.

    Returns the number of assertions made and whether the universe got the
    stronger single-opponent treatment.
    """
    sets = _subsets(n)
    size = 1 << n
    names = _value_names(n)
    bit = {name: 1 << i for i, name in enumerate(names)}

    # the either-side-consistent preservation law and the inconsistency
    # characterization are theorems only on these relations
    single_opponent = all(len(universe.opponents(v)) <= 1 for v in universe)

    cons = [is_consistent(universe, s) for s in sets]
    # conflict_to[w][v] = bitmask of conflict_set(sets[v], sets[w])
    conflict_to: list[list[int]] = []
    for wm in range(size):
        w = sets[wm]
        conflict_to.append(
            [sum(bit[v] for v in conflict_set(universe, sets[vm], w)) for vm in range(size)]
        )
    pair_masks = [bit[a] | bit[b] for a, b in universe.oppositions]
    has_pair = [any(mask & pm == pm for pm in pair_masks) for mask in range(size)]

    checks = 0

    # consistency laws over all pairs
    shared_pair_checks = 0
    for vm in range(size):
        cv = cons[vm]
        for wm in range(size):
            cw = cons[wm]
            conflict_ok = cons[conflict_to[wm][vm]]
            if (cv or cw) and not cons[vm & wm]:
                log.add(
                    universe,
                    "intersection_preserves_consistency",
                    {"V": sets[vm], "W": sets[wm]},
                    "V ∩ W is inconsistent although one side is consistent",
                )
            if cv and not conflict_ok:
                log.add(
                    universe,
                    "conflict_set_inherits_source_consistency",
                    {"V": sets[vm], "W": sets[wm]},
                    "V ⊥ W is inconsistent although V is consistent",
                )
            if has_pair[vm & wm]:
                shared_pair_checks += 1
                if conflict_ok:
                    log.add(
                        universe,
                        "shared_opposing_pair_forces_conflict",
                        {"V": sets[vm], "W": sets[wm]},
                        "V and W share an opposing pair but V ⊥ W is consistent",
                    )
            if single_opponent:
                if (cv or cw) and not conflict_ok:
                    log.add(
                        universe,
                        "conflict_set_preserves_consistency",
                        {"V": sets[vm], "W": sets[wm]},
                        "conflict set is inconsistent although one input is consistent",
                    )
                expected_incons = (not cv) and (not cw) and has_pair[vm & wm]
                if (not conflict_ok) != expected_incons:
                    log.add(
                        universe,
                        "conflict_inconsistency_characterization",
                        {"V": sets[vm], "W": sets[wm]},
                        "conflict-set inconsistency does not match its characterization",
                    )
    cons_count = sum(cons)
    either_consistent = size * size - (size - cons_count) ** 2
    checks += either_consistent + cons_count * size + shared_pair_checks
    if single_opponent:
        checks += either_consistent + size * size

    # conflict sets distribute over intersection and union on the left
    for um in range(size):
        row = conflict_to[um]
        for vm in range(size):
            left = row[vm]
            for wm in range(size):
                if row[vm & wm] != left & row[wm]:
                    log.add(
                        universe,
                        "conflict_distributes_over_intersection",
                        {"V": sets[vm], "W": sets[wm], "U": sets[um]},
                        "(V ∩ W) ⊥ U differs from (V ⊥ U) ∩ (W ⊥ U)",
                    )
                if row[vm | wm] != left | row[wm]:
                    log.add(
                        universe,
                        "conflict_distributes_over_union",
                        {"V": sets[vm], "W": sets[wm], "U": sets[um]},
                        "(V ∪ W) ⊥ U differs from (V ⊥ U) ∪ (W ⊥ U)",
                    )
    checks += size * size * size * 2

    # trust-function laws over consistent triples
    cons_masks = [m for m in range(size) if cons[m]]
    ordering_checks = 0
    for vbm in cons_masks:
        v_b = sets[vbm]
        for vcm in cons_masks:
            v_c = sets[vcm]
            semi = trust_semi_independent(universe, v_b, v_c)
            b_c_free = conflict_to[vcm][vbm] == 0
            for vam in cons_masks:
                v_a = sets[vam]
                cautious = trust_cautious(universe, v_a, v_b, v_c)
                bold = trust_bold(universe, v_a, v_b, v_c)
                if bold < cautious:
                    log.add(
                        universe,
                        "bold_dominates_cautious",
                        {"V_A": v_a, "V_B": v_b, "V_C": v_c},
                        f"bold={bold} < cautious={cautious}",
                    )
                if semi < cautious:
                    log.add(
                        universe,
                        "semi_independent_dominates_cautious",
                        {"V_A": v_a, "V_B": v_b, "V_C": v_c},
                        f"semi_independent={semi} < cautious={cautious}",
                    )
                if b_c_free and conflict_to[vbm][vam] == 0 and conflict_to[vcm][vam] == 0:
                    ordering_checks += 1
                    if not cautious <= semi <= bold:
                        log.add(
                            universe,
                            "conflict_free_ordering",
                            {"V_A": v_a, "V_B": v_b, "V_C": v_c},
                            f"expected cautious <= semi <= bold, got {cautious}, {semi}, {bold}",
                        )
    checks += len(cons_masks) ** 3 * 2 + ordering_checks

    return checks, single_opponent


def check_propositions(max_universe: int = 4, *, failure_cap: int = _FAILURE_CAP) -> PropsReport:
    """Verify every law over every universe with at most ``max_universe`` values.

    Enumerates all opposition relations for each vocabulary size; a bound of
    5 covers 1,100 universes and roughly 7.5 * 10^7 individual assertions,
    which runs in well under a minute.
    """
    if max_universe < 0:
        raise ValueError("max_universe must be >= 0")
    log = _FailureLog(failure_cap)
    universes = 0
    single_opponent_universes = 0
    checks = 0
    for n in range(max_universe + 1):
        names = _value_names(n)
        all_pairs = list(combinations(names, 2))
        for relation_bits in range(1 << len(all_pairs)):
            pairs = [all_pairs[i] for i in range(len(all_pairs)) if relation_bits >> i & 1]
            universe = ValueUniverse(names, pairs)
            universes += 1
            done, single_opponent = _check_universe(universe, n, log)
            checks += done
            single_opponent_universes += single_opponent
    return PropsReport(
        max_universe=max_universe,
        universes=universes,
        single_opponent_universes=single_opponent_universes,
        checks=checks,
        failures=log.failures,
        passed=not log.failures,
    )


def _greedy_violation(scenario: Scenario) -> bool:
    return theorem_check(scenario, include_oracle=False).holds is False


def _without_agent(scenario: Scenario, agent_id: str) -> Scenario:
    return Scenario(
        universe=scenario.universe,
        agents=tuple(a for a in scenario.agents if a.id != agent_id),
        initiator=scenario.initiator,
        action_chain=scenario.action_chain,
        mode=scenario.mode,
    )


def _truncated_chain(scenario: Scenario) -> Scenario:
    return Scenario(
        universe=scenario.universe,
        agents=scenario.agents,
        initiator=scenario.initiator,
        action_chain=scenario.action_chain[:-1],
        mode=scenario.mode,
    )


def _rebuild_agents(scenario: Scenario, universe: ValueUniverse, dropped: frozenset[str]) -> tuple[Agent, ...]:
    return tuple(
        Agent(
            universe,
            id=a.id,
            core_values=a.core_values - dropped,
            action_values={act: vals - dropped for act, vals in a.action_values.items()},
            capabilities=a.capabilities,
        )
        for a in scenario.agents
    )


def _without_value(scenario: Scenario, value: str) -> Scenario:
    universe = ValueUniverse(
        scenario.universe.values - {value},
        [p for p in scenario.universe.oppositions if value not in p],
    )
    dropped = frozenset({value})
    return Scenario(
        universe=universe,
        agents=_rebuild_agents(scenario, universe, dropped),
        initiator=scenario.initiator,
        action_chain=scenario.action_chain,
        mode=scenario.mode,
    )


def _without_opposition(scenario: Scenario, pair: tuple[str, str]) -> Scenario:
    universe = ValueUniverse(
        scenario.universe.values, scenario.universe.oppositions - {pair}
    )
    return Scenario(
        universe=universe,
        agents=_rebuild_agents(scenario, universe, frozenset()),
        initiator=scenario.initiator,
        action_chain=scenario.action_chain,
        mode=scenario.mode,
    )


def _reductions(scenario: Scenario) -> Iterator[Callable[[], Scenario]]:
    """Single-step shrinks, largest cuts first; all deterministic in order."""
    if len(scenario.action_chain) > 1:
        yield lambda: _truncated_chain(scenario)
    for agent in scenario.agents:
        if agent.id != scenario.initiator:
            yield lambda agent_id=agent.id: _without_agent(scenario, agent_id)
    for value in sorted(scenario.universe.values):
        yield lambda v=value: _without_value(scenario, v)
    for pair in sorted(scenario.universe.oppositions):
        yield lambda p=pair: _without_opposition(scenario, p)


def minimize_counterexample(
    scenario: Scenario, violates: Callable[[Scenario], bool] = _greedy_violation
) -> Scenario:
    """Greedily shrink a scenario while it still violates the predicate.

    Tries dropping the last chain action, then agents, values, and
    opposition pairs, restarting after every successful cut until no single
    reduction preserves the violation.
    """
    if not violates(scenario):
        raise ValueError("scenario does not violate the predicate; nothing to minimize")
    current = scenario
    progress = True
    while progress:
        progress = False
        for build in _reductions(current):
            try:
                candidate = build()
                if violates(candidate):
                    current = candidate
                    progress = True
                    break
            except (ValueTrustError, ValueError):
                continue
    return current


def _trial_config(trial_seed: int) -> GeneratorConfig:
    r = random.Random(trial_seed)
    return GeneratorConfig(
        seed=trial_seed,
        n_values=r.randint(3, 6),
        n_agents=r.randint(3, FUZZ_MAX_AGENTS),
        chain_length=r.randint(1, FUZZ_MAX_CHAIN),
        opposition_density=r.uniform(0.0, 0.5),
        value_density=r.uniform(0.2, 0.9),
        capability_density=r.uniform(0.2, 0.9),
    )


def fuzz_theorem(
    trials: int,
    seed: int = 0,
    *,
    max_counterexamples: int = 5,
    minimize: bool = True,
) -> FuzzReport:
    """Randomized bold-vs-cautious campaign over seeded scenarios.

    ``passed`` reflects only the oracle-form comparison. Greedy-vs-greedy
    violations are counted and (up to ``max_counterexamples``) shrunk and
    attached to the report.
    """
    master = random.Random(seed)
    generated = skipped = incomplete = 0
    greedy_violations = oracle_failures = 0
    counterexamples: list[FuzzCounterexample] = []
    for _ in range(trials):
        trial_seed = master.getrandbits(64)
        try:
            scenario = generate_population(_trial_config(trial_seed))
        except GeneratorError:
            skipped += 1
            continue
        generated += 1
        outcome = theorem_check(scenario)
        if outcome.q_bold is None or outcome.q_cautious is None:
            incomplete += 1
        if outcome.oracle_holds is False:
            oracle_failures += 1
            if len(counterexamples) < max_counterexamples:
                counterexamples.append(_counterexample(scenario, outcome, minimized=False))
        if outcome.holds is False:
            greedy_violations += 1
            if len(counterexamples) < max_counterexamples:
                small = minimize_counterexample(scenario) if minimize else scenario
                counterexamples.append(
                    _counterexample(small, theorem_check(small), minimized=minimize)
                )
    return FuzzReport(
        trials=trials,
        seed=seed,
        generated=generated,
        skipped_generation=skipped,
        incomplete=incomplete,
        greedy_violations=greedy_violations,
        oracle_failures=oracle_failures,
        counterexamples=counterexamples,
        passed=oracle_failures == 0,
    )


def run_verification(request: VerifyRequest) -> VerifyReport:
    """Execute the requested checks and fold the results into one report."""
    props = check_propositions(request.max_universe) if request.check_props else None
    fuzz = (
        fuzz_theorem(request.trials, request.seed, max_counterexamples=request.max_counterexamples)
        if request.check_theorem
        else None
    )
    passed = (props is None or props.passed) and (fuzz is None or fuzz.passed)
    return VerifyReport(props=props, fuzz=fuzz, passed=passed)


def _counterexample(scenario: Scenario, outcome, *, minimized: bool) -> FuzzCounterexample:
    return FuzzCounterexample(
        scenario=scenario_to_document(scenario),
        q_bold=outcome.q_bold,
        q_cautious=outcome.q_cautious,
        oracle_q_bold=outcome.oracle_q_bold,
        holds=outcome.holds,
        oracle_holds=outcome.oracle_holds,
        bold=assessment_records(outcome.bold),
        cautious=assessment_records(outcome.cautious),
        minimized=minimized,
    )
