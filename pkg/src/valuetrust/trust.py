"""Trust functions over value sets, plus the agent model they score.

All scoring functions take explicit value sets (not agents) so they can be
used standalone; the delegation layer resolves which set each agent exposes
for an action. Inputs that the underlying model requires to be internally
consistent are checked at the call boundary and rejected, never repaired.

Set roles follow one convention throughout: ``v_a`` is the predecessor's
value set (the agent whose request is being passed on), ``v_b`` the current
trustor's, and ``v_c`` the candidate trustee's.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass, field
from typing import Iterable, Mapping

from .errors import ConsistencyError
from .values import ValueUniverse, conflict_set, is_consistent

__all__ = [
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
]


def _checked_weight(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value < 0:
        raise ValueError(f"weight {name} must be finite and >= 0, got {value!r}")
    return value


@dataclass(frozen=True)
class Weights:
    """Nonnegative finite coefficients; every formula defaults to unit weights."""

    alpha: float = 1.0
    beta: float = 1.0
    gamma: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "alpha", _checked_weight("alpha", self.alpha))
        object.__setattr__(self, "beta", _checked_weight("beta", self.beta))
        object.__setattr__(self, "gamma", _checked_weight("gamma", self.gamma))


DEFAULT_WEIGHTS = Weights()


@dataclass(frozen=True)
class ValueStateDelta:
    """Disjoint sets of values reported as promoted (up) or demoted (down).

    Both must be subsets of the trustor's value set; that is checked by
    :func:`trust_value_state`, which knows the trustor, while disjointness is
    checked here.
    """

    up: frozenset[str] = frozenset()
    down: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "up", frozenset(self.up))
        object.__setattr__(self, "down", frozenset(self.down))
        overlap = self.up & self.down
        if overlap:
            raise ValueError(f"values cannot move up and down at once: {sorted(overlap)}")


@dataclass(frozen=True)
class Agent:
    """An agent with core values, per-action value sets, and capabilities.

    The universe is used to validate names and consistency at construction
    but is not stored. ``action_values`` entries must be consistent subsets
    of ``core_values``; ``core_values`` itself carries no consistency
    requirement. For an action without an explicit entry, the core set
    stands in (see :meth:`values_for`).
    """

    universe: InitVar[ValueUniverse]
    id: str
    core_values: frozenset[str] = frozenset()
    action_values: Mapping[str, frozenset[str]] = field(default_factory=dict)
    capabilities: frozenset[str] = frozenset()

    def __post_init__(self, universe: ValueUniverse):
        if not isinstance(self.id, str) or not self.id or any(ch.isspace() for ch in self.id):
            raise ValueError(f"agent id must be a nonempty string without whitespace, got {self.id!r}")
        core = universe.subset(self.core_values)
        entries: dict[str, frozenset[str]] = {}
        for action, vals in dict(self.action_values).items():
            vset = universe.subset(vals)
            extra = vset - core
            if extra:
                raise ValueError(
                    f"agent {self.id!r}: action {action!r} values {sorted(extra)} are not core values"
                )
            if not is_consistent(universe, vset):
                raise ConsistencyError(
                    f"agent {self.id!r}: action {action!r} value set is inconsistent"
                )
            entries[action] = vset
        object.__setattr__(self, "core_values", core)
        object.__setattr__(self, "action_values", entries)
        object.__setattr__(self, "capabilities", frozenset(self.capabilities))

    def values_for(self, action: str) -> frozenset[str]:
        """The value set this agent holds about ``action``, falling back to core values."""
        return self.action_values.get(action, self.core_values)

    def can_do(self, action: str) -> bool:
        return action in self.capabilities


def _consistent(universe: ValueUniverse, role: str, values: Iterable[str]) -> frozenset[str]:
    vset = universe.subset(values)
    if not is_consistent(universe, vset):
        raise ConsistencyError(f"{role} value set is inconsistent: {sorted(vset)}")
    return vset


def trust_independent(universe: ValueUniverse, v_a: Iterable[str], v_b: Iterable[str]) -> int:
    """Direct trust of A in B: |shared values| - |A's values conflicting with B's|.

    Used for the first step of every delegation chain, where no predecessor
    exists. Both sets must be consistent.
    """
    a = _consistent(universe, "trustor", v_a)
    b = _consistent(universe, "trustee", v_b)
    return len(a & b) - len(conflict_set(universe, a, b))


def trust_cautious(
    universe: ValueUniverse, v_a: Iterable[str], v_b: Iterable[str], v_c: Iterable[str]
) -> int:
    """Cautious delegated trust: credit only values shared by all three parties,
    debit every conflict either A or B has with C.

    The debit side uses the union, so the score never exceeds the bold form.
    """
    a = _consistent(universe, "predecessor", v_a)
    b = _consistent(universe, "trustor", v_b)
    c = _consistent(universe, "candidate", v_c)
    return len((a & b) & c) - len(conflict_set(universe, a | b, c))


def trust_bold(
    universe: ValueUniverse, v_a: Iterable[str], v_b: Iterable[str], v_c: Iterable[str]
) -> int:
    """Bold delegated trust: credit values either A or B shares with C,
    debit every conflict either has with C."""
    a = _consistent(universe, "predecessor", v_a)
    b = _consistent(universe, "trustor", v_b)
    c = _consistent(universe, "candidate", v_c)
    union = a | b
    return len(union & c) - len(conflict_set(universe, union, c))


def trust_semi_independent(
    universe: ValueUniverse, v_b: Iterable[str], v_c: Iterable[str]
) -> int:
    """Delegated trust that ignores the predecessor entirely: B scores C directly."""
    b = _consistent(universe, "trustor", v_b)
    c = _consistent(universe, "candidate", v_c)
    return len(b & c) - len(conflict_set(universe, b, c))


def trust_bold_debiased(
    universe: ValueUniverse, v_a: Iterable[str], v_b: Iterable[str], v_c: Iterable[str]
) -> int:
    """Bold trust minus a bias penalty: the absolute gap between how much the
    candidate overlaps A versus B.

    The penalty damps scores inflated by one party's overlap that the other
    does not share. It never drives the result below -|universe| because the
    bold credit term is at least as large as the penalty.
    """
    a = _consistent(universe, "predecessor", v_a)
    b = _consistent(universe, "trustor", v_b)
    c = _consistent(universe, "candidate", v_c)
    union = a | b
    bold = len(union & c) - len(conflict_set(universe, union, c))
    return bold - abs(len(a & c) - len(b & c))


def trust_value_state(
    universe: ValueUniverse,
    v_a: Iterable[str],
    v_b: Iterable[str],
    delta: ValueStateDelta | None = None,
    weights: Weights = DEFAULT_WEIGHTS,
) -> float:
    """Weighted direct trust that accounts for values B reports as moving.

    Score = alpha * |shared values moving up| - beta * |shared values moving
    down| - gamma * |A's conflicts with B|, where "shared" means in both A's
    and B's sets. Delta sets must be subsets of B's set. With unit weights,
    ``up=v_b`` and ``down=()`` this reduces exactly to
    :func:`trust_independent`.
    """
    a = _consistent(universe, "trustor", v_a)
    b = _consistent(universe, "trustee", v_b)
    delta = delta if delta is not None else ValueStateDelta()
    up = universe.subset(delta.up)
    down = universe.subset(delta.down)
    for name, moved in (("up", up), ("down", down)):
        extra = moved - b
        if extra:
            raise ValueError(f"delta {name} values {sorted(extra)} are not held by the trustee")
    shared = a & b
    penalty = len(conflict_set(universe, a, b))
    return weights.alpha * len(shared & up) - weights.beta * len(shared & down) - weights.gamma * penalty


def combined_trust(
    knowledge: float,
    *,
    reliability: float | None = None,
    weights: Weights = DEFAULT_WEIGHTS,
) -> float:
    """Blend a reliability estimate with a knowledge-based trust score.

    ``reliability`` is a probability in [0, 1] when present; when absent its
    term contributes zero. Returns alpha * reliability + beta * knowledge.
    """
    knowledge = float(knowledge)
    if not math.isfinite(knowledge):
        raise ValueError(f"knowledge score must be finite, got {knowledge!r}")
    if reliability is None:
        rel = 0.0
    else:
        rel = float(reliability)
        if not math.isfinite(rel) or not 0.0 <= rel <= 1.0:
            raise ValueError(f"reliability must be in [0, 1], got {reliability!r}")
    return weights.alpha * rel + weights.beta * knowledge
