"""Seeded random population generation.

Everything is a deterministic function of the config seed: names are drawn
in a fixed order and every random decision consumes the single stream, so
equal configs yield byte-identical serialized scenarios. Drawn action value
sets are repaired to consistency by dropping the later-ordered member of any
opposing pair (repairs are logged at DEBUG level); core sets are left as
drawn.
"""

from __future__ import annotations

import logging
import random
from itertools import combinations

from .delegation import Scenario, TrustMode
from .errors import GeneratorError
from .schemas import GeneratorConfig
from .trust import Agent
from .values import ValueUniverse

__all__ = ["generate_population"]

logger = logging.getLogger(__name__)

_CAPABILITY_RETRIES = 5


def _names(prefix: str, count: int) -> list[str]:
    width = len(str(count))
    return [f"{prefix}{i:0{width}d}" for i in range(1, count + 1)]


def _repair(universe: ValueUniverse, drawn: list[str], *, agent: str, action: str) -> frozenset[str]:
    # keep values in ascending order; drop any that oppose an already-kept one
    kept: set[str] = set()
    for value in drawn:
        if universe.opponents(value).isdisjoint(kept):
            kept.add(value)
        else:
            logger.debug(
                "agent %s action %s: dropped %r to keep the value set consistent",
                agent,
                action,
                value,
            )
    return frozenset(kept)


def generate_population(config: GeneratorConfig, mode: TrustMode = TrustMode.CAUTIOUS) -> Scenario:
    """Draw a scenario from the config's seed.

    Raises :class:`~valuetrust.errors.GeneratorError` when, after bounded
    redraws, some chain action has no capable agent (the first action
    additionally needs a capable agent other than the initiator).
    """
    rng = random.Random(config.seed)
    values = _names("v", config.n_values)
    agent_ids = _names("ag", config.n_agents)
    chain = _names("act", config.chain_length)

    oppositions = [pair for pair in combinations(values, 2) if rng.random() < config.opposition_density]
    universe = ValueUniverse(values, oppositions)

    initiator = rng.choice(agent_ids)

    capabilities: dict[str, set[str]] = {agent_id: set() for agent_id in agent_ids}
    for step, action in enumerate(chain, start=1):
        for _ in range(_CAPABILITY_RETRIES):
            capable = [a for a in agent_ids if rng.random() < config.capability_density]
            eligible = [a for a in capable if a != initiator] if step == 1 else capable
            if eligible:
                break
        else:
            raise GeneratorError(
                f"seed {config.seed}: no agent capable of {action!r} after "
                f"{_CAPABILITY_RETRIES} capability draws"
            )
        for agent_id in capable:
            capabilities[agent_id].add(action)

    agents = []
    for agent_id in agent_ids:
        core = [v for v in values if rng.random() < config.value_density]
        action_values = {}
        for action in chain:
            drawn = [v for v in core if rng.random() < config.value_density]
            action_values[action] = _repair(universe, drawn, agent=agent_id, action=action)
        agents.append(
            Agent(
                universe,
                id=agent_id,
                core_values=frozenset(core),
                action_values=action_values,
                capabilities=frozenset(capabilities[agent_id]),
            )
        )

    return Scenario(
        universe=universe,
        agents=tuple(agents),
        initiator=initiator,
        action_chain=tuple(chain),
        mode=mode,
    )
