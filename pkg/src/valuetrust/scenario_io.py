"""Loading, validating, and serializing scenario documents.

Validation happens in three layers, each with its own error texture:
JSON parse errors carry line/column, schema errors carry the pydantic field
path, and semantic errors (unknown names, inconsistent sets, unresolvable
initiator) carry a document location like ``agents[2].action_values['paint']``.
All three raise :class:`~valuetrust.errors.ScenarioError` with ``kind`` set
accordingly.
"""

from __future__ import annotations

import json
from importlib.resources import files
from pathlib import Path

from pydantic import ValidationError

from .delegation import Scenario, TrustMode
from .errors import ConsistencyError, ScenarioError, UniverseError
from .schemas import AgentDocument, ScenarioDocument, WeightsDocument, to_json
from .trust import Agent
from .values import ValueUniverse

__all__ = [
    "load_document",
    "document_to_scenario",
    "scenario_to_document",
    "load_scenario",
    "dump_document",
    "builtin_fixture",
]


def parse_document(text: str, *, source: str = "<string>") -> ScenarioDocument:
    """Parse and schema-validate scenario JSON text."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise ScenarioError(
            f"invalid JSON in {source}: {err.msg} (line {err.lineno}, column {err.colno})",
            kind="parse",
        ) from err
    try:
        return ScenarioDocument.model_validate(payload)
    except ValidationError as err:
        paths = "; ".join(
            ".".join(str(part) for part in e["loc"]) + ": " + e["msg"] for e in err.errors()
        )
        raise ScenarioError(f"schema violation in {source}: {paths}", kind="schema") from err


def load_document(path: str | Path) -> ScenarioDocument:
    path = Path(path)
    return parse_document(path.read_text(encoding="utf-8"), source=str(path))


def document_to_scenario(doc: ScenarioDocument) -> Scenario:
    """Semantic validation: build the domain scenario or fail with a location."""
    try:
        universe = ValueUniverse(doc.values, doc.oppositions)
    except UniverseError as err:
        raise ScenarioError(str(err), location="values/oppositions") from err
    agents = []
    for i, agent_doc in enumerate(doc.agents):
        loc = f"agents[{i}]"
        try:
            core = universe.subset(agent_doc.core_values)
        except UniverseError as err:
            raise ScenarioError(str(err), location=f"{loc}.core_values") from err
        action_values = {}
        for action, vals in agent_doc.action_values.items():
            try:
                action_values[action] = universe.subset(vals)
            except UniverseError as err:
                raise ScenarioError(str(err), location=f"{loc}.action_values[{action!r}]") from err
        try:
            agents.append(
                Agent(
                    universe,
                    id=agent_doc.id,
                    core_values=core,
                    action_values=action_values,
                    capabilities=frozenset(agent_doc.capabilities),
                )
            )
        except (ConsistencyError, ValueError) as err:
            raise ScenarioError(str(err), location=loc) from err
    try:
        return Scenario(
            universe=universe,
            agents=tuple(agents),
            initiator=doc.initiator,
            action_chain=tuple(doc.action_chain),
            mode=doc.mode,
        )
    except ValueError as err:
        raise ScenarioError(str(err)) from err


def scenario_to_document(
    scenario: Scenario, weights: WeightsDocument | None = None
) -> ScenarioDocument:
    """Canonical document form: every set sorted, agents ordered by id."""
    return ScenarioDocument(
        values=sorted(scenario.universe.values),
        oppositions=sorted(scenario.universe.oppositions),
        agents=[
            AgentDocument(
                id=agent.id,
                core_values=sorted(agent.core_values),
                action_values={
                    action: sorted(vals) for action, vals in sorted(agent.action_values.items())
                },
                capabilities=sorted(agent.capabilities),
            )
            for agent in scenario.agents
        ],
        initiator=scenario.initiator,
        action_chain=list(scenario.action_chain),
        mode=TrustMode(scenario.mode),
        weights=weights,
    )


def load_scenario(path: str | Path) -> Scenario:
    """Read, parse, and fully validate a scenario file."""
    return document_to_scenario(load_document(path))


def dump_document(doc: ScenarioDocument, path: str | Path) -> None:
    Path(path).write_text(to_json(doc), encoding="utf-8")


def builtin_fixture(name: str) -> Path:
    """Path of a scenario fixture shipped with the package (e.g. ``divergent_choice``)."""
    resource = files("valuetrust").joinpath("fixtures", f"{name}.json")
    return Path(str(resource))
