"""Shared fixtures: the running-example universes and the shipped scenarios."""

from __future__ import annotations

import pytest

from valuetrust import Scenario, ValueUniverse, builtin_fixture, load_scenario


@pytest.fixture(scope="session")
def running_universe() -> ValueUniverse:
    """Eight values; c opposes e and f, g opposes h.

    This is the vocabulary behind most scoring examples in the test suite:
    with V_A = {a, b, c, d} and V_B = {a, b, e, f, g} it produces the
    well-known independent/cautious/bold/semi scores 1, -1, 0, 1.
    """
    return ValueUniverse(list("abcdefgh"), [("c", "e"), ("c", "f"), ("g", "h")])


@pytest.fixture(scope="session")
def star_universe() -> ValueUniverse:
    """Four values where a opposes both b and c (multi-opponent shape)."""
    return ValueUniverse(list("abcd"), [("a", "b"), ("a", "c")])


@pytest.fixture(scope="session")
def pair_universe() -> ValueUniverse:
    """Two values opposing each other; the smallest nontrivial relation."""
    return ValueUniverse(["a", "b"], [("a", "b")])


@pytest.fixture(scope="session")
def divergent_scenario() -> Scenario:
    """Shipped fixture where cautious and bold policies pick different agents."""
    return load_scenario(builtin_fixture("divergent_choice"))


@pytest.fixture(scope="session")
def gap_scenario() -> Scenario:
    """Shipped fixture where greedy bold scores BELOW greedy cautious."""
    return load_scenario(builtin_fixture("greedy_gap"))


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    lines = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            name = nodeid.rsplit("::", 1)[1]
            rest = name.removeprefix("test_criterion_")
            number, _, label = rest.partition("_")
            verdict = "PASS" if outcome == "passed" else "FAIL"
            lines[int(number)] = f"criterion {number} ({label.replace('_', ' ')}): {verdict}"
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
