"""Simulation runner: execute a scenario and assemble its report.

The JSON report is canonical (sorted sets, fixed field order), so running
the same scenario twice yields byte-identical output. CSV is an output-only
projection: one row per step plus a final aggregate row.
"""

from __future__ import annotations

import csv
import io

from .delegation import Scenario, StepDetail, TheoremOutcome, TrustSequence, theorem_check, trace_sequence
from .errors import NoCandidateError
from .schemas import (
    AssessmentRecord,
    ErrorInfo,
    PartialRunReport,
    RunReport,
    StepReport,
    TheoremReport,
    WeightsDocument,
)
from .scenario_io import scenario_to_document

__all__ = ["run", "partial_report", "theorem_report", "assessment_records", "report_to_csv"]

CSV_HEADER = ("step", "trustor", "trustee", "action", "mode", "score")


def _step_reports(details: list[StepDetail]) -> list[StepReport]:
    return [
        StepReport(
            step=d.index,
            trustor=d.trustor,
            trustee=d.trustee,
            action=d.action,
            mode=d.mode,
            score=d.score,
            candidates=dict(sorted(d.scores.items())),
        )
        for d in details
    ]


def assessment_records(sequence: TrustSequence | None) -> list[AssessmentRecord] | None:
    """Wire form of a sequence; None passes through for absent chains."""
    if sequence is None:
        return None
    return [
        AssessmentRecord(
            trustor=a.trustor, trustee=a.trustee, action=a.action, mode=a.mode, score=a.score
        )
        for a in sequence
    ]


def theorem_report(outcome: TheoremOutcome) -> TheoremReport:
    return TheoremReport(
        q_bold=outcome.q_bold,
        q_cautious=outcome.q_cautious,
        holds=outcome.holds,
        oracle_q_bold=outcome.oracle_q_bold,
        oracle_holds=outcome.oracle_holds,
        bold=assessment_records(outcome.bold),
        cautious=assessment_records(outcome.cautious),
        oracle_bold=assessment_records(outcome.oracle_bold),
        bold_error=outcome.bold_error,
        cautious_error=outcome.cautious_error,
        oracle_error=outcome.oracle_error,
    )


def run(
    scenario: Scenario,
    *,
    weights: WeightsDocument | None = None,
    check_theorem: bool = False,
    check_props: bool = False,
    max_universe: int = 4,
) -> RunReport:
    """Build the greedy chain and report every step's candidate table and Q.

    Optional blocks: the bold-vs-cautious comparison and the exhaustive
    proposition sweep (bounded by ``max_universe``). Raises
    :class:`~valuetrust.errors.NoCandidateError` when the chain dies; see
    :func:`partial_report`.
    """
    details = trace_sequence(scenario)
    theorem = theorem_report(theorem_check(scenario)) if check_theorem else None
    props = None
    if check_props:
        from .verification import check_propositions

        props = check_propositions(max_universe)
    return RunReport(
        scenario=scenario_to_document(scenario, weights=weights),
        steps=_step_reports(details),
        aggregate=sum(d.score for d in details),
        theorem=theorem,
        props=props,
    )


def partial_report(
    scenario: Scenario, error: NoCandidateError, *, weights: WeightsDocument | None = None
) -> PartialRunReport:
    """Report form of a chain that died: completed steps plus the failure."""
    steps = _step_reports(error.trace)
    return PartialRunReport(
        scenario=scenario_to_document(scenario, weights=weights),
        steps=steps,
        aggregate=sum(s.score for s in steps),
        error=ErrorInfo(
            code="no_candidate",
            message=str(error),
            step=error.step,
            action=error.action,
        ),
    )


def report_to_csv(report: RunReport) -> str:
    """One row per assessment, then a final row carrying the aggregate Q."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for step in report.steps:
        writer.writerow(
            [step.step, step.trustor, step.trustee, step.action, step.mode.value, step.score]
        )
    writer.writerow(["aggregate", "", "", "", "", report.aggregate])
    return buffer.getvalue()
