"""HTTP service exposing assessment, simulation, generation, and verification.

Stateless: every endpoint is a pure function of its request body. Semantic
scenario problems map to 422 (mirroring schema validation), a chain dying
mid-run maps to 409 with the partial report in the body, and failed checks
stay 200 with ``passed: false`` flags, since the computation itself
succeeded.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse

from . import __version__
from .delegation import TrustMode
from .errors import (
    ConsistencyError,
    GeneratorError,
    NoCandidateError,
    ScenarioError,
    UniverseError,
)
from .generator import generate_population
from .runner import partial_report, run
from .schemas import (
    AssessRequest,
    AssessResponse,
    GenerateRequest,
    GeneratorConfig,
    RunReport,
    RunRequest,
    ScenarioDocument,
    VerifyReport,
    VerifyRequest,
)
from .scenario_io import document_to_scenario, scenario_to_document
from .trust import (
    ValueStateDelta,
    Weights,
    trust_bold,
    trust_bold_debiased,
    trust_cautious,
    trust_independent,
    trust_semi_independent,
    trust_value_state,
)
from .values import ValueUniverse
from .verification import run_verification

__all__ = ["create_app", "app"]


def _unprocessable(message: str, *, location: str | None = None) -> HTTPException:
    loc = [location] if location else []
    return HTTPException(status_code=422, detail=[{"loc": loc, "msg": message, "type": "semantic"}])


def _assess(request: AssessRequest) -> AssessResponse:
    try:
        universe = ValueUniverse(request.values, request.oppositions)
        weights = (
            Weights(**request.weights.model_dump()) if request.weights is not None else Weights()
        )
        v_b = universe.subset(request.v_b)

        def need(name: str, value: list[str] | None) -> frozenset[str]:
            if value is None:
                raise _unprocessable(f"function {request.function!r} requires {name}")
            return universe.subset(value)

        if request.function == "independent":
            score: int | float = trust_independent(universe, need("v_a", request.v_a), v_b)
        elif request.function == "cautious":
            score = trust_cautious(universe, need("v_a", request.v_a), v_b, need("v_c", request.v_c))
        elif request.function == "bold":
            score = trust_bold(universe, need("v_a", request.v_a), v_b, need("v_c", request.v_c))
        elif request.function == "semi_independent":
            score = trust_semi_independent(universe, v_b, need("v_c", request.v_c))
        elif request.function == "bold_debiased":
            score = trust_bold_debiased(
                universe, need("v_a", request.v_a), v_b, need("v_c", request.v_c)
            )
        else:  # value_state
            delta = ValueStateDelta(up=frozenset(request.up), down=frozenset(request.down))
            score = trust_value_state(universe, need("v_a", request.v_a), v_b, delta, weights)
    except (UniverseError, ConsistencyError, ValueError) as err:
        raise _unprocessable(str(err)) from err
    return AssessResponse(function=request.function, score=score)


def _run(request: RunRequest) -> RunReport | JSONResponse:
    try:
        scenario = document_to_scenario(request.scenario)
        if request.mode is not None:
            scenario = scenario.with_mode(request.mode)
    except ScenarioError as err:
        raise _unprocessable(str(err), location=err.location) from err
    try:
        return run(
            scenario,
            weights=request.scenario.weights,
            check_theorem=request.check_theorem,
            check_props=request.check_props,
            max_universe=request.max_universe,
        )
    except NoCandidateError as err:
        partial = partial_report(scenario, err, weights=request.scenario.weights)
        return JSONResponse(status_code=409, content=partial.model_dump(mode="json"))
    except (UniverseError, ConsistencyError) as err:
        raise _unprocessable(str(err)) from err


def _generate(request: GenerateRequest) -> ScenarioDocument:
    config = GeneratorConfig(**request.model_dump(exclude={"mode"}))
    try:
        scenario = generate_population(config, mode=TrustMode(request.mode))
    except GeneratorError as err:
        raise _unprocessable(str(err)) from err
    return scenario_to_document(scenario)


def _verify(request: VerifyRequest) -> VerifyReport:
    return run_verification(request)


def create_app() -> FastAPI:
    app = FastAPI(
        title="valuetrust",
        version=__version__,
        description="Value-based trust assessment and delegation-chain simulation",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/assess", response_model=AssessResponse)
    def assess(request: AssessRequest) -> AssessResponse:
        return _assess(request)

    @app.post("/run", response_model=RunReport)
    def run_scenario(request: RunRequest):
        return _run(request)

    @app.post("/generate", response_model=ScenarioDocument)
    def generate(request: GenerateRequest) -> ScenarioDocument:
        return _generate(request)

    @app.post("/verify", response_model=VerifyReport)
    def verify(request: VerifyRequest) -> VerifyReport:
        return _verify(request)

    return app


app = create_app()
