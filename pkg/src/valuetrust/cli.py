"""Command-line client: run scenarios, generate populations, verify laws.

Every subcommand computes in process by default; ``--server URL`` routes
the same request through a running service instance instead, with identical
output and exit codes.

Exit codes: 0 success, 1 usage, 2 schema/validation, 3 no candidate at some
step, 4 a requested check failed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import httpx
from pydantic import ValidationError

from .delegation import POLICY_MODES, TrustMode
from .errors import (
    ConsistencyError,
    GeneratorError,
    NoCandidateError,
    ScenarioError,
    SizeGuardError,
    UniverseError,
)
from .generator import generate_population
from .runner import partial_report, report_to_csv, run
from .schemas import (
    GenerateRequest,
    GeneratorConfig,
    PartialRunReport,
    RunReport,
    RunRequest,
    ScenarioDocument,
    VerifyReport,
    VerifyRequest,
    to_json,
)
from .scenario_io import document_to_scenario, load_document, scenario_to_document
from .verification import run_verification

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_NO_CANDIDATE = 3
EXIT_CHECK_FAILED = 4

_MODE_CHOICES = [m.value for m in POLICY_MODES]


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; the CLI contract says 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _bounded_int(low: int, high: int | None = None):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if value < low or (high is not None and value > high):
            span = f">= {low}" if high is None else f"between {low} and {high}"
            raise argparse.ArgumentTypeError(f"must be {span}")
        return value

    return parse


def _probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError("must be between 0 and 1")
    return value


def _client(base_url: str) -> httpx.Client:
    # replaced in tests to route through an in-process app
    return httpx.Client(base_url=base_url, timeout=600.0)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _checks_failed(report: RunReport) -> bool:
    if report.props is not None and not report.props.passed:
        return True
    return report.theorem is not None and report.theorem.oracle_holds is False


def _post(server: str, path: str, body) -> httpx.Response:
    with _client(server) as client:
        return client.post(path, json=body.model_dump(mode="json"))


def _print_http_error(response: httpx.Response) -> None:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = response.text
    print(f"server rejected the request ({response.status_code}): {detail}", file=sys.stderr)


def _finish_run(report: RunReport, args) -> int:
    text = report_to_csv(report) if args.format == "csv" else to_json(report)
    _emit(text, args.out)
    return EXIT_CHECK_FAILED if _checks_failed(report) else EXIT_OK


def _cmd_run(args) -> int:
    doc = load_document(args.scenario)
    request = RunRequest(
        scenario=doc,
        mode=TrustMode(args.mode) if args.mode else None,
        check_theorem=args.check_theorem,
        check_props=args.check_props,
        max_universe=args.max_universe,
    )
    if args.server:
        response = _post(args.server, "/run", request)
        if response.status_code == 409:
            _emit(to_json(PartialRunReport.model_validate(response.json())), args.out)
            return EXIT_NO_CANDIDATE
        if response.status_code == 422:
            _print_http_error(response)
            return EXIT_VALIDATION
        response.raise_for_status()
        return _finish_run(RunReport.model_validate(response.json()), args)
    scenario = document_to_scenario(doc)
    if request.mode is not None:
        scenario = scenario.with_mode(request.mode)
    try:
        report = run(
            scenario,
            weights=doc.weights,
            check_theorem=request.check_theorem,
            check_props=request.check_props,
            max_universe=request.max_universe,
        )
    except NoCandidateError as err:
        _emit(to_json(partial_report(scenario, err, weights=doc.weights)), args.out)
        return EXIT_NO_CANDIDATE
    return _finish_run(report, args)


def _cmd_generate(args) -> int:
    request = GenerateRequest(
        seed=args.seed,
        n_values=args.n_values,
        n_agents=args.n_agents,
        chain_length=args.chain_length,
        opposition_density=args.opposition_density,
        value_density=args.value_density,
        capability_density=args.capability_density,
        mode=TrustMode(args.mode),
    )
    if args.server:
        response = _post(args.server, "/generate", request)
        if response.status_code == 422:
            _print_http_error(response)
            return EXIT_VALIDATION
        response.raise_for_status()
        doc = ScenarioDocument.model_validate(response.json())
    else:
        config = GeneratorConfig(**request.model_dump(exclude={"mode"}))
        doc = scenario_to_document(generate_population(config, mode=request.mode))
    _emit(to_json(doc), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    both = not args.check_props and not args.check_theorem
    request = VerifyRequest(
        check_props=both or args.check_props,
        max_universe=args.max_universe,
        check_theorem=both or args.check_theorem,
        trials=args.trials,
        seed=args.seed,
        max_counterexamples=args.max_counterexamples,
    )
    if args.server:
        response = _post(args.server, "/verify", request)
        response.raise_for_status()
        report = VerifyReport.model_validate(response.json())
    else:
        report = run_verification(request)
    if report.fuzz is not None and report.fuzz.counterexamples:
        directory = Path(args.artifacts_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for i, counterexample in enumerate(report.fuzz.counterexamples, start=1):
            path = directory / f"counterexample_{i:04d}.json"
            path.write_text(to_json(counterexample), encoding="utf-8")
            print(f"wrote {path}", file=sys.stderr)
    _emit(to_json(report), args.out)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("valuetrust.service:app", host=args.host, port=args.port)
    return EXIT_OK


def _add_server_and_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--server", metavar="URL", help="route through a running service instance")
    parser.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")


def build_parser() -> _Parser:
    parser = _Parser(prog="valuetrust", description="Value-based trust assessment simulator")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    run_p = sub.add_parser("run", help="run a scenario file and emit its report")
    run_p.add_argument("scenario", help="path to a scenario JSON file")
    run_p.add_argument("--mode", choices=_MODE_CHOICES, help="override the scenario's policy mode")
    run_p.add_argument("--format", choices=["json", "csv"], default="json")
    run_p.add_argument(
        "--check-theorem",
        action="store_true",
        help="attach the bold-vs-cautious comparison to the report",
    )
    run_p.add_argument(
        "--check-props",
        action="store_true",
        help="attach an exhaustive law sweep to the report",
    )
    run_p.add_argument(
        "--max-universe",
        type=_bounded_int(0, 5),
        default=4,
        metavar="N",
        help="universe size bound for --check-props (default 4)",
    )
    _add_server_and_out(run_p)
    run_p.set_defaults(handler=_cmd_run)

    gen_p = sub.add_parser("generate", help="generate a seeded random scenario")
    gen_p.add_argument("--seed", type=_bounded_int(0, 2**64 - 1), required=True)
    gen_p.add_argument("--n-values", type=_bounded_int(1), default=6, metavar="N")
    gen_p.add_argument("--n-agents", type=_bounded_int(2), default=5, metavar="N")
    gen_p.add_argument("--chain-length", type=_bounded_int(1), default=2, metavar="N")
    gen_p.add_argument("--opposition-density", type=_probability, default=0.2, metavar="P")
    gen_p.add_argument("--value-density", type=_probability, default=0.5, metavar="P")
    gen_p.add_argument("--capability-density", type=_probability, default=0.5, metavar="P")
    gen_p.add_argument("--mode", choices=_MODE_CHOICES, default=TrustMode.CAUTIOUS.value)
    _add_server_and_out(gen_p)
    gen_p.set_defaults(handler=_cmd_generate)

    verify_p = sub.add_parser("verify", help="check the algebra laws and the delegation theorem")
    verify_p.add_argument(
        "--check-props", action="store_true", help="run only the exhaustive law sweep"
    )
    verify_p.add_argument(
        "--check-theorem", action="store_true", help="run only the randomized theorem campaign"
    )
    verify_p.add_argument(
        "--max-universe",
        type=_bounded_int(0, 5),
        default=4,
        metavar="N",
        help="universe size bound for the law sweep (default 4)",
    )
    verify_p.add_argument(
        "--trials",
        type=_bounded_int(0),
        default=1000,
        metavar="N",
        help="number of random scenarios for the theorem campaign (default 1000)",
    )
    verify_p.add_argument("--seed", type=_bounded_int(0, 2**64 - 1), default=0)
    verify_p.add_argument(
        "--max-counterexamples", type=_bounded_int(0, 25), default=5, metavar="N"
    )
    verify_p.add_argument(
        "--artifacts-dir",
        default="counterexamples",
        metavar="DIR",
        help="where minimized counterexample files are written (default ./counterexamples)",
    )
    _add_server_and_out(verify_p)
    verify_p.set_defaults(handler=_cmd_verify)

    serve_p = sub.add_parser("serve", help="start the HTTP service")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--port", type=_bounded_int(1, 65535), default=8000)
    serve_p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ScenarioError as err:
        print(f"{err.kind} error: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    except GeneratorError as err:
        print(f"generation error: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    except (UniverseError, ConsistencyError, SizeGuardError, ValidationError, ValueError) as err:
        print(f"validation error: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except httpx.HTTPError as err:
        print(f"server error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
