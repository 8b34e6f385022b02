"""
Command-line interface for skewalg
"""
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import click

from core import user_config
from core.contexts import (COMPAT_TARGETS, OUTPUT_FORMATS, RunConfig,
                           build_context, compat_targets, parse,
                           print_canonical)
from core.daha import DahaCalculator, parse_relation
from core.errors import (EmptyGeneratorSetError, ExpressionError,
                         HypothesisError, IncompleteReductionError,
                         SkewAlgError, SpecializationError,
                         UnknownContextError)
from core.expression import evaluate
from core.ideals import SIDE_ALIASES, GeneratorSet, minimize
from core.logger import configure_logging, log
from core.ore import quadratic_compat_check
from core.output_validator import OutputValidator
from core.selftest import SUITES, run_selftest

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

USAGE_ERRORS = (ExpressionError, UnknownContextError, SpecializationError, EmptyGeneratorSetError, ValueError)


def format_option(func):
    return click.option(
        "--format", "output_format",
        type=click.Choice(OUTPUT_FORMATS),
        default=None,
        help="Output format (text or json)"
    )(func)


def params_options(func):
    func = click.option(
        "--prime",
        type=int,
        default=0,
        help="Specialize over F_p instead of Q (with --params q=..,h=..)"
    )(func)
    return click.option(
        "--params",
        default="generic",
        help="'generic' or a specialization such as q=2,h=3"
    )(func)


def emit(config: RunConfig, command: str, inputs: dict, outputs: dict, verdict: str, text: str):
    """Print one result; in JSON mode a single {command, context, inputs, outputs, verdict} object."""
    if config.output_format != "json":
        click.echo(text)
        return
    document = {"command": command, "context": config.context, "inputs": inputs,
                "outputs": outputs, "verdict": verdict}
    if config.strict_schema:
        validator = OutputValidator(enable_schema=True)
        result = validator.validate(document)
        if not result["valid"]:
            log("error", "output failed schema validation", detail=validator.generate_report(result))
            sys.exit(EXIT_FAIL)
    click.echo(json.dumps(document, indent=2))


def fail(config: Optional[RunConfig], command: str, inputs: dict, err: Exception, code: int):
    report = getattr(err, "report", None)
    if hasattr(report, "as_dict"):
        report = report.as_dict()
    if config is not None and config.output_format == "json":
        emit(config, command, inputs, {"error": str(err), "report": report}, "error" if code == EXIT_USAGE else "fail", "")
    else:
        click.echo(f"Error: {err}", err=True)
        if report:
            click.echo(json.dumps(report, indent=2), err=True)
    sys.exit(code)


def _config(**kwargs) -> RunConfig:
    try:
        return RunConfig.from_settings(**kwargs)
    except USAGE_ERRORS as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_USAGE)


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Logging level"
)
@click.option(
    "--log-file",
    type=click.Path(path_type=Path),
    default=None,
    help="Log file (default ~/.skewalg/skewalg.log)"
)
def skewalg(log_level: Optional[str], log_file: Optional[Path]):
    """skewalg - exact arithmetic in quadratic amalgams and the DAHA of GL2."""
    settings = user_config.effective_settings()
    level = log_level or settings.get("log_level", "WARNING")
    try:
        configure_logging(level, log_file or user_config.get_log_file())
    except OSError:
        configure_logging(level, None)


@skewalg.command()
@click.argument("expression")
@click.option("--context", default=None, help="torus3, daha, F1 (QS-order2), F2 (F2S-dds) or F2S-zero")
@params_options
@format_option
def nf(expression: str, context: Optional[str], params: str, prime: int, output_format: Optional[str]):
    """Print the normal form of EXPRESSION."""
    config = _config(context=context, params=params, prime=prime, output_format=output_format)
    inputs = {"expression": expression, "params": config.params.describe()}
    try:
        ctx = build_context(config)
        element = evaluate(parse(expression, config, ctx), ctx.env)
    except USAGE_ERRORS as e:
        fail(config, "nf", inputs, e, EXIT_USAGE)
    except SkewAlgError as e:
        fail(config, "nf", inputs, e, EXIT_FAIL)
    text = print_canonical(element)
    emit(config, "nf", inputs, {"normal_form": text}, "pass", text)


@skewalg.command("daha-verify")
@params_options
@click.option(
    "--extra-relation",
    multiple=True,
    help="Additional relation 'lhs = rhs' to check (repeatable)"
)
@format_option
def daha_verify(params: str, prime: int, extra_relation: Sequence[str], output_format: Optional[str]):
    """Check the DAHA relations and round trips through the amalgam."""
    config = _config(context="daha", params=params, prime=prime, output_format=output_format)
    inputs = {"params": config.params.describe(), "extra_relations": list(extra_relation)}
    try:
        report = DahaCalculator(config.params).verify([parse_relation(r) for r in extra_relation])
    except USAGE_ERRORS as e:
        fail(config, "daha-verify", inputs, e, EXIT_USAGE)
    except SkewAlgError as e:
        fail(config, "daha-verify", inputs, e, EXIT_FAIL)

    lines = [f"DAHA verification at {report.params}:"]
    for record in report.records:
        status = "PASS" if record.passed else "FAIL"
        lines.append(f"  {status}  {record.relation}")
        if not record.passed:
            lines.append(f"        lhs = {record.lhs}")
            lines.append(f"        rhs = {record.rhs}")
    passed = sum(record.passed for record in report.records)
    lines.append(f"{passed}/{len(report.records)} identities hold")
    emit(config, "daha-verify", inputs, report.as_dict(), "pass" if report.passed else "fail", "\n".join(lines))
    if not report.passed:
        sys.exit(EXIT_FAIL)


@skewalg.command("ideal-reduce")
@click.argument("generators", nargs=-1, required=True)
@click.option(
    "--side",
    type=click.Choice(sorted(SIDE_ALIASES)),
    default="L",
    help="L (left), R (right) or 2 (two-sided)"
)
@click.option("--context", default="F1", help="A division-ring context: F1, F2 or F2S-zero")
@click.option("--extra-depth", type=int, default=None, help="Saturation depth beyond the input degree")
@click.option("--monic", is_flag=True, help="Normalize a leading coefficient of each output to 1")
@format_option
def ideal_reduce(generators: Sequence[str], side: str, context: str, extra_depth: Optional[int],
                 monic: bool, output_format: Optional[str]):
    """Reduce the ideal generated by GENERATORS to at most two generators, with a certificate."""
    config = _config(context=context, output_format=output_format)
    inputs = {"generators": list(generators), "side": SIDE_ALIASES[side]}
    try:
        ctx = build_context(config)
        if ctx.instance is None:
            raise HypothesisError(f"context {config.context} has no amalgam", {"division_ring": False})
        gens = GeneratorSet(ctx.instance, [ctx.evaluate(g) for g in generators], side)
        certificate = minimize(gens, config.extra_depth if extra_depth is None else extra_depth, monic)
    except USAGE_ERRORS as e:
        fail(config, "ideal-reduce", inputs, e, EXIT_USAGE)
    except (HypothesisError, IncompleteReductionError) as e:
        log("warn", f"ideal reduction stopped: {e}")
        fail(config, "ideal-reduce", inputs, e, EXIT_FAIL)
    except SkewAlgError as e:
        fail(config, "ideal-reduce", inputs, e, EXIT_FAIL)

    outputs = [p.text() for p in certificate.outputs]
    lines = [f"generators: [{', '.join(outputs)}]",
             f"certificate: {'verified' if certificate.verified else 'NOT verified'} (depth {certificate.depth})"]
    for k, comb in enumerate(certificate.output_combinations):
        terms = " + ".join(f"({t['left']})*g{t['generator']}*({t['right']})" for t in comb.as_list()) or "0"
        lines.append(f"  p{k} = {terms}")
    verdict = "pass" if certificate.verified else "fail"
    emit(config, "ideal-reduce", inputs, certificate.as_dict(), verdict, "\n".join(lines))
    if not certificate.verified:
        sys.exit(EXIT_FAIL)


@skewalg.command("compat-check")
@click.argument("preset", type=click.Choice(COMPAT_TARGETS))
@params_options
@format_option
def compat_check(preset: str, params: str, prime: int, output_format: Optional[str]):
    """Run the normality check on the quadratic data of PRESET."""
    config = _config(context=None, params=params, prime=prime, output_format=output_format)
    inputs = {"preset": preset, "params": config.params.describe()}
    try:
        targets = compat_targets(preset, config.params)
        reports = {letter: quadratic_compat_check(qd) for letter, qd in targets.items()}
    except USAGE_ERRORS as e:
        fail(config, "compat-check", inputs, e, EXIT_USAGE)
    except SkewAlgError as e:
        fail(config, "compat-check", inputs, e, EXIT_FAIL)

    passed = all(report.passed for report in reports.values())
    lines = []
    for letter, report in reports.items():
        lines.append(f"{letter}: {report.relator} {'normal' if report.passed else 'NOT normal'}")
        failure = report.first_failure
        if failure:
            lines.append(f"  fails: {failure.identity}")
            lines.append(f"    lhs = {failure.lhs}")
            lines.append(f"    rhs = {failure.rhs}")
    outputs = {"reports": {letter: report.as_dict() for letter, report in reports.items()}}
    emit(config, "compat-check", inputs, outputs, "pass" if passed else "fail", "\n".join(lines))
    if not passed:
        sys.exit(EXIT_FAIL)


@skewalg.command()
@click.option("--seed", type=int, default=None, help="Seed (default: SKEWALG_SEED or the user config)")
@click.option("--cases", type=int, default=None,
              help="Cases for the 200-case properties, the others scaled alike (default: full sizes)")
@click.option("--suite", "suites", multiple=True, type=click.Choice(sorted(SUITES)), help="Suites to run (repeatable)")
@click.option("--save-seed", is_flag=True, help="Store the seed in the user config for later runs")
@format_option
def selftest(seed: Optional[int], cases: Optional[int], suites: Sequence[str], save_seed: bool,
             output_format: Optional[str]):
    """Run the seeded property suites."""
    config = _config(context=None, seed=seed, output_format=output_format)
    if save_seed:
        user_config.set_seed(config.seed)
        log("info", f"seed {config.seed} saved to {user_config.get_config_file()}")
    if cases is None:
        cases = user_config.effective_settings().get("selftest_cases")
    inputs = {"seed": config.seed, "cases": cases, "suites": list(suites) or sorted(SUITES)}
    report = run_selftest(config.seed, cases, suites or None)
    lines = [f"selftest (seed {config.seed}):"]
    for check in report.checks:
        status = "PASS" if not check.failures else "FAIL"
        lines.append(f"  {status}  {check.name}: {check.cases - check.failure_count()}/{check.cases}")
        if check.failures:
            lines.append(f"        first failure: {check.failures[0]}")
    emit(config, "selftest", inputs, report.as_dict(), "pass" if report.passed else "fail", "\n".join(lines))
    if not report.passed:
        sys.exit(EXIT_FAIL)


if __name__ == "__main__":
    skewalg()
