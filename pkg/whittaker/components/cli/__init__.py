"""Command line surface.

Every command builds a Report whose verdict decides the exit code: 0 when nothing
disagrees with the closed forms, 1 on a verified mismatch and 2 on usage, budget
or configuration errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Final

import voluptuous as vol

from whittaker import enable_logging
from whittaker.components import get_component
from whittaker.components.group_core.const import COMPONENT as GROUP_CORE
from whittaker.components.group_core.const import CONFIG_BUDGET_ELEMENTS
from whittaker.components.hecke.const import COMPONENT as HECKE
from whittaker.components.hecke.const import CONFIG_SEED
from whittaker.components.local_ring.const import COMPONENT as RING
from whittaker.components.local_ring.const import CONFIG_ELL, CONFIG_FLAVOR, CONFIG_P
from whittaker.components.logger.const import COMPONENT as LOGGER_COMPONENT
from whittaker.components.logger.const import CONFIG_DEFAULT_LEVEL, VALID_LOG_LEVELS
from whittaker.config import build_config
from whittaker.const import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, FLAVORS
from whittaker.exceptions import BadParam, BudgetExceeded, ConfigurationError
from whittaker.helpers import log_duration

from .const import (
    COMPONENT,
    CONFIG_FORMAT,
    DEFAULT_FORMAT,
    DESC_COMPONENT,
    DESC_FORMAT,
    FORMATS,
)
from .report import REPORT_SCHEMA, Report, emit, paper_match_of
from .verbs import VERBS, RunConfig

LOGGER = logging.getLogger(__name__)

CONFIG_SCHEMA: Final = vol.Schema(
    {
        vol.Optional(COMPONENT, default={}, description=DESC_COMPONENT): vol.Schema(
            {
                vol.Optional(
                    CONFIG_FORMAT, default=DEFAULT_FORMAT, description=DESC_FORMAT
                ): vol.All(vol.Lower, vol.In(FORMATS)),
            }
        )
    },
    extra=vol.ALLOW_EXTRA,
)

USAGE_ERRORS: Final = (BadParam, BudgetExceeded, ConfigurationError)

# Verb arguments and their help, added only to the verbs that read them
_VERB_ARGUMENTS: Final = {
    "t": ("--t", "Level of the degenerate character psi_t. Default: every level."),
    "t2": ("--t2", "Level of the second module. Default: the value of --t."),
    "chi": ("--chi", "Index of the central character. Default: sweep all."),
    "max_ell": ("--max-ell", "Largest level of the sweep."),
}


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, help="Odd prime, the residue field size.")
    parser.add_argument("--ell", type=int, help="Length of the ring.")
    parser.add_argument("--flavor", choices=FLAVORS, help="zmod or tpoly.")
    parser.add_argument("--seed", type=int, help="Seed of every randomized step.")
    parser.add_argument(
        "--budget-elems",
        dest="budget_elements",
        type=int,
        help="Largest group stored element by element.",
    )
    parser.add_argument(
        "--format", dest="output_format", choices=FORMATS, help=DESC_FORMAT
    )
    parser.add_argument("--config", help="YAML configuration file.")
    parser.add_argument(
        "--log-level",
        choices=list(VALID_LOG_LEVELS),
        help="Default level for all logs.",
    )


def build_parser() -> argparse.ArgumentParser:
    """Return the parser with one subcommand per verb."""
    parser = argparse.ArgumentParser(
        prog="whittaker",
        description="Exact representation theory of GL2 over finite local rings.",
    )
    subparsers = parser.add_subparsers(dest="verb", required=True, metavar="verb")
    for name, spec in VERBS.items():
        subparser = subparsers.add_parser(name, help=spec.help, description=spec.help)
        _add_common_arguments(subparser)
        for argument in spec.uses:
            flag, text = _VERB_ARGUMENTS[argument]
            subparser.add_argument(flag, dest=argument, type=int, help=text)
    return parser


def config_overrides(args: argparse.Namespace) -> dict[str, dict[str, Any]]:
    """Return the configuration sections set on the command line."""
    return {
        RING: {CONFIG_P: args.p, CONFIG_ELL: args.ell, CONFIG_FLAVOR: args.flavor},
        GROUP_CORE: {CONFIG_BUDGET_ELEMENTS: args.budget_elements},
        HECKE: {CONFIG_SEED: args.seed},
        LOGGER_COMPONENT: {CONFIG_DEFAULT_LEVEL: args.log_level},
        COMPONENT: {CONFIG_FORMAT: args.output_format},
    }


def run_config(args: argparse.Namespace, config: dict[str, Any]) -> RunConfig:
    """Return the validated RunConfig of parsed arguments and a validated config."""
    cfg = RunConfig(
        verb=args.verb,
        p=config[RING][CONFIG_P],
        ell=config[RING][CONFIG_ELL],
        flavor=config[RING][CONFIG_FLAVOR],
        t=getattr(args, "t", None),
        t2=getattr(args, "t2", None),
        chi=getattr(args, "chi", None),
        max_ell=getattr(args, "max_ell", None),
        seed=config[HECKE][CONFIG_SEED],
        budget_elements=config[GROUP_CORE][CONFIG_BUDGET_ELEMENTS],
        output_format=config[COMPONENT][CONFIG_FORMAT],
        config=config,
    )
    cfg.validate()
    return cfg


def run(cfg: RunConfig) -> Report:
    """Run one verb and return its report."""
    with log_duration(LOGGER, f"{cfg.verb} over GL2({cfg.ring})"):
        result = VERBS[cfg.verb].run(cfg)
    return Report(
        command=cfg.verb,
        args=cfg.echo(),
        ring=cfg.ring_summary(),
        result=result,
    )


def exit_code(report: Report) -> int:
    """Return 1 if any verdict of the report is False, else 0."""
    return EXIT_MISMATCH if paper_match_of(report.result) is False else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, run the verb and write the report to stdout."""
    parser = build_parser()
    args = parser.parse_args(argv)
    verb_help = VERBS[args.verb].help
    subparser_usage = f"usage: whittaker {args.verb} [options]\n  {verb_help}"
    try:
        config = build_config(args.config, config_overrides(args))
        get_component(LOGGER_COMPONENT).setup(config)
        cfg = run_config(args, config)
        report = run(cfg)
    except USAGE_ERRORS as error:
        LOGGER.error(str(error))
        print(f"{subparser_usage}\nerror: {error}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.buffer.write(emit(report, cfg.output_format))
    sys.stdout.flush()
    code = exit_code(report)
    if code != EXIT_OK:
        LOGGER.error("%s disagrees with the closed forms", cfg.verb)
    return code


def init(argv: list[str] | None = None) -> int:
    """Initialize logging and run."""
    enable_logging()
    return main(argv)


__all__ = [
    "CONFIG_SCHEMA",
    "REPORT_SCHEMA",
    "Report",
    "RunConfig",
    "build_parser",
    "emit",
    "exit_code",
    "init",
    "main",
    "run",
    "run_config",
]
