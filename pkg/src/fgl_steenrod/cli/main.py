"""
Command line entry points.

``fgl-steenrod <command>`` exposes every command; ``fgl``, ``steenrod`` and
``bordism`` expose the commands of one module. Reports go to stdout (or
``--output``), logs to stderr.
"""

import argparse
import logging
import sys
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from fgl_steenrod import __version__
from fgl_steenrod.cli.reports import render
from fgl_steenrod.cli.run import run
from fgl_steenrod.configs.run_config import Command, OutputFormat, RunConfig
from fgl_steenrod.errors import FglSteenrodError, ModelInconsistencyError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2

ALL_COMMANDS = {command.value: command for command in Command}
FGL_COMMANDS = {
    "check": Command.CHECK,
    "two-series": Command.TWO_SERIES,
    "solve-additive": Command.SOLVE,
    "solve": Command.SOLVE,
}
STEENROD_COMMANDS = {"derive": Command.DERIVE, "verify": Command.VERIFY}
BORDISM_COMMANDS = {
    "build": Command.BUILD,
    "coaction": Command.COACTION,
    "ev": Command.EV,
    "compose": Command.COMPOSE,
    "coproduct": Command.COPRODUCT,
}


def build_parser(prog: str, commands: Mapping[str, Command]) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=prog, description="Exact formal group law and dual Steenrod algebra computations over GF(2)."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=list(commands), help="Pipeline to run")
    parser.add_argument("-k", "--generators", "--gens", type=int, default=3, help="Number of generators (default: 3)")
    parser.add_argument("-N", "--truncation", type=int, default=None, help="Series truncation (default per command)")
    parser.add_argument(
        "--format", dest="output_format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value
    )
    parser.add_argument("--seed", type=int, default=0, help="Seed for randomized checks (default: 0)")
    parser.add_argument("-o", "--output", type=Path, default=None, help="Write the report here instead of stdout")
    parser.add_argument("--law", default=None, help='Formal group law in x, y, e.g. "x + y + x*y"')
    parser.add_argument("--ring-config", default=None, help="Ring preset name or JSON ring configuration file")
    parser.add_argument(
        "--map", dest="maps", action="append", default=None, help="Ring-map assignments, e.g. 'a1=t, a2=t^2'. Repeatable."
    )
    parser.add_argument(
        "--samples", type=int, default=8, help="Random products checked against the recomputed coproduct (default: 8)"
    )
    parser.add_argument("--max-workers", type=int, default=None, help="Worker cap (default: FGL_STEENROD_MAX_WORKERS or 1)")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    return parser


def config_from_args(args: argparse.Namespace, commands: Mapping[str, Command]) -> RunConfig:
    values = {
        "command": commands[args.command],
        "generators": args.generators,
        "truncation": args.truncation,
        "output_format": args.output_format,
        "seed": args.seed,
        "output": args.output,
        "law": args.law,
        "ring_config": args.ring_config,
        "maps": tuple(args.maps or ()),
        "samples": args.samples,
    }
    if args.max_workers is not None:
        values["max_workers"] = args.max_workers
    return RunConfig(**values)


def _write(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    logger.info(f"Report written to {output}")


def _main(prog: str, commands: Mapping[str, Command], argv: Optional[Sequence[str]]) -> int:
    args = build_parser(prog, commands).parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = config_from_args(args, commands)
        result = run(config)
    except ValidationError as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_CONFIG
    except ModelInconsistencyError as e:
        logger.error(f"Model inconsistency: {e}")
        return EXIT_FAILED
    except (FglSteenrodError, ValueError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_CONFIG

    _write(render(result.report, config.output_format.value), config.output)
    if result.exit_code != EXIT_OK:
        logger.warning(f"'{config.command.value}' finished with failures")
    return result.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return _main("fgl-steenrod", ALL_COMMANDS, argv)


def fgl_main(argv: Optional[Sequence[str]] = None) -> int:
    return _main("fgl", FGL_COMMANDS, argv)


def steenrod_main(argv: Optional[Sequence[str]] = None) -> int:
    return _main("steenrod", STEENROD_COMMANDS, argv)


def bordism_main(argv: Optional[Sequence[str]] = None) -> int:
    return _main("bordism", BORDISM_COMMANDS, argv)


if __name__ == "__main__":
    sys.exit(main())
