"""freqmine entry point: parse flags, wire the command registry and run."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from loguru import logger

from freqmine import __version__
from freqmine.commands.bench import BenchCommand
from freqmine.commands.convert import ConvertCommand
from freqmine.commands.gen import GenCommand
from freqmine.commands.mine import MineCommand
from freqmine.commands.rules import RulesCommand
from freqmine.commands.weka import WekaCommand
from freqmine.config import OUTPUT_FORMATS, Config, load_config
from freqmine.core.commands import CommandRegistry, UsageError, positive_int_arg
from freqmine.core.dataset import DatasetError
from freqmine.core.weka import EmptyDatabaseError, UnsupportedMetricError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    """Raise instead of exiting so run_cli owns the exit status."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _global_options(defaults: bool) -> argparse.ArgumentParser:
    """Options accepted before or after the subcommand.

    The subcommand copy suppresses its defaults so it cannot clobber values given
    before the subcommand name.
    """
    unset = None if defaults else argparse.SUPPRESS
    parent = _Parser(add_help=False)
    parent.add_argument("--config", type=Path, default=unset, help="key = value config file")
    parent.add_argument("--verbose", "-v", action="store_true", default=False if defaults else argparse.SUPPRESS,
                        help="debug logging on stderr")
    parent.add_argument("--threads", type=positive_int_arg, default=unset, help="support-counting threads")
    parent.add_argument("--output", choices=OUTPUT_FORMATS, default=unset, help="output format (default text)")
    return parent


def _build_registry() -> CommandRegistry:
    registry = CommandRegistry()
    registry.register(MineCommand())
    registry.register(RulesCommand())
    registry.register(WekaCommand())
    registry.register(GenCommand())
    registry.register(BenchCommand())
    registry.register(ConvertCommand())
    return registry


def _setup_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level, format="<level>{level: <8}</level> | {message}")


def _effective_config(args: argparse.Namespace) -> Config:
    config = load_config(args.config)
    if args.verbose:
        config.log_level = "DEBUG"
    if args.threads is not None:
        config.threads = args.threads
    if args.output is not None:
        config.output = args.output
    return config


def build_parser(registry: CommandRegistry) -> argparse.ArgumentParser:
    parser = _Parser(
        prog="freqmine", description="Apriori frequent itemsets and association rules.",
        parents=[_global_options(defaults=True)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    registry.add_subparsers(parser, parents=[_global_options(defaults=False)])
    return parser


def run_cli(argv: list[str]) -> int:
    """Run one command. Output goes to stdout, diagnostics to stderr; returns the exit status."""
    _setup_logging("WARNING")
    registry = _build_registry()
    parser = build_parser(registry)

    try:
        args = parser.parse_args(argv)
        config = _effective_config(args)
    except SystemExit as exc:
        # --help and --version
        return EXIT_OK if not exc.code else EXIT_USAGE
    except UsageError as exc:
        logger.error("{}", exc)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        logger.error("config: {}", exc)
        return EXIT_USAGE

    _setup_logging(config.log_level)
    command = registry.get(args.command)
    assert command is not None
    logger.debug("Running '{}' with threads={} output={}", command.name, config.threads, config.output)

    try:
        text = command.run(args, config)
    except (UsageError, UnsupportedMetricError) as exc:
        logger.error("{}", exc)
        return EXIT_USAGE
    except DatasetError as exc:
        source = getattr(args, "input", None)
        if source is not None and exc.line is not None:
            logger.error("{}:{}: {}", source, exc.line, exc.message)
        else:
            logger.error("{}{}", f"{source}: " if source is not None else "", exc)
        return EXIT_INPUT
    except (EmptyDatabaseError, OSError) as exc:
        logger.error("{}", exc)
        return EXIT_INPUT
    except Exception:
        logger.exception("'{}' failed", command.name)
        return EXIT_INTERNAL

    sys.stdout.write(text)
    sys.stdout.flush()
    return EXIT_OK


def cli() -> None:
    """CLI entry point."""
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    cli()
