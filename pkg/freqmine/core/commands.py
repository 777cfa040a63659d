"""Command registry for freqmine: one registered Command per CLI subcommand."""

from __future__ import annotations

import argparse
from abc import ABC, abstractmethod
from decimal import Decimal, InvalidOperation
from pathlib import Path

from loguru import logger

from freqmine.config import Config
from freqmine.core.apriori import SupportThreshold
from freqmine.core.dataset import LoadedInput, load_database


class UsageError(Exception):
    """Bad command line; maps to exit status 1."""


def fraction_arg(text: str) -> Decimal:
    """argparse type: a decimal in [0, 1], kept exact."""
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"'{text}' is not a number") from None
    if not value.is_finite() or not 0 <= value <= 1:
        raise argparse.ArgumentTypeError(f"'{text}' must be between 0 and 1")
    return value


def positive_int_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"'{text}' must be a positive integer")
    return value


class Command(ABC):
    """Base class for all freqmine subcommands."""

    name: str
    description: str

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Declare the subcommand's flags and positionals."""

    @abstractmethod
    def run(self, args: argparse.Namespace, config: Config) -> str:
        """Execute and return the text destined for stdout."""


class CommandRegistry:
    def __init__(self) -> None:
        self._commands: dict[str, Command] = {}

    def register(self, command: Command) -> None:
        """Register a command instance."""
        self._commands[command.name] = command
        logger.debug("Command registered: {}", command.name)

    def get(self, name: str) -> Command | None:
        """Get a command by name."""
        return self._commands.get(name)

    def list_names(self) -> list[str]:
        """Return list of registered command names."""
        return list(self._commands.keys())

    def add_subparsers(self, parser: argparse.ArgumentParser, parents: list[argparse.ArgumentParser]) -> None:
        """Attach one subparser per registered command."""
        sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=type(parser))
        sub.required = True
        for command in self._commands.values():
            child = sub.add_parser(command.name, help=command.description, description=command.description, parents=parents)
            command.add_arguments(child)


# -- Shared input handling --

def add_input_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", type=Path, help="ARFF or basket file")
    parser.add_argument(
        "--format", dest="input_format", choices=("auto", "arff", "basket"), default="auto",
        help="input format (default: by extension, .arff is ARFF, anything else basket)",
    )
    parser.add_argument(
        "--present", dest="present_value", default=None, metavar="VALUE",
        help="ARFF only: one item per attribute, present where the value equals VALUE",
    )


def add_threshold_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--minsup", type=fraction_arg, help="minimum relative support in [0, 1]")
    group.add_argument("--min-count", type=positive_int_arg, help="minimum absolute support count")


def load_input(args: argparse.Namespace, config: Config) -> LoadedInput:
    present = args.present_value if args.present_value is not None else config.present_value
    return load_database(args.input, fmt=args.input_format, present_value=present)


def threshold_from(args: argparse.Namespace, n: int) -> SupportThreshold:
    if args.min_count is not None:
        return SupportThreshold.from_count(args.min_count, n)
    return SupportThreshold.from_relative(args.minsup, n)
