"""`gen`: write a synthetic basket database."""

from __future__ import annotations

import argparse
from pathlib import Path

from loguru import logger

from freqmine.config import Config
from freqmine.core.commands import Command, UsageError, positive_int_arg
from freqmine.core.dataset import render_basket
from freqmine.core.synth import GenParams, GenParamsError, generate


def add_generator_arguments(parser: argparse.ArgumentParser) -> None:
    defaults = GenParams()
    parser.add_argument("-D", dest="num_transactions", type=positive_int_arg, default=defaults.num_transactions,
                        help="number of transactions (default 10000)")
    parser.add_argument("-T", dest="avg_transaction_length", type=float, default=defaults.avg_transaction_length,
                        help="average transaction length (default 10)")
    parser.add_argument("-I", dest="avg_pattern_length", type=float, default=defaults.avg_pattern_length,
                        help="average pattern length (default 4)")
    parser.add_argument("--items", dest="num_items", type=positive_int_arg, default=defaults.num_items,
                        help="size of the item universe (default 1000)")
    parser.add_argument("--patterns", dest="num_patterns", type=positive_int_arg, default=defaults.num_patterns,
                        help="number of base patterns (default 2000)")
    parser.add_argument("--seed", type=int, default=None, help="64-bit seed (default from config, 0)")


def generator_params(args: argparse.Namespace, config: Config) -> GenParams:
    try:
        return GenParams(
            num_transactions=args.num_transactions,
            avg_transaction_length=args.avg_transaction_length,
            avg_pattern_length=args.avg_pattern_length,
            num_items=args.num_items,
            num_patterns=args.num_patterns,
            seed=config.seed if args.seed is None else args.seed,
        )
    except GenParamsError as exc:
        raise UsageError(str(exc)) from None


class GenCommand(Command):
    name = "gen"
    description = "Generate Quest-style synthetic transactions in basket format."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_generator_arguments(parser)
        parser.add_argument("-o", "--out", type=Path, default=None, help="write here instead of stdout")

    def run(self, args: argparse.Namespace, config: Config) -> str:
        params = generator_params(args, config)
        text = render_basket(generate(params))
        if args.out is None:
            return text
        args.out.write_text(text, encoding="utf-8")
        logger.info("Wrote {} to {}", params.name, args.out)
        return ""
