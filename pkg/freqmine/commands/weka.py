"""`weka`: the WEKA Apriori associator with its -N -T -C -D -U -M options."""

from __future__ import annotations

import argparse
from decimal import Decimal, InvalidOperation

from freqmine.config import Config
from freqmine.core.commands import (
    Command,
    UsageError,
    add_input_arguments,
    fraction_arg,
    load_input,
    positive_int_arg,
)
from freqmine.core.dataset import arff_to_transactions, basket_to_arff
from freqmine.core.weka import MetricType, WekaParams, format_report, run_associator


def _decimal_arg(text: str) -> Decimal:
    try:
        return Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"'{text}' is not a number") from None


def _positive_decimal_arg(text: str) -> Decimal:
    value = _decimal_arg(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"'{text}' must be positive")
    return value


class WekaCommand(Command):
    name = "weka"
    description = "Run the WEKA-compatible Apriori associator and print its report."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        defaults = WekaParams()
        parser.add_argument("-N", dest="num_rules", type=positive_int_arg, default=defaults.num_rules,
                            help="number of rules to find")
        parser.add_argument("-T", dest="metric_type", type=MetricType.parse, default=defaults.metric_type,
                            help="metric type; only 0 (confidence) is supported")
        parser.add_argument("-C", dest="min_metric", type=fraction_arg, default=defaults.min_metric,
                            help="minimum confidence")
        parser.add_argument("-D", dest="delta", type=_positive_decimal_arg, default=defaults.delta,
                            help="support decrement per cycle")
        parser.add_argument("-U", dest="upper_bound", type=fraction_arg, default=defaults.upper_bound,
                            help="upper bound for minimum support")
        parser.add_argument("-M", dest="lower_bound", type=fraction_arg, default=defaults.lower_bound,
                            help="lower bound for minimum support")
        parser.add_argument("-S", dest="significance", type=_decimal_arg, default=defaults.significance,
                            help="significance level (echoed only)")
        parser.add_argument("-c", dest="class_index", type=int, default=defaults.class_index,
                            help="class index (echoed only)")
        add_input_arguments(parser)

    def run(self, args: argparse.Namespace, config: Config) -> str:
        try:
            params = WekaParams(
                num_rules=args.num_rules,
                metric_type=args.metric_type,
                min_metric=args.min_metric,
                delta=args.delta,
                upper_bound=args.upper_bound,
                lower_bound=args.lower_bound,
                significance=args.significance,
                class_index=args.class_index,
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        loaded = load_input(args, config)
        db = loaded.database
        if loaded.arff is None:
            # Basket input: one TRUE/FALSE attribute per item, as WEKA would see it.
            db = arff_to_transactions(basket_to_arff(db, loaded.relation))
        run = run_associator(db, params, threads=config.threads)
        return format_report(run, loaded.relation, params.scheme(), loaded.attribute_names)
