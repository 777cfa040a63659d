"""`rules`: mine, generate rules above a confidence floor, print the best ones."""

from __future__ import annotations

import argparse
from decimal import Decimal

from freqmine.config import Config
from freqmine.core.apriori import mine
from freqmine.core.commands import (
    Command,
    add_input_arguments,
    add_threshold_arguments,
    fraction_arg,
    load_input,
    positive_int_arg,
    threshold_from,
)
from freqmine.core.rules import generate_rules, rank
from freqmine.output import render_rules


class RulesCommand(Command):
    name = "rules"
    description = "Generate association rules ranked by confidence, then support."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_threshold_arguments(parser)
        parser.add_argument("--minconf", type=fraction_arg, default=Decimal("0.9"),
                            help="minimum confidence in [0, 1] (default 0.9)")
        parser.add_argument("--top", type=positive_int_arg, default=None,
                            help="number of rules to print (default from config, 20)")
        add_input_arguments(parser)

    def run(self, args: argparse.Namespace, config: Config) -> str:
        loaded = load_input(args, config)
        db = loaded.database
        result = mine(db, threshold_from(args, db.n), threads=config.threads)
        rules = generate_rules(result, args.minconf)
        best = rank(rules, args.top or config.top)
        return render_rules(best, db.catalog, config.output)
