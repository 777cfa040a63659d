"""`mine`: print frequent itemsets with their support counts."""

from __future__ import annotations

import argparse

from freqmine.config import Config
from freqmine.core.apriori import mine
from freqmine.core.commands import Command, add_input_arguments, add_threshold_arguments, load_input, threshold_from
from freqmine.output import render_itemsets


class MineCommand(Command):
    name = "mine"
    description = "Mine frequent itemsets with Apriori."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_threshold_arguments(parser)
        add_input_arguments(parser)

    def run(self, args: argparse.Namespace, config: Config) -> str:
        loaded = load_input(args, config)
        db = loaded.database
        result = mine(db, threshold_from(args, db.n), threads=config.threads)
        return render_itemsets(result, db.catalog, config.output)
