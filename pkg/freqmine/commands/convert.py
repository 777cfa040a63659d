"""`convert`: rewrite a database between ARFF and basket text."""

from __future__ import annotations

import argparse
from dataclasses import replace

from freqmine.config import Config
from freqmine.core.commands import Command, add_input_arguments, load_input
from freqmine.core.dataset import basket_to_arff, render_arff, render_basket


class ConvertCommand(Command):
    name = "convert"
    description = "Convert between ARFF and basket formats (basket to ARFF uses one TRUE/FALSE attribute per item)."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--to", choices=("arff", "basket"), required=True, help="output format")
        parser.add_argument("--relation", default=None, help="relation name for ARFF output (default: input name)")
        add_input_arguments(parser)

    def run(self, args: argparse.Namespace, config: Config) -> str:
        loaded = load_input(args, config)
        if args.to == "basket":
            return render_basket(loaded.database)
        if loaded.arff is not None:
            ds = loaded.arff if not args.relation else replace(loaded.arff, relation=args.relation)
            return render_arff(ds)
        return render_arff(basket_to_arff(loaded.database, args.relation or loaded.relation))
