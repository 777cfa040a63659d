"""`bench`: per-level Apriori work at one or more support thresholds."""

from __future__ import annotations

import argparse
from pathlib import Path

from freqmine.config import Config
from freqmine.core.bench import bench, render_csv, render_table
from freqmine.core.commands import Command, UsageError, fraction_arg, load_input
from freqmine.core.synth import GenParams, GenParamsError, generate


class BenchCommand(Command):
    name = "bench"
    description = "Benchmark Apriori per level on a file or a generated TxIyDz database."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--minsup", type=fraction_arg, action="append", required=True,
                            help="support threshold; repeat for several")
        parser.add_argument("--generate", metavar="SHAPE", default=None,
                            help="benchmark a generated database, e.g. T10I4D10K, instead of INPUT")
        parser.add_argument("--seed", type=int, default=None, help="seed for --generate (default from config)")
        parser.add_argument("--no-timings", dest="timings", action="store_false",
                            help="print '-' instead of milliseconds, for stable output")
        parser.add_argument("input", type=Path, nargs="?", default=None, help="ARFF or basket file")
        parser.add_argument("--format", dest="input_format", choices=("auto", "arff", "basket"), default="auto")
        parser.add_argument("--present", dest="present_value", default=None, metavar="VALUE")

    def run(self, args: argparse.Namespace, config: Config) -> str:
        if (args.input is None) == (args.generate is None):
            raise UsageError("give exactly one of INPUT or --generate SHAPE")
        if args.generate is not None:
            try:
                params = GenParams.from_name(args.generate, seed=config.seed if args.seed is None else args.seed)
            except GenParamsError as exc:
                raise UsageError(str(exc)) from None
            db = generate(params)
        else:
            db = load_input(args, config).database

        reports = bench(db, args.minsup, threads=config.threads)
        if config.output == "csv":
            return render_csv(reports, timings=args.timings)
        return render_table(reports, timings=args.timings)
