"""WEKA-compatible Apriori associator: support schedule, cycles, and the text report.

The associator starts one delta below the upper bound and lowers minimum support
by delta per cycle until enough rules meet the minimum metric or support would
fall under the lower bound. Support values are exact decimals throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from enum import IntEnum
from fractions import Fraction

from loguru import logger

from freqmine.core.apriori import MiningResult, SupportThreshold, mine
from freqmine.core.dataset import ItemCatalog, TransactionDatabase
from freqmine.core.rules import AssociationRule, generate_rules, rank

SCHEME_CLASS = "weka.associations.Apriori"


class UnsupportedMetricError(ValueError):
    """Only the confidence metric (-T 0) is implemented."""


class EmptyDatabaseError(ValueError):
    """The associator needs at least one instance."""


class MetricType(IntEnum):
    CONFIDENCE = 0

    @classmethod
    def parse(cls, value: int | str) -> MetricType:
        try:
            return cls(int(value))
        except ValueError:
            raise UnsupportedMetricError(
                f"metric type {value} is not supported; only 0 (confidence) is"
            ) from None


def format_decimal(value: Decimal) -> str:
    """Plain notation without trailing zeros: 0.50 -> 0.5, 1.0 -> 1."""
    text = format(value, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text or "0"


def format_confidence(confidence: Fraction) -> str:
    """Round half up to two decimals, then drop trailing zeros: 11/15 -> 0.73, 1 -> 1."""
    hundredths = math.floor(confidence * 100 + Fraction(1, 2))
    return format_decimal(Decimal(hundredths).scaleb(-2))


@dataclass(frozen=True)
class WekaParams:
    """Scheme options. Defaults are WEKA's own."""

    num_rules: int = 10
    metric_type: MetricType = MetricType.CONFIDENCE
    min_metric: Decimal = Decimal("0.9")
    delta: Decimal = Decimal("0.05")
    upper_bound: Decimal = Decimal("1.0")
    lower_bound: Decimal = Decimal("0.1")
    # Echoed in the scheme line only.
    significance: Decimal = Decimal("-1.0")
    class_index: int = -1

    def __post_init__(self) -> None:
        if self.num_rules < 1:
            raise ValueError(f"num_rules (-N) must be positive, got {self.num_rules}")
        if not 0 <= self.lower_bound <= self.upper_bound <= 1:
            raise ValueError(
                f"need 0 <= lower bound (-M {self.lower_bound}) <= upper bound (-U {self.upper_bound}) <= 1"
            )
        if self.delta <= 0:
            raise ValueError(f"delta (-D) must be positive, got {self.delta}")
        if not 0 <= self.min_metric <= 1:
            raise ValueError(f"minimum metric (-C) must be in [0, 1], got {self.min_metric}")

    def scheme(self) -> str:
        return (
            f"{SCHEME_CLASS} -N {self.num_rules} -T {int(self.metric_type)} -C {self.min_metric} "
            f"-D {self.delta} -U {self.upper_bound} -M {self.lower_bound} "
            f"-S {self.significance} -c {self.class_index}"
        )

    def support_at(self, cycle: int) -> Decimal:
        return self.upper_bound - cycle * self.delta


@dataclass(frozen=True)
class WekaRun:
    """One associator execution."""

    final_min_support: Decimal
    required_count: int
    cycles: int
    result: MiningResult
    best_rules: tuple[AssociationRule, ...]
    catalog: ItemCatalog
    num_instances: int
    params: WekaParams


def run_associator(db: TransactionDatabase, p: WekaParams, threads: int = 1) -> WekaRun:
    if p.metric_type != MetricType.CONFIDENCE:
        raise UnsupportedMetricError(f"metric type {p.metric_type} is not supported")
    if db.n == 0:
        raise EmptyDatabaseError("the associator needs at least one instance")

    run: WekaRun | None = None
    cycle = 0
    while True:
        support = p.support_at(cycle + 1)
        if support < p.lower_bound:
            logger.debug("Support {} is below the lower bound {}; stopping", support, p.lower_bound)
            break
        cycle += 1
        threshold = SupportThreshold.from_relative(support, db.n)
        result = mine(db, threshold, threads=threads)
        rules = generate_rules(result, p.min_metric)
        run = WekaRun(
            final_min_support=support,
            required_count=threshold.absolute,
            cycles=cycle,
            result=result,
            best_rules=tuple(rank(rules, p.num_rules)),
            catalog=db.catalog,
            num_instances=db.n,
            params=p,
        )
        logger.debug(
            "Cycle {}: support {} ({} instances), levels {}, {} qualifying rules",
            cycle, format_decimal(support), threshold.absolute, result.sizes(), len(rules),
        )
        if len(rules) >= p.num_rules:
            break

    if run is None:
        # No viable support value: report the upper bound with nothing found.
        run = WekaRun(
            final_min_support=p.upper_bound,
            required_count=SupportThreshold.from_relative(p.upper_bound, db.n).absolute,
            cycles=0,
            result=MiningResult(),
            best_rules=(),
            catalog=db.catalog,
            num_instances=db.n,
            params=p,
        )

    logger.info(
        "Associator finished after {} cycles at support {} with {} rules",
        run.cycles, format_decimal(run.final_min_support), len(run.best_rules),
    )
    return run


def format_rule(rule: AssociationRule, catalog: ItemCatalog) -> str:
    antecedent = " ".join(catalog.render(rule.antecedent))
    consequent = " ".join(catalog.render(rule.consequent))
    return (
        f"{antecedent} {rule.antecedent_count} ==> {consequent} {rule.rule_count}    "
        f"conf:({format_confidence(rule.confidence)})"
    )


def format_report(run: WekaRun, relation: str, scheme: str, attribute_names: list[str] | tuple[str, ...]) -> str:
    lines = [
        "==== Run information ====",
        "",
        f"Scheme:       {scheme}",
        f"Relation:     {relation}",
        f"Instances:    {run.num_instances}",
        f"Attributes:   {len(attribute_names)}",
    ]
    lines.extend(f"              {name}" for name in attribute_names)
    lines += [
        "",
        "==== Associator model (full training set) ====",
        "",
        "",
        "Apriori",
        "=======",
        "",
    ]

    if not run.result.levels:
        lines += ["No large itemsets and rules found!", ""]
        return "\n".join(lines) + "\n"

    lines += [
        f"Minimum support: {format_decimal(run.final_min_support)} ({run.required_count} instances)",
        f"Minimum metric <confidence>: {format_decimal(run.params.min_metric)}",
        f"Number of cycles performed: {run.cycles}",
        "",
        "Generated sets of large itemsets:",
        "",
    ]
    for level in run.result.levels:
        lines += [f"Size of set of large itemsets L({level.k}): {len(level)}", ""]

    lines += ["Best rules found:", ""]
    for idx, rule in enumerate(run.best_rules, start=1):
        lines.append(f"{idx}. {format_rule(rule, run.catalog)}")
    return "\n".join(lines) + "\n"
