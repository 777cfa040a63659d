"""Association rules from mined itemsets, filtered by confidence and ranked."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from itertools import combinations

from loguru import logger

from freqmine.core.apriori import MiningResult, as_fraction
from freqmine.core.dataset import Itemset


class MissingSupportError(ValueError):
    """A subset count is absent from the MiningResult, so it is not downward closed."""


@dataclass(frozen=True)
class AssociationRule:
    antecedent: Itemset
    consequent: Itemset
    rule_count: int
    antecedent_count: int

    def __post_init__(self) -> None:
        if not self.antecedent or not self.consequent:
            raise ValueError("antecedent and consequent must be non-empty")
        if set(self.antecedent) & set(self.consequent):
            raise ValueError(f"antecedent {self.antecedent} overlaps consequent {self.consequent}")
        if not 0 < self.rule_count <= self.antecedent_count:
            raise ValueError(
                f"rule count {self.rule_count} must be in (0, {self.antecedent_count}]"
            )

    @property
    def confidence(self) -> Fraction:
        return Fraction(self.rule_count, self.antecedent_count)

    @property
    def items(self) -> Itemset:
        return tuple(sorted(self.antecedent + self.consequent))

    def support(self, n: int) -> Fraction:
        return Fraction(self.rule_count, n)


def generate_rules(
    result: MiningResult, min_confidence: Fraction | Decimal | float | str,
) -> list[AssociationRule]:
    """Emit A => Z\\A for every frequent Z (|Z| >= 2) and non-empty proper subset A
    with count(Z) / count(A) >= min_confidence. Counts come from *result* only."""
    threshold = as_fraction(min_confidence)
    if not 0 <= threshold <= 1:
        raise ValueError(f"minimum confidence must be in [0, 1], got {min_confidence}")

    rules: list[AssociationRule] = []
    for level in result.levels:
        if level.k < 2:
            continue
        for entry in level.entries:
            itemset = entry.itemset
            for size in range(1, level.k):
                for antecedent in combinations(itemset, size):
                    antecedent_count = result.support_of(antecedent)
                    if antecedent_count is None:
                        raise MissingSupportError(
                            f"no count for {antecedent}, a subset of frequent itemset {itemset}"
                        )
                    # Cross-multiplied so the boundary case compares exactly.
                    if entry.count * threshold.denominator < threshold.numerator * antecedent_count:
                        continue
                    members = set(antecedent)
                    rules.append(AssociationRule(
                        antecedent=antecedent,
                        consequent=tuple(i for i in itemset if i not in members),
                        rule_count=entry.count,
                        antecedent_count=antecedent_count,
                    ))
    logger.debug("Generated {} rules at min confidence {}", len(rules), threshold)
    return rules


def rank_key(rule: AssociationRule) -> tuple:
    return (-rule.confidence, -rule.rule_count, len(rule.antecedent), rule.antecedent, rule.consequent)


def rank(rules: Iterable[AssociationRule], limit: int) -> list[AssociationRule]:
    """Confidence desc, rule count desc, shorter antecedent, then lexicographic ids."""
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    return sorted(rules, key=rank_key)[:limit]
