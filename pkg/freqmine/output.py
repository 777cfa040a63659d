"""Render mined itemsets and rules as text, CSV or JSON lines."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Sequence

from freqmine.core.apriori import MiningResult
from freqmine.core.dataset import ItemCatalog
from freqmine.core.rules import AssociationRule
from freqmine.core.weka import format_confidence, format_rule


def render_itemsets(result: MiningResult, catalog: ItemCatalog, fmt: str = "text") -> str:
    if fmt == "jsonl":
        return "".join(
            json.dumps({"items": catalog.render(e.itemset), "count": e.count}) + "\n"
            for e in result.itemsets()
        )
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["level", "items", "count"])
        for e in result.itemsets():
            writer.writerow([len(e.itemset), " ".join(catalog.render(e.itemset)), e.count])
        return buffer.getvalue()

    lines: list[str] = []
    for level in result.levels:
        lines.append(f"L({level.k}): {len(level)} itemsets")
        lines.extend(f"  {' '.join(catalog.render(e.itemset))} {e.count}" for e in level.entries)
    lines.append(f"Total: {len(result)} frequent itemsets")
    return "\n".join(lines) + "\n"


def render_rules(rules: Sequence[AssociationRule], catalog: ItemCatalog, fmt: str = "text") -> str:
    if fmt == "jsonl":
        return "".join(
            json.dumps({
                "antecedent": catalog.render(r.antecedent),
                "consequent": catalog.render(r.consequent),
                "antecedent_count": r.antecedent_count,
                "count": r.rule_count,
                "confidence": float(r.confidence),
            }) + "\n"
            for r in rules
        )
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["antecedent", "consequent", "antecedent_count", "count", "confidence"])
        for r in rules:
            writer.writerow([
                " ".join(catalog.render(r.antecedent)),
                " ".join(catalog.render(r.consequent)),
                r.antecedent_count,
                r.rule_count,
                format_confidence(r.confidence),
            ])
        return buffer.getvalue()

    return "".join(f"{idx}. {format_rule(r, catalog)}\n" for idx, r in enumerate(rules, start=1))
