"""Tests for itemset and rule rendering."""

from __future__ import annotations

import json

from freqmine.core.apriori import SupportThreshold, mine
from freqmine.core.rules import generate_rules, rank
from freqmine.output import render_itemsets, render_rules


def test_itemsets_text(basket_db):
    result = mine(basket_db, SupportThreshold.from_count(2, 4))
    assert render_itemsets(result, basket_db.catalog).splitlines() == [
        "L(1): 3 itemsets",
        "  bread 3",
        "  butter 3",
        "  milk 2",
        "L(2): 2 itemsets",
        "  bread butter 2",
        "  bread milk 2",
        "Total: 5 frequent itemsets",
    ]


def test_itemsets_jsonl(basket_db):
    result = mine(basket_db, SupportThreshold.from_count(2, 4))
    first = json.loads(render_itemsets(result, basket_db.catalog, "jsonl").splitlines()[0])
    assert first == {"items": ["bread"], "count": 3}


def test_rules_csv_and_jsonl(basket_db):
    result = mine(basket_db, SupportThreshold.from_count(2, 4))
    best = rank(generate_rules(result, "0.6"), 10)
    csv_lines = render_rules(best, basket_db.catalog, "csv").splitlines()
    assert csv_lines[0] == "antecedent,consequent,antecedent_count,count,confidence"
    assert csv_lines[1] == "milk,bread,2,2,1"
    rows = [json.loads(line) for line in render_rules(best, basket_db.catalog, "jsonl").splitlines()]
    assert rows[0] == {"antecedent": ["milk"], "consequent": ["bread"], "antecedent_count": 2,
                       "count": 2, "confidence": 1.0}
    assert len(rows) == 4
    assert [r["consequent"] for r in rows[1:]] == [["butter"], ["milk"], ["bread"]]
