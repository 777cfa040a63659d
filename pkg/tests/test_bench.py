"""Tests for the benchmark harness."""

from __future__ import annotations

from decimal import Decimal

import pytest

from freqmine.core.bench import CSV_HEADER, BenchRow, bench, render_csv, render_table
from freqmine.core.synth import GenParams, generate


def test_shop_levels(shop_db):
    [report] = bench(shop_db, [Decimal("0.5")])
    assert [row.frequent for row in report.rows] == [10, 12, 3]
    assert report.threshold.absolute == 7
    assert report.levels == 3
    assert report.total_frequent == 25


def test_counters_are_ordered(shop_db):
    for report in bench(shop_db, ["0.3", "0.5"]):
        for row in report.rows:
            assert row.joined >= row.pruned >= row.frequent


def test_row_rejects_inconsistent_counters():
    with pytest.raises(ValueError):
        BenchRow(level=2, joined=3, pruned=4, frequent=1, seconds=0.0)


def test_full_threshold_keeps_only_universal_items(shop_db):
    [report] = bench(shop_db, ["1"])
    # H=TRUE occurs in every row, so only L(1) survives.
    assert report.total_frequent == 1


def test_generated_totals_shrink_with_threshold():
    db = generate(GenParams(num_transactions=2000, num_items=200, num_patterns=100, seed=5))
    low, high = bench(db, ["0.01", "0.02"], threads=2)
    assert high.total_frequent <= low.total_frequent
    for report in (low, high):
        for row in report.rows:
            assert row.joined >= row.pruned >= row.frequent


def test_render_without_timings_is_stable(shop_db):
    first = bench(shop_db, ["0.5"])
    second = bench(shop_db, ["0.5"])
    assert render_table(first, timings=False) == render_table(second, timings=False)
    csv_text = render_csv(first, timings=False)
    assert csv_text.splitlines()[0] == ",".join(CSV_HEADER)
    assert csv_text.splitlines()[1] == "0.5,1,15,15,10,-"


def test_t10i4d10k_at_one_percent(t10i4d10k):
    low, high = bench(t10i4d10k, ["0.01", "0.02"], threads=2)
    assert low.threshold.absolute == 100
    assert low.rows[0].frequent > 0
    assert high.total_frequent <= low.total_frequent
    for report in (low, high):
        for row in report.rows:
            assert row.joined >= row.pruned >= row.frequent


def test_weighted_patterns_yield_frequent_pairs(t10i4d10k):
    [report] = bench(t10i4d10k, ["0.002"], threads=2)
    assert report.levels >= 2
    assert report.rows[1].frequent > 0
