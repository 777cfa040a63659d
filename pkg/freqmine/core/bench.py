"""Benchmark harness: per-level candidate and frequent counts plus wall time."""

from __future__ import annotations

import csv
import io
import time
from collections.abc import Sequence
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from loguru import logger

from freqmine.core.apriori import PassStats, SupportThreshold, mine
from freqmine.core.dataset import TransactionDatabase

CSV_HEADER = ("minsup", "level", "join", "prune", "frequent", "millis")


@dataclass(frozen=True)
class BenchRow:
    level: int
    joined: int
    pruned: int
    frequent: int
    seconds: float

    def __post_init__(self) -> None:
        if not self.joined >= self.pruned >= self.frequent:
            raise ValueError(
                f"level {self.level}: expected join >= prune >= frequent, "
                f"got {self.joined}/{self.pruned}/{self.frequent}"
            )


@dataclass(frozen=True)
class BenchReport:
    minsup: str
    threshold: SupportThreshold
    rows: tuple[BenchRow, ...]
    scans: int
    total_seconds: float

    @property
    def levels(self) -> int:
        """Levels that produced frequent itemsets."""
        return sum(1 for row in self.rows if row.frequent)

    @property
    def total_frequent(self) -> int:
        return sum(row.frequent for row in self.rows)


def bench(
    db: TransactionDatabase,
    thresholds: Sequence[Fraction | Decimal | float | str],
    threads: int = 1,
) -> list[BenchReport]:
    """Mine once per threshold, timing each counting pass through mine's callback."""
    reports = []
    for minsup in thresholds:
        threshold = SupportThreshold.from_relative(minsup, db.n)
        rows: list[BenchRow] = []
        started = time.perf_counter()
        mark = started

        def on_pass(stats: PassStats) -> None:
            nonlocal mark
            now = time.perf_counter()
            rows.append(BenchRow(stats.k, stats.joined, stats.pruned, stats.frequent, now - mark))
            mark = now

        result = mine(db, threshold, threads=threads, on_pass=on_pass)
        total = time.perf_counter() - started
        report = BenchReport(
            minsup=str(minsup),
            threshold=threshold,
            rows=tuple(rows),
            scans=len(rows),
            total_seconds=total,
        )
        logger.info(
            "Bench minsup {} ({} instances): levels {} in {:.1f} ms",
            minsup, threshold.absolute, result.sizes(), total * 1000,
        )
        reports.append(report)
    return reports


def _millis(seconds: float, timings: bool) -> str:
    return f"{seconds * 1000:.3f}" if timings else "-"


def render_table(reports: Sequence[BenchReport], timings: bool = True) -> str:
    out: list[str] = []
    for report in reports:
        out.append(
            f"minsup {report.minsup} ({report.threshold.absolute} instances): "
            f"{report.scans} scans, {report.total_frequent} frequent itemsets, "
            f"total {_millis(report.total_seconds, timings)} ms"
        )
        out.append(f"{'level':>5} {'join':>10} {'prune':>10} {'frequent':>10} {'millis':>12}")
        for row in report.rows:
            out.append(
                f"{row.level:>5} {row.joined:>10} {row.pruned:>10} {row.frequent:>10} "
                f"{_millis(row.seconds, timings):>12}"
            )
        out.append("")
    return "\n".join(out)


def render_csv(reports: Sequence[BenchReport], timings: bool = True) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for report in reports:
        for row in report.rows:
            writer.writerow([
                report.minsup, row.level, row.joined, row.pruned, row.frequent,
                _millis(row.seconds, timings),
            ])
    return buffer.getvalue()
