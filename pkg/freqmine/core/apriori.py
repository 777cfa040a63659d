"""Level-wise frequent itemset mining (Apriori) and a brute-force oracle.

The loop is the classic one: L1 from a single scan, then for k = 2, 3, ...
join L(k-1) with itself, prune candidates that have an infrequent (k-1)-subset,
count the survivors in one scan, and keep those meeting the threshold. Mining
stops at the first empty level.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from loguru import logger

from freqmine.core.dataset import Itemset, TransactionDatabase

BRUTE_FORCE_MAX_ITEMS = 20


class ItemUniverseTooLargeError(ValueError):
    """The brute-force oracle refuses item universes it cannot enumerate."""


def as_fraction(value: Fraction | Decimal | int | float | str) -> Fraction:
    if isinstance(value, float):
        # Go through the shortest repr so 0.55 means 55/100, not the binary neighbour.
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class SupportThreshold:
    """Minimum support, relative and as the absolute count that decides frequency."""

    relative: Fraction
    absolute: int

    def __post_init__(self) -> None:
        if self.absolute < 1:
            raise ValueError(f"absolute support must be >= 1, got {self.absolute}")
        if self.relative < 0:
            raise ValueError(f"relative support must be >= 0, got {self.relative}")

    @classmethod
    def from_relative(cls, relative: Fraction | Decimal | int | float | str, n: int) -> SupportThreshold:
        """absolute = max(1, floor(relative * n)); frequent means count >= absolute."""
        rel = as_fraction(relative)
        if not 0 <= rel <= 1:
            raise ValueError(f"relative support must be in [0, 1], got {relative}")
        return cls(relative=rel, absolute=max(1, math.floor(rel * n)))

    @classmethod
    def from_count(cls, count: int, n: int) -> SupportThreshold:
        """Threshold given directly as a transaction count (may exceed n)."""
        relative = Fraction(count, n) if n else Fraction(1)
        return cls(relative=relative, absolute=count)


@dataclass(frozen=True)
class FrequentItemset:
    itemset: Itemset
    count: int


@dataclass(frozen=True)
class LevelSet:
    """L_k: frequent k-itemsets in ascending lexicographic order."""

    k: int
    entries: tuple[FrequentItemset, ...] = ()

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"level index must be >= 1, got {self.k}")
        previous: Itemset | None = None
        for entry in self.entries:
            if len(entry.itemset) != self.k:
                raise ValueError(f"entry {entry.itemset} does not belong to level {self.k}")
            if previous is not None and entry.itemset <= previous:
                raise ValueError(f"level {self.k} entries are not strictly ascending at {entry.itemset}")
            previous = entry.itemset

    @classmethod
    def from_itemsets(cls, k: int, itemsets: Iterable[Itemset], count: int = 0) -> LevelSet:
        """Build a level from bare itemsets, e.g. to drive join/prune directly."""
        return cls(k=k, entries=tuple(FrequentItemset(tuple(s), count) for s in sorted(itemsets)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[FrequentItemset]:
        return iter(self.entries)

    def itemsets(self) -> list[Itemset]:
        return [e.itemset for e in self.entries]


@dataclass(frozen=True)
class PassStats:
    """Counters of one counting pass over the database."""

    k: int
    joined: int
    pruned: int
    frequent: int


@dataclass(frozen=True)
class MiningResult:
    levels: tuple[LevelSet, ...] = ()
    candidate_counts: tuple[int, ...] = ()
    scans: int = 0
    passes: tuple[PassStats, ...] = ()

    def sizes(self) -> list[int]:
        return [len(level) for level in self.levels]

    def itemsets(self) -> list[FrequentItemset]:
        return [entry for level in self.levels for entry in level.entries]

    @cached_property
    def _support_index(self) -> dict[Itemset, int]:
        return {entry.itemset: entry.count for entry in self.itemsets()}

    def support_of(self, itemset: Itemset) -> int | None:
        return self._support_index.get(tuple(itemset))

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)


# -- Level operations --

def frequent_one(db: TransactionDatabase, t: SupportThreshold) -> LevelSet:
    counts: Counter[int] = Counter()
    for items in db.transactions:
        counts.update(items)
    entries = tuple(
        FrequentItemset((item,), count)
        for item, count in sorted(counts.items())
        if count >= t.absolute
    )
    return LevelSet(k=1, entries=entries)


def join(prev: LevelSet) -> list[Itemset]:
    """Self-join L(k-1): combine entries sharing their first k-2 items, last items ascending."""
    itemsets = prev.itemsets()
    out: list[Itemset] = []
    start = 0
    # Entries are sorted, so each shared-prefix group is a contiguous run.
    while start < len(itemsets):
        prefix = itemsets[start][:-1]
        end = start + 1
        while end < len(itemsets) and itemsets[end][:-1] == prefix:
            end += 1
        for i in range(start, end):
            a = itemsets[i][-1]
            for j in range(i + 1, end):
                out.append(prefix + (a, itemsets[j][-1]))
        start = end
    return out


def prune(candidates: Sequence[Itemset], prev: LevelSet) -> list[Itemset]:
    """Keep the candidates whose every (k-1)-subset is in *prev*."""
    frequent = set(prev.itemsets())
    kept = []
    for candidate in candidates:
        if all(subset in frequent for subset in combinations(candidate, len(candidate) - 1)):
            kept.append(candidate)
    return kept


def _count_partition(
    transactions: Sequence[Itemset], candidates: Sequence[Itemset],
) -> list[int]:
    unique = list(dict.fromkeys(candidates))
    counts = [0] * len(unique)
    by_size: dict[int, dict[Itemset, int]] = {}
    for position, candidate in enumerate(unique):
        by_size.setdefault(len(candidate), {})[candidate] = position

    for k, index in by_size.items():
        if k == 0:
            for position in index.values():
                counts[position] += len(transactions)
            continue
        members = {item for candidate in index for item in candidate}
        group = list(index.items())
        for items in transactions:
            narrowed = tuple(item for item in items if item in members)
            width = len(narrowed)
            if width < k:
                continue
            # Enumerate k-subsets of the transaction or test each candidate, whichever is fewer.
            if math.comb(width, k) <= len(group):
                for subset in combinations(narrowed, k):
                    position = index.get(subset)
                    if position is not None:
                        counts[position] += 1
            else:
                present = set(narrowed)
                for candidate, position in group:
                    if present.issuperset(candidate):
                        counts[position] += 1
    lookup = dict(zip(unique, counts))
    return [lookup[candidate] for candidate in candidates]


def count_support(
    db: TransactionDatabase, candidates: Sequence[Itemset], threads: int = 1,
) -> list[int]:
    """Exact containment counts, aligned with *candidates*.

    With threads > 1 the transactions are split into contiguous chunks whose
    partial counts are summed, so the result does not depend on *threads*.
    """
    if not candidates:
        return []
    candidates = [tuple(c) for c in candidates]
    transactions = db.transactions
    if threads <= 1 or len(transactions) < 2 * threads:
        return _count_partition(transactions, candidates)

    size = math.ceil(len(transactions) / threads)
    chunks = [transactions[i:i + size] for i in range(0, len(transactions), size)]
    totals = [0] * len(candidates)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for partial in pool.map(lambda chunk: _count_partition(chunk, candidates), chunks):
            for position, count in enumerate(partial):
                totals[position] += count
    return totals


def mine(
    db: TransactionDatabase,
    t: SupportThreshold,
    threads: int = 1,
    on_pass: Callable[[PassStats], None] | None = None,
) -> MiningResult:
    """Run Apriori over *db*. An empty database yields an empty result."""
    if db.n == 0:
        return MiningResult()

    level = frequent_one(db, t)
    c1 = len(db.occurring_items())
    passes = [PassStats(k=1, joined=c1, pruned=c1, frequent=len(level))]
    if on_pass:
        on_pass(passes[-1])
    logger.debug("L(1): {} frequent of {} items (min count {})", len(level), c1, t.absolute)

    levels: list[LevelSet] = []
    candidate_counts: list[int] = []
    if len(level):
        levels.append(level)
        candidate_counts.append(c1)

    k = 2
    while levels and levels[-1].k == k - 1:
        joined = join(levels[-1])
        candidates = prune(joined, levels[-1])
        if not candidates:
            logger.debug("C({}) empty after prune ({} joined)", k, len(joined))
            break
        counts = count_support(db, candidates, threads=threads)
        level = LevelSet(
            k=k,
            entries=tuple(
                FrequentItemset(candidate, count)
                for candidate, count in zip(candidates, counts)
                if count >= t.absolute
            ),
        )
        passes.append(PassStats(k=k, joined=len(joined), pruned=len(candidates), frequent=len(level)))
        if on_pass:
            on_pass(passes[-1])
        logger.debug("L({}): {} frequent of {} candidates ({} joined)", k, len(level), len(candidates), len(joined))
        if not len(level):
            break
        levels.append(level)
        candidate_counts.append(len(candidates))
        k += 1

    result = MiningResult(
        levels=tuple(levels),
        candidate_counts=tuple(candidate_counts),
        scans=len(levels),
        passes=tuple(passes),
    )
    logger.info("Mined {} itemsets in {} levels at min count {}", len(result), len(levels), t.absolute)
    return result


def brute_force_frequent(db: TransactionDatabase, t: SupportThreshold) -> MiningResult:
    """Exhaustive oracle: count every non-empty itemset drawn from the occurring items.

    Subsets are enumerated per transaction; a subset contained in no transaction
    has count 0 and can never reach the threshold (absolute >= 1).
    """
    universe = db.occurring_items()
    if len(universe) > BRUTE_FORCE_MAX_ITEMS:
        raise ItemUniverseTooLargeError(
            f"{len(universe)} distinct items exceed the brute-force limit of {BRUTE_FORCE_MAX_ITEMS}"
        )

    counts: Counter[Itemset] = Counter()
    for items in db.transactions:
        for size in range(1, len(items) + 1):
            counts.update(combinations(items, size))

    by_level: dict[int, list[FrequentItemset]] = {}
    for itemset, count in counts.items():
        if count >= t.absolute:
            by_level.setdefault(len(itemset), []).append(FrequentItemset(itemset, count))

    levels = []
    candidate_counts = []
    k = 1
    while k in by_level:
        levels.append(LevelSet(k=k, entries=tuple(sorted(by_level[k], key=lambda e: e.itemset))))
        candidate_counts.append(sum(1 for itemset in counts if len(itemset) == k))
        k += 1
    return MiningResult(levels=tuple(levels), candidate_counts=tuple(candidate_counts), scans=len(levels))
