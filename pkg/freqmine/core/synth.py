"""Synthetic basket data in the style of the IBM Quest generator (simplified).

A pool of base patterns is drawn first; each transaction is then filled from
patterns picked by weight, dropping each pattern item with probability
CORRUPTION, and topped up with uniform random items. Pattern weights are
exponentially distributed with unit mean, so a few patterns dominate and
multi-item itemsets become frequent. Pattern correlation is not modelled.
Names follow the TxIyDz convention: average transaction length x, average
pattern length y, z transactions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np
from loguru import logger

from freqmine.core.dataset import ItemCatalog, TransactionDatabase

RNG_ALGORITHM = "numpy.random.PCG64"
CORRUPTION = 0.5
MAX_PATTERN_DRAWS = 32
_SHAPE = re.compile(r"^T(\d+(?:\.\d+)?)I(\d+(?:\.\d+)?)D(\d+(?:\.\d+)?)([KkMm]?)$")


class GenParamsError(ValueError):
    """Generator parameters violate their invariants."""


@dataclass(frozen=True)
class GenParams:
    num_transactions: int = 10_000
    avg_transaction_length: float = 10.0
    avg_pattern_length: float = 4.0
    num_items: int = 1000
    num_patterns: int = 2000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.num_transactions < 1:
            raise GenParamsError(f"num_transactions (D) must be positive, got {self.num_transactions}")
        if self.num_items < 1:
            raise GenParamsError(f"num_items must be positive, got {self.num_items}")
        if self.num_patterns < 1:
            raise GenParamsError(f"num_patterns must be positive, got {self.num_patterns}")
        if not 0 < self.avg_pattern_length <= self.avg_transaction_length <= self.num_items:
            raise GenParamsError(
                "need 0 < avg_pattern_length (I) <= avg_transaction_length (T) <= num_items, got "
                f"I={self.avg_pattern_length} T={self.avg_transaction_length} items={self.num_items}"
            )
        if not 0 <= self.seed < 2**64:
            raise GenParamsError(f"seed must fit in 64 bits, got {self.seed}")

    @classmethod
    def from_name(cls, shape: str, **overrides: int | float) -> GenParams:
        """Parse a TxIyDz shape such as T10I4D10K (K = thousands, M = millions)."""
        match = _SHAPE.match(shape.strip())
        if not match:
            raise GenParamsError(f"'{shape}' is not a TxIyDz shape like T10I4D10K")
        scale = {"": 1, "K": 1_000, "M": 1_000_000}[match.group(4).upper()]
        return cls(
            avg_transaction_length=float(match.group(1)),
            avg_pattern_length=float(match.group(2)),
            num_transactions=int(float(match.group(3)) * scale),
            **overrides,
        )

    @property
    def name(self) -> str:
        """Quest-style shape name, e.g. T10I4D10K."""
        d = self.num_transactions
        d_text = f"{d // 1000}K" if d >= 1000 and d % 1000 == 0 else str(d)
        return f"T{self.avg_transaction_length:g}I{self.avg_pattern_length:g}D{d_text}"


def _poisson_size(rng: np.random.Generator, mean: float, cap: int) -> int:
    return min(cap, max(1, int(rng.poisson(mean))))


def generate(p: GenParams) -> TransactionDatabase:
    """Deterministic for a given (params, seed). Item ids follow first occurrence."""
    rng = np.random.Generator(np.random.PCG64(p.seed))

    patterns = []
    for _ in range(p.num_patterns):
        size = _poisson_size(rng, p.avg_pattern_length, p.num_items)
        patterns.append(rng.choice(p.num_items, size=size, replace=False).tolist())
    weights = rng.exponential(1.0, size=p.num_patterns)
    cumulative = np.cumsum(weights / weights.sum())

    raw_transactions: list[list[int]] = []
    for _ in range(p.num_transactions):
        target = _poisson_size(rng, p.avg_transaction_length, p.num_items)
        chosen: dict[int, None] = {}
        draws = 0
        while len(chosen) < target and draws < MAX_PATTERN_DRAWS:
            draws += 1
            pick = int(np.searchsorted(cumulative, rng.random(), side="right"))
            pattern = patterns[min(pick, p.num_patterns - 1)]
            keep = rng.random(len(pattern)) >= CORRUPTION
            for item, kept in zip(pattern, keep):
                if kept and len(chosen) < target:
                    chosen[item] = None
        while len(chosen) < target:
            chosen[int(rng.integers(p.num_items))] = None
        raw_transactions.append(list(chosen))

    ids: dict[int, int] = {}
    for items in raw_transactions:
        for item in items:
            ids.setdefault(item, len(ids))
    catalog = ItemCatalog(f"item{raw}" for raw in ids)
    transactions = tuple(tuple(sorted(ids[item] for item in items)) for items in raw_transactions)

    logger.info(
        "Generated {} (seed {}, {}): {} transactions over {} distinct items",
        p.name, p.seed, RNG_ALGORITHM, len(transactions), len(catalog),
    )
    return TransactionDatabase(catalog=catalog, transactions=transactions)
