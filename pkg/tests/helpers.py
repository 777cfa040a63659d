"""Sample-data paths, hypothesis strategies and small database builders."""

from __future__ import annotations

from pathlib import Path

from hypothesis import strategies as st

from freqmine.core.dataset import ItemCatalog, TransactionDatabase

DATA_DIR = Path(__file__).parent.parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"


@st.composite
def databases(draw, max_items: int = 12, max_transactions: int = 30) -> TransactionDatabase:
    """Small random databases; some items may never occur."""
    num_items = draw(st.integers(min_value=1, max_value=max_items))
    rows = draw(st.lists(
        st.frozensets(st.integers(min_value=0, max_value=num_items - 1), max_size=num_items),
        max_size=max_transactions,
    ))
    catalog = ItemCatalog(f"i{n}" for n in range(num_items))
    return TransactionDatabase(catalog=catalog, transactions=tuple(tuple(sorted(row)) for row in rows))


def db_of(*rows: str) -> TransactionDatabase:
    """Build a database from space-separated label rows, ids in first-occurrence order."""
    labels: dict[str, int] = {}
    transactions = []
    for row in rows:
        ids = {labels.setdefault(label, len(labels)) for label in row.split()}
        transactions.append(tuple(sorted(ids)))
    return TransactionDatabase(catalog=ItemCatalog(labels), transactions=tuple(transactions))
