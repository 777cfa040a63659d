"""Shared fixtures: the bundled sample databases and a generated T10I4D10K."""

from __future__ import annotations

import pytest

from freqmine.core.dataset import LoadedInput, TransactionDatabase, load_database
from freqmine.core.synth import GenParams, generate
from tests.helpers import DATA_DIR


@pytest.fixture(scope="session")
def shop_input() -> LoadedInput:
    return load_database(DATA_DIR / "TEST_ITEM_TRANS.arff")


@pytest.fixture(scope="session")
def shop_db(shop_input: LoadedInput) -> TransactionDatabase:
    return shop_input.database


@pytest.fixture(scope="session")
def basket_db() -> TransactionDatabase:
    return load_database(DATA_DIR / "bread_butter.basket").database


@pytest.fixture(scope="session")
def t10i4d10k() -> TransactionDatabase:
    return generate(GenParams.from_name("T10I4D10K"))
