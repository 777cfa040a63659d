"""Tests for ARFF and basket ingestion."""

from __future__ import annotations

from pathlib import Path

import pytest

from freqmine.core.dataset import (
    ArffAttribute,
    ArffDataset,
    DatasetError,
    ItemCatalog,
    TransactionDatabase,
    arff_to_transactions,
    basket_to_arff,
    load_database,
    parse_arff,
    parse_basket,
    render_arff,
    render_basket,
)
from tests.helpers import DATA_DIR

HEADER = """@relation tiny
@attribute A {TRUE, FALSE}
@attribute C {TRUE, FALSE}
@data
"""


# -- ItemCatalog / TransactionDatabase --

def test_catalog_is_bijective():
    catalog = ItemCatalog(["x", "y", "z"])
    assert [catalog.id_of(label) for label in catalog.labels] == [0, 1, 2]
    assert catalog.label_of(2) == "z"
    assert catalog.itemset(["z", "x", "z"]) == (0, 2)


def test_catalog_rejects_duplicate_labels():
    with pytest.raises(ValueError, match="duplicate"):
        ItemCatalog(["x", "x"])


def test_database_requires_ascending_known_ids():
    catalog = ItemCatalog(["a", "b"])
    with pytest.raises(ValueError, match="ascending"):
        TransactionDatabase(catalog=catalog, transactions=((1, 0),))
    with pytest.raises(ValueError, match="unknown item"):
        TransactionDatabase(catalog=catalog, transactions=((0, 2),))


# -- ARFF --

def test_shop_arff_shape(shop_input):
    assert shop_input.relation == "TEST_ITEM_TRANS"
    assert shop_input.attribute_names == ("A", "B", "C", "D", "E", "F", "G", "H")
    assert shop_input.database.n == 15
    assert len(shop_input.database.catalog) == 16


def test_shop_arff_first_row(shop_db):
    first = shop_db.catalog.render(shop_db.transactions[0])
    assert first == ["A=TRUE", "B=TRUE", "C=TRUE", "D=TRUE", "E=FALSE", "F=FALSE", "G=TRUE", "H=TRUE"]


def test_arff_header_only_is_empty():
    ds = parse_arff(HEADER)
    assert ds.instances == ()
    assert arff_to_transactions(ds).n == 0


def test_arff_keywords_are_case_insensitive():
    ds = parse_arff("@RELATION r\n@Attribute x {a, b}\n@DATA\nb\n")
    assert ds.relation == "r"
    assert ds.instances == ((1,),)


def test_arff_domain_violation_names_attribute():
    with pytest.raises(DatasetError, match="attribute C") as info:
        parse_arff(HEADER + "TRUE,MAYBE\n")
    assert info.value.line == 5


def test_arff_line_numbers_count_leading_blank_lines():
    with pytest.raises(DatasetError, match="attribute C") as info:
        parse_arff("\n\n" + HEADER + "TRUE,MAYBE\n")
    assert info.value.line == 7


def test_arff_wrong_arity():
    with pytest.raises(DatasetError, match="instance format") as info:
        parse_arff(HEADER + "TRUE\n")
    assert info.value.line == 5


def test_arff_rejects_missing_values():
    with pytest.raises(DatasetError, match="missing value") as info:
        parse_arff(HEADER + "TRUE,FALSE\nTRUE,?\n")
    assert info.value.line == 6


def test_arff_rejects_sparse_rows():
    with pytest.raises(DatasetError, match="sparse") as info:
        parse_arff("@relation r\n@attribute x {a, b}\n@data\n{0 b}\n")
    assert info.value.line == 4


@pytest.mark.parametrize(
    "text, message, line",
    [
        ("@relation r\n@attribute x numeric\n@data\n", "not nominal", 2),
        ("@relation r\n@attribute x {a}\n@attribute x {b}\n@data\n", "already in use", 3),
        ("@relation r\n@attribute x {}\n@data\n", None, 2),
        ("@relation r\n@attribute x {a, a}\n@data\n", "repeats a value", 2),
        ("@attribute x {a}\n@data\n", "layout", 1),
        ("@relation r\n@attribute x {a}\n", "missing @data", None),
        ("@relation r\nbogus\n@data\n", "layout", 2),
    ],
)
def test_arff_header_errors(text, message, line):
    with pytest.raises(DatasetError, match=message) as info:
        parse_arff(text)
    assert info.value.line == line


def test_render_arff_reparses_identically(shop_input):
    assert parse_arff(render_arff(shop_input.arff)) == shop_input.arff


def test_render_arff_quotes_names_with_spaces():
    ds = ArffDataset(
        relation="corner shop",
        attributes=(ArffAttribute("olive oil", ("TRUE", "FALSE")), ArffAttribute("salt", ("TRUE", "FALSE"))),
        instances=((0, 1), (1, 0)),
    )
    assert parse_arff(render_arff(ds)) == ds


def test_present_value_mode(shop_input):
    db = arff_to_transactions(shop_input.arff, present_value="TRUE")
    assert db.catalog.labels == ("A", "B", "C", "D", "E", "F", "G", "H")
    assert db.catalog.render(db.transactions[0]) == ["A", "B", "C", "D", "G", "H"]


# -- Basket --

def test_bread_butter_basket(basket_db):
    assert basket_db.n == 4
    assert basket_db.catalog.labels == ("bread", "butter", "spinach", "salmon", "milk", "cereal")
    assert basket_db.catalog.render(basket_db.transactions[3]) == ["bread", "milk", "cereal"]


def test_basket_collapses_duplicates_and_accepts_spaces():
    db = parse_basket("T9: milk milk\nbread  milk,eggs\n")
    assert db.catalog.render(db.transactions[0]) == ["milk"]
    assert db.catalog.render(db.transactions[1]) == ["milk", "bread", "eggs"]


def test_basket_empty_input():
    assert parse_basket("").n == 0
    assert parse_basket("# only a comment\n\n").n == 0


def test_basket_prefix_without_items():
    with pytest.raises(DatasetError) as info:
        parse_basket("T1: bread\nT2:\n")
    assert info.value.line == 2
    assert str(info.value).startswith("line 2:")


def test_basket_is_deterministic():
    text = (DATA_DIR / "bread_butter.basket").read_text()
    assert parse_basket(text) == parse_basket(text)


def test_basket_round_trip_through_arff(basket_db):
    ds = basket_to_arff(basket_db, "groceries")
    assert ds.attribute_names == list(basket_db.catalog.labels)
    back = arff_to_transactions(parse_arff(render_arff(ds)), present_value="TRUE")
    assert back == basket_db
    assert parse_basket(render_basket(back)) == basket_db


def test_render_basket_with_ids(basket_db):
    assert render_basket(basket_db, with_ids=True).splitlines()[1] == "T2: butter, salmon"


def test_render_basket_refuses_empty_transactions():
    db = TransactionDatabase(catalog=ItemCatalog(["a", "b"]), transactions=((0, 1), (), (0,)))
    with pytest.raises(DatasetError, match="transaction 2 is empty"):
        render_basket(db)


def test_render_basket_prefixes_ids_for_colon_labels():
    db = parse_basket("T1: url:x b\n")
    assert db.catalog.labels == ("url:x", "b")
    text = render_basket(db)
    assert text == "T1: url:x, b\n"
    assert parse_basket(text) == db


def test_render_basket_prefixes_ids_for_comment_like_labels():
    db = TransactionDatabase(catalog=ItemCatalog(["#tag", "b"]), transactions=((0, 1),))
    assert parse_basket(render_basket(db)) == db


def test_render_basket_refuses_labels_with_separators():
    db = TransactionDatabase(catalog=ItemCatalog(["olive oil"]), transactions=((0,),))
    with pytest.raises(DatasetError, match="olive oil"):
        render_basket(db)


# -- Files --

def test_load_database_sniffs_by_extension(tmp_path: Path):
    target = tmp_path / "shop.txt"
    target.write_text("a b\nb c\n")
    loaded = load_database(target)
    assert loaded.relation == "shop"
    assert loaded.arff is None
    assert loaded.attribute_names == ("a", "b", "c")


def test_load_database_format_override(tmp_path: Path):
    target = tmp_path / "shop.txt"
    target.write_text(HEADER + "TRUE,FALSE\n")
    loaded = load_database(target, fmt="arff")
    assert loaded.relation == "tiny"
    assert loaded.database.n == 1


def test_table_basket_differs_from_arff_on_row_three(shop_db):
    table = load_database(DATA_DIR / "test_item_trans_table.basket").database
    assert table.n == 15
    e_rows = sum(1 for items in table if table.catalog.id_of("E") in items)
    e_true = shop_db.catalog.id_of("E=TRUE")
    assert e_rows == 12
    assert sum(1 for items in shop_db if e_true in items) == 11
