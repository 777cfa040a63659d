"""Dataset ingestion: ARFF and basket text into an interned transaction database."""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from pathlib import Path

import arff
from loguru import logger

ItemId = int
Itemset = tuple[ItemId, ...]

_DECODER_LINE_SUFFIX = re.compile(r",? at line -?\d+\.?$")
_BASKET_PREFIX = re.compile(r"^([^,\s:]+)\s*:(.*)$")
_BASKET_SEPARATOR = re.compile(r"[,\s]+")


class DatasetError(ValueError):
    """Malformed ARFF or basket input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.line = line

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"line {self.line}: {self.message}"


class ItemCatalog:
    """Bijective label <-> dense id mapping. Ids follow insertion order from 0."""

    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Iterable[str] = ()) -> None:
        self._labels: tuple[str, ...] = tuple(labels)
        self._index: dict[str, ItemId] = {}
        for item_id, label in enumerate(self._labels):
            if label in self._index:
                raise ValueError(f"duplicate item label '{label}'")
            self._index[label] = item_id

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ItemCatalog):
            return NotImplemented
        return self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"ItemCatalog({list(self._labels)!r})"

    def id_of(self, label: str) -> ItemId:
        return self._index[label]

    def label_of(self, item_id: ItemId) -> str:
        return self._labels[item_id]

    def itemset(self, labels: Iterable[str]) -> Itemset:
        """Canonical itemset for a collection of labels."""
        return tuple(sorted({self._index[label] for label in labels}))

    def render(self, itemset: Iterable[ItemId]) -> list[str]:
        return [self._labels[i] for i in itemset]


@dataclass(frozen=True)
class TransactionDatabase:
    """The transaction database: a catalog plus canonical (sorted, unique) transactions."""

    catalog: ItemCatalog
    transactions: tuple[Itemset, ...]

    def __post_init__(self) -> None:
        size = len(self.catalog)
        for position, items in enumerate(self.transactions):
            previous = -1
            for item in items:
                if item <= previous:
                    raise ValueError(f"transaction {position} is not strictly ascending: {items}")
                if item >= size:
                    raise ValueError(f"transaction {position} references unknown item id {item}")
                previous = item

    @property
    def n(self) -> int:
        return len(self.transactions)

    def __len__(self) -> int:
        return len(self.transactions)

    def __iter__(self) -> Iterator[Itemset]:
        return iter(self.transactions)

    def occurring_items(self) -> list[ItemId]:
        """Item ids present in at least one transaction, ascending."""
        return sorted({item for items in self.transactions for item in items})

    def max_length(self) -> int:
        return max((len(items) for items in self.transactions), default=0)


@dataclass(frozen=True)
class ArffAttribute:
    name: str
    values: tuple[str, ...]


@dataclass(frozen=True)
class ArffDataset:
    relation: str
    attributes: tuple[ArffAttribute, ...]
    instances: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        names = [a.name for a in self.attributes]
        if len(set(names)) != len(names):
            raise ValueError("attribute names must be unique")
        for row_no, row in enumerate(self.instances):
            if len(row) != len(self.attributes):
                raise ValueError(f"instance {row_no} has {len(row)} values, expected {len(self.attributes)}")
            for attribute, value in zip(self.attributes, row):
                if not 0 <= value < len(attribute.values):
                    raise ValueError(f"instance {row_no}: value index {value} out of range for '{attribute.name}'")

    @property
    def attribute_names(self) -> list[str]:
        return [a.name for a in self.attributes]


@dataclass(frozen=True)
class LoadedInput:
    """A database together with the naming the WEKA-style report needs."""

    database: TransactionDatabase
    relation: str
    attribute_names: tuple[str, ...]
    arff: ArffDataset | None = None


# -- ARFF --

@dataclass(frozen=True)
class _ArffLayout:
    """Line numbers of the declarations and rows, in the decoder's numbering."""

    lines: list[str]
    lead: int
    attribute_lines: list[int]
    data_marker: int | None
    data_lines: list[int]

    def real(self, line: int | None) -> int | None:
        if line is None or line < 1:
            return None
        return line + self.lead


def _scan_arff(text: str) -> _ArffLayout:
    # The decoder strips leading blank lines before numbering; keep the offset.
    stripped = text.lstrip(" \r\n")
    lead = text[: len(text) - len(stripped)].count("\n")
    lines = text.strip(" \r\n").replace("\r\n", "\n").split("\n")
    attribute_lines: list[int] = []
    data_lines: list[int] = []
    data_marker: int | None = None
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if data_marker is not None:
            data_lines.append(line_no)
        elif line.upper().startswith("@ATTRIBUTE"):
            attribute_lines.append(line_no)
        elif line.upper().startswith("@DATA"):
            data_marker = line_no
    return _ArffLayout(lines, lead, attribute_lines, data_marker, data_lines)


def _decoder_message(exc: arff.ArffException) -> str:
    return _DECODER_LINE_SUFFIX.sub("", str(exc))


def _domain_error(layout: _ArffLayout, exc: arff.BadNominalValue) -> DatasetError:
    """Name the attribute whose domain the offending value falls outside of."""
    line = layout.real(exc.line)
    if layout.data_marker is None or not 1 <= exc.line <= len(layout.lines):
        return DatasetError(_decoder_message(exc), line)
    header = "\n".join(layout.lines[: layout.data_marker])
    attributes = arff.loads(header)["attributes"]
    values = [v.strip().strip("'\"") for v in layout.lines[exc.line - 1].split(",")]
    for (name, domain), value in zip(attributes, values):
        if isinstance(domain, list) and value not in domain:
            return DatasetError(
                f"value '{value}' is not in the domain of attribute {name} {{{', '.join(domain)}}}",
                line,
            )
    return DatasetError(_decoder_message(exc), line)


def parse_arff(text: str) -> ArffDataset:
    """Parse the nominal-only ARFF subset: @relation, @attribute {..}, @data, dense rows."""
    layout = _scan_arff(text)
    try:
        decoded = arff.loads(text, encode_nominal=True)
    except arff.BadNominalValue as exc:
        raise _domain_error(layout, exc) from None
    except arff.ArffException as exc:
        raise DatasetError(_decoder_message(exc), layout.real(exc.line)) from None

    if layout.data_marker is None:
        raise DatasetError("missing @data section")

    attributes: list[ArffAttribute] = []
    for (name, domain), line_no in zip(decoded["attributes"], layout.attribute_lines):
        line = layout.real(line_no)
        if not isinstance(domain, list):
            raise DatasetError(f"attribute {name} is not nominal ('{domain}'); only {{...}} domains are supported", line)
        if not domain or not all(domain):
            raise DatasetError(f"attribute {name} has an empty domain or an empty value", line)
        if len(set(domain)) != len(domain):
            raise DatasetError(f"attribute {name} repeats a value in its domain", line)
        attributes.append(ArffAttribute(name=name, values=tuple(domain)))

    rows: list[tuple[int, ...]] = []
    for row, line_no in zip(decoded["data"], layout.data_lines):
        line = layout.real(line_no)
        if layout.lines[line_no - 1].strip().startswith("{"):
            raise DatasetError("sparse data rows are not supported", line)
        for attribute, value in zip(attributes, row):
            if value is None:
                raise DatasetError(f"missing value '?' for attribute {attribute.name} is not supported", line)
        rows.append(tuple(row))

    relation = decoded["relation"]
    logger.debug("Parsed ARFF relation '{}': {} attributes, {} instances", relation, len(attributes), len(rows))
    return ArffDataset(relation=relation, attributes=tuple(attributes), instances=tuple(rows))


def arff_to_transactions(ds: ArffDataset, present_value: str | None = None) -> TransactionDatabase:
    """Turn ARFF instances into transactions.

    By default every (attribute, value) pair is an item labelled "name=value" and
    each transaction carries exactly one item per attribute. With *present_value*
    set, each attribute becomes a single item named after the attribute, present
    only in rows whose value equals *present_value*.
    """
    if present_value is not None:
        catalog = ItemCatalog(a.name for a in ds.attributes)
        present = [a.values.index(present_value) if present_value in a.values else -1 for a in ds.attributes]
        transactions = tuple(
            tuple(i for i, value in enumerate(row) if value == present[i])
            for row in ds.instances
        )
        return TransactionDatabase(catalog=catalog, transactions=transactions)

    labels: list[str] = []
    offsets: list[int] = []
    for attribute in ds.attributes:
        offsets.append(len(labels))
        labels.extend(f"{attribute.name}={value}" for value in attribute.values)
    catalog = ItemCatalog(labels)
    # Offsets grow with declaration order, so each transaction is already ascending.
    transactions = tuple(
        tuple(offset + value for offset, value in zip(offsets, row))
        for row in ds.instances
    )
    return TransactionDatabase(catalog=catalog, transactions=transactions)


def basket_to_arff(db: TransactionDatabase, relation: str) -> ArffDataset:
    """One {TRUE, FALSE} attribute per catalog item; TRUE where the item occurs."""
    attributes = tuple(ArffAttribute(name=label, values=("TRUE", "FALSE")) for label in db.catalog.labels)
    instances = []
    for items in db.transactions:
        members = set(items)
        instances.append(tuple(0 if i in members else 1 for i in range(len(db.catalog))))
    return ArffDataset(relation=relation, attributes=attributes, instances=tuple(instances))


def render_arff(ds: ArffDataset) -> str:
    document = {
        "relation": ds.relation,
        "attributes": [(a.name, list(a.values)) for a in ds.attributes],
        "data": [[a.values[v] for a, v in zip(ds.attributes, row)] for row in ds.instances],
    }
    try:
        return arff.dumps(document)
    except arff.ArffException as exc:
        raise DatasetError(str(exc)) from None


# -- Basket --

def parse_basket(text: str) -> TransactionDatabase:
    """Parse one transaction per line: ``[<id>:] item[,| ]item...``; '#' lines are comments."""
    index: dict[str, ItemId] = {}
    labels: list[str] = []
    transactions: list[Itemset] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        body = line
        match = _BASKET_PREFIX.match(line)
        if match:
            body = match.group(2)
        tokens = [t for t in _BASKET_SEPARATOR.split(body) if t]
        if not tokens:
            raise DatasetError(f"transaction '{match.group(1) if match else line}' has no items", line_no)
        ids: set[ItemId] = set()
        for token in tokens:
            item_id = index.get(token)
            if item_id is None:
                item_id = index[token] = len(labels)
                labels.append(token)
            ids.add(item_id)
        transactions.append(tuple(sorted(ids)))

    logger.debug("Parsed basket data: {} transactions, {} items", len(transactions), len(labels))
    return TransactionDatabase(catalog=ItemCatalog(labels), transactions=tuple(transactions))


def render_basket(db: TransactionDatabase, with_ids: bool = False) -> str:
    """Basket text that parses back to *db*.

    Ids are written whenever a label could be mistaken for one (it contains ':')
    or for a comment marker. Empty transactions and labels holding separators
    have no basket spelling and raise DatasetError.
    """
    for label in db.catalog.labels:
        if _BASKET_SEPARATOR.search(label):
            raise DatasetError(f"item label '{label}' contains a separator; basket text cannot represent it")
    if not with_ids and any(":" in label or label.startswith("#") for label in db.catalog.labels):
        logger.debug("Item labels look like transaction ids; writing T<n>: prefixes")
        with_ids = True
    lines = []
    for position, items in enumerate(db.transactions, start=1):
        if not items:
            raise DatasetError(f"transaction {position} is empty; basket text cannot represent it")
        body = ", ".join(db.catalog.render(items))
        lines.append(f"T{position}: {body}" if with_ids else body)
    return "".join(line + "\n" for line in lines)


# -- Files --

def sniff_format(path: Path, fmt: str = "auto") -> str:
    if fmt != "auto":
        return fmt
    return "arff" if path.suffix.lower() == ".arff" else "basket"


def load_database(path: Path, fmt: str = "auto", present_value: str | None = None) -> LoadedInput:
    """Read *path* as ARFF or basket text. Basket inputs get one attribute per item."""
    kind = sniff_format(path, fmt)
    text = path.read_text(encoding="utf-8")
    if kind == "arff":
        ds = parse_arff(text)
        db = arff_to_transactions(ds, present_value=present_value)
        loaded = LoadedInput(database=db, relation=ds.relation, attribute_names=tuple(ds.attribute_names), arff=ds)
    elif kind == "basket":
        db = parse_basket(text)
        loaded = LoadedInput(database=db, relation=path.stem, attribute_names=db.catalog.labels)
    else:
        raise ValueError(f"unknown input format '{fmt}'")
    logger.info("Loaded {} ({}): {} transactions, {} items", path, kind, db.n, len(db.catalog))
    return loaded

