"""Tests for the synthetic transaction generator."""

from __future__ import annotations

import pytest

from freqmine.core.dataset import parse_basket, render_basket
from freqmine.core.synth import GenParams, GenParamsError, generate


def test_shape_name_round_trip():
    p = GenParams.from_name("T10I4D10K")
    assert (p.num_transactions, p.avg_transaction_length, p.avg_pattern_length) == (10_000, 10.0, 4.0)
    assert p.name == "T10I4D10K"
    assert GenParams.from_name("T5I2D100", seed=3).seed == 3


@pytest.mark.parametrize("shape", ["T10I4", "X10I4D10K", "T10I4D10G"])
def test_bad_shape(shape):
    with pytest.raises(GenParamsError):
        GenParams.from_name(shape)


def test_parameter_invariants():
    with pytest.raises(GenParamsError):
        GenParams(avg_pattern_length=12, avg_transaction_length=10)
    with pytest.raises(GenParamsError):
        GenParams(num_transactions=0)
    with pytest.raises(GenParamsError):
        GenParams(seed=-1)


def test_t10i4d10k_size(t10i4d10k):
    assert t10i4d10k.n == 10_000
    mean = sum(len(items) for items in t10i4d10k) / t10i4d10k.n
    assert 8.5 <= mean <= 11.5


def test_same_seed_same_bytes():
    p = GenParams(num_transactions=300, num_items=50, num_patterns=20, seed=7)
    assert render_basket(generate(p)) == render_basket(generate(p))


def test_different_seed_differs():
    base = dict(num_transactions=300, num_items=50, num_patterns=20)
    assert render_basket(generate(GenParams(**base, seed=1))) != render_basket(generate(GenParams(**base, seed=2)))


def test_single_item_universe():
    db = generate(GenParams(num_transactions=20, avg_transaction_length=1, avg_pattern_length=1,
                            num_items=1, num_patterns=3))
    assert db.catalog.labels == ("item0",)
    assert all(items == (0,) for items in db)


def test_output_reparses_to_same_database():
    db = generate(GenParams(num_transactions=200, num_items=40, num_patterns=10, seed=11))
    assert parse_basket(render_basket(db)) == db
