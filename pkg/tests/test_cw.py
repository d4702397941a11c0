from dataclasses import replace

import pytest
from hypothesis import given

from fuzzypn.cw import (
    accept,
    accept_oracle,
    all_strings,
    check,
    label_of_seq,
    language_table,
    marking_height,
    validate,
)
from fuzzypn.errors import ModelError, UnknownReference

import generators as gen


def test_valve_cw_is_valid(valve_cw):
    assert validate(valve_cw) == []


def test_validate_catches_bad_labels(valve_cw):
    unlabeled = replace(valve_cw, labels={"t1": "L", "t2": "M"})
    assert any("has no label" in v for v in validate(unlabeled))
    unknown = replace(valve_cw, labels={**valve_cw.labels, "t3": "XL"})
    assert any("unknown word" in v for v in validate(unknown))
    with pytest.raises(ModelError):
        check(replace(valve_cw, m1=(0, 0, 0, 1.5, 0)))


def test_label_of_seq(valve_cw):
    assert label_of_seq(valve_cw, ["t2", "t3"]) == ("M", "S")
    assert label_of_seq(valve_cw, []) == ()
    assert label_of_seq(valve_cw, ["t1"]) == ("L",)


def test_accept(valve_cw):
    assert accept(valve_cw, ["M"]) == 0.9
    assert accept(valve_cw, ["M", "S"]) == 0
    assert accept(valve_cw, []) == 0
    assert accept(valve_cw, ["S"]) == 0.4


def test_accept_oracle(valve_cw):
    assert accept_oracle(valve_cw, ["M"]) == 0.9
    assert accept_oracle(valve_cw, ["L"]) == 0.2
    assert accept_oracle(valve_cw, []) == marking_height(valve_cw.fpn.m0, valve_cw.m1)


def test_oracle_depth_bound(valve_cw):
    with pytest.raises(ValueError):
        accept_oracle(valve_cw, ["L"] * 7)


def test_unknown_word(valve_cw):
    with pytest.raises(UnknownReference):
        accept(valve_cw, ["XL"])


def test_language_table(valve_cw):
    assert language_table(valve_cw, 1) == {(): 0.0, ("L",): 0.2, ("M",): 0.9, ("S",): 0.4}
    assert language_table(valve_cw, 0) == {(): 0.0}
    assert language_table(valve_cw, 2)[("L", "L")] == 0
    assert language_table(valve_cw, 2, include_zero=False) == {("L",): 0.2, ("M",): 0.9, ("S",): 0.4}


def test_all_strings_order():
    assert list(all_strings("ab", 2)) == [(), ("a",), ("b",), ("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]


@given(gen.fpncws)
def test_accept_agrees_with_oracle(n):
    for s in all_strings([w.name for w in n.alphabet], 3):
        assert accept(n, s) == accept_oracle(n, s)


@given(gen.fpncws)
def test_acceptance_bounded_by_final_marking(n):
    top = max(n.m1)
    for s, d in language_table(n, 2).items():
        assert 0.0 <= d <= top
