import csv
import io
import json

import pytest

from hwcc import fixtures
from hwcc.tables import (
    FORMATS,
    data_rows,
    diff_data,
    diff_t,
    emit_data,
    emit_t,
    fixture_rows,
    group,
    t_columns,
)


@pytest.fixture(scope="module")
def e6_rows(e6):
    return data_rows(e6)


def test_group_lookup():
    assert group("e6").label == "E6"
    with pytest.raises(ValueError):
        group("B4")


def test_e6_rows_agree_except_row_21(e6_rows):
    diffs = diff_data("E6", e6_rows)
    assert [(d.row, d.field) for d in diffs] == [(21, "possible")]
    assert diffs[0].computed == [21] and diffs[0].expected == [1, 21]
    assert len(fixture_rows("E6")) == 27


def test_e7_diffs_are_the_known_ones(e7):
    diffs = diff_data("E7", data_rows(e7))
    assert sorted(d.row for d in diffs) == [29, 31, 32, 35]
    extra = {d.row: set(d.expected) - set(d.computed) for d in diffs}
    assert extra == {29: {25}, 31: {23}, 32: {22}, 35: {19}}
    assert all(set(d.computed) <= set(d.expected) for d in diffs)
    tdiffs = diff_t("E7", t_columns(e7))
    assert {d.table for d in tdiffs} == {"E7 T13"} and len(tdiffs) == 12


def test_e6_t_tables_match(e6):
    assert diff_t("E6", t_columns(e6)) == []


@pytest.mark.parametrize("fmt", FORMATS)
def test_emit_deterministic(e6, e6_rows, fmt):
    cols = t_columns(e6)
    assert emit_data(e6_rows, fmt, label="E6") == emit_data(list(e6_rows), fmt, label="E6")
    assert emit_t(cols, fmt, label="E6") == emit_t(list(cols), fmt, label="E6")


def test_emit_round_trips(e6, e6_rows):
    js = json.loads(emit_data(e6_rows, "json"))
    assert [r["i"] for r in js] == list(range(1, 28))
    assert js[6]["possible"] == [3, 7]
    rows = list(csv.DictReader(io.StringIO(emit_data(e6_rows, "csv"))))
    assert rows[16]["possible_cc"] == "1 3 10 17"
    assert rows[0]["tau"] == "2 3 4 5 6"
    t = json.loads(emit_t(t_columns(e6), "json"))
    assert list(t) == ["T13", "T34", "T24", "T45", "T56"]
    assert [1, 2] in t["T13"]
    latex = emit_t(t_columns(e6), "latex")
    assert latex.count("\\\\") == 1 + max(len(v) for v in t.values())


def test_unknown_format(e6_rows):
    with pytest.raises(ValueError):
        emit_data(e6_rows, "xml")
    with pytest.raises(ValueError):
        emit_t([], "xml")


def test_fixture_provenance():
    assert fixtures.FIXTURE_VERSION
    assert all(isinstance(k, str) and v for k, v in fixtures.PROVENANCE.items())
