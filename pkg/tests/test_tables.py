import pytest

from qfilters.tables import TABLE_NAMES, emit_table, golden_diff, golden_text


@pytest.mark.parametrize("name", TABLE_NAMES)
def test_golden_reproduction(name):
    assert golden_diff(name) == ()


@pytest.mark.parametrize("name", TABLE_NAMES)
def test_text_matches_golden_bytes(name):
    assert emit_table(name).text() == golden_text(name)


def test_table5_row_f4():
    table = emit_table("table5")
    assert table.lines[4] == "- f4 - + + +"


def test_table5_row_f1():
    assert emit_table("table5").lines[1] == "- f1 + + + -"


def test_table2_row_f2_first_term():
    row = emit_table("table2").lines[3]
    assert row.startswith("f2 +|01>")


def test_eq1_matrix():
    assert emit_table("eq1").lines == (
        "11110000",
        "00001111",
        "11001100",
        "00110011",
        "10101010",
        "01010101",
    )


def test_eq2_has_two_displays():
    lines = emit_table("eq2").lines
    assert lines.count("") == 1
    assert len(lines) == 13


def test_table6_row_f23():
    table = emit_table("table6")
    assert table.lines[11] == "f23 + + - -"


def test_unknown_name():
    with pytest.raises(ValueError, match="unknown table"):
        emit_table("table9")


def test_to_json_shape():
    obj = emit_table("table1").to_json()
    assert obj["name"] == "table1"
    assert obj["lines"][0] == "f0 0 0"
