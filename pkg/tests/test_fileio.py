"""Text format round-trips and parse failures with exact line numbers."""

import numpy as np
import pytest

from jrl.errors import (
    NotAbelianGroup,
    NotAssociative,
    ParseError,
    ValidationError,
)
from jrl.fileio import (
    group_file_text,
    load_structure,
    parse_group_text,
    parse_ring_file,
    parse_ring_text,
    ring_file_text,
    write_group_file,
    write_ring_file,
)
from jrl.groups import BUILTIN_GROUP_NAMES, FiniteGroup, builtin_group
from jrl.rings import BUILTIN_RING_NAMES, FiniteRing, builtin_ring

Z4_TEXT = """\
# integers mod 4
ring Z4 4
zero 0
one 1
add
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
mul
0 0 0 0
0 1 2 3
0 2 0 2
0 3 2 1
"""


@pytest.mark.parametrize("name", BUILTIN_RING_NAMES)
def test_ring_round_trip(name, tmp_path):
    R = builtin_ring(name)
    path = tmp_path / f"{name}.ring"
    write_ring_file(R, path)
    back = parse_ring_file(path)
    assert back.name == R.name and back.order == R.order
    assert back.zero == R.zero and back.one == R.one
    assert np.array_equal(back.add_table, R.add_table)
    assert np.array_equal(back.mul_table, R.mul_table)


@pytest.mark.parametrize("name", BUILTIN_GROUP_NAMES)
def test_group_round_trip(name, tmp_path):
    G = builtin_group(name)
    path = tmp_path / f"{name}.group"
    write_group_file(G, path)
    back = load_structure(path)
    assert isinstance(back, FiniteGroup)
    assert back.name == G.name and back.identity == G.identity
    assert np.array_equal(back.table, G.table)


def test_hand_written_file_with_comments():
    R = parse_ring_text(Z4_TEXT)
    assert R.name == "Z4" and R.order == 4
    assert R.characteristic() == 4


def test_comments_blanks_and_alignment_are_tolerated():
    text = Z4_TEXT.replace("ring Z4 4", "\n\n  ring   Z4   4   # header\n")
    text = text.replace("0 1 2 3", "  0   1 2 3  # first row", 1)
    assert parse_ring_text(text).order == 4


def test_load_structure_dispatch(tmp_path):
    rp = tmp_path / "r.ring"
    gp = tmp_path / "g.group"
    write_ring_file(builtin_ring("Z2"), rp)
    write_group_file(builtin_group("C4"), gp)
    assert isinstance(load_structure(rp), FiniteRing)
    assert isinstance(load_structure(gp), FiniteGroup)


def test_load_structure_rejects_other_headers(tmp_path):
    p = tmp_path / "x.ring"
    p.write_text("field F4 4\n")
    with pytest.raises(ParseError) as err:
        load_structure(p)
    assert err.value.line == 1
    empty = tmp_path / "empty.ring"
    empty.write_text("# nothing here\n")
    with pytest.raises(ParseError) as err:
        load_structure(empty)
    assert err.value.line == 1 and "empty" in str(err.value)


@pytest.mark.parametrize("mutate,line,fragment", [
    (lambda t: t.replace("ring Z4 4", "ring Z4"), 2, "header"),
    (lambda t: t.replace("ring Z4 4", "ring Z4 four"), 2, "not an integer"),
    (lambda t: t.replace("ring Z4 4", "ring Z4 0"), 2, "at least 1"),
    (lambda t: t.replace("zero 0", "zero"), 3, "'zero <i>'"),
    (lambda t: t.replace("one 1", "unit 1"), 4, "'one <i>'"),
    (lambda t: t.replace("add", "plus", 1), 5, "'add' table header"),
    (lambda t: t.replace("1 2 3 0", "1 2 3", 1), 7, "3 entries, expected 4"),
    (lambda t: t.replace("3 0 1 2", "3 0 1 9", 1), 9, "out of range"),
    (lambda t: t.replace("0 3 2 1", "0 3 2 x", 1), 14, "non-integer"),
    (lambda t: t + "extra 1\n", 15, "trailing"),
])
def test_parse_error_positions(mutate, line, fragment):
    # Z4_TEXT line 1 is a comment, so the header sits on line 2.
    with pytest.raises(ParseError) as err:
        parse_ring_text(mutate(Z4_TEXT))
    assert err.value.line == line
    assert fragment in str(err.value)
    assert str(err.value).startswith(f"line {line}:")


def test_truncated_file_reports_last_line():
    text = "\n".join(Z4_TEXT.splitlines()[:8]) + "\n"
    with pytest.raises(ParseError) as err:
        parse_ring_text(text)
    assert "end of file" in str(err.value)
    assert err.value.line == 8


def test_path_appears_in_message(tmp_path):
    p = tmp_path / "broken.ring"
    p.write_text("ring X 2\nzero 0\n")
    with pytest.raises(ParseError) as err:
        parse_ring_file(p)
    assert str(p) in str(err.value)


def test_wellformed_file_with_bad_algebra_raises_typed_errors():
    bad_mul = Z4_TEXT.replace("0 2 0 2", "0 2 1 2")
    with pytest.raises(NotAssociative):
        parse_ring_text(bad_mul)
    bad_add = Z4_TEXT.replace("1 2 3 0", "1 2 0 3", 1)
    with pytest.raises(NotAbelianGroup):
        parse_ring_text(bad_add)


def test_group_text_with_bad_algebra():
    G = builtin_group("C4")
    text = group_file_text(G).replace("2 3 0 1", "2 3 0 0")
    with pytest.raises(ValidationError):
        parse_group_text(text)


def test_text_is_aligned_for_wide_orders():
    text = ring_file_text(builtin_ring("Z16"))
    rows = text.splitlines()[4:20]
    assert all(len(r) == len(rows[0]) for r in rows)
    assert rows[0].startswith(" 0  1  2")
