import pytest

from hmap import (
    Dim,
    ParseError,
    RingItem,
    Void,
    is_well_formed,
    make_map,
    parse_map,
    parse_ring,
    serialize_map,
    serialize_ring,
    to_dot,
)
from hmap.jordan import random_map

d0 = Dim.zero


def test_serialize_empty():
    assert serialize_map(Void()) == "hmap 1\n"


def test_parse_two_dart_edge(two_dart_edge):
    assert parse_map("hmap 1\ni 1\ni 2\nl 0 1 2\n") == two_dart_edge


def test_round_trip_fixture(fixture15):
    assert parse_map(serialize_map(fixture15)) == fixture15


def test_round_trip_canonical_text(digon):
    text = serialize_map(digon)
    assert serialize_map(parse_map(text)) == text


@pytest.mark.parametrize("seed", range(20))
def test_round_trip_random(seed):
    m = random_map(seed, 3 + seed, 2 * seed)
    assert parse_map(serialize_map(m)) == m


def test_comments_and_blanks_ignored():
    text = "# a map\nhmap 1\n\n i 1  # the dart\n\ni 2\nl 0 1 2 # link\n"
    assert parse_map(text) == make_map([1, 2], [(d0, 1, 2)])


def test_missing_header():
    with pytest.raises(ParseError, match="header"):
        parse_map("i 1\n")
    with pytest.raises(ParseError, match="header"):
        parse_map("")


def test_bad_lines_report_line_numbers():
    with pytest.raises(ParseError, match="line 2"):
        parse_map("hmap 1\ni x\n")
    with pytest.raises(ParseError, match="line 3"):
        parse_map("hmap 1\ni 1\nl 2 1 1\n")
    with pytest.raises(ParseError, match="line 2.*unrecognized"):
        parse_map("hmap 1\nq 1\n")
    with pytest.raises(ParseError, match="line 4"):
        parse_map("hmap 1\ni 1\ni 2\nl 0 1\n")


def test_invariant_violations_are_not_parse_errors():
    m = parse_map("hmap 1\ni 1\ni 1\n")
    assert not is_well_formed(m)
    m = parse_map("hmap 1\ni 0\n")
    assert not is_well_formed(m)


def test_negative_dart_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_map("hmap 1\ni -3\n")


def test_ring_round_trip():
    items = [RingItem(1, True), RingItem(3, False)]
    assert parse_ring("1 t\n3 f\n") == items
    assert serialize_ring(items) == "1 t\n3 f\n"
    assert parse_ring(serialize_ring(items)) == items


def test_ring_empty():
    assert serialize_ring([]) == ""
    assert parse_ring("") == []


def test_ring_bad_lines():
    with pytest.raises(ParseError, match="line 1"):
        parse_ring("1 x\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_ring("1 t\n2\n")


def test_ring_comments():
    assert parse_ring("# break order\n1 t\n") == [RingItem(1, True)]


class TestDot:
    def test_digon(self, digon):
        text = to_dot(digon)
        assert text.startswith("digraph")
        assert "cluster_0" in text
        assert "1 -> 2 [style=solid];" in text
        assert "2 -> 3 [style=dashed];" in text

    def test_one_cluster_per_component(self, fixture15):
        text = to_dot(fixture15)
        assert "cluster_2" in text and "cluster_3" not in text

    def test_empty(self):
        text = to_dot(Void())
        assert text.startswith("digraph")
