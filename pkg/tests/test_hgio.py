import pytest

from kernelsys import HgFormatError, Hypergraph, format_hg, parse_hg, read_hg, write_hg
from kernelsys.corpus import mixed_corpus


def test_parse_basic():
    h = parse_hg("5 3\n# a comment\n0 1 2\n\n1 2 4\n")
    assert h.n == 5 and h.r == 3
    assert set(h.edges) == {frozenset({0, 1, 2}), frozenset({1, 2, 4})}


def test_roundtrip_500_random(tmp_path):
    for i, h in enumerate(mixed_corpus(123, 500)):
        path = tmp_path / f"h{i}.hg"
        write_hg(h, path)
        assert read_hg(path) == h


def test_duplicate_edge_reports_line():
    with pytest.raises(HgFormatError) as err:
        parse_hg("4 2\n0 1\n2 3\n1 0\n")
    assert err.value.lineno == 4
    assert "line 4" in str(err.value) and "line 2" in str(err.value)


def test_bad_vertex_count():
    with pytest.raises(HgFormatError) as err:
        parse_hg("4 3\n0 1\n")
    assert err.value.lineno == 2


def test_vertex_out_of_range():
    with pytest.raises(HgFormatError):
        parse_hg("3 2\n0 5\n")


def test_repeated_vertex_in_edge():
    with pytest.raises(HgFormatError):
        parse_hg("4 2\n1 1\n")


def test_missing_header():
    with pytest.raises(HgFormatError):
        parse_hg("# only a comment\n")


def test_non_integer_tokens():
    with pytest.raises(HgFormatError):
        parse_hg("4 2\n0 x\n")
    with pytest.raises(HgFormatError):
        parse_hg("four 2\n")


def test_format_is_canonical():
    h = Hypergraph(5, 2, [{3, 4}, {0, 1}])
    assert format_hg(h) == "5 2\n0 1\n3 4\n"
