import pytest

from tanglebounds.diagram import count_components
from tanglebounds.pd import PDSyntaxError, parse, parse_pd, parse_tangle, serialize

from conftest import TREFOIL_LEFT


def test_free_loops():
    d = parse_pd("L0(1)")
    assert d.crossings == () and d.free_loops == 1
    assert count_components(parse_pd("L0(3)")) == 3


def test_trefoil_parses():
    d = parse_pd(TREFOIL_LEFT)
    assert len(d.crossings) == 3
    assert count_components(d) == 1


def test_dangling_arc():
    with pytest.raises(ValueError, match="dangling arc 1"):
        parse_pd("X(1,2,3,3)")


def test_syntax_error_position():
    with pytest.raises(PDSyntaxError) as e:
        parse_pd("X(1,2,3,3) Y")
    assert "line 1, column 12" in str(e.value)


def test_arc_used_three_times():
    with pytest.raises(ValueError):
        parse_pd("X(1,1,1,2) X(2,3,3,4)")


def test_comments_and_whitespace():
    text = "# left trefoil\nX(1,4,2,5)   X(3,6,4,1)\n\tX(5,2,6,3)  # done\n"
    assert serialize(parse_pd(text)) == TREFOIL_LEFT


def test_tangle_syntax():
    t = parse_tangle("T{nw=1,ne=2,se=3,sw=4}[X(1,4,3,2)]")
    assert t.boundary == {"NW": 1, "NE": 2, "SE": 3, "SW": 4}
    assert serialize(t) == "T{nw=1,ne=2,se=3,sw=4}[X(1,4,3,2)]"


def test_parse_dispatches_on_kind():
    assert parse("L0(2)").free_loops == 2
    assert parse("T{nw=1,ne=1,se=2,sw=2}[]").boundary["NE"] == 1


def test_round_trip_on_corpus(corpus):
    for f in corpus:
        obj = parse(f.pd)
        assert serialize(obj) == f.pd, f.name
        for s in f.summands:
            assert serialize(parse_tangle(s)) == s
