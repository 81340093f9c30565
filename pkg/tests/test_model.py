import pytest
from hypothesis import given
from hypothesis import strategies as st

from goat_fixture import GOAT_MOCKS, HORRY, JORDAN
from mockdraft.errors import DuplicateItem, EmptyId
from mockdraft.model import UNRANKED, RankedList, build_ranking, overlap_at_depth, position_of


def test_dense_ranks():
    ranking = build_ranking(["a", "b", "c"])
    assert [position_of(ranking, x) for x in "abc"] == [1, 2, 3]


def test_mock_a_ranks():
    mock_a = build_ranking(GOAT_MOCKS["Mock A"])
    expected = {"Michael Jordan": 1, "LeBron James": 2, "Kareem Abdul-Jabbar": 3, "Bill Russell": 4, "Kobe Bryant": 5}
    assert {p: mock_a.position(p) for p in mock_a} == expected


@pytest.mark.parametrize("entries", [["a", "a"], ["Zion", " zion "], ["A B", "a  b"]])
def test_duplicates_rejected(entries):
    with pytest.raises(DuplicateItem):
        build_ranking(entries)


@pytest.mark.parametrize("entries", [["a", ""], ["  "], [None]])
def test_empty_ids_rejected(entries):
    with pytest.raises(EmptyId):
        build_ranking(entries)


def test_position_of_unranked():
    assert position_of(build_ranking(["Zion Williamson", "Ja Morant"]), "Zion Williamson") == 1
    assert position_of(build_ranking(GOAT_MOCKS["Mock A"]), HORRY) is UNRANKED
    assert position_of(build_ranking([]), "anyone") is UNRANKED


def test_overlap_examples():
    a = build_ranking(GOAT_MOCKS["Mock A"])
    e = build_ranking(GOAT_MOCKS["Mock E"])
    assert overlap_at_depth(a, e, 1) == 0
    assert overlap_at_depth(a, e, 3) == 2
    assert overlap_at_depth(a, a, len(a)) == len(a)


def test_overlap_saturates_past_end():
    short = build_ranking(["x", "y"])
    long_ = build_ranking(["q", "r", "x", "y"])
    assert overlap_at_depth(short, long_, 2) == 0
    assert overlap_at_depth(short, long_, 3) == 1
    assert overlap_at_depth(short, long_, 10) == 2


def test_tiers_must_be_contiguous():
    RankedList(("a", "b", "c"), (1, 1, None))
    with pytest.raises(ValueError):
        RankedList(("a", "b", "c"), (1, None, 1))


def test_untiered_drops_tags():
    tied = RankedList(("a", "b"), (1, 1))
    assert tied.is_tied
    assert not tied.untiered().is_tied
    assert RankedList(("a",), (None,)).tiers is None


UNIVERSE = [f"p{i}" for i in range(15)]
rankings = st.lists(st.sampled_from(UNIVERSE), unique=True, max_size=12).map(build_ranking)


@given(rankings, rankings, st.integers(1, 15), st.integers(0, 5))
def test_overlap_properties(a, b, d, extra):
    x = overlap_at_depth(a, b, d)
    assert x == overlap_at_depth(b, a, d)
    assert 0 <= x <= min(d, len(a), len(b))
    assert x <= overlap_at_depth(a, b, d + extra)
