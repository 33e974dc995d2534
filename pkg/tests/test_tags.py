import pytest
from hypothesis import given, strategies as st

from triptalk.nlu import (
    OTHER,
    TAGS,
    SlotKey,
    begin,
    collapse_bio,
    inside,
    is_valid_sequence,
    InvalidTagSequence,
)


def test_tag_set_is_closed():
    assert len(list(SlotKey)) == 12
    assert len(TAGS) == 25
    assert TAGS[0] == OTHER


def test_validity_rules():
    assert is_valid_sequence(["O", "B-ALOC", "I-ALOC"])
    assert is_valid_sequence([])
    assert not is_valid_sequence(["I-ALOC"])
    assert not is_valid_sequence(["B-DLOC", "I-ALOC"])
    assert not is_valid_sequence(["B-ALOC", "O", "I-ALOC"])
    assert not is_valid_sequence(["B-ALOC", "X"])


def test_collapse_paper_style_example():
    tokens = ["pittsburgh", "international", "airport"]
    tags = ["B-ALOC", "I-ALOC", "I-ALOC"]
    fills = collapse_bio(tokens, tags)
    assert len(fills) == 1
    assert fills[0].key is SlotKey.ALOC
    assert fills[0].surface == "pittsburgh international airport"
    assert fills[0].span == (0, 3)


def test_collapse_all_other_is_empty():
    assert collapse_bio(["a", "b"], ["O", "O"]) == []


def test_collapse_adjacent_begins_become_two_fills():
    fills = collapse_bio(["cmu", "airport"], ["B-DLOC", "B-ALOC"])
    assert [(f.key, f.span) for f in fills] == [(SlotKey.DLOC, (0, 1)), (SlotKey.ALOC, (1, 2))]


def test_collapse_rejects_invalid_sequence():
    with pytest.raises(InvalidTagSequence):
        collapse_bio(["a"], ["I-TIME"])
    with pytest.raises(ValueError):
        collapse_bio(["a", "b"], ["O"])


def test_collapse_run_ended_by_other_and_by_end():
    fills = collapse_bio(
        ["go", "to", "penn", "and", "26th", "at", "7", "am"],
        ["O", "O", "B-ALOC", "I-ALOC", "I-ALOC", "O", "B-TIME", "I-TIME"],
    )
    assert [(f.key, f.surface) for f in fills] == [
        (SlotKey.ALOC, "penn and 26th"),
        (SlotKey.TIME, "7 am"),
    ]


@st.composite
def valid_tagged(draw):
    n = draw(st.integers(min_value=0, max_value=12))
    tokens = [draw(st.sampled_from(["a", "b", "cc", "7:15", "x"])) for _ in range(n)]
    tags = []
    for i in range(n):
        prev = tags[-1] if tags else None
        options = [OTHER] + [begin(k) for k in SlotKey]
        if prev and prev != OTHER:
            options.append(inside(SlotKey(prev[2:])))
        tags.append(draw(st.sampled_from(options)))
    return tokens, tags


@given(valid_tagged())
def test_collapse_spans_ordered_and_disjoint(case):
    tokens, tags = case
    fills = collapse_bio(tokens, tags)
    prev_end = 0
    for f in fills:
        start, end = f.span
        assert prev_end <= start < end <= len(tokens)
        assert f.surface == " ".join(tokens[start:end])
        prev_end = end
    # every non-O token is covered by exactly one span
    covered = sum(end - start for (start, end) in (f.span for f in fills))
    assert covered == sum(1 for t in tags if t != OTHER)
