from hypothesis import given, strategies as st

from triptalk.nlu import tokenize


def test_lowercase_and_whitespace_split():
    assert tokenize("I want to GO") == ["i", "want", "to", "go"]


def test_punctuation_stripped_but_interior_kept():
    assert tokenize("No, thanks.") == ["no", "thanks"]
    assert tokenize("I'm at 7:15!") == ["i'm", "at", "7:15"]
    assert tokenize("(downtown)") == ["downtown"]


def test_ampersand_survives():
    assert tokenize("forbes & murray") == ["forbes", "&", "murray"]


def test_empty_pieces_dropped():
    assert tokenize("  ...   ") == []
    assert tokenize("") == []


@given(st.text(max_size=60))
def test_retokenizing_joined_tokens_is_stable(raw):
    tokens = tokenize(raw)
    assert tokenize(" ".join(tokens)) == tokens
