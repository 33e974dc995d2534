"""BIO tag strings, sequence validity, and collapsing tagged tokens into slot fills.

Tags are plain strings: ``"O"``, ``"B-ALOC"``, ``"I-TIME"`` and so on. This is
also the exact on-disk representation used by dataset files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .slots import SlotKey

OTHER = "O"

# Fixed tag order: O first, then B/I per key in declaration order. Decoding
# tie-breaks prefer the lowest index, so O wins all-else-equal.
TAGS: list[str] = [OTHER]
for _key in SlotKey:
    TAGS.append(f"B-{_key.value}")
    TAGS.append(f"I-{_key.value}")

TAG_INDEX: dict[str, int] = {t: i for i, t in enumerate(TAGS)}


class InvalidTagSequence(ValueError):
    """A tag sequence has an inside tag without a matching begin/inside before it."""


def begin(key: SlotKey) -> str:
    return f"B-{key.value}"


def inside(key: SlotKey) -> str:
    return f"I-{key.value}"


def tag_key(tag: str) -> SlotKey | None:
    """The slot key a B-/I- tag refers to, or None for O."""
    if tag == OTHER:
        return None
    return SlotKey(tag[2:])


def is_valid_sequence(tags: list[str]) -> bool:
    """True iff every I-k tag directly follows B-k or I-k."""
    prev = None
    for t in tags:
        if t not in TAG_INDEX:
            return False
        if t.startswith("I-") and prev not in (f"B-{t[2:]}", t):
            return False
        prev = t
    return True


@dataclass(frozen=True)
class SlotFill:
    """One collapsed slot value: key, surface text, and its token span [start, end)."""

    key: SlotKey
    surface: str
    span: tuple[int, int]


def collapse_bio(tokens: list[str], tags: list[str]) -> list[SlotFill]:
    """Collapse consecutive B/I tokens of one key into slot fills.

    O tokens produce nothing. Raises InvalidTagSequence on malformed input;
    this cannot happen for sequences produced by the tagger's decoder.
    """
    if len(tokens) != len(tags):
        raise ValueError(f"token/tag length mismatch: {len(tokens)} vs {len(tags)}")
    if not is_valid_sequence(tags):
        raise InvalidTagSequence(f"invalid BIO sequence: {tags}")

    fills: list[SlotFill] = []
    start = None
    key = None
    for i, t in enumerate(tags):
        if t.startswith("B-"):
            if start is not None:
                fills.append(SlotFill(key, " ".join(tokens[start:i]), (start, i)))
            start, key = i, SlotKey(t[2:])
        elif t == OTHER:
            if start is not None:
                fills.append(SlotFill(key, " ".join(tokens[start:i]), (start, i)))
                start, key = None, None
        # I- tags extend the open run
    if start is not None:
        fills.append(SlotFill(key, " ".join(tokens[start:]), (start, len(tokens))))
    return fills
