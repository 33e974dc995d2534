"""Deterministic lowercase tokenizer shared by data generation and decoding.

Rules: lowercase, split on whitespace, strip leading/trailing punctuation from
each piece. Interior characters are kept, so clock times like "7:15" and
contractions like "i'm" survive intact. A bare "&" stays a token so
intersection names like "forbes & murray" keep their separator.
"""

from __future__ import annotations

_STRIP = ".,;:!?\"'()[]{}<>`"


def tokenize(raw: str) -> list[str]:
    tokens = []
    for piece in raw.lower().split():
        if piece == "&":
            tokens.append(piece)
            continue
        stripped = piece.strip(_STRIP)
        if stripped:
            tokens.append(stripped)
    return tokens
