"""Export the phrase list used to bias a speech recognizer toward this domain."""

from __future__ import annotations

from .slots import SlotKey
from .templates import SlotLexicon

# Generic response phrases come from every key except locations and times;
# location coverage comes from the intersection list instead.
_GENERIC_KEYS = tuple(k for k in SlotKey if k not in (SlotKey.DLOC, SlotKey.ALOC, SlotKey.TIME))


def export_asr_hints(lexicon: SlotLexicon, intersections: list[str]) -> list[str]:
    """Deduplicated, sorted union of generic response phrases and intersection names."""
    phrases = set()
    for key in _GENERIC_KEYS:
        for value in lexicon.values.get(key, ()):
            phrases.add(value.lower().strip())
    for name in intersections:
        phrases.add(name.lower().strip())
    phrases.discard("")
    return sorted(phrases)
