"""The closed set of slot keys understood by the system."""

from __future__ import annotations

import enum


class SlotKey(str, enum.Enum):
    """The twelve slot keys. No key is ever added at runtime."""

    DLOC = "DLOC"
    ALOC = "ALOC"
    TIME = "TIME"
    YES = "YES"
    NO = "NO"
    PAUSE = "PAUSE"
    REPEAT = "REPEAT"
    CONTINUE = "CONTINUE"
    RESTART = "RESTART"
    TRANSIT = "TRANSIT"
    DRIVING = "DRIVING"
    CHANGE = "CHANGE"

    def __str__(self) -> str:  # pragma: no cover - repr convenience
        return self.value


# Keys that steer the conversation rather than carry trip content.
CONTROL_KEYS = frozenset(
    {
        SlotKey.YES,
        SlotKey.NO,
        SlotKey.PAUSE,
        SlotKey.REPEAT,
        SlotKey.CONTINUE,
        SlotKey.RESTART,
        SlotKey.CHANGE,
    }
)

# Keys that carry trip content (locations, time, travel mode).
CONTENT_KEYS = frozenset(set(SlotKey) - CONTROL_KEYS)
