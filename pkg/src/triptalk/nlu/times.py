"""Time-of-day values: parsing TIME slot surfaces and rendering clock times."""

from __future__ import annotations

import re
from dataclasses import dataclass

# Surfaces that mean "leave as soon as possible". The TIME lexicon draws its
# immediacy phrases from this set so parsing stays in sync with the grammar.
IMMEDIACY_PHRASES = frozenset(
    {
        "now",
        "right now",
        "immediately",
        "right away",
        "as soon as possible",
        "asap",
    }
)

_AMPM_RE = re.compile(r"^(\d{1,2})(?::([0-5]\d))?\s*(am|pm|a\.m\.|p\.m\.)$")
_H24_RE = re.compile(r"^(\d{1,2}):([0-5]\d)$")


class TimeParseError(ValueError):
    """A TIME surface did not match any recognized form."""

    def __init__(self, surface: str):
        super().__init__(f"unrecognized time: {surface!r}")
        self.surface = surface


@dataclass(frozen=True)
class TimeSpec:
    """Either "now" or a clock time in minutes since midnight (0..1439)."""

    minutes: int | None  # None means "now"

    def __post_init__(self):
        if self.minutes is not None and not 0 <= self.minutes <= 1439:
            raise ValueError(f"clock minutes out of range: {self.minutes}")

    @property
    def is_now(self) -> bool:
        return self.minutes is None

    @classmethod
    def now(cls) -> "TimeSpec":
        return cls(None)

    @classmethod
    def clock(cls, minutes: int) -> "TimeSpec":
        return cls(minutes)

    def resolve(self, session_clock: int) -> int:
        """Concrete departure minutes, substituting the session clock for "now"."""
        return session_clock if self.minutes is None else self.minutes


def parse_time(surface: str) -> TimeSpec:
    """Parse a TIME slot surface: "h am/pm", "h:mm am/pm", 24h "hh:mm", or an
    immediacy phrase. Raises TimeParseError otherwise; the dialog layer turns
    that into a re-prompt."""
    text = " ".join(surface.lower().split())
    if text in IMMEDIACY_PHRASES:
        return TimeSpec.now()
    if text == "noon":
        return TimeSpec.clock(12 * 60)
    if text == "midnight":
        return TimeSpec.clock(0)

    m = _AMPM_RE.match(text)
    if m:
        hour = int(m.group(1))
        minute = int(m.group(2) or 0)
        if 1 <= hour <= 12:
            hour = hour % 12
            if m.group(3).startswith("p"):
                hour += 12
            return TimeSpec.clock(hour * 60 + minute)

    m = _H24_RE.match(text)
    if m:
        hour, minute = int(m.group(1)), int(m.group(2))
        if hour <= 23:
            return TimeSpec.clock(hour * 60 + minute)

    raise TimeParseError(surface)


def format_clock(minutes: int) -> str:
    """Render minutes-since-midnight as "h:mm am/pm" (e.g. 619 -> "10:19 am")."""
    if not 0 <= minutes <= 1439:
        raise ValueError(f"clock minutes out of range: {minutes}")
    hour, minute = divmod(minutes, 60)
    suffix = "am" if hour < 12 else "pm"
    hour12 = hour % 12 or 12
    return f"{hour12}:{minute:02d} {suffix}"
