"""Markup documents: text interleaved with breaks and loud-emphasis spans."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from xml.sax.saxutils import escape

# Characters not allowed anywhere in XML 1.0 documents.
_XML_INVALID_RE = re.compile(
    "[^\t\n\r\u0020-\uD7FF\uE000-\uFFFD\U00010000-\U0010FFFF]"
)


def _xml_text(content: str) -> str:
    return escape(_XML_INVALID_RE.sub(" ", content))

LONG_BREAK_MS = 800
SHORT_BREAK_MS = 300


class DeliveryMode(enum.Enum):
    SETD = "setd"  # senior-tailored delivery
    SD = "sd"  # standard delivery

    @property
    def color(self) -> str:
        return "orange" if self is DeliveryMode.SETD else "blue"


@dataclass(frozen=True)
class Text:
    content: str


@dataclass(frozen=True)
class Break:
    ms: int = LONG_BREAK_MS

    def __post_init__(self):
        if self.ms not in (LONG_BREAK_MS, SHORT_BREAK_MS):
            raise ValueError(f"break must be {LONG_BREAK_MS} or {SHORT_BREAK_MS} ms, got {self.ms}")


@dataclass(frozen=True)
class Emph:
    content: str
    volume: str = "loud"


Segment = Text | Break | Emph
MarkupDoc = list  # list[Segment]


def normalize_doc(segments: list) -> MarkupDoc:
    """Collapse adjacent breaks (keeping the longest) and trim edge breaks."""
    out: list = []
    for seg in segments:
        if isinstance(seg, Break) and out and isinstance(out[-1], Break):
            if seg.ms > out[-1].ms:
                out[-1] = seg
            continue
        if isinstance(seg, Text) and not seg.content:
            continue
        out.append(seg)
    while out and isinstance(out[0], Break):
        out.pop(0)
    while out and isinstance(out[-1], Break):
        out.pop()
    return out


def to_ssml(doc: MarkupDoc) -> str:
    parts = ["<speak>"]
    for seg in doc:
        if isinstance(seg, Text):
            parts.append(_xml_text(seg.content))
        elif isinstance(seg, Break):
            parts.append(f'<break time="{seg.ms}ms"/>')
        elif isinstance(seg, Emph):
            parts.append(f'<prosody volume="{seg.volume}">{_xml_text(seg.content)}</prosody>')
        else:
            raise TypeError(f"unknown segment {seg!r}")
    parts.append("</speak>")
    return "".join(parts)


def plain_text(doc: MarkupDoc) -> str:
    parts = []
    for seg in doc:
        if isinstance(seg, (Text, Emph)):
            parts.append(seg.content)
        elif isinstance(seg, Break):
            parts.append(" ")
    return " ".join("".join(parts).split())
