"""Utterance templates and the slot value lexicon.

Templates are lines of text with ``{KEY}`` placeholders. A template that gives
location or time information (any DLOC/ALOC/TIME placeholder) is info-giving;
everything else is a simple template and may hold at most one placeholder.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .slots import SlotKey

_PLACEHOLDER_RE = re.compile(r"\{([A-Z]+)\}")
_INFO_KEYS = {SlotKey.DLOC, SlotKey.ALOC, SlotKey.TIME}


class GrammarError(ValueError):
    """A template or lexicon violates the grammar rules."""


class TemplateCategory(enum.Enum):
    INFO_GIVING = "info_giving"
    SIMPLE = "simple"


@dataclass(frozen=True)
class Template:
    id: str
    pattern: str
    category: TemplateCategory = field(init=False)

    def __post_init__(self):
        keys = self.placeholders()
        cat = TemplateCategory.INFO_GIVING if keys & _INFO_KEYS else TemplateCategory.SIMPLE
        if cat is TemplateCategory.SIMPLE and len(keys) > 1:
            raise GrammarError(f"template {self.id}: simple templates may hold at most one placeholder")
        object.__setattr__(self, "category", cat)

    def placeholders(self) -> set[SlotKey]:
        keys = set()
        for name in _PLACEHOLDER_RE.findall(self.pattern):
            try:
                keys.add(SlotKey(name))
            except ValueError:
                raise GrammarError(f"template {self.id}: unknown slot key {name!r}") from None
        return keys

    def parts(self) -> list[tuple[str, SlotKey | None]]:
        """Split the pattern into (literal_text, None) and ("", key) parts, in order."""
        out: list[tuple[str, SlotKey | None]] = []
        pos = 0
        for m in _PLACEHOLDER_RE.finditer(self.pattern):
            if m.start() > pos:
                out.append((self.pattern[pos : m.start()], None))
            out.append(("", SlotKey(m.group(1))))
            pos = m.end()
        if pos < len(self.pattern):
            out.append((self.pattern[pos:], None))
        return out


@dataclass(frozen=True)
class SlotLexicon:
    """Map from slot key to its surface values."""

    values: dict[SlotKey, tuple[str, ...]]

    def __post_init__(self):
        for key, vals in self.values.items():
            if not vals:
                raise GrammarError(f"lexicon key {key} has no values")

    def get(self, key: SlotKey) -> tuple[str, ...]:
        if key not in self.values:
            raise GrammarError(f"lexicon has no values for key {key}")
        return self.values[key]

    def subset(self, per_key: dict[SlotKey, list[str]]) -> "SlotLexicon":
        return SlotLexicon({k: tuple(v) for k, v in per_key.items() if v})


def load_templates(path: str | Path) -> list[Template]:
    """Read templates, one per line; blank lines and '#' comments are skipped."""
    templates = []
    n = 0
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n += 1
        templates.append(Template(id=f"t{n:03d}", pattern=line))
    return templates


def load_lexicon(path: str | Path) -> SlotLexicon:
    """Read a lexicon JSON object mapping slot key names to arrays of strings."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, dict):
        raise GrammarError("lexicon file must hold a JSON object")
    values = {}
    for name, vals in raw.items():
        try:
            key = SlotKey(name)
        except ValueError:
            raise GrammarError(f"lexicon: unknown slot key {name!r}") from None
        if not isinstance(vals, list) or not all(isinstance(v, str) for v in vals):
            raise GrammarError(f"lexicon key {name}: values must be an array of strings")
        values[key] = tuple(vals)
    return SlotLexicon(values)
