"""Render prompts into markup for a delivery mode.

Standard delivery emits the bare sentence. Senior-tailored delivery adds the
three accessibility features: an attention prefix before key information,
breaks at sentence and clause boundaries and before emphasized spans, and
loud emphasis on bus numbers, street names, and departure times.
"""

from __future__ import annotations

import random
import re

from .markup import (
    Break,
    DeliveryMode,
    Emph,
    LONG_BREAK_MS,
    MarkupDoc,
    SHORT_BREAK_MS,
    Text,
    normalize_doc,
)
from .prompts import PromptBank, STEP_CONFIRM_QUESTION

# Binding names whose values get loud emphasis in senior-tailored mode.
EMPHASIZED_BINDINGS = ("bus_number", "depart_time", "street_names", "place")

_CLAUSE_RE = re.compile(r"[^.?!,;]*[.?!,;]+\s*|[^.?!,;]+$")


class DeliveryError(ValueError):
    """Unknown prompt key or a binding missing for a template placeholder."""


def _emphasis_surfaces(bindings: dict) -> list[str]:
    surfaces = []
    for name in EMPHASIZED_BINDINGS:
        value = bindings.get(name)
        if value is None:
            continue
        values = value if isinstance(value, (list, tuple)) else [value]
        surfaces.extend(str(v) for v in values if str(v))
    # longest first so "Forbes Avenue and Murray Avenue" beats "Forbes Avenue"
    return sorted(set(surfaces), key=lambda s: (-len(s), s))


def _mark_emphasis(text: str, surfaces: list[str]) -> list:
    segments: list = []
    pos = 0
    while pos < len(text):
        hit = None
        for surface in surfaces:
            at = text.find(surface, pos)
            if at != -1 and (hit is None or at < hit[0]):
                hit = (at, surface)
        if hit is None:
            segments.append(Text(text[pos:]))
            break
        at, surface = hit
        if at > pos:
            segments.append(Text(text[pos:at]))
        segments.append(Emph(surface))
        pos = at + len(surface)
    return segments


def _split_clauses(text: str) -> list:
    out: list = []
    for piece in _CLAUSE_RE.findall(text):
        out.append(Text(piece))
        stripped = piece.rstrip()
        if stripped.endswith((".", "?", "!")):
            out.append(Break(LONG_BREAK_MS))
        elif stripped.endswith((",", ";")):
            out.append(Break(SHORT_BREAK_MS))
    return out


def _fill(template: str, bindings: dict, key: str) -> str:
    scalars = {k: v for k, v in bindings.items() if not isinstance(v, (list, tuple, dict))}
    try:
        return template.format(**scalars)
    except (KeyError, IndexError) as exc:
        raise DeliveryError(f"prompt {key!r}: missing binding {exc}") from exc


def render(
    bank: PromptBank,
    prompt_key: str,
    bindings: dict,
    mode: DeliveryMode,
    rng_seed: int,
    variant: str = "base",
) -> MarkupDoc:
    """Render one prompt. Template choice is a pure function of (key, variant, seed)."""
    try:
        spec = bank.get(prompt_key)
    except KeyError as exc:
        raise DeliveryError(str(exc)) from exc
    templates = spec.templates_for(variant)
    rng = random.Random(f"{rng_seed}:{prompt_key}:{variant}")
    text = _fill(templates[rng.randrange(len(templates))], bindings, prompt_key)

    if mode is DeliveryMode.SD:
        return [Text(text)]

    segments: list = []
    if spec.key_information:
        prefix = spec.prefixes[rng.randrange(len(spec.prefixes))]
        segments.append(Text(prefix))
        segments.append(Break(LONG_BREAK_MS))

    for part in _mark_emphasis(text, _emphasis_surfaces(bindings)):
        if isinstance(part, Emph):
            segments.append(Break(LONG_BREAK_MS))
            segments.append(part)
        else:
            segments.extend(_split_clauses(part.content))
    return normalize_doc(segments)


def confirmation_wrap(doc: MarkupDoc, mode: DeliveryMode, question: str = STEP_CONFIRM_QUESTION) -> MarkupDoc:
    """Append the step-completion question; identity in standard delivery."""
    if mode is DeliveryMode.SD:
        return list(doc)
    if not doc:
        return [Text(question)]
    return normalize_doc(list(doc) + [Break(LONG_BREAK_MS), Text(question)])
