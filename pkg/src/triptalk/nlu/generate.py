"""Synthetic training data: expand templates with lexicon values into tagged examples."""

from __future__ import annotations

import itertools
import json
import random
import re
from dataclasses import dataclass
from pathlib import Path

from .slots import SlotKey
from .tags import OTHER, begin, inside, is_valid_sequence
from .templates import GrammarError, SlotLexicon, Template
from .tokenizer import tokenize


class SplitError(ValueError):
    """A train/test split cannot be formed from the given grammar."""


_PLACEHOLDER_STRIP_RE = re.compile(r"\{[A-Z]+\}")

# Function words ignored when grouping templates into phrasal families.
_TEMPLATE_STOPWORDS = frozenset(
    "i i'm am is are a an the to from at and by of in on for please thank you "
    "would like will want need me my do".split()
)


@dataclass(frozen=True)
class TaggedExample:
    tokens: tuple[str, ...]
    tags: tuple[str, ...]

    def __post_init__(self):
        if len(self.tokens) != len(self.tags):
            raise ValueError("tokens and tags must have equal length")
        if not is_valid_sequence(list(self.tags)):
            raise ValueError(f"invalid tag sequence: {self.tags}")


def _build_example(template: Template, choice: dict[SlotKey, str]) -> TaggedExample:
    tokens: list[str] = []
    tags: list[str] = []
    raw_parts: list[str] = []
    for text, key in template.parts():
        if key is None:
            part_tokens = tokenize(text)
            tokens.extend(part_tokens)
            tags.extend([OTHER] * len(part_tokens))
            raw_parts.append(text)
        else:
            value = choice[key]
            part_tokens = tokenize(value)
            if not part_tokens:
                raise GrammarError(f"template {template.id}: value {value!r} for {key} tokenizes to nothing")
            tokens.extend(part_tokens)
            tags.append(begin(key))
            tags.extend([inside(key)] * (len(part_tokens) - 1))
            raw_parts.append(value)
    raw = "".join(raw_parts)
    if tokenize(raw) != tokens:
        # A placeholder glued to punctuation would break token/tag alignment.
        raise GrammarError(f"template {template.id}: tokenization of {raw!r} does not align with its parts")
    return TaggedExample(tuple(tokens), tuple(tags))


def expand_templates(
    templates: list[Template],
    lexicon: SlotLexicon,
    samples_per_template: int | None = None,
    seed: int = 0,
) -> list[TaggedExample]:
    """Insert lexicon values into templates, producing tagged examples.

    With ``samples_per_template=None`` every value combination is enumerated;
    otherwise that many combinations are drawn per template (without
    replacement when the space is small enough). Deterministic for equal
    (templates, lexicon, config, seed).
    """
    rng = random.Random(seed)
    examples: list[TaggedExample] = []
    for template in templates:
        keys = sorted(template.placeholders(), key=lambda k: k.value)
        for key in keys:
            if key not in lexicon.values:
                raise GrammarError(f"template {template.id}: no lexicon values for key {key}")
        pools = [lexicon.get(k) for k in keys]
        if not keys:
            examples.append(_build_example(template, {}))
            continue
        total = 1
        for pool in pools:
            total *= len(pool)
        if samples_per_template is None:
            combos = itertools.product(*pools)
            examples.extend(_build_example(template, dict(zip(keys, combo))) for combo in combos)
        elif samples_per_template >= total:
            combos = itertools.product(*pools)
            examples.extend(_build_example(template, dict(zip(keys, combo))) for combo in combos)
        else:
            seen = set()
            while len(seen) < samples_per_template:
                combo = tuple(rng.choice(pool) for pool in pools)
                if combo not in seen:
                    seen.add(combo)
                    examples.append(_build_example(template, dict(zip(keys, combo))))
    return examples


def _value_form(value: str) -> tuple:
    """Coarse shape bucket so held-out values keep a same-form sibling in train."""
    tokens = value.split()
    connectors = frozenset(t for t in tokens if t in ("and", "at", "&"))
    has_digit = any(any(c.isdigit() for c in t) for t in tokens)
    return (min(len(tokens), 3), connectors, has_digit)


def _split_values(values: tuple[str, ...], key: SlotKey, seed: int, test_fraction: float) -> tuple[list[str], list[str]]:
    if len(values) < 2:
        raise SplitError(f"key {key} has fewer than 2 values and cannot be split")
    # Seed from the value list itself so keys sharing a value pool (DLOC/ALOC)
    # split identically and no location leaks across keys.
    rng = random.Random(f"{seed}:{'|'.join(values)}")
    buckets: dict[tuple, list[str]] = {}
    for v in values:
        buckets.setdefault(_value_form(v), []).append(v)
    train: list[str] = []
    test: list[str] = []
    # Stratified: hold out within each form bucket; a form with no sibling
    # stays in train, mirroring "unseen value, familiar construction".
    for form in sorted(buckets):
        members = list(buckets[form])
        rng.shuffle(members)
        if len(members) < 2:
            train.extend(members)
            continue
        n_test = max(1, round(len(members) * test_fraction))
        n_test = min(n_test, len(members) - 1)
        test.extend(members[:n_test])
        train.extend(members[n_test:])
    if not test:
        n_test = max(1, round(len(values) * test_fraction))
        shuffled = list(values)
        rng.shuffle(shuffled)
        return shuffled[n_test:], shuffled[:n_test]
    return train, test


def make_splits(
    templates: list[Template],
    lexicon: SlotLexicon,
    seed: int = 0,
    train_samples_per_template: int | None = 1000,
    test_samples_per_template: int | None = 100,
    test_fraction: float = 0.25,
    template_test_fraction: float = 0.25,
) -> dict[str, list[TaggedExample]]:
    """Build train / unseen_slots / unseen_templates datasets.

    unseen_slots pairs the training templates with held-out values;
    unseen_templates pairs held-out templates with held-out values. No
    held-out value string appears as a slot value anywhere in train.
    """
    if len(templates) < 2:
        raise SplitError("need at least 2 templates to hold some out")

    train_values: dict[SlotKey, list[str]] = {}
    test_values: dict[SlotKey, list[str]] = {}
    for key, values in lexicon.values.items():
        train_values[key], test_values[key] = _split_values(values, key, seed, test_fraction)

    # Any string held out for one key must not leak into train under another.
    held_out = {v for vals in test_values.values() for v in vals}
    for key in train_values:
        train_values[key] = [v for v in train_values[key] if v not in held_out]
        if not train_values[key]:
            raise SplitError(f"key {key} has no training values left after holding out test values")

    # Templates split stratified by placeholder signature so every slot
    # combination keeps training formulations; held-out templates are novel
    # phrasings of familiar slot patterns.
    rng = random.Random(seed)
    buckets: dict[tuple, list[Template]] = {}
    for t in templates:
        sig = tuple(sorted(k.value for k in t.placeholders()))
        buckets.setdefault(sig, []).append(t)
    train_templates: list[Template] = []
    test_templates: list[Template] = []
    for sig in sorted(buckets):
        members = list(buckets[sig])
        rng.shuffle(members)
        if len(members) < 2:
            train_templates.extend(members)
            continue
        n_test = max(1, round(len(members) * template_test_fraction))
        n_test = min(n_test, len(members) - 1)
        test_templates.extend(members[:n_test])
        train_templates.extend(members[n_test:])
    if not test_templates:
        rng.shuffle(templates := list(templates))
        n_test = max(1, round(len(templates) * template_test_fraction))
        test_templates, train_templates = templates[:n_test], templates[n_test:]

    # A held-out template whose content words never occur in any training
    # template would be unlearnable; keep such templates in train.
    def content_words(t: Template) -> set[str]:
        return {w for w in _PLACEHOLDER_STRIP_RE.sub(" ", t.pattern).split() if w not in _TEMPLATE_STOPWORDS}

    covered = set().union(*(content_words(t) for t in train_templates)) if train_templates else set()
    moved = True
    while moved and test_templates:
        moved = False
        for t in sorted(test_templates, key=lambda t: t.id):
            if content_words(t) - covered:
                test_templates.remove(t)
                train_templates.append(t)
                covered |= content_words(t)
                moved = True
    train_templates = sorted(train_templates, key=lambda t: t.id)
    test_templates = sorted(test_templates, key=lambda t: t.id)

    train_lex = lexicon.subset(train_values)
    test_lex = lexicon.subset(test_values)
    return {
        "train": expand_templates(train_templates, train_lex, train_samples_per_template, seed),
        "unseen_slots": expand_templates(train_templates, test_lex, test_samples_per_template, seed + 1),
        "unseen_templates": expand_templates(test_templates, test_lex, test_samples_per_template, seed + 2),
    }


def write_dataset(examples: list[TaggedExample], path: str | Path) -> None:
    """Write examples as JSON Lines: {"tokens": [...], "tags": [...]}."""
    with open(path, "w", encoding="utf-8") as fh:
        for ex in examples:
            fh.write(json.dumps({"tokens": list(ex.tokens), "tags": list(ex.tags)}) + "\n")


def read_dataset(path: str | Path) -> list[TaggedExample]:
    examples = []
    for i, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            row = json.loads(line)
            examples.append(TaggedExample(tuple(row["tokens"]), tuple(row["tags"])))
        except (KeyError, ValueError, TypeError) as exc:
            raise ValueError(f"{path}:{i}: bad dataset line: {exc}") from exc
    return examples
