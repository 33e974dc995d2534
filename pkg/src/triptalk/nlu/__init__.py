"""Slot tagging NLU: synthetic data generation, a sequence tagger, and slot collapse."""

from .slots import SlotKey, CONTROL_KEYS, CONTENT_KEYS
from .tags import (
    OTHER,
    TAGS,
    TAG_INDEX,
    begin,
    inside,
    tag_key,
    is_valid_sequence,
    collapse_bio,
    SlotFill,
    InvalidTagSequence,
)
from .tokenizer import tokenize
from .templates import Template, TemplateCategory, SlotLexicon, load_templates, load_lexicon, GrammarError
from .generate import TaggedExample, expand_templates, make_splits, write_dataset, read_dataset, SplitError
from .tagger import TaggerModel, train_tagger, tag, save_model, load_model, ModelFormatError
from .evaluate import evaluate_tagger
from .times import TimeSpec, parse_time, format_clock, TimeParseError, IMMEDIACY_PHRASES
from .hints import export_asr_hints

__all__ = [
    "SlotKey",
    "CONTROL_KEYS",
    "CONTENT_KEYS",
    "OTHER",
    "TAGS",
    "TAG_INDEX",
    "begin",
    "inside",
    "tag_key",
    "is_valid_sequence",
    "collapse_bio",
    "SlotFill",
    "InvalidTagSequence",
    "tokenize",
    "Template",
    "TemplateCategory",
    "SlotLexicon",
    "load_templates",
    "load_lexicon",
    "GrammarError",
    "TaggedExample",
    "expand_templates",
    "make_splits",
    "write_dataset",
    "read_dataset",
    "SplitError",
    "TaggerModel",
    "train_tagger",
    "tag",
    "save_model",
    "load_model",
    "ModelFormatError",
    "evaluate_tagger",
    "TimeSpec",
    "parse_time",
    "format_clock",
    "TimeParseError",
    "IMMEDIACY_PHRASES",
    "export_asr_hints",
]
