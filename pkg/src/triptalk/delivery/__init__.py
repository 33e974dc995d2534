"""Delivery rendering: markup documents, SSML, and the two delivery modes."""

from .markup import (
    Break,
    DeliveryMode,
    Emph,
    MarkupDoc,
    Text,
    LONG_BREAK_MS,
    SHORT_BREAK_MS,
    plain_text,
    to_ssml,
)
from .prompts import PromptBank, PromptSpec, default_prompt_bank
from .render import DeliveryError, confirmation_wrap, render

__all__ = [
    "Break",
    "DeliveryMode",
    "Emph",
    "MarkupDoc",
    "Text",
    "LONG_BREAK_MS",
    "SHORT_BREAK_MS",
    "plain_text",
    "to_ssml",
    "PromptBank",
    "PromptSpec",
    "default_prompt_bank",
    "DeliveryError",
    "confirmation_wrap",
    "render",
]
