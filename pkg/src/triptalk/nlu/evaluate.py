"""Tagger evaluation: token accuracy and exact-span slot F1."""

from __future__ import annotations

from .generate import TaggedExample
from .tagger import TaggerModel, tag
from .tags import collapse_bio


def evaluate_tagger(model: TaggerModel, testset: list[TaggedExample]) -> dict[str, float]:
    if not testset:
        raise ValueError("cannot evaluate on an empty testset")

    correct = 0
    total = 0
    tp = 0
    n_pred = 0
    n_gold = 0
    for ex in testset:
        tokens = list(ex.tokens)
        predicted = tag(model, tokens)
        total += len(tokens)
        correct += sum(p == g for p, g in zip(predicted, ex.tags))

        gold_fills = {(f.key, f.span) for f in collapse_bio(tokens, list(ex.tags))}
        pred_fills = {(f.key, f.span) for f in collapse_bio(tokens, predicted)}
        tp += len(gold_fills & pred_fills)
        n_pred += len(pred_fills)
        n_gold += len(gold_fills)

    precision = tp / n_pred if n_pred else 0.0
    recall = tp / n_gold if n_gold else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return {"token_accuracy": correct / total if total else 0.0, "slot_f1": f1}
