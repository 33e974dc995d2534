"""Averaged-perceptron slot tagger with a constrained Viterbi decoder.

Emission scores come from sparse indicator features: token identity, prefixes
and suffixes up to length 3, token shape, a two-token context window, position
flags, and the previous tag. During training, identity features are randomly
hidden on a fraction of tokens so the context features learn to carry unseen
slot values. A fixed transition mask forbids every path that would produce an
inside tag without its begin tag, so decoding can never emit an invalid
sequence, no matter what the input tokens are.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .generate import TaggedExample
from .tags import TAGS, TAG_INDEX
from .tokenizer import tokenize

MODEL_FORMAT_VERSION = 1

_N_TAGS = len(TAGS)
_START = "<s>"
_NEG = -1e12

# One synthetic copy of the training data has its slot-value tokens replaced
# by random same-shape gibberish, teaching the context features to carry
# out-of-vocabulary values. Connector words inside values stay put.
OOV_COPIES = 1
_VALUE_CONNECTORS = frozenset({"and", "at", "&", "the", "my", "a", "of", "in"})

# Weights are averaged over independently shuffled training runs.
ENSEMBLE_RUNS = 3


class ModelFormatError(ValueError):
    """A model file is missing, malformed, or from a different format version."""


def _shape(w: str) -> str:
    if w.isdigit():
        return "digits"
    if any(c.isdigit() for c in w):
        return "clock" if ":" in w else "mixed"
    return "alpha"


def _identity_features(w: str) -> list[str]:
    feats = [f"w={w}"]
    for k in (1, 2, 3):
        if len(w) > k:
            feats.append(f"p{k}={w[:k]}")
            feats.append(f"s{k}={w[-k:]}")
    return feats


def _context_features(tokens: list[str], i: int, vocab: "frozenset[str] | None") -> list[str]:
    n = len(tokens)
    w = tokens[i]
    feats = [f"shape={_shape(w)}"]
    feats.append(f"prev={tokens[i - 1]}" if i > 0 else "prev=<s>")
    feats.append(f"prev2={tokens[i - 2]}" if i > 1 else "prev2=<s>")
    feats.append(f"next={tokens[i + 1]}" if i + 1 < n else "next=</s>")
    feats.append(f"next2={tokens[i + 2]}" if i + 2 < n else "next2=</s>")
    if i == 0:
        feats.append("first")
    if i + 1 == n:
        feats.append("last")
    if vocab is not None:
        # Rarity flags carry unknown slot values: an out-of-vocabulary token
        # scores through these instead of through absent identity features.
        if w not in vocab:
            feats.append("rare")
        if i > 0 and tokens[i - 1] not in vocab:
            feats.append("prev_rare")
        if i + 1 < n and tokens[i + 1] not in vocab:
            feats.append("next_rare")
    return feats


def _token_features(tokens: list[str], i: int, vocab: "frozenset[str] | None") -> list[str]:
    return _identity_features(tokens[i]) + _context_features(tokens, i, vocab)


def _transition_mask() -> np.ndarray:
    """mask[prev, cur] = 0 if allowed, else a large negative penalty."""
    mask = np.zeros((_N_TAGS, _N_TAGS))
    for cur_name, cur in TAG_INDEX.items():
        if not cur_name.startswith("I-"):
            continue
        key = cur_name[2:]
        for prev_name, prev in TAG_INDEX.items():
            if prev_name not in (f"B-{key}", cur_name):
                mask[prev, cur] = _NEG
    return mask


def _start_mask() -> np.ndarray:
    start = np.zeros(_N_TAGS)
    for name, idx in TAG_INDEX.items():
        if name.startswith("I-"):
            start[idx] = _NEG
    return start


@dataclass
class TaggerModel:
    features: dict[str, int]
    weights: np.ndarray  # (n_features, n_tags) averaged weights
    vocab: frozenset[str]  # tokens seen at least twice in training
    epochs: int
    seed: int

    def __post_init__(self):
        self._mask = _transition_mask()
        self._start_mask = _start_mask()
        # Previous-tag rows, gathered once into a dense transition score matrix.
        self._pt = np.vstack([self.weights[self.features[f"pt={t}"]] for t in TAGS])
        self._pt_start = self.weights[self.features[f"pt={_START}"]]

    def feature_ids(self, tokens: list[str], i: int) -> list[int]:
        ids = []
        for f in _token_features(tokens, i, self.vocab):
            idx = self.features.get(f)
            if idx is not None:
                ids.append(idx)
        return ids


def _build_vocab(dataset: list[TaggedExample]) -> frozenset[str]:
    counts: dict[str, int] = {}
    for ex in dataset:
        for t in ex.tokens:
            counts[t] = counts.get(t, 0) + 1
    return frozenset(t for t, c in counts.items() if c >= 2)


def _prepare(dataset: list[TaggedExample], features: dict[str, int], vocab: frozenset[str]):
    """Encode examples as per-token (identity_ids, context_ids, gold) triples."""
    encoded = []
    for ex in dataset:
        tokens = list(ex.tokens)
        per_token = []
        for i in range(len(tokens)):
            ident = []
            for f in _identity_features(tokens[i]):
                if f not in features:
                    features[f] = len(features)
                ident.append(features[f])
            ctx = []
            for f in _context_features(tokens, i, vocab):
                if f not in features:
                    features[f] = len(features)
                ctx.append(features[f])
            per_token.append((ident, ctx, TAG_INDEX[ex.tags[i]]))
        encoded.append(per_token)
    return encoded


def _oov_token(rng: random.Random, w: str) -> str:
    if w in _VALUE_CONNECTORS:
        return w
    if w.isdigit():
        return str(rng.randint(1, 59))
    if ":" in w and any(c.isdigit() for c in w):
        return f"{rng.randint(1, 12)}:{rng.randint(0, 59):02d}"
    return "".join(rng.choice("abcdefghijklmnopqrstuvwxyz") for _ in range(rng.randint(3, 9)))


def _oov_augment(dataset: list[TaggedExample], copies: int, seed: int) -> list[TaggedExample]:
    rng = random.Random(seed)
    out = list(dataset)
    for _ in range(copies):
        for ex in dataset:
            tokens = tuple(
                _oov_token(rng, t) if g != "O" else t for t, g in zip(ex.tokens, ex.tags)
            )
            out.append(TaggedExample(tokens, ex.tags))
    return out


def _train_run(encoded, n_feats: int, pt_ids, pt_start: int, epochs: int, seed: int) -> np.ndarray:
    weights = np.zeros((n_feats, _N_TAGS))
    totals = np.zeros((n_feats, _N_TAGS))
    stamps = np.zeros((n_feats, _N_TAGS))
    rng = random.Random(seed)
    order = list(range(len(encoded)))
    step = 0
    for _ in range(epochs):
        rng.shuffle(order)
        for ex_idx in order:
            prev = pt_start
            for ident, ctx, gold in encoded[ex_idx]:
                step += 1
                row = ident + ctx + [prev]
                scores = weights[row].sum(axis=0)
                pred = int(np.argmax(scores))
                if pred != gold:
                    for tag_idx, delta in ((gold, 1.0), (pred, -1.0)):
                        cells = (row, tag_idx)
                        totals[cells] += (step - stamps[cells]) * weights[cells]
                        stamps[cells] = step
                        weights[cells] += delta
                prev = pt_ids[gold]
    totals += (step - stamps) * weights
    return totals / max(step, 1)


def train_tagger(dataset: list[TaggedExample], epochs: int = 5, seed: int = 0) -> TaggerModel:
    """Train on tagged examples; deterministic for equal (dataset, epochs, seed).

    Token-level perceptron updates with the gold previous tag as a feature.
    The final weights average several independently shuffled runs, each itself
    averaged over its own update steps.
    """
    if not dataset:
        raise ValueError("cannot train on an empty dataset")

    augmented = _oov_augment(dataset, OOV_COPIES, seed + 7919)
    features: dict[str, int] = {}
    for t in list(TAGS) + [_START]:
        features[f"pt={t}"] = len(features)
    vocab = _build_vocab(augmented)
    encoded = _prepare(augmented, features, vocab)

    pt_ids = {idx: features[f"pt={t}"] for t, idx in TAG_INDEX.items()}
    pt_start = features[f"pt={_START}"]

    runs = [
        _train_run(encoded, len(features), pt_ids, pt_start, epochs, seed + 31 * k)
        for k in range(ENSEMBLE_RUNS)
    ]
    averaged = sum(runs) / len(runs)
    return TaggerModel(features=features, weights=averaged, vocab=vocab, epochs=epochs, seed=seed)


def tag(model: TaggerModel, utterance: str | list[str]) -> list[str]:
    """Decode the best tag sequence under the transition mask.

    Always returns a valid sequence, for any tokens. Ties break toward O,
    then the lowest tag index.
    """
    tokens = tokenize(utterance) if isinstance(utterance, str) else list(utterance)
    if not tokens:
        return []

    emissions = np.zeros((len(tokens), _N_TAGS))
    for i in range(len(tokens)):
        ids = model.feature_ids(tokens, i)
        if ids:
            emissions[i] = model.weights[ids].sum(axis=0)

    trans = model._pt + model._mask
    viterbi = emissions[0] + model._pt_start + model._start_mask
    backptr = np.zeros((len(tokens), _N_TAGS), dtype=int)
    for t in range(1, len(tokens)):
        candidates = viterbi[:, None] + trans
        backptr[t] = candidates.argmax(axis=0)
        viterbi = candidates.max(axis=0) + emissions[t]

    best = int(np.argmax(viterbi))
    path = [best]
    for t in range(len(tokens) - 1, 0, -1):
        best = int(backptr[t][best])
        path.append(best)
    path.reverse()
    return [TAGS[i] for i in path]


def save_model(model: TaggerModel, path: str | Path) -> None:
    names = [None] * len(model.features)
    for name, idx in model.features.items():
        names[idx] = name
    payload = {
        "format_version": MODEL_FORMAT_VERSION,
        "tags": TAGS,
        "epochs": model.epochs,
        "seed": model.seed,
        "features": names,
        "vocab": sorted(model.vocab),
        "weights": [[round(float(w), 6) for w in row] for row in model.weights],
    }
    Path(path).write_text(json.dumps(payload), encoding="utf-8")


def load_model(path: str | Path) -> TaggerModel:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ModelFormatError(f"cannot read model file {path}: {exc}") from exc
    version = payload.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise ModelFormatError(f"model format version {version!r} is not supported (expected {MODEL_FORMAT_VERSION})")
    if payload.get("tags") != TAGS:
        raise ModelFormatError("model was trained with a different tag set")
    features = {name: i for i, name in enumerate(payload["features"])}
    weights = np.asarray(payload["weights"], dtype=float)
    return TaggerModel(
        features=features,
        weights=weights,
        vocab=frozenset(payload.get("vocab", ())),
        epochs=payload["epochs"],
        seed=payload["seed"],
    )
