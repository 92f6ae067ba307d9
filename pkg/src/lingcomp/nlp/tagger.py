"""Averaged-perceptron POS tagger.

A self-contained multiclass linear tagger over fixed feature templates:
the word itself, its lowercase form, lowercase suffixes of length 1-3, the
neighbouring words, the previous predicted tag, and capitalization/digit
flags. Training shuffles sentences each epoch with a seeded RNG and
averages weights over all updates, so a (corpus, epochs, seed) triple
always yields bit-identical weights.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field

from ..errors import CorruptRecord, EmptyCorpus, IoFailure
from .tags import PENN_TAGS
from .units import TaggedToken

MODEL_FORMAT_VERSION = 1

_BOS_WORD = "<s>"
_EOS_WORD = "</s>"
_BOS_TAG = "<s>"

TaggedSentence = list[tuple[str, str]]


def _features(words: list[str], lowers: list[str], i: int, prev_tag: str) -> list[str]:
    w = words[i]
    wl = lowers[i]
    prev_w = lowers[i - 1] if i > 0 else _BOS_WORD
    next_w = lowers[i + 1] if i + 1 < len(words) else _EOS_WORD
    feats = [
        "b",
        "w=" + w,
        "wl=" + wl,
        "s1=" + wl[-1:],
        "s2=" + wl[-2:],
        "s3=" + wl[-3:],
        "pw=" + prev_w,
        "nw=" + next_w,
        "pt=" + prev_tag,
    ]
    if w[:1].isupper():
        feats.append("cap")
    if any(c.isdigit() for c in w):
        feats.append("dig")
    return feats


def _predict(weights: dict[str, dict[str, float]], tags: list[str], feats: list[str]) -> str:
    scores: dict[str, float] = {}
    get = weights.get
    for feat in feats:
        row = get(feat)
        if row:
            for tag, w in row.items():
                scores[tag] = scores.get(tag, 0.0) + w
    if not scores:
        return tags[0]
    # Ties break toward the lexically larger tag name, deterministically.
    best_tag = tags[0]
    best = float("-inf")
    for tag in tags:
        s = scores.get(tag, 0.0)
        if s > best or (s == best and tag > best_tag):
            best = s
            best_tag = tag
    return best_tag


@dataclass
class PosModel:
    """Trained tagger weights plus the metadata that reproduces them."""

    weights: dict[str, dict[str, float]]
    tags: list[str]
    metadata: dict = field(default_factory=dict)

    def tag(self, tokens: list[str]) -> list[str]:
        if not tokens:
            return []
        lowers = [t.lower() for t in tokens]
        out: list[str] = []
        prev_tag = _BOS_TAG
        for i in range(len(tokens)):
            feats = _features(tokens, lowers, i, prev_tag)
            prev_tag = _predict(self.weights, self.tags, feats)
            out.append(prev_tag)
        return out

    def save(self, path: str | os.PathLike) -> None:
        payload = {
            "format_version": MODEL_FORMAT_VERSION,
            "tags": self.tags,
            "metadata": self.metadata,
            "weights": self.weights,
        }
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                json.dump(payload, fh, sort_keys=True, separators=(",", ":"))
        except OSError as exc:
            raise IoFailure(f"cannot write model {path}: {exc}") from exc

    @classmethod
    def load(cls, path: str | os.PathLike) -> "PosModel":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                payload = json.load(fh)
        except OSError as exc:
            raise IoFailure(f"cannot read model {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise IoFailure(f"model file {path} is not valid JSON: {exc}") from exc
        version = payload.get("format_version")
        if version != MODEL_FORMAT_VERSION:
            raise IoFailure(
                f"model file {path}: unsupported format_version {version!r}"
            )
        return cls(
            weights=payload["weights"],
            tags=list(payload["tags"]),
            metadata=dict(payload.get("metadata", {})),
        )


def train_tagger(corpus: list[TaggedSentence], epochs: int = 5, seed: int = 1) -> PosModel:
    """Train on (surface, fine_tag) sentences; deterministic for a given seed."""
    if not corpus or all(not s for s in corpus):
        raise EmptyCorpus("training corpus has no sentences")
    for sent in corpus:
        for _, tag in sent:
            if tag not in PENN_TAGS:
                raise ValueError(f"tag {tag!r} is not in the Penn tag set")

    tags = sorted({tag for sent in corpus for _, tag in sent})
    weights: dict[str, dict[str, float]] = {}
    totals: dict[tuple[str, str], float] = {}
    stamps: dict[tuple[str, str], int] = {}
    instances = 0

    def bump(feat: str, tag: str, delta: float) -> None:
        row = weights.setdefault(feat, {})
        key = (feat, tag)
        cur = row.get(tag, 0.0)
        totals[key] = totals.get(key, 0.0) + (instances - stamps.get(key, 0)) * cur
        stamps[key] = instances
        row[tag] = cur + delta

    rng = random.Random(seed)
    order = list(range(len(corpus)))
    for _ in range(epochs):
        rng.shuffle(order)
        for idx in order:
            sent = corpus[idx]
            if not sent:
                continue
            words = [w for w, _ in sent]
            lowers = [w.lower() for w in words]
            prev_tag = _BOS_TAG
            for i, (_, gold) in enumerate(sent):
                feats = _features(words, lowers, i, prev_tag)
                instances += 1
                guess = _predict(weights, tags, feats)
                if guess != gold:
                    for feat in feats:
                        bump(feat, gold, 1.0)
                        bump(feat, guess, -1.0)
                prev_tag = guess

    averaged: dict[str, dict[str, float]] = {}
    for feat in weights:
        row = {}
        for tag, w in weights[feat].items():
            key = (feat, tag)
            total = totals.get(key, 0.0) + (instances - stamps.get(key, 0)) * w
            value = round(total / instances, 6)
            if value:
                row[tag] = value
        if row:
            averaged[feat] = row

    n_tokens = sum(len(s) for s in corpus)
    return PosModel(
        weights=averaged,
        tags=tags,
        metadata={
            "epochs": epochs,
            "seed": seed,
            "training_sentences": len(corpus),
            "training_tokens": n_tokens,
        },
    )


def tag_pos(tokens: list[str], model: PosModel) -> list[TaggedToken]:
    """Tag token surfaces and wrap them with lexical class and word flags."""
    fine = model.tag(tokens)
    return [TaggedToken.make(surface, tag) for surface, tag in zip(tokens, fine)]


def evaluate(model: PosModel, corpus: list[TaggedSentence]) -> float:
    """Token accuracy of the model on a tagged corpus."""
    correct = 0
    total = 0
    for sent in corpus:
        if not sent:
            continue
        predicted = model.tag([w for w, _ in sent])
        for (_, gold), guess in zip(sent, predicted):
            correct += guess == gold
            total += 1
    if total == 0:
        raise EmptyCorpus("evaluation corpus has no tokens")
    return correct / total


def split_corpus(
    corpus: list[TaggedSentence], test_fraction: float = 0.1, seed: int = 1
) -> tuple[list[TaggedSentence], list[TaggedSentence]]:
    """Seeded shuffle-and-split into (train, test) sentence lists."""
    order = list(range(len(corpus)))
    random.Random(seed).shuffle(order)
    n_test = max(1, int(round(len(corpus) * test_fraction)))
    test_idx = set(order[:n_test])
    train = [corpus[i] for i in range(len(corpus)) if i not in test_idx]
    test = [corpus[i] for i in range(len(corpus)) if i in test_idx]
    return train, test


def read_tagged_corpus(path: str | os.PathLike) -> list[TaggedSentence]:
    """Read the two-column format: token TAB tag, blank line between sentences."""
    sentences: list[TaggedSentence] = []
    current: TaggedSentence = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line.strip():
                    if current:
                        sentences.append(current)
                        current = []
                    continue
                parts = line.split("\t")
                if len(parts) != 2 or not parts[0]:
                    raise CorruptRecord(f"expected 'token<TAB>tag', got {line!r}", lineno)
                if parts[1] not in PENN_TAGS:
                    raise CorruptRecord(f"unknown tag {parts[1]!r}", lineno)
                current.append((parts[0], parts[1]))
    except OSError as exc:
        raise IoFailure(f"cannot read tagged corpus {path}: {exc}") from exc
    if current:
        sentences.append(current)
    return sentences


def write_tagged_corpus(sentences: list[TaggedSentence], path: str | os.PathLike) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for i, sent in enumerate(sentences):
                if i:
                    fh.write("\n")
                for word, tag in sent:
                    fh.write(f"{word}\t{tag}\n")
    except OSError as exc:
        raise IoFailure(f"cannot write tagged corpus {path}: {exc}") from exc


def bundled_corpus_path() -> str:
    """Path of the tagged seed corpus shipped with the package."""
    return os.path.join(os.path.dirname(__file__), "data", "tagged_seed_corpus.tsv")
