"""Per-document linguistic-complexity features.

Eleven features per document: mean sentence length, clause ratio,
type-token ratio, and per-class mean word lengths and token shares for
nouns, verbs, adjectives, and adverbs. All denominators count word tokens
only (tokens containing a letter), so punctuation and bare numbers never
dilute a ratio. A lexical class that never occurs yields an absent mean
length (None), not zero.

``compute_features`` fills the whole vector in a single pass over the
token stream; the individual functions recompute each feature naively and
exist both as the public per-feature API and as an independent cross-check
of the one-pass path.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import EmptyDocument
from ..nlp.clauses import ClauseCounter, count_clauses
from ..nlp.tags import LexicalClass
from ..nlp.units import Sentence

# Table-order feature names; "len" features may be absent for a document.
FEATURE_NAMES = (
    "msl",
    "clause_ratio",
    "ttr",
    "noun_len",
    "verb_len",
    "adj_len",
    "adv_len",
    "noun_ratio",
    "verb_ratio",
    "adj_ratio",
    "adv_ratio",
)

_LEX_CLASSES = (LexicalClass.NOUN, LexicalClass.VERB, LexicalClass.ADJ, LexicalClass.ADV)


@dataclass
class FeatureVector:
    msl: float
    clause_ratio: float
    ttr: float
    noun_ratio: float
    verb_ratio: float
    adj_ratio: float
    adv_ratio: float
    noun_len: float | None
    verb_len: float | None
    adj_len: float | None
    adv_len: float | None
    word_token_count: int
    sentence_count: int

    def get(self, name: str) -> float | None:
        return getattr(self, name)

    def as_feature_dict(self) -> dict[str, float | None]:
        return {name: getattr(self, name) for name in FEATURE_NAMES}

    def to_dict(self) -> dict:
        d = self.as_feature_dict()
        d["word_token_count"] = self.word_token_count
        d["sentence_count"] = self.sentence_count
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "FeatureVector":
        kwargs = {name: d[name] for name in FEATURE_NAMES}
        return cls(
            word_token_count=int(d["word_token_count"]),
            sentence_count=int(d["sentence_count"]),
            **kwargs,
        )


def _require_words(sentences: list[Sentence]) -> None:
    if not sentences:
        raise EmptyDocument("document has no sentences")
    if not any(t.is_word for s in sentences for t in s.tokens):
        raise EmptyDocument("document has no word tokens")


def mean_sentence_length(sentences: list[Sentence]) -> float:
    """Average word tokens per sentence."""
    _require_words(sentences)
    return sum(s.word_count() for s in sentences) / len(sentences)


def clause_ratio(sentences: list[Sentence], counter: ClauseCounter = count_clauses) -> float:
    """Clauses per sentence, using the given clause counter."""
    if not sentences:
        raise EmptyDocument("document has no sentences")
    return sum(counter(s) for s in sentences) / len(sentences)


def type_token_ratio(sentences: list[Sentence]) -> float:
    """Distinct case-folded word surfaces over total word tokens."""
    _require_words(sentences)
    types = set()
    tokens = 0
    for s in sentences:
        for t in s.tokens:
            if t.is_word:
                tokens += 1
                types.add(t.surface.lower())
    return len(types) / tokens


def lexical_density(sentences: list[Sentence]) -> dict[LexicalClass, float]:
    """Share of word tokens in each lexical class (NOUN, VERB, ADJ, ADV)."""
    _require_words(sentences)
    counts = {c: 0 for c in _LEX_CLASSES}
    total = 0
    for s in sentences:
        for t in s.tokens:
            if t.is_word:
                total += 1
                if t.lex_class in counts:
                    counts[t.lex_class] += 1
    return {c: counts[c] / total for c in _LEX_CLASSES}


def lexical_sophistication(sentences: list[Sentence]) -> dict[LexicalClass, float | None]:
    """Mean character length per lexical class; None when the class is absent."""
    _require_words(sentences)
    counts = {c: 0 for c in _LEX_CLASSES}
    lengths = {c: 0 for c in _LEX_CLASSES}
    for s in sentences:
        for t in s.tokens:
            if t.is_word and t.lex_class in counts:
                counts[t.lex_class] += 1
                lengths[t.lex_class] += t.char_length
    return {
        c: (lengths[c] / counts[c]) if counts[c] else None for c in _LEX_CLASSES
    }


def compute_features(
    sentences: list[Sentence], counter: ClauseCounter = count_clauses
) -> FeatureVector:
    """All eleven features from one pass over the tagged token stream."""
    _require_words(sentences)
    n_sentences = len(sentences)
    n_words = 0
    n_clauses = 0
    types: set[str] = set()
    class_counts = {c: 0 for c in _LEX_CLASSES}
    class_lengths = {c: 0 for c in _LEX_CLASSES}

    for s in sentences:
        n_clauses += counter(s)
        for t in s.tokens:
            if not t.is_word:
                continue
            n_words += 1
            types.add(t.surface.lower())
            if t.lex_class in class_counts:
                class_counts[t.lex_class] += 1
                class_lengths[t.lex_class] += t.char_length

    def mean_len(c: LexicalClass) -> float | None:
        return class_lengths[c] / class_counts[c] if class_counts[c] else None

    return FeatureVector(
        msl=n_words / n_sentences,
        clause_ratio=n_clauses / n_sentences,
        ttr=len(types) / n_words,
        noun_ratio=class_counts[LexicalClass.NOUN] / n_words,
        verb_ratio=class_counts[LexicalClass.VERB] / n_words,
        adj_ratio=class_counts[LexicalClass.ADJ] / n_words,
        adv_ratio=class_counts[LexicalClass.ADV] / n_words,
        noun_len=mean_len(LexicalClass.NOUN),
        verb_len=mean_len(LexicalClass.VERB),
        adj_len=mean_len(LexicalClass.ADJ),
        adv_len=mean_len(LexicalClass.ADV),
        word_token_count=n_words,
        sentence_count=n_sentences,
    )
