"""Self-contained NLP layer: segmentation, tokenization, tagging, clause counting."""

from .clauses import ClauseCounter, count_clauses
from .pipeline import tag_document
from .segment import segment_sentences, segment_texts
from .tagger import (
    PosModel,
    bundled_corpus_path,
    evaluate,
    read_tagged_corpus,
    split_corpus,
    tag_pos,
    train_tagger,
    write_tagged_corpus,
)
from .tags import PENN_TAGS, LexicalClass, coarse_class
from .tokenizer import is_word_surface, tokenize
from .units import Sentence, TaggedToken

__all__ = [
    "ClauseCounter",
    "LexicalClass",
    "PENN_TAGS",
    "PosModel",
    "Sentence",
    "TaggedToken",
    "bundled_corpus_path",
    "coarse_class",
    "count_clauses",
    "evaluate",
    "is_word_surface",
    "read_tagged_corpus",
    "segment_sentences",
    "segment_texts",
    "split_corpus",
    "tag_document",
    "tag_pos",
    "tokenize",
    "train_tagger",
    "write_tagged_corpus",
]
