"""Document-level NLP pipeline: text to tagged sentences.

Pure given an immutable PosModel, so documents can be processed in
parallel with identical results at any worker count.
"""

from __future__ import annotations

from .segment import segment_texts
from .tagger import PosModel, tag_pos
from .tokenizer import tokenize
from .units import Sentence


def tag_document(text: str, model: PosModel, abbrev_table=None) -> list[Sentence]:
    """Segment, tokenize, and tag a normalized document body."""
    sentences = []
    for sent_text in segment_texts(text, abbrev_table):
        tokens = tokenize(sent_text)
        if not tokens:
            continue
        sentences.append(Sentence(index=len(sentences), tokens=tuple(tag_pos(tokens, model))))
    return sentences
