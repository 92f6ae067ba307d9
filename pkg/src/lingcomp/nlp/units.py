"""Token and sentence units shared by tagging, clause counting, and metrics."""

from __future__ import annotations

from dataclasses import dataclass

from .tags import LexicalClass, coarse_class
from .tokenizer import is_word_surface


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    char_length: int
    fine_tag: str
    lex_class: LexicalClass
    is_word: bool

    @classmethod
    def make(cls, surface: str, fine_tag: str) -> "TaggedToken":
        return cls(
            surface=surface,
            char_length=len(surface),
            fine_tag=fine_tag,
            lex_class=coarse_class(fine_tag),
            is_word=is_word_surface(surface),
        )


@dataclass(frozen=True)
class Sentence:
    index: int
    tokens: tuple[TaggedToken, ...]

    def word_count(self) -> int:
        return sum(1 for t in self.tokens if t.is_word)
