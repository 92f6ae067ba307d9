"""Whitespace-and-punctuation tokenizer.

Rules: split on whitespace, peel leading/trailing punctuation into separate
tokens, split standard English contractions ("don't" -> "do" + "n't").
Hyphenated compounds ("p53-mediated") stay whole. No characters are dropped:
joining the surfaces recovers every non-whitespace character of the input.
"""

from __future__ import annotations

_OPENERS = "([{\"'“‘"
_CLOSERS = ")]}\"'”’.,;:!?"
# n't attaches to the preceding stem; the rest are apostrophe-led clitics.
_CLITICS = ("'s", "'re", "'ve", "'ll", "'d", "'m", "’s", "’re",
            "’ve", "’ll", "’d", "’m")


def _split_contraction(chunk: str) -> list[str]:
    lower = chunk.lower()
    if lower.endswith("n't") and len(chunk) > 3:
        return [chunk[:-3], chunk[-3:]]
    if lower.endswith("n’t") and len(chunk) > 3:
        return [chunk[:-3], chunk[-3:]]
    for clitic in _CLITICS:
        if lower.endswith(clitic) and len(chunk) > len(clitic):
            cut = len(chunk) - len(clitic)
            return [chunk[:cut], chunk[cut:]]
    return [chunk]


def tokenize(text: str) -> list[str]:
    """Split sentence text into token surfaces."""
    tokens: list[str] = []
    for chunk in text.split():
        head: list[str] = []
        tail: list[str] = []
        while len(chunk) > 1 and chunk[0] in _OPENERS:
            head.append(chunk[0])
            chunk = chunk[1:]
        while len(chunk) > 1 and chunk[-1] in _CLOSERS:
            # Keep trailing periods that belong to an abbreviation-like token
            # ("etc.", "U.S.") only when the rest is a single letter cluster
            # with interior dots; otherwise peel.
            if chunk[-1] == "." and "." in chunk[:-1]:
                break
            tail.append(chunk[-1])
            chunk = chunk[:-1]
        if chunk:
            tokens.extend(head)
            tokens.extend(_split_contraction(chunk))
            tokens.extend(reversed(tail))
        else:
            tokens.extend(head)
            tokens.extend(reversed(tail))
    return tokens


def is_word_surface(surface: str) -> bool:
    """Word tokens contain at least one letter; punctuation and bare numbers do not count."""
    return any(ch.isalpha() for ch in surface)
