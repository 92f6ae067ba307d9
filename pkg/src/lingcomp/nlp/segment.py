"""Rule-based sentence segmentation.

A sentence ends at '.', '!' or '?' when followed by whitespace and a capital
letter, or by end of text. Abbreviations from the protection table never end
a sentence, so unexpanded "Fig." or "et al." cannot split one.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

_TERMINATORS = ".!?"


def _protected_strings(abbrev_table) -> tuple[str, ...]:
    if abbrev_table is None:
        return ()
    keys: Iterable[str]
    keys = abbrev_table.keys() if isinstance(abbrev_table, Mapping) else abbrev_table
    return tuple(k for k in keys if k and k[-1] in _TERMINATORS)


def _ends_with_protected(text: str, end: int, protected: tuple[str, ...]) -> bool:
    """True when the text ending at ``end`` (exclusive) closes a protected abbreviation."""
    for abbr in protected:
        start = end - len(abbr)
        if start < 0 or text[start:end] != abbr:
            continue
        if start == 0 or not (text[start - 1].isalnum() or text[start - 1] == "_"):
            return True
    return False


def segment_sentences(text: str, abbrev_table=None) -> list[tuple[int, int]]:
    """Return sentence spans as (start, end) character offsets.

    Spans exclude surrounding whitespace; every non-whitespace character
    falls in exactly one span. Empty text yields no spans.
    """
    protected = _protected_strings(abbrev_table)
    spans: list[tuple[int, int]] = []
    n = len(text)
    start = 0
    i = 0
    while i < n:
        ch = text[i]
        if ch in _TERMINATORS and not _ends_with_protected(text, i + 1, protected):
            j = i + 1
            while j < n and text[j].isspace():
                j += 1
            if j >= n or (j > i + 1 and text[j].isupper()):
                spans.append((start, i + 1))
                start = j
                i = j
                continue
        i += 1
    # Trailing material without a terminator forms the final sentence.
    tail_end = n
    while tail_end > start and text[tail_end - 1].isspace():
        tail_end -= 1
    if tail_end > start:
        spans.append((start, tail_end))
    # Trim any leading whitespace that slipped into a span start.
    trimmed = []
    for lo, hi in spans:
        while lo < hi and text[lo].isspace():
            lo += 1
        if lo < hi:
            trimmed.append((lo, hi))
    return trimmed


def segment_texts(text: str, abbrev_table=None) -> list[str]:
    """Sentence strings, in order."""
    return [text[lo:hi] for lo, hi in segment_sentences(text, abbrev_table)]
