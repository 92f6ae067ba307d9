"""Abbreviation expansion applied to body text before sentence segmentation.

Trailing-period abbreviations ("et al.", "Fig.") otherwise look like sentence
ends. Expanding them to full forms removes the ambiguity; the same table also
feeds the segmenter's protection list for any abbreviation left in place.
"""

from __future__ import annotations

import re

# Ships with the expansions that matter for scientific prose; callers can
# extend or replace the table.
DEFAULT_ABBREVIATIONS: dict[str, str] = {
    "et al.": "and others",
    "e.g.": "for example",
    "i.e.": "that is",
    "vs.": "versus",
    "Fig.": "Figure",
    "cf.": "compare",
}


def _compile_table(table: dict[str, str]) -> re.Pattern | None:
    if not table:
        return None
    # Longest key first so "et al." wins over a hypothetical "al." entry.
    parts = []
    for key in sorted(table, key=len, reverse=True):
        if not key:
            raise ValueError("abbreviation table keys must be non-empty")
        pat = re.escape(key)
        if key[0].isalnum() or key[0] == "_":
            pat = r"(?<!\w)" + pat
        if key[-1].isalnum() or key[-1] == "_":
            pat = pat + r"(?!\w)"
        parts.append(pat)
    return re.compile("|".join(parts))


def normalize_abbreviations(text: str, table: dict[str, str] | None = None) -> str:
    """Replace every table key with its expansion, case-sensitively at word boundaries.

    A single left-to-right pass: expansions are never re-scanned, so the
    operation is idempotent whenever expansions contain no table keys.
    """
    if table is None:
        table = DEFAULT_ABBREVIATIONS
    pattern = _compile_table(table)
    if pattern is None or not text:
        return text
    return pattern.sub(lambda m: table[m.group(0)], text)
