"""Clause counting from POS tags.

A clause here is a finite one: a maximal verb chain containing at least one
finite form. A verb chain is a run of VB*/MD tokens; adverbs (RB, RBR, RBS)
and infinitival "to" (TO) may sit inside the chain without breaking it, as
in "has not been measured" or "seems to work". Sentences with words but no
finite chain count as one fragment.

The counter is pluggable so a parser-backed implementation can replace the
tag heuristic without touching the metrics layer.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .units import Sentence, TaggedToken

ClauseCounter = Callable[[Sentence], int]

_VERB_TAGS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD"})
_FINITE_TAGS = frozenset({"VBD", "VBZ", "VBP", "MD"})
_CHAIN_GLUE = frozenset({"RB", "RBR", "RBS", "TO"})


def _finite_chain_count(tokens: Sequence[TaggedToken]) -> int:
    chains = 0
    i = 0
    n = len(tokens)
    while i < n:
        if tokens[i].fine_tag not in _VERB_TAGS:
            i += 1
            continue
        finite = tokens[i].fine_tag in _FINITE_TAGS
        j = i + 1
        while j < n:
            if tokens[j].fine_tag in _VERB_TAGS:
                finite = finite or tokens[j].fine_tag in _FINITE_TAGS
                j += 1
                continue
            # Glue tokens join two verb groups only when another verb follows.
            k = j
            while k < n and tokens[k].fine_tag in _CHAIN_GLUE:
                k += 1
            if k > j and k < n and tokens[k].fine_tag in _VERB_TAGS:
                j = k
                continue
            break
        if finite:
            chains += 1
        i = j
    return chains


def count_clauses(sentence: Sentence) -> int:
    """Finite clauses in a tagged sentence; 1 for verbless fragments with words."""
    chains = _finite_chain_count(sentence.tokens)
    if chains == 0 and any(t.is_word for t in sentence.tokens):
        return 1
    return chains
