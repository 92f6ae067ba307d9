"""Invariance properties of the feature computation.

Doubling a document must leave every feature except TTR exactly unchanged
(TTR can only fall); permuting sentences changes nothing; ratios stay in
bounds. All accumulations are integer-based, so the checks are exact.
"""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from lingcomp.metrics import FEATURE_NAMES, compute_features
from lingcomp.nlp.units import Sentence, TaggedToken

_TAGS = ["NN", "NNS", "VB", "VBZ", "VBD", "VBN", "VBG", "JJ", "JJR", "RB",
         "IN", "DT", "MD", "TO", "CD", ".", ","]
_SURFACES = ["cell", "grows", "the", "rapidly", "small", "membrane", "binds",
             "under", "stable", "Measure", "x", "of", "receptor", "slowly"]

_token_st = st.builds(
    TaggedToken.make,
    st.sampled_from(_SURFACES),
    st.sampled_from(_TAGS),
)

# Every sentence carries at least one guaranteed word token.
_sentence_tokens_st = st.tuples(
    st.lists(_token_st, max_size=10),
    st.sampled_from(_SURFACES),
).map(lambda pair: tuple(pair[0]) + (TaggedToken.make(pair[1], "NN"),))

_doc_st = st.lists(_sentence_tokens_st, min_size=1, max_size=6).map(
    lambda rows: [Sentence(i, toks) for i, toks in enumerate(rows)]
)


def _renumber(rows):
    return [Sentence(i, s.tokens) for i, s in enumerate(rows)]


@settings(max_examples=300, deadline=None)
@given(_doc_st)
def test_doubling_leaves_all_but_ttr_unchanged(doc):
    fv = compute_features(doc)
    doubled = compute_features(_renumber(doc + doc))
    for name in FEATURE_NAMES:
        if name == "ttr":
            assert doubled.ttr <= fv.ttr
        else:
            assert doubled.get(name) == fv.get(name), name
    assert doubled.word_token_count == 2 * fv.word_token_count
    assert doubled.sentence_count == 2 * fv.sentence_count


@settings(max_examples=300, deadline=None)
@given(_doc_st, st.randoms(use_true_random=False))
def test_sentence_permutation_changes_nothing(doc, rng):
    fv = compute_features(doc)
    shuffled = list(doc)
    rng.shuffle(shuffled)
    fv2 = compute_features(_renumber(shuffled))
    for name in FEATURE_NAMES:
        assert fv2.get(name) == fv.get(name), name


@settings(max_examples=300, deadline=None)
@given(_doc_st)
def test_feature_bounds(doc):
    fv = compute_features(doc)
    ratios = [fv.noun_ratio, fv.verb_ratio, fv.adj_ratio, fv.adv_ratio]
    assert all(0.0 <= r <= 1.0 for r in ratios)
    assert sum(ratios) <= 1.0 + 1e-15
    assert 0.0 < fv.ttr <= 1.0
    assert fv.msl >= 1.0  # every generated sentence has a word token
    for name in ("noun_len", "verb_len", "adj_len", "adv_len"):
        v = fv.get(name)
        assert v is None or v >= 1.0
