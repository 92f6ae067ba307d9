"""Synthetic article generator for pipeline tests.

Articles are template text drawn from the tagger's seed vocabulary, built
so that sentence length is the only group-dependent signal: token-class
mix, word-length mix, clause structure, and total words per document are
all distribution-identical across groups. Surfaces were screened against
the bundled tagger to avoid words it mis-tags as finite verbs, keeping
clause counts independent of sentence length.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

NOUNS = [
    "cell", "enzyme", "receptor", "membrane", "protein", "gene", "culture",
    "signal", "mutation", "assay", "buffer", "strain", "reaction",
    "temperature", "concentration", "distribution", "instrument", "sample",
    "growth", "method", "model", "value", "effect", "response", "treatment",
    "study", "density", "sequence", "region",
]
# Finite verbs and gerunds with identical length multisets [5,6,7,7,9,10],
# so the finite/gerund balance cannot move the verb-length feature.
VERBS_Z = ["binds", "varies", "divides", "encodes", "regulates", "circulates"]
GERUNDS = ["using", "moving", "falling", "leaving", "comparing", "increasing"]
ADJS = [
    "stable", "simple", "weak", "strong", "small", "large", "clear",
    "standard", "similar", "significant", "high", "final", "separate",
    "independent",
]
ADVS = ["slightly", "steadily", "closely", "widely", "directly"]

# Sentences are chains of identical 8-word units (the ADJ NOUN VERB ADV
# the ADJ NOUN). Only the first unit (plus, with a fixed group-independent
# probability, the second) carries a finite verb; later units use gerunds.
# Every word sits in the same unit context whatever the sentence length,
# so tagged class shares cannot vary with the injected length signal.
UNIT_WORDS = 8
SECOND_FINITE_PROB = 0.3  # same in every group: clause noise, not signal

GROUP_NAMES = {
    "A": ("Ann Smith", "John Watson"),
    "AB": ("Ann Smith", "Li Wei"),
    "B": ("Li Wei", "Chen Ming"),
}

ETHNICITY_TABLE = {
    "Ann Smith": {"English": 0.9, "German": 0.05},
    "John Watson": {"English": 0.85, "Nordic": 0.1},
    "Li Wei": {"Chinese": 0.9, "Korean": 0.05},
    "Chen Ming": {"Chinese": 0.88, "Japanese": 0.06},
}


class _Cycle:
    """Shuffled without-replacement draws, reshuffling when exhausted.

    Any run of >= len(words) draws covers the whole vocabulary, which pins
    the type count contributed by a slot regardless of how draws split
    between sentences.
    """

    def __init__(self, rng: random.Random, words: list[str]):
        self._rng = rng
        self._words = list(words)
        self._queue: list[str] = []

    def draw(self) -> str:
        if not self._queue:
            self._queue = self._rng.sample(self._words, len(self._words))
        return self._queue.pop()


def _unit(rng, fin_cycle, ger_cycle, capital: bool, finite: bool) -> list[str]:
    return [
        "The" if capital else "the",
        rng.choice(ADJS), rng.choice(NOUNS),
        fin_cycle.draw() if finite else ger_cycle.draw(),
        rng.choice(ADVS), "the", rng.choice(ADJS), rng.choice(NOUNS),
    ]


def make_body(rng: random.Random, total_words: int, mean_sentence_len: float) -> str:
    fin_cycle = _Cycle(rng, VERBS_Z)
    ger_cycle = _Cycle(rng, GERUNDS)
    sentences = []
    units_left = max(1, round(total_words / UNIT_WORDS))
    mean_units = mean_sentence_len / UNIT_WORDS
    while units_left > 0:
        k = min(units_left, max(1, round(rng.gauss(mean_units, mean_units * 0.25))))
        words = _unit(rng, fin_cycle, ger_cycle, capital=True, finite=True)
        second_finite = rng.random() < SECOND_FINITE_PROB
        for i in range(1, k):
            words.extend(
                _unit(rng, fin_cycle, ger_cycle, capital=False,
                      finite=(i == 1 and second_finite))
            )
        sentences.append(" ".join(words) + ".")
        units_left -= k
    return " ".join(sentences)


def make_record(article_id: str, group: str, body: str) -> dict:
    fa_name, ca_name = GROUP_NAMES[group]
    authors = [
        {"full_name": fa_name, "position_index": 0, "is_first": True,
         "is_corresponding": fa_name == ca_name},
        {"full_name": ca_name, "position_index": 1, "is_first": False,
         "is_corresponding": True},
    ]
    return {
        "article_id": article_id,
        "journal": "Synthetic Journal",
        "pub_year": 2010,
        "article_type": "research",
        "title": f"Synthetic article {article_id}",
        "body_text": body,
        "authors": authors,
        "subjects": ["Synthetic"],
        "word_count": 0,
    }


def make_corpus(
    n_per_group: int,
    seed: int,
    total_words: int = 250,
    base_sentence_len: float = 25.0,
    length_factor: dict[str, float] | None = None,
) -> list[dict]:
    """Records for groups A/AB/B; group A sentences scale by length_factor."""
    factors = length_factor or {"A": 1.2, "AB": 1.1, "B": 1.0}
    rng = random.Random(seed)
    records = []
    for group in ("A", "AB", "B"):
        for i in range(n_per_group):
            body = make_body(rng, total_words, base_sentence_len * factors[group])
            records.append(make_record(f"{group}-{i:05d}", group, body))
    return records


def write_corpus_jsonl(records: list[dict], path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True, ensure_ascii=False))
            fh.write("\n")


def write_ethnicity_table(path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for name in sorted(ETHNICITY_TABLE):
            for ethnicity in sorted(ETHNICITY_TABLE[name]):
                fh.write(f"{name}\t{ethnicity}\t{ETHNICITY_TABLE[name][ethnicity]}\n")
