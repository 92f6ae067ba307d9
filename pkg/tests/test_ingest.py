from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lingcomp.errors import CorruptRecord, MalformedInput, MissingBody
from lingcomp.ingest import (
    ArticleRecord,
    ArticleType,
    AuthorRef,
    RawArticle,
    RemovalReason,
    SourceFormat,
    filter_corpus,
    normalize_abbreviations,
    parse_article,
    read_corpus,
    read_removals,
    write_corpus,
    write_removals,
)


def _record(article_id, article_type=ArticleType.RESEARCH, corresponding=True):
    authors = [
        AuthorRef("Ann Smith", 0, True, False),
        AuthorRef("Min Lee", 1, False, corresponding),
    ]
    return ArticleRecord(
        article_id=article_id,
        journal="J",
        pub_year=2010,
        article_type=article_type,
        title="t",
        body_text="The cells divide.",
        authors=authors,
    )


# --- parse_article ---------------------------------------------------------

def test_parse_jats_concatenates_paragraphs_in_order(data_dir):
    raw = RawArticle("a1", (data_dir / "article_research.xml").read_bytes(), SourceFormat.JATS_XML)
    rec = parse_article(raw)
    assert rec.body_text == (
        "The cells divide rapidly in fresh medium. "
        "We show that the treated cultures, which were starved, recover. "
        "Growth was slower under cold conditions."
    )
    assert rec.journal == "Journal of Cell Growth"
    assert rec.title == "Growth of treated cultures"
    assert rec.pub_year == 2012
    assert rec.article_type is ArticleType.RESEARCH
    assert rec.subjects == ["Biology", "Microbiology"]


def test_parse_jats_author_markers(data_dir):
    raw = RawArticle("a1", (data_dir / "article_research.xml").read_bytes(), SourceFormat.JATS_XML)
    rec = parse_article(raw)
    assert [a.full_name for a in rec.authors] == ["Ann Smith", "Min Lee"]
    assert rec.authors[0].is_first and not rec.authors[1].is_first
    assert not rec.authors[0].is_corresponding and rec.authors[1].is_corresponding
    assert rec.first_author.full_name == "Ann Smith"
    assert rec.corresponding_author.full_name == "Min Lee"


def test_parse_jats_strips_nested_inline_tags(data_dir):
    # Expected text obtained by stripping the fixture's tags by hand.
    raw = RawArticle("a2", (data_dir / "article_nested_markup.xml").read_bytes(), SourceFormat.JATS_XML)
    rec = parse_article(raw)
    assert rec.body_text == "x y z The second paragraph cites one reference inline."
    assert "<" not in rec.body_text and ">" not in rec.body_text


def test_parse_two_paragraph_document():
    xml = b"""<article article-type="research-article"><body>
        <p>A b.</p><p>C d.</p></body></article>"""
    rec = parse_article(RawArticle("x", xml, SourceFormat.JATS_XML))
    assert rec.body_text == "A b. C d."


def test_parse_non_research_type():
    xml = b'<article article-type="correction"><body><p>Fixed.</p></body></article>'
    rec = parse_article(RawArticle("x", xml, SourceFormat.JATS_XML))
    assert rec.article_type is ArticleType.NON_RESEARCH


def test_parse_plain_text_defaults():
    rec = parse_article(RawArticle("p1", b"Cells divide. Cells grow.", SourceFormat.PLAIN_TEXT))
    assert rec.article_type is ArticleType.RESEARCH
    assert rec.authors == []
    assert rec.body_text == "Cells divide. Cells grow."


def test_parse_jsonl_record_roundtrips():
    rec = _record("j1")
    raw = RawArticle("j1", json.dumps(rec.to_dict()).encode(), SourceFormat.JSONL_RECORD)
    assert parse_article(raw) == rec


def test_parse_errors():
    with pytest.raises(MalformedInput):
        parse_article(RawArticle("b", b"\xff\xfe\x00bad", SourceFormat.JATS_XML))
    with pytest.raises(MalformedInput):
        parse_article(RawArticle("b", b"<article><body>", SourceFormat.JATS_XML))
    with pytest.raises(MissingBody):
        parse_article(RawArticle("b", b"<article><body></body></article>", SourceFormat.JATS_XML))
    with pytest.raises(MissingBody):
        parse_article(RawArticle("b", b"   ", SourceFormat.PLAIN_TEXT))
    with pytest.raises(MalformedInput):
        parse_article(RawArticle("b", b"{not json", SourceFormat.JSONL_RECORD))


# --- normalize_abbreviations ----------------------------------------------

def test_abbreviation_expansion_et_al():
    out = normalize_abbreviations("Smith et al. showed", {"et al.": "and others"})
    assert out == "Smith and others showed"


def test_abbreviation_empty_text():
    assert normalize_abbreviations("", {"et al.": "and others"}) == ""


def test_abbreviation_repeated_occurrences():
    # Hand-applied twice: both occurrences replaced in one pass.
    out = normalize_abbreviations("et al. et al.", {"et al.": "and others"})
    assert out == "and others and others"


def test_abbreviation_word_boundaries_and_case():
    table = {"Fig.": "Figure"}
    assert normalize_abbreviations("See Fig. 2", table) == "See Figure 2"
    assert normalize_abbreviations("config. file", table) == "config. file"
    assert normalize_abbreviations("see fig. 2", table) == "see fig. 2"  # case-sensitive


def test_abbreviation_empty_table_is_noop():
    text = "Smith et al. showed e.g. this."
    assert normalize_abbreviations(text, {}) == text


def test_abbreviation_idempotent_with_default_table():
    text = "Smith et al. showed, e.g., growth (cf. Fig. 2), i.e., doubling vs. control."
    once = normalize_abbreviations(text)
    assert normalize_abbreviations(once) == once


# --- filter_corpus ----------------------------------------------------------

def test_filter_removes_non_research():
    records = [_record("a"), _record("b"), _record("c"),
               _record("d", article_type=ArticleType.NON_RESEARCH)]
    kept, removed = filter_corpus(records)
    assert [r.article_id for r in kept] == ["a", "b", "c"]
    assert [(e.article_id, e.reason) for e in removed] == [("d", RemovalReason.NON_RESEARCH)]


def test_filter_removes_missing_corresponding_author():
    records = [_record("a", corresponding=False)]
    kept, removed = filter_corpus(records)
    assert kept == []
    assert removed[0].reason is RemovalReason.NO_CORRESPONDING_AUTHOR


def test_filter_keeps_everything_when_clean():
    records = [_record("a"), _record("b")]
    kept, removed = filter_corpus(records)
    assert len(kept) == 2 and removed == []


def test_filter_partitions_input():
    records = [_record("a"), _record("b", article_type=ArticleType.NON_RESEARCH),
               _record("c", corresponding=False)]
    kept, removed = filter_corpus(records)
    assert len(kept) + len(removed) == len(records)


# --- corpus persistence -----------------------------------------------------

def test_corpus_roundtrip(tmp_path):
    records = [_record("a"), _record("b", article_type=ArticleType.NON_RESEARCH)]
    path = tmp_path / "corpus.jsonl"
    assert write_corpus(records, path) == 2
    assert read_corpus(path) == records


def test_corpus_empty(tmp_path):
    path = tmp_path / "corpus.jsonl"
    assert write_corpus([], path) == 0
    assert path.read_text() == ""
    assert read_corpus(path) == []


def test_corpus_corrupt_line_reports_line_number(tmp_path):
    records = [_record("a"), _record("b"), _record("c")]
    path = tmp_path / "corpus.jsonl"
    write_corpus(records, path)
    lines = path.read_text().splitlines()
    lines[1] = lines[1][: len(lines[1]) // 2]  # truncate the middle record
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(CorruptRecord) as exc:
        read_corpus(path)
    assert exc.value.line_number == 2


_author_st = st.builds(
    AuthorRef,
    full_name=st.text(min_size=1, max_size=20),
    position_index=st.just(0),
    is_first=st.just(True),
    is_corresponding=st.booleans(),
)

_record_st = st.builds(
    ArticleRecord,
    article_id=st.text(
        alphabet=st.characters(blacklist_categories=("Cs", "Cc")), min_size=1, max_size=12
    ),
    journal=st.text(max_size=20),
    pub_year=st.integers(min_value=0, max_value=3000),
    article_type=st.sampled_from(list(ArticleType)),
    title=st.text(max_size=30),
    body_text=st.text(max_size=200),
    authors=st.lists(_author_st, max_size=1),
    subjects=st.lists(st.text(max_size=10), max_size=3),
    word_count=st.integers(min_value=0, max_value=10**6),
)


@settings(max_examples=100, deadline=None)
@given(st.lists(_record_st, max_size=8))
def test_corpus_roundtrip_property(tmp_path_factory, records):
    path = tmp_path_factory.mktemp("prop") / "corpus.jsonl"
    write_corpus(records, path)
    assert read_corpus(path) == records


def test_removals_csv_roundtrip(tmp_path):
    _, removed = filter_corpus([_record("n", article_type=ArticleType.NON_RESEARCH),
                                _record("m", corresponding=False)])
    path = tmp_path / "removals.csv"
    write_removals(removed, path)
    assert path.read_text().splitlines()[0] == "article_id,reason"
    assert read_removals(path) == removed
