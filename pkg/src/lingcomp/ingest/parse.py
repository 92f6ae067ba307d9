"""Parse raw article files into :class:`ArticleRecord`.

Three input shapes are supported:

* a minimal JATS-style XML subset: ``article-type`` attribute on the root,
  a contrib list whose corresponding authors carry ``corresp="yes"``, body
  ``<p>`` paragraphs, and optional ``<subject>`` tags;
* plain text (whole file is the body; no author metadata);
* a single JSONL corpus record (the toolkit's own persisted form).
"""

from __future__ import annotations

import json
import re
import xml.etree.ElementTree as ET

from ..errors import MalformedInput, MissingBody
from .records import ArticleRecord, ArticleType, AuthorRef, RawArticle, SourceFormat

_RESIDUAL_TAG = re.compile(r"<[^<>]+>")
_WS = re.compile(r"\s+")


def _clean_text(raw: str) -> str:
    """Drop residual markup and collapse whitespace runs."""
    return _WS.sub(" ", _RESIDUAL_TAG.sub("", raw)).strip()


def _localname(tag) -> str:
    return tag.rpartition("}")[2] if isinstance(tag, str) else ""


def _find_text(root: ET.Element, name: str) -> str:
    for el in root.iter():
        if _localname(el.tag) == name:
            return _clean_text("".join(el.itertext()))
    return ""


def _contrib_name(contrib: ET.Element) -> str:
    surname = given = ""
    for el in contrib.iter():
        ln = _localname(el.tag)
        if ln == "surname":
            surname = _clean_text("".join(el.itertext()))
        elif ln == "given-names":
            given = _clean_text("".join(el.itertext()))
    if surname or given:
        return " ".join(p for p in (given, surname) if p)
    return _clean_text("".join(contrib.itertext()))


def _parse_jats(article_id: str, text: str) -> ArticleRecord:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise MalformedInput(f"{article_id}: XML parse error: {exc}") from exc

    type_attr = root.get("article-type", "research-article")
    article_type = (
        ArticleType.RESEARCH if type_attr == "research-article" else ArticleType.NON_RESEARCH
    )

    # Paragraphs under <body>, in document order; fall back to any <p> when
    # the input omits the body wrapper.
    body_roots = [el for el in root.iter() if _localname(el.tag) == "body"] or [root]
    paragraphs = []
    for b in body_roots:
        for el in b.iter():
            if _localname(el.tag) == "p":
                cleaned = _clean_text("".join(el.itertext()))
                if cleaned:
                    paragraphs.append(cleaned)
    if not paragraphs:
        raise MissingBody(f"{article_id}: no paragraph content found")

    authors = []
    for el in root.iter():
        if _localname(el.tag) == "contrib" and el.get("contrib-type", "author") == "author":
            name = _contrib_name(el)
            if not name:
                continue
            authors.append(
                AuthorRef(
                    full_name=name,
                    position_index=len(authors),
                    is_first=len(authors) == 0,
                    is_corresponding=el.get("corresp", "no") == "yes",
                )
            )

    subjects = []
    for el in root.iter():
        if _localname(el.tag) == "subject":
            s = _clean_text("".join(el.itertext()))
            if s:
                subjects.append(s)

    year_text = _find_text(root, "year")
    try:
        pub_year = int(year_text) if year_text else 0
    except ValueError:
        pub_year = 0

    return ArticleRecord(
        article_id=article_id,
        journal=_find_text(root, "journal-title"),
        pub_year=pub_year,
        article_type=article_type,
        title=_find_text(root, "article-title"),
        body_text=" ".join(paragraphs),
        authors=authors,
        subjects=subjects,
    )


def _parse_plain(article_id: str, text: str) -> ArticleRecord:
    body = _clean_text(text)
    if not body:
        raise MissingBody(f"{article_id}: empty text file")
    return ArticleRecord(article_id=article_id, body_text=body)


def _parse_jsonl(article_id: str, text: str) -> ArticleRecord:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{article_id}: bad JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise MalformedInput(f"{article_id}: JSONL record must be an object")
    try:
        record = ArticleRecord.from_dict(payload)
    except (KeyError, ValueError, TypeError) as exc:
        raise MalformedInput(f"{article_id}: invalid record: {exc}") from exc
    if not record.body_text.strip():
        raise MissingBody(f"{record.article_id}: record has empty body_text")
    return record


def parse_article(raw: RawArticle) -> ArticleRecord:
    """Parse one raw input into a clean record.

    Raises MalformedInput for undecodable or unparsable sources and
    MissingBody when no paragraph content is present.
    """
    try:
        text = raw.source_bytes.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedInput(f"{raw.article_id}: not valid UTF-8: {exc}") from exc

    if raw.source_format is SourceFormat.JATS_XML:
        return _parse_jats(raw.article_id, text)
    if raw.source_format is SourceFormat.PLAIN_TEXT:
        return _parse_plain(raw.article_id, text)
    return _parse_jsonl(raw.article_id, text)
