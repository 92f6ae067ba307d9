"""Pipeline stages behind the CLI subcommands.

Each stage consumes only the previous stage's files and canonicalizes its
output ordering (sorted by article_id), so reruns and different worker
counts produce byte-identical data files. Timings live in the manifest,
which is the one output excluded from the byte-identity contract.
"""

from __future__ import annotations

import logging
import multiprocessing
import time
from pathlib import Path

from ..errors import EmptyDocument, LingcompError, MalformedInput, MissingBody
from ..ethnicity import (
    CachedLookup,
    EnglishDualPolicy,
    HttpLookup,
    LookupCache,
    TableLookup,
    annotate_corpus,
    read_annotated,
    write_annotated,
)
from ..ingest import (
    DEFAULT_ABBREVIATIONS,
    ArticleRecord,
    RawArticle,
    RemovalEntry,
    SourceFormat,
    filter_corpus,
    normalize_abbreviations,
    parse_article,
    read_corpus,
    read_removals,
    write_corpus,
    write_removals,
)
from ..metrics import (
    FeatureRow,
    FeatureVector,
    compute_features,
    read_features_jsonl,
    write_features_csv,
    write_features_jsonl,
)
from ..nlp import PosModel, bundled_corpus_path, read_tagged_corpus, tag_document, train_tagger
from ..stats import (
    GroupAccumulator,
    feature_samples,
    histogram,
    joint_histogram,
    ks_matrix,
    render_report,
    ttr_by_length,
    write_binned_ttr_csv,
    write_histograms_csv,
    write_joint_csv,
    write_ks_matrix_csv,
    write_ks_matrix_json,
    write_summary_csv,
)
from .config import RunConfig, load_abbrev_table
from .manifest import RunManifest

log = logging.getLogger("lingcomp")

_FORMAT_MAP = {
    "xml": (SourceFormat.JATS_XML, ".xml"),
    "text": (SourceFormat.PLAIN_TEXT, ".txt"),
    "jsonl": (SourceFormat.JSONL_RECORD, ".jsonl"),
}


def _collect_raw(config: RunConfig) -> list[RawArticle]:
    fmt, suffix = _FORMAT_MAP[config.input_format]
    path = Path(config.input_path)
    raws: list[RawArticle] = []
    if fmt is SourceFormat.JSONL_RECORD:
        files = [path] if path.is_file() else sorted(path.glob(f"*{suffix}"))
        for file in files:
            with open(file, "rb") as fh:
                for i, line in enumerate(fh, start=1):
                    if line.strip():
                        raws.append(
                            RawArticle(f"{file.name}:{i}", line, SourceFormat.JSONL_RECORD)
                        )
    else:
        files = [path] if path.is_file() else sorted(path.glob(f"*{suffix}"))
        for file in files:
            raws.append(RawArticle(file.stem, file.read_bytes(), fmt))
    return raws


def _abbrev_table(config: RunConfig) -> dict[str, str]:
    if config.abbrev_table_path:
        return load_abbrev_table(config.abbrev_table_path)
    return dict(DEFAULT_ABBREVIATIONS)


def stage_ingest(config: RunConfig, manifest: RunManifest) -> dict:
    t0 = time.perf_counter()
    out_dir = Path(config.out_dir)
    raws = _collect_raw(config)
    records: list[ArticleRecord] = []
    parse_failures = 0
    for raw in raws:
        try:
            records.append(parse_article(raw))
        except (MalformedInput, MissingBody) as exc:
            parse_failures += 1
            log.warning("skipping %s: %s", raw.article_id, exc)
    kept, removed = filter_corpus(records)
    kept.sort(key=lambda r: r.article_id)
    removed.sort(key=lambda e: e.article_id)
    write_corpus(kept, out_dir / "corpus.jsonl")
    write_removals(removed, out_dir / "removals.csv")

    removal_counts: dict[str, int] = {}
    for entry in removed:
        removal_counts[entry.reason.value] = removal_counts.get(entry.reason.value, 0) + 1
    summary = {
        "files": len(raws),
        "parse_failures": parse_failures,
        "parsed": len(records),
        "kept": len(kept),
        "removed": len(removed),
        "duration_s": round(time.perf_counter() - t0, 3),
    }
    manifest.record_stage("ingest", **summary)
    manifest.record_counts(input=len(records), removals=removal_counts)
    manifest.save()
    log.info("ingest: %(parsed)d parsed, %(kept)d kept, %(removed)d removed", summary)
    return summary


def _build_lookup(config: RunConfig) -> CachedLookup:
    cache = LookupCache(config.cache_path)
    source = None
    if config.ethnicity_source:
        if config.ethnicity_source.startswith("table:"):
            source = TableLookup(config.ethnicity_source.split(":", 1)[1])
        else:
            source = HttpLookup(config.ethnicity_source)
    return CachedLookup(cache, source)


def stage_annotate(config: RunConfig, manifest: RunManifest) -> dict:
    t0 = time.perf_counter()
    out_dir = Path(config.out_dir)
    records = read_corpus(out_dir / "corpus.jsonl")
    lookup = _build_lookup(config)
    result = annotate_corpus(
        records, lookup, EnglishDualPolicy(config.english_dual)
    )
    result.annotated.sort(key=lambda a: a.record.article_id)
    write_annotated(result.annotated, out_dir / "annotated.jsonl")
    if config.cache_path:
        lookup.cache.save()

    # Unify the removal ledger: keep ingest-stage rows, replace this stage's.
    removals_file = out_dir / "removals.csv"
    existing = read_removals(removals_file) if removals_file.exists() else []
    merged: dict[tuple[str, str], RemovalEntry] = {
        (e.article_id, e.reason.value): e
        for e in existing
        if e.reason.value != "unknown_ethnicity"
    }
    for e in result.removals:
        merged[(e.article_id, e.reason.value)] = e
    merged_rows = sorted(merged.values(), key=lambda e: (e.article_id, e.reason.value))
    write_removals(merged_rows, removals_file)

    removal_counts: dict[str, int] = {}
    for entry in merged_rows:
        removal_counts[entry.reason.value] = removal_counts.get(entry.reason.value, 0) + 1
    summary = {
        "records": len(records),
        "annotated": len(result.annotated),
        "removed": len(result.removals),
        "names_attempted": result.names_attempted,
        "names_failed": result.names_failed,
        "duration_s": round(time.perf_counter() - t0, 3),
    }
    manifest.record_stage("annotate", **summary)
    manifest.record_counts(annotated=len(result.annotated), removals=removal_counts)
    manifest.reconcile()
    manifest.save()
    log.info("annotate: %(annotated)d annotated, %(removed)d removed", summary)
    if result.failure_rate > config.lookup_failure_threshold:
        raise LingcompError(
            f"{result.names_failed}/{result.names_attempted} lookups failed "
            f"(threshold {config.lookup_failure_threshold})"
        )
    return summary


def _resolve_model(config: RunConfig, out_dir: Path) -> PosModel:
    if config.model_path:
        return PosModel.load(config.model_path)
    corpus_path = config.train_corpus_path or bundled_corpus_path()
    model = train_tagger(read_tagged_corpus(corpus_path), config.train_epochs, config.seed)
    model.save(out_dir / "tagger_model.json")
    return model


# Worker state for the analysis pool, set once per process.
_WORKER_MODEL: PosModel | None = None
_WORKER_ABBREV: dict[str, str] = {}


def _analyze_init(model: PosModel, abbrev: dict[str, str]) -> None:
    global _WORKER_MODEL, _WORKER_ABBREV
    _WORKER_MODEL = model
    _WORKER_ABBREV = abbrev


def _analyze_one(task: tuple[str, str, str]) -> tuple[str, str, dict | None]:
    article_id, group, body = task
    text = normalize_abbreviations(body, _WORKER_ABBREV)
    sentences = tag_document(text, _WORKER_MODEL, _WORKER_ABBREV)
    try:
        features = compute_features(sentences)
    except EmptyDocument:
        return article_id, group, None
    return article_id, group, features.to_dict()


def stage_analyze(config: RunConfig, manifest: RunManifest) -> dict:
    t0 = time.perf_counter()
    out_dir = Path(config.out_dir)
    annotated = read_annotated(out_dir / "annotated.jsonl")
    model = _resolve_model(config, out_dir)
    abbrev = _abbrev_table(config)

    tasks = [
        (a.record.article_id, a.annotation.group.value, a.record.body_text)
        for a in annotated
    ]
    jobs = config.effective_jobs()
    _analyze_init(model, abbrev)
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(
            processes=jobs, initializer=_analyze_init, initargs=(model, abbrev)
        ) as pool:
            results = pool.map(_analyze_one, tasks, chunksize=64)
    else:
        results = [_analyze_one(t) for t in tasks]

    rows: list[FeatureRow] = []
    skipped = 0
    for article_id, group, payload in results:
        if payload is None:
            skipped += 1
            log.warning("skipping %s: no measurable text", article_id)
            continue
        rows.append(FeatureRow(article_id, group, FeatureVector.from_dict(payload)))
    rows.sort(key=lambda r: r.article_id)
    write_features_csv(rows, out_dir / "features.csv")
    write_features_jsonl(rows, out_dir / "features.jsonl")

    duration = time.perf_counter() - t0
    summary = {
        "articles": len(annotated),
        "rows": len(rows),
        "skipped": skipped,
        "jobs": jobs,
        "duration_s": round(duration, 3),
        "articles_per_s": round(len(annotated) / duration, 1) if duration > 0 else None,
    }
    manifest.record_stage("analyze", **summary)
    manifest.save()
    log.info("analyze: %(rows)d feature rows (%(skipped)d skipped)", summary)
    return summary


def stage_stats(config: RunConfig, manifest: RunManifest) -> dict:
    t0 = time.perf_counter()
    out_dir = Path(config.out_dir)
    rows = read_features_jsonl(out_dir / "features.jsonl")

    by_group: dict[str, list[FeatureVector]] = {}
    ttr_docs: dict[str, list[tuple[float, int]]] = {}
    for row in rows:
        by_group.setdefault(row.group, []).append(row.features)
        ttr_docs.setdefault(row.group, []).append(
            (row.features.ttr, row.features.word_token_count)
        )

    acc = GroupAccumulator()
    for group in sorted(by_group):
        for fv in by_group[group]:
            acc.add(group, fv)
    summaries = acc.summarize()
    write_summary_csv(summaries, out_dir / "summary.csv")

    matrix = None
    multi_group = len(by_group) >= 2
    if multi_group:
        matrix = ks_matrix(by_group)
        write_ks_matrix_csv(matrix, out_dir / "ks_matrix.csv")
        write_ks_matrix_json(matrix, out_dir / "ks_matrix.json")
    else:
        log.warning("stats: fewer than two groups present; KS matrix not produced")

    histograms: dict[str, dict] = {}
    for feature in ("msl", "clause_ratio", "noun_len", "verb_len", "adj_len",
                    "adv_len", "noun_ratio", "verb_ratio", "adj_ratio", "adv_ratio", "ttr"):
        per_group = {}
        for group in sorted(by_group):
            values = feature_samples(by_group[group], feature)
            if values:
                per_group[group] = histogram(values, bin_count=config.histogram_bins)
        if per_group:
            histograms[feature] = per_group
    write_histograms_csv(histograms, out_dir / "histograms.csv")

    joints = {}
    for group in sorted(by_group):
        xs = [fv.msl for fv in by_group[group]]
        ys = [fv.clause_ratio for fv in by_group[group]]
        if xs:
            joints[group] = joint_histogram(xs, ys, bins=config.histogram_bins)
    write_joint_csv(joints, out_dir / "joint_syntactic.csv")

    binned = ttr_by_length(ttr_docs, config.ttr_bin_width, config.ttr_range)
    write_binned_ttr_csv(binned, out_dir / "ttr_by_length.csv")

    report = render_report(summaries, matrix, binned)
    (out_dir / "report.txt").write_text(report, encoding="utf-8")

    summary = {
        "rows": len(rows),
        "groups": sorted(by_group),
        "ks_matrix": bool(matrix),
        "duration_s": round(time.perf_counter() - t0, 3),
    }
    manifest.record_stage("stats", **summary)
    manifest.save()
    log.info("stats: %d rows over groups %s", len(rows), ",".join(sorted(by_group)))
    return summary


def stage_train_tagger(config: RunConfig, out_path: Path) -> dict:
    corpus_path = config.train_corpus_path or bundled_corpus_path()
    corpus = read_tagged_corpus(corpus_path)
    model = train_tagger(corpus, config.train_epochs, config.seed)
    model.save(out_path)
    return {
        "sentences": len(corpus),
        "tokens": sum(len(s) for s in corpus),
        "model": str(out_path),
    }
