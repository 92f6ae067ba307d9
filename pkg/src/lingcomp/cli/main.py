"""Command-line entry point.

Subcommands mirror the pipeline stages (ingest, annotate, analyze, stats),
plus ``run`` for all four and ``train-tagger`` for the POS model. Exit
codes: 0 success, 2 configuration error, 3 I/O error, 4 stage-contract
violation.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from ..errors import ConfigError, CorruptRecord, IoFailure, LingcompError
from .config import RunConfig
from .manifest import RunManifest, StageContractViolation
from .stages import stage_analyze, stage_annotate, stage_ingest, stage_stats, stage_train_tagger

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_CONTRACT = 4

log = logging.getLogger("lingcomp")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lingcomp",
        description="Linguistic-complexity analysis of scholarly articles by author group.",
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="JSON config file; flags override its values")
        p.add_argument("--out-dir", help="stage-file directory (default: out)")
        p.add_argument("--jobs", type=int, help="worker count (default: all CPUs)")
        p.add_argument("--seed", type=int, help="seed for all randomness")

    p_ingest = sub.add_parser("ingest", help="parse inputs into a corpus file")
    add_common(p_ingest)
    p_ingest.add_argument("--input", help="input file or directory")
    p_ingest.add_argument("--format", choices=("xml", "text", "jsonl"), help="input format")
    p_ingest.add_argument("--abbrev", help="JSON abbreviation table")

    p_annotate = sub.add_parser("annotate", help="resolve author groups")
    add_common(p_annotate)
    p_annotate.add_argument(
        "--ethnicity-source", help="lookup source: http(s):URL or table:PATH"
    )
    p_annotate.add_argument("--cache", help="lookup cache TSV path")
    p_annotate.add_argument(
        "--english-dual", choices=("include", "exclude"),
        help="group for dual decisions that include English",
    )

    p_analyze = sub.add_parser("analyze", help="compute per-article features")
    add_common(p_analyze)
    p_analyze.add_argument("--model", help="trained tagger model JSON")
    p_analyze.add_argument("--train-corpus", help="tagged corpus to train from instead")
    p_analyze.add_argument("--epochs", type=int, help="training epochs (default 5)")
    p_analyze.add_argument("--abbrev", help="JSON abbreviation table")

    p_stats = sub.add_parser("stats", help="group comparisons and exports")
    add_common(p_stats)
    p_stats.add_argument("--ttr-bin-width", type=int, help="word-count bin width")
    p_stats.add_argument("--ttr-range", type=int, nargs=2, metavar=("LO", "HI"))
    p_stats.add_argument("--bins", type=int, help="histogram bin count")

    p_run = sub.add_parser("run", help="all four stages in order")
    add_common(p_run)
    for flag_parser in (p_run,):
        flag_parser.add_argument("--input")
        flag_parser.add_argument("--format", choices=("xml", "text", "jsonl"))
        flag_parser.add_argument("--abbrev")
        flag_parser.add_argument("--ethnicity-source")
        flag_parser.add_argument("--cache")
        flag_parser.add_argument("--english-dual", choices=("include", "exclude"))
        flag_parser.add_argument("--model")
        flag_parser.add_argument("--train-corpus")
        flag_parser.add_argument("--epochs", type=int)
        flag_parser.add_argument("--ttr-bin-width", type=int)
        flag_parser.add_argument("--ttr-range", type=int, nargs=2, metavar=("LO", "HI"))
        flag_parser.add_argument("--bins", type=int)

    p_train = sub.add_parser("train-tagger", help="train the POS model")
    add_common(p_train)
    p_train.add_argument("--train-corpus", help="two-column tagged corpus (default: bundled)")
    p_train.add_argument("--epochs", type=int)
    p_train.add_argument("--model-out", help="output model path (default: out-dir/tagger_model.json)")

    return parser


_FLAG_TO_FIELD = {
    "input": "input_path",
    "format": "input_format",
    "out_dir": "out_dir",
    "abbrev": "abbrev_table_path",
    "model": "model_path",
    "train_corpus": "train_corpus_path",
    "epochs": "train_epochs",
    "ethnicity_source": "ethnicity_source",
    "cache": "cache_path",
    "english_dual": "english_dual",
    "ttr_bin_width": "ttr_bin_width",
    "ttr_range": "ttr_range",
    "bins": "histogram_bins",
    "jobs": "jobs",
    "seed": "seed",
}


def make_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig.from_file(args.config) if args.config else RunConfig()
    for flag, field in _FLAG_TO_FIELD.items():
        value = getattr(args, flag, None)
        if value is not None:
            if flag == "ttr_range":
                value = (value[0], value[1])
            setattr(config, field, value)
    return config


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        config = make_config(args)
        config.validate(need_input=args.command in ("ingest", "run"))
    except ConfigError as exc:
        log.error("config error: %s", exc)
        return EXIT_CONFIG

    # The input data path is an I/O concern, not a config one: check it
    # before anything is written so a bad path leaves no partial outputs.
    if args.command in ("ingest", "run") and not Path(config.input_path).exists():
        log.error("input path does not exist: %s", config.input_path)
        return EXIT_IO

    out_dir = Path(config.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        log.error("cannot create output directory: %s", exc)
        return EXIT_IO

    try:
        if args.command == "train-tagger":
            out_path = Path(args.model_out) if args.model_out else out_dir / "tagger_model.json"
            info = stage_train_tagger(config, out_path)
            log.info("trained on %(sentences)d sentences (%(tokens)d tokens) -> %(model)s", info)
            return EXIT_OK

        manifest = RunManifest(out_dir / "manifest.json")
        manifest.record_config(config.snapshot())
        if args.command in ("ingest", "run"):
            stage_ingest(config, manifest)
        if args.command in ("annotate", "run"):
            stage_annotate(config, manifest)
        if args.command in ("analyze", "run"):
            stage_analyze(config, manifest)
        if args.command in ("stats", "run"):
            stage_stats(config, manifest)
        return EXIT_OK
    except StageContractViolation as exc:
        log.error("stage contract violation: %s", exc)
        return EXIT_CONTRACT
    except (IoFailure, CorruptRecord, FileNotFoundError) as exc:
        log.error("I/O error: %s", exc)
        return EXIT_IO
    except ConfigError as exc:
        log.error("config error: %s", exc)
        return EXIT_CONFIG
    except LingcompError as exc:
        log.error("%s", exc)
        return EXIT_CONTRACT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
