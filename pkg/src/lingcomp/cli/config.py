"""Run configuration: a versioned key-value tree loaded from JSON.

Command-line flags override file values. Validation happens before any
stage writes output, so a bad path never leaves partial results behind.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path

from ..errors import ConfigError

CONFIG_VERSION = 1

INPUT_FORMATS = ("xml", "text", "jsonl")


@dataclass
class RunConfig:
    input_path: str | None = None
    input_format: str = "xml"
    out_dir: str = "out"
    abbrev_table_path: str | None = None  # None -> bundled default table
    model_path: str | None = None  # None -> train from train_corpus
    train_corpus_path: str | None = None  # None -> bundled seed corpus
    train_epochs: int = 5
    ethnicity_source: str | None = None  # "http:URL" or "table:PATH"
    cache_path: str | None = None
    english_dual: str = "include"
    lookup_failure_threshold: float = 0.5
    ttr_bin_width: int = 1000
    ttr_range: tuple[int, int] | None = None
    histogram_bins: int = 60
    jobs: int = 0  # 0 -> os.cpu_count()
    seed: int = 1

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> "RunConfig":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                payload = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
        if payload.get("config_version") != CONFIG_VERSION:
            raise ConfigError(
                f"config {path}: expected config_version {CONFIG_VERSION}, "
                f"got {payload.get('config_version')!r}"
            )
        cfg = cls()
        known = set(asdict(cfg))
        for key, value in payload.items():
            if key == "config_version":
                continue
            if key not in known:
                raise ConfigError(f"config {path}: unknown key {key!r}")
            if key == "ttr_range" and value is not None:
                value = (int(value[0]), int(value[1]))
            setattr(cfg, key, value)
        return cfg

    def to_file(self, path: str | os.PathLike) -> None:
        payload = {"config_version": CONFIG_VERSION}
        payload.update(self.snapshot())
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")

    def snapshot(self) -> dict:
        d = asdict(self)
        if d["ttr_range"] is not None:
            d["ttr_range"] = list(d["ttr_range"])
        return d

    def effective_jobs(self) -> int:
        return self.jobs if self.jobs > 0 else (os.cpu_count() or 1)

    def validate(self, need_input: bool = False) -> None:
        problems: list[str] = []
        if self.input_format not in INPUT_FORMATS:
            problems.append(f"input_format must be one of {INPUT_FORMATS}")
        if need_input and not self.input_path:
            problems.append("input path is required")
        if self.abbrev_table_path and not Path(self.abbrev_table_path).exists():
            problems.append(f"abbreviation table {self.abbrev_table_path} does not exist")
        if self.model_path and self.train_corpus_path:
            problems.append("give either model_path or train_corpus_path, not both")
        if self.train_corpus_path and not Path(self.train_corpus_path).exists():
            problems.append(f"training corpus {self.train_corpus_path} does not exist")
        if self.english_dual not in ("include", "exclude"):
            problems.append("english_dual must be 'include' or 'exclude'")
        if self.ethnicity_source is not None and not (
            self.ethnicity_source.startswith("http:")
            or self.ethnicity_source.startswith("https:")
            or self.ethnicity_source.startswith("table:")
        ):
            problems.append("ethnicity_source must start with 'http:', 'https:' or 'table:'")
        if self.ethnicity_source and self.ethnicity_source.startswith("table:"):
            table = self.ethnicity_source.split(":", 1)[1]
            if not Path(table).exists():
                problems.append(f"ethnicity table {table} does not exist")
        if not 0.0 <= self.lookup_failure_threshold <= 1.0:
            problems.append("lookup_failure_threshold must be in [0, 1]")
        if self.ttr_bin_width <= 0:
            problems.append("ttr_bin_width must be positive")
        if self.ttr_range is not None and self.ttr_range[0] >= self.ttr_range[1]:
            problems.append("ttr_range must satisfy lo < hi")
        if self.histogram_bins < 1:
            problems.append("histogram_bins must be at least 1")
        if self.jobs < 0:
            problems.append("jobs must be non-negative")
        if problems:
            raise ConfigError("; ".join(problems))


def load_abbrev_table(path: str | os.PathLike) -> dict[str, str]:
    """Read a JSON object of abbreviation -> expansion."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read abbreviation table {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"abbreviation table {path} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in payload.items()
    ):
        raise ConfigError(f"abbreviation table {path} must map strings to strings")
    return payload
