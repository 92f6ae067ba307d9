"""Pluggable name-to-ethnicity probability sources with a local cache.

Two shipped sources: an HTTP client for a compatible web service (GET with
a name parameter, JSON object of ethnicity -> probability in response) and
an offline TSV table. Every resolved name is written through the cache so
a second run works fully offline.
"""

from __future__ import annotations

import os
import threading
from typing import Protocol

import requests

from ..errors import IoFailure, LookupUnavailable
from .model import EthnicityProbabilities


class EthnicityLookup(Protocol):
    def lookup(self, name: str) -> EthnicityProbabilities:
        """Resolve a full name; raises LookupUnavailable when it cannot."""
        ...


def read_probability_tsv(path: str | os.PathLike) -> dict[str, dict[str, float]]:
    """Read (name TAB ethnicity TAB probability) triples grouped by name."""
    table: dict[str, dict[str, float]] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line.strip():
                    continue
                parts = line.split("\t")
                if len(parts) != 3:
                    raise IoFailure(f"{path}:{lineno}: expected 3 tab-separated fields")
                name, ethnicity, prob = parts
                table.setdefault(name, {})[ethnicity] = float(prob)
    except OSError as exc:
        raise IoFailure(f"cannot read table {path}: {exc}") from exc
    except ValueError as exc:
        raise IoFailure(f"cannot parse table {path}: {exc}") from exc
    return table


def write_probability_tsv(table: dict[str, dict[str, float]], path: str | os.PathLike) -> None:
    """Write triples sorted by (name, ethnicity) for reproducible diffs."""
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for name in sorted(table):
                for ethnicity in sorted(table[name]):
                    fh.write(f"{name}\t{ethnicity}\t{table[name][ethnicity]!r}\n")
    except OSError as exc:
        raise IoFailure(f"cannot write table {path}: {exc}") from exc


class TableLookup:
    """Offline source backed by a probability TSV file."""

    def __init__(self, path: str | os.PathLike):
        self.path = str(path)
        self._table = read_probability_tsv(path)

    def lookup(self, name: str) -> EthnicityProbabilities:
        probs = self._table.get(name)
        if probs is None:
            raise LookupUnavailable(f"name {name!r} not in table {self.path}")
        return EthnicityProbabilities.from_mapping(probs)


class HttpLookup:
    """Client for an ethnicity web service.

    Sends ``GET <base_url>?name=<full name>`` and expects a JSON object of
    ethnicity names to probabilities. Transient failures are retried.
    """

    def __init__(
        self,
        base_url: str,
        timeout: float = 10.0,
        retries: int = 2,
        session: requests.Session | None = None,
    ):
        self.base_url = base_url
        self.timeout = timeout
        self.retries = retries
        self._session = session or requests.Session()

    def lookup(self, name: str) -> EthnicityProbabilities:
        last_error: Exception | None = None
        for _ in range(self.retries + 1):
            try:
                resp = self._session.get(
                    self.base_url, params={"name": name}, timeout=self.timeout
                )
                resp.raise_for_status()
                payload = resp.json()
                if not isinstance(payload, dict):
                    raise ValueError("expected a JSON object of ethnicity probabilities")
                return EthnicityProbabilities.from_mapping(
                    {str(k): float(v) for k, v in payload.items()}
                )
            except (requests.RequestException, ValueError) as exc:
                last_error = exc
        raise LookupUnavailable(f"lookup failed for {name!r}: {last_error}")


class LookupCache:
    """Name -> probabilities cache persisted as a sorted TSV.

    Reads are lock-free on the underlying dict snapshot; writes serialize
    through a lock, matching the one-writer/many-readers contract.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = str(path) if path is not None else None
        self._lock = threading.Lock()
        self._table: dict[str, dict[str, float]] = {}
        if self.path and os.path.exists(self.path):
            self._table = read_probability_tsv(self.path)

    def __len__(self) -> int:
        return len(self._table)

    def get(self, name: str) -> EthnicityProbabilities | None:
        probs = self._table.get(name)
        return EthnicityProbabilities.from_mapping(probs) if probs is not None else None

    def put(self, name: str, probs: EthnicityProbabilities) -> None:
        with self._lock:
            self._table[name] = probs.as_dict()

    def save(self, path: str | os.PathLike | None = None) -> None:
        target = str(path) if path is not None else self.path
        if target is None:
            raise IoFailure("cache has no path to save to")
        with self._lock:
            write_probability_tsv(self._table, target)


class CachedLookup:
    """Cache-first resolution with write-through to an optional source."""

    def __init__(self, cache: LookupCache, source: EthnicityLookup | None = None):
        self.cache = cache
        self.source = source

    def lookup(self, name: str) -> EthnicityProbabilities:
        hit = self.cache.get(name)
        if hit is not None:
            return hit
        if self.source is None:
            raise LookupUnavailable(f"no source configured and {name!r} not cached")
        probs = self.source.lookup(name)
        self.cache.put(name, probs)
        return probs
