"""Run manifest: corpus accounting, per-stage timings, config snapshot.

The accounting invariant is checked whenever enough stages have run:
parsed input count = annotated count + every logged removal. A violation
means a stage dropped or duplicated articles and aborts the run.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .. import __version__
from ..errors import LingcompError


class StageContractViolation(LingcompError):
    """The manifest's corpus accounting failed to reconcile."""


class RunManifest:
    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self.data: dict = {"tool_version": __version__, "stages": {}, "counts": {}}
        if self.path.exists():
            with open(self.path, "r", encoding="utf-8") as fh:
                self.data = json.load(fh)
            self.data["tool_version"] = __version__
            self.data.setdefault("stages", {})
            self.data.setdefault("counts", {})

    def record_config(self, snapshot: dict) -> None:
        self.data["config"] = snapshot

    def record_stage(self, name: str, **fields) -> None:
        self.data["stages"][name] = fields

    def record_counts(self, **fields) -> None:
        self.data["counts"].update(fields)

    def reconcile(self) -> None:
        """input = analyzed + sum(removals); checked once both sides are known."""
        counts = self.data["counts"]
        if "input" not in counts or "annotated" not in counts:
            return
        removals = counts.get("removals", {})
        total = counts["annotated"] + sum(removals.values())
        if counts["input"] != total:
            raise StageContractViolation(
                f"corpus accounting mismatch: input={counts['input']} but "
                f"annotated+removals={total} (removals={removals})"
            )

    def save(self) -> None:
        with open(self.path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(self.data, fh, indent=2, sort_keys=True)
            fh.write("\n")
