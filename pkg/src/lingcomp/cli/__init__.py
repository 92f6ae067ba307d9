"""Pipeline orchestration and the ``lingcomp`` command."""

from .config import RunConfig, load_abbrev_table
from .main import main
from .manifest import RunManifest, StageContractViolation
from .stages import (
    stage_analyze,
    stage_annotate,
    stage_ingest,
    stage_stats,
    stage_train_tagger,
)

__all__ = [
    "RunConfig",
    "RunManifest",
    "StageContractViolation",
    "load_abbrev_table",
    "main",
    "stage_analyze",
    "stage_annotate",
    "stage_ingest",
    "stage_stats",
    "stage_train_tagger",
]
