"""Name-ethnicity label decisions and manuscript group assignment.

The decision rule over a probability vector: one label when the top
probability exceeds 60% and no other exceeds 20%; two labels when the top
two sum past 60% and no third exceeds 20%; Unknown otherwise. Articles are
then grouped A/AB/B by whether the first and corresponding authors' labels
include English.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..errors import InvalidDistribution, UnknownEthnicity

ETHNICITIES = (
    "African", "Arab", "Baltic", "Caribbean", "Chinese", "Dutch", "English",
    "French", "German", "Greek", "Hispanic", "Hungarian", "Indian",
    "Indonesian", "Israeli", "Italian", "Japanese", "Korean", "Mongolian",
    "Nordic", "Polynesian", "Romanian", "Slav", "Thai", "Turkish",
    "Vietnamese",
)

ENGLISH = "English"

_SUM_TOLERANCE = 1e-9
SINGLE_THRESHOLD = 0.60
OTHER_THRESHOLD = 0.20


@dataclass(frozen=True)
class EthnicityProbabilities:
    """Sparse probability vector over the 26 ethnicity names."""

    probs: tuple[tuple[str, float], ...]

    @classmethod
    def from_mapping(cls, mapping: dict[str, float]) -> "EthnicityProbabilities":
        items = tuple(sorted((str(k), float(v)) for k, v in mapping.items()))
        return cls(items)

    def validate(self) -> None:
        total = 0.0
        for name, p in self.probs:
            if name not in ETHNICITIES:
                raise InvalidDistribution(f"unknown ethnicity name {name!r}")
            if p < 0.0 or p > 1.0:
                raise InvalidDistribution(f"probability {p!r} for {name} outside [0, 1]")
            total += p
        if total > 1.0 + _SUM_TOLERANCE:
            raise InvalidDistribution(f"probabilities sum to {total}, above 1")

    def as_dict(self) -> dict[str, float]:
        return dict(self.probs)


class DecisionKind(str, Enum):
    SINGLE = "Single"
    DUAL = "Dual"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class EthnicityDecision:
    kind: DecisionKind
    labels: tuple[str, ...]

    def __post_init__(self):
        expected = {DecisionKind.SINGLE: 1, DecisionKind.DUAL: 2, DecisionKind.UNKNOWN: 0}
        if len(self.labels) != expected[self.kind]:
            raise ValueError(f"{self.kind.value} decision must carry {expected[self.kind]} labels")

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "labels": list(self.labels)}

    @classmethod
    def from_dict(cls, d: dict) -> "EthnicityDecision":
        return cls(DecisionKind(d["kind"]), tuple(d["labels"]))


def decide_label(p: EthnicityProbabilities) -> EthnicityDecision:
    """Apply the Single / Dual / Unknown thresholds to a probability vector.

    Comparisons are strict (> 0.60, > 0.20). Ties in probability rank break
    by lexicographic ethnicity name.
    """
    p.validate()
    ranked = sorted(p.probs, key=lambda item: (-item[1], item[0]))
    if not ranked:
        return EthnicityDecision(DecisionKind.UNKNOWN, ())

    top_name, top_p = ranked[0]
    if top_p > SINGLE_THRESHOLD and all(q <= OTHER_THRESHOLD for _, q in ranked[1:]):
        return EthnicityDecision(DecisionKind.SINGLE, (top_name,))
    if len(ranked) >= 2:
        second_name, second_p = ranked[1]
        if top_p + second_p > SINGLE_THRESHOLD and all(
            q <= OTHER_THRESHOLD for _, q in ranked[2:]
        ):
            return EthnicityDecision(DecisionKind.DUAL, (top_name, second_name))
    return EthnicityDecision(DecisionKind.UNKNOWN, ())


class GroupLabel(str, Enum):
    A = "A"
    B = "B"


class EnglishDualPolicy(str, Enum):
    """Where a Dual decision that includes English lands: group A or group B."""

    INCLUDE = "include"
    EXCLUDE = "exclude"


def ethnic_group(
    decision: EthnicityDecision,
    english_dual_policy: EnglishDualPolicy = EnglishDualPolicy.INCLUDE,
) -> GroupLabel:
    """Map a resolved decision to author group A (English) or B (other)."""
    if decision.kind is DecisionKind.UNKNOWN:
        raise UnknownEthnicity("cannot group an Unknown decision; exclude the article")
    if ENGLISH not in decision.labels:
        return GroupLabel.B
    if decision.kind is DecisionKind.DUAL and english_dual_policy is EnglishDualPolicy.EXCLUDE:
        return GroupLabel.B
    return GroupLabel.A


class ManuscriptGroup(str, Enum):
    A = "A"
    AB = "AB"
    B = "B"


def manuscript_group(fa: GroupLabel, ca: GroupLabel) -> ManuscriptGroup:
    """Combine first-author and corresponding-author groups; mixed pairs are AB."""
    if fa is ca:
        return ManuscriptGroup.A if fa is GroupLabel.A else ManuscriptGroup.B
    return ManuscriptGroup.AB
