"""Domain types shared across the pipeline.

All values are plain immutable-ish dataclasses; nothing here does IO.
Token spans are half-open ``[start, end)`` intervals over a requirement's
token list.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class SmellKind(str, enum.Enum):
    NON_ATOMIC = "non_atomic"
    INCOMPLETE_REQUIREMENT = "incomplete_requirement"
    INCORRECT_ORDER = "incorrect_order"
    COORDINATION_AMBIGUITY = "coordination_ambiguity"
    NOT_A_REQUIREMENT = "not_a_requirement"
    INCOMPLETE_CONDITION = "incomplete_condition"
    INCOMPLETE_SYSTEM_RESPONSE = "incomplete_system_response"
    PASSIVE_VOICE = "passive_voice"
    NOT_PRECISE_VERB = "not_precise_verb"


# Analyst-facing names, as printed in reports.
SMELL_DISPLAY_NAMES = {
    SmellKind.NON_ATOMIC: "Non-atomic requirement",
    SmellKind.INCOMPLETE_REQUIREMENT: "Incomplete requirement",
    SmellKind.INCORRECT_ORDER: "Incorrect order requirement",
    SmellKind.COORDINATION_AMBIGUITY: "Coordination ambiguity",
    SmellKind.NOT_A_REQUIREMENT: "Not requirement",
    SmellKind.INCOMPLETE_CONDITION: "Incomplete condition",
    SmellKind.INCOMPLETE_SYSTEM_RESPONSE: "Incomplete system response",
    SmellKind.PASSIVE_VOICE: "Passive voice",
    SmellKind.NOT_PRECISE_VERB: "Not precise verb",
}

# Smells that concern the whole requirement rather than one segment.
REQUIREMENT_LEVEL_SMELLS = frozenset(
    {
        SmellKind.NON_ATOMIC,
        SmellKind.INCOMPLETE_REQUIREMENT,
        SmellKind.INCORRECT_ORDER,
        SmellKind.COORDINATION_AMBIGUITY,
        SmellKind.NOT_A_REQUIREMENT,
    }
)

RIMAY_PATTERN_IDS = tuple(f"P{i}" for i in range(1, 11))


class SegmentKind(str, enum.Enum):
    SCOPE = "scope"
    CONDITION = "condition"
    SYSTEM_RESPONSE = "system_response"
    NOT_MATCHED = "not_matched"


class ConditionType(str, enum.Enum):
    TRIGGER = "trigger"
    PRECONDITION = "precondition"
    TIME = "time"
    UNKNOWN = "unknown"


class MarkKind(str, enum.Enum):
    LINE_BREAK = "line_break"
    BULLET = "bullet"


@dataclass(frozen=True)
class Token:
    text: str
    lemma: str
    pos: str
    index: int


@dataclass(frozen=True)
class LayoutMark:
    kind: MarkKind
    before_token: int


@dataclass
class AnnotatedRequirement:
    id: str
    text: str
    tokens: list[Token]
    tree: str | None = None
    marks: list[LayoutMark] = field(default_factory=list)


@dataclass(frozen=True)
class GroundTruthEntry:
    id: str
    smells: frozenset[SmellKind]
    pattern: str | None = None


@dataclass(frozen=True)
class Segment:
    kind: SegmentKind
    span: tuple[int, int]
    source: str  # "tregex:<pattern id>" | "splitter" | "residual"
    condition_type: ConditionType | None = None

    @property
    def start(self) -> int:
        return self.span[0]

    @property
    def end(self) -> int:
        return self.span[1]


@dataclass(frozen=True)
class SmellFinding:
    kind: SmellKind
    segment_index: int | None
    span: tuple[int, int]
    technique: str  # "tregex:<id>" | "structural:<#>" | "rule:<name>" | "glossary:<lemma>"


@dataclass(frozen=True)
class SegmentFrequencies:
    scope: int = 0
    precondition: int = 0
    trigger: int = 0
    time: int = 0
    system_response: int = 0
    incomplete_condition: int = 0
    incomplete_system_response: int = 0

    @property
    def conditions(self) -> int:
        return self.precondition + self.trigger + self.time


@dataclass(frozen=True)
class Recommendation:
    pattern: str | None
    frequencies: SegmentFrequencies
    rationale: str


@dataclass
class Diagnostic:
    id: str
    segments: list[Segment]
    findings: list[SmellFinding]
    recommendation: Recommendation | None = None

    def smell_kinds(self) -> frozenset[SmellKind]:
        return frozenset(f.kind for f in self.findings)
