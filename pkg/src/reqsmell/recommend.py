"""Map a requirement's segment profile to one of the ten rewrite patterns.

Counts run over classified segments plus incomplete ones flagged by the
detector: an unmatched span flagged as an incomplete condition counts as a
condition of inferred type, and one flagged as an incomplete response
counts as a response.  Multiple responses clamp to one (atomic rewrite);
multiple conditions of any mix route to the "2 or more" rows.
"""

from __future__ import annotations

from .model import (
    AnnotatedRequirement,
    ConditionType,
    Recommendation,
    Segment,
    SegmentFrequencies,
    SegmentKind,
    SmellFinding,
    SmellKind,
    Token,
)
from .resources import (
    DEFAULT_GLOSSARY,
    DEFAULT_KEYWORDS,
    KeywordConfig,
    load_rimay_catalog,
)
from .segmenter import annotate_condition_types, classify_condition, segment
from .smells import detect

_OPERATOR_LEMMAS = frozenset({"contain", "have"})


def _inferred_condition_type(
    finding: SmellFinding, seg: Segment, tokens: list[Token] | None
) -> ConditionType:
    """Type of an incomplete condition that never segmented as a condition."""
    if finding.technique == "tregex:IC2":
        # A nominalized action ("upon reception of ...") names an event.
        return ConditionType.TRIGGER
    if finding.technique == "tregex:IC1" and tokens is not None:
        gerunds = [
            t for t in tokens[seg.start : seg.end] if t.pos == "VBG" and t.lemma in _OPERATOR_LEMMAS
        ]
        return ConditionType.PRECONDITION if gerunds else ConditionType.TRIGGER
    if tokens is not None:
        fake = Segment(SegmentKind.CONDITION, seg.span, seg.source)
        req = AnnotatedRequirement(id="", text="", tokens=tokens)
        return classify_condition(fake, req)
    return ConditionType.TRIGGER


def count_frequencies(
    segs: list[Segment],
    findings: list[SmellFinding],
    tokens: list[Token] | None = None,
) -> SegmentFrequencies:
    ic_by_segment = {
        f.segment_index: f
        for f in findings
        if f.kind is SmellKind.INCOMPLETE_CONDITION and f.segment_index is not None
    }
    isr_segments = {
        f.segment_index
        for f in findings
        if f.kind is SmellKind.INCOMPLETE_SYSTEM_RESPONSE and f.segment_index is not None
    }

    scope = 0
    responses = 0
    by_type = {t: 0 for t in ConditionType}
    for index, seg in enumerate(segs):
        if seg.kind is SegmentKind.SCOPE:
            scope += 1
        elif seg.kind is SegmentKind.SYSTEM_RESPONSE:
            responses += 1
        elif seg.kind is SegmentKind.CONDITION:
            by_type[seg.condition_type or ConditionType.UNKNOWN] += 1
        elif seg.kind is SegmentKind.NOT_MATCHED:
            if index in ic_by_segment:
                by_type[_inferred_condition_type(ic_by_segment[index], seg, tokens)] += 1
            elif index in isr_segments:
                responses += 1

    return SegmentFrequencies(
        scope=scope,
        precondition=by_type[ConditionType.PRECONDITION],
        # Verbless conditions have no clearer home than the event row.
        trigger=by_type[ConditionType.TRIGGER] + by_type[ConditionType.UNKNOWN],
        time=by_type[ConditionType.TIME],
        system_response=responses,
        incomplete_condition=len(ic_by_segment),
        incomplete_system_response=len(isr_segments),
    )


def match_pattern(freq: SegmentFrequencies) -> str | None:
    """Frequency-table lookup; scope and response counts clamp to one."""
    scope = min(freq.scope, 1)
    conditions = freq.conditions
    if conditions >= 2:
        return "P9" if scope else "P10"
    if conditions == 1:
        if freq.precondition:
            return "P2" if scope else "P6"
        if freq.trigger:
            return "P3" if scope else "P7"
        return "P4" if scope else "P8"
    if scope:
        return "P1"
    if freq.system_response > 0:
        return "P5"
    return None


def _rationale(pattern: str | None, freq: SegmentFrequencies) -> str:
    if pattern is None:
        return "no scope, condition, or system response recognized; not a requirement"
    parts = []
    if freq.scope > 1:
        parts.append(f"scope clamped {freq.scope}→1")
    elif freq.scope:
        parts.append("scope×1")
    for name, count in (
        ("precondition", freq.precondition),
        ("trigger", freq.trigger),
        ("time", freq.time),
    ):
        if count:
            parts.append(f"{name}×{count}")
    if freq.system_response > 1:
        parts.append(f"SR clamped {freq.system_response}→1")
    elif freq.system_response:
        parts.append("SR×1")
    else:
        parts.append("no SR segment")
    if freq.incomplete_condition:
        parts.append(f"incomplete condition×{freq.incomplete_condition} counted")
    if freq.incomplete_system_response:
        parts.append(f"incomplete SR×{freq.incomplete_system_response} counted")
    name = load_rimay_catalog()[pattern]["name"]
    return f"{pattern} ({name}): " + ", ".join(parts)


def recommend(
    req: AnnotatedRequirement,
    keywords: KeywordConfig = DEFAULT_KEYWORDS,
    glossary: frozenset[str] = DEFAULT_GLOSSARY,
) -> Recommendation:
    """Full pipeline for one requirement: segment, detect, count, match."""
    segs = annotate_condition_types(segment(req, keywords), req)
    findings = detect(req, segs, glossary, keywords)
    return recommend_from_analysis(req, segs, findings)


def recommend_from_analysis(
    req: AnnotatedRequirement, segs: list[Segment], findings: list[SmellFinding]
) -> Recommendation:
    freq = count_frequencies(segs, findings, req.tokens)
    if any(f.kind is SmellKind.NOT_A_REQUIREMENT for f in findings):
        return Recommendation(None, freq, _rationale(None, freq))
    pattern = match_pattern(freq)
    return Recommendation(pattern, freq, _rationale(pattern, freq))
