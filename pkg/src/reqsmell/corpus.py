"""JSONL readers and writers for corpora, ground truth, and diagnostics.

Formats are one UTF-8 JSON object per line, LF-terminated, with
lowercase snake_case field names and enum values.  Serialization uses a
fixed key order so a read-write cycle is byte identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from .model import (
    AnnotatedRequirement,
    ConditionType,
    Diagnostic,
    GroundTruthEntry,
    LayoutMark,
    MarkKind,
    Recommendation,
    RIMAY_PATTERN_IDS,
    Segment,
    SegmentFrequencies,
    SegmentKind,
    SmellFinding,
    SmellKind,
    Token,
)
from .tree import TreeParseError, leaf_texts, parse_ptb


class CorpusError(ValueError):
    pass


def _iter_jsonl(path):
    path = Path(path)
    with path.open(encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                yield lineno, json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}: line {lineno}: malformed JSON: {exc}") from exc


def validate_requirement(req: AnnotatedRequirement) -> None:
    """Check per-record invariants; raises CorpusError naming the id."""
    if not req.tokens:
        raise CorpusError(f"{req.id}: requirement has no tokens")
    for position, token in enumerate(req.tokens):
        if not token.text:
            raise CorpusError(f"{req.id}: token {position} has empty text")
        if not token.pos:
            raise CorpusError(f"{req.id}: token {position} has empty pos")
        if token.index != position:
            raise CorpusError(
                f"{req.id}: token index {token.index} does not match position {position}"
            )
    for mark in req.marks:
        if not 0 <= mark.before_token <= len(req.tokens):
            raise CorpusError(
                f"{req.id}: layout mark before_token {mark.before_token} out of range"
            )
    if req.tree is not None:
        try:
            root = parse_ptb(req.tree)
        except TreeParseError as exc:
            raise CorpusError(f"{req.id}: bad tree: {exc}") from exc
        words = leaf_texts(root)
        texts = [t.text for t in req.tokens]
        if words != texts:
            raise CorpusError(
                f"{req.id}: tree leaves do not align with tokens "
                f"({len(words)} leaves vs {len(texts)} tokens)"
            )


def _requirement_from_record(record: dict, lineno: int) -> AnnotatedRequirement:
    try:
        if not isinstance(record.get("id"), str) or not record["id"]:
            raise ValueError("id must be a non-empty string")
        if not isinstance(record.get("text"), str):
            raise ValueError("text must be a string")
        tokens = [
            Token(
                text=tok["text"],
                lemma=str(tok["lemma"]).lower(),
                pos=tok["pos"],
                index=tok.get("index", position),
            )
            for position, tok in enumerate(record["tokens"])
        ]
        marks = [
            LayoutMark(kind=MarkKind(m["kind"]), before_token=m["before_token"])
            for m in record.get("marks", [])
        ]
        return AnnotatedRequirement(
            id=record["id"],
            text=record["text"],
            tokens=tokens,
            tree=record.get("tree"),
            marks=marks,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CorpusError(f"line {lineno}: bad requirement record: {exc}") from exc


def read_corpus(path) -> list[AnnotatedRequirement]:
    requirements = []
    seen = set()
    for lineno, record in _iter_jsonl(path):
        req = _requirement_from_record(record, lineno)
        if req.id in seen:
            raise CorpusError(f"line {lineno}: duplicate id {req.id!r}")
        seen.add(req.id)
        validate_requirement(req)
        requirements.append(req)
    return requirements


def read_gold(path) -> list[GroundTruthEntry]:
    entries = []
    for lineno, record in _iter_jsonl(path):
        smells = set()
        for name in record.get("smells", []):
            try:
                smells.add(SmellKind(name))
            except ValueError:
                raise CorpusError(f"line {lineno}: unknown smell {name!r}") from None
        pattern = record.get("pattern")
        if pattern is not None and pattern not in RIMAY_PATTERN_IDS:
            raise CorpusError(f"line {lineno}: unknown pattern {pattern!r}")
        entries.append(
            GroundTruthEntry(id=record["id"], smells=frozenset(smells), pattern=pattern)
        )
    return entries


# ---------------------------------------------------------------------------
# Diagnostics

def _segment_to_dict(seg: Segment) -> dict:
    out = {"kind": seg.kind.value, "span": [seg.start, seg.end], "source": seg.source}
    if seg.condition_type is not None:
        out["condition_type"] = seg.condition_type.value
    return out


def _finding_to_dict(finding: SmellFinding) -> dict:
    out = {"kind": finding.kind.value}
    if finding.segment_index is not None:
        out["segment_index"] = finding.segment_index
    out["span"] = [finding.span[0], finding.span[1]]
    out["technique"] = finding.technique
    return out


def _recommendation_to_dict(rec: Recommendation) -> dict:
    freq = rec.frequencies
    return {
        "pattern": rec.pattern,
        "frequencies": {
            "scope": freq.scope,
            "precondition": freq.precondition,
            "trigger": freq.trigger,
            "time": freq.time,
            "system_response": freq.system_response,
            "incomplete_condition": freq.incomplete_condition,
            "incomplete_system_response": freq.incomplete_system_response,
        },
        "rationale": rec.rationale,
    }


def diagnostic_to_dict(diag: Diagnostic) -> dict:
    return {
        "id": diag.id,
        "segments": [_segment_to_dict(s) for s in diag.segments],
        "findings": [_finding_to_dict(f) for f in diag.findings],
        "recommendation": (
            _recommendation_to_dict(diag.recommendation)
            if diag.recommendation is not None
            else None
        ),
    }


def diagnostic_from_dict(record: dict) -> Diagnostic:
    segments = [
        Segment(
            kind=SegmentKind(s["kind"]),
            span=(s["span"][0], s["span"][1]),
            source=s["source"],
            condition_type=(
                ConditionType(s["condition_type"]) if "condition_type" in s else None
            ),
        )
        for s in record["segments"]
    ]
    findings = [
        SmellFinding(
            kind=SmellKind(f["kind"]),
            segment_index=f.get("segment_index"),
            span=(f["span"][0], f["span"][1]),
            technique=f["technique"],
        )
        for f in record["findings"]
    ]
    recommendation = None
    if record.get("recommendation") is not None:
        rec = record["recommendation"]
        recommendation = Recommendation(
            pattern=rec["pattern"],
            frequencies=SegmentFrequencies(**rec["frequencies"]),
            rationale=rec["rationale"],
        )
    return Diagnostic(
        id=record["id"], segments=segments, findings=findings, recommendation=recommendation
    )


def write_diagnostics(diags: list[Diagnostic], path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8") as handle:
        for diag in diags:
            handle.write(json.dumps(diagnostic_to_dict(diag), ensure_ascii=False))
            handle.write("\n")


def read_diagnostics(path) -> list[Diagnostic]:
    return [diagnostic_from_dict(record) for _, record in _iter_jsonl(path)]
