"""Smell detection: tree queries, structural POS patterns, requirement-level
rules, and glossary search, unioned per requirement.

Requirement-level smells carry no segment index; segment-level smells carry
one.  A requirement in which nothing was recognized, not even an incomplete
segment, is "not a requirement", and that smell excludes every other.
"""

from __future__ import annotations

from functools import lru_cache

from .model import (
    AnnotatedRequirement,
    Segment,
    SegmentKind,
    SmellFinding,
    SmellKind,
    Token,
)
from .resources import (
    DEFAULT_GLOSSARY,
    DEFAULT_KEYWORDS,
    KeywordConfig,
    load_structural_patterns,
    load_tregex_patterns,
)
from .tquery import compile_query, find_matches
from .tree import TreeNode, TreeParseError, parse_ptb

_BE_HAVE = frozenset({"be", "have"})
_BASE_OR_PRESENT = frozenset({"VB", "VBP", "VBZ"})

# Patterns whose v1 means "any base or finite verb" rather than be|have.
_RELAXED_V1 = frozenset({10, 12, 13})

# Patterns whose trailing "other" symbol stands in for a missing verb; they
# stay quiet when the segment still has a verb later on.
_MISSING_VERB_NUMBERS = frozenset({11, 14})

_PASSIVE_NUMBERS = range(1, 9)
_INCOMPLETE_CONDITION_NUMBERS = range(9, 12)
_INCOMPLETE_RESPONSE_NUMBERS = range(12, 15)

TECHNIQUES = ("tregex", "structural", "rule", "glossary")


@lru_cache(maxsize=1)
def _incomplete_condition_queries():
    return [
        (entry["id"], compile_query(entry["query"]))
        for entry in load_tregex_patterns()
        if entry["segment"] == "incomplete_condition"
    ]


@lru_cache(maxsize=1)
def _structural_table():
    return {p["number"]: p for p in load_structural_patterns()}


def _is_noun(tok: Token) -> bool:
    return tok.pos.startswith("NN") or tok.pos == "PRP"


def _is_verb(tok: Token) -> bool:
    return tok.pos.startswith("VB") or tok.pos == "MD"


def _symbol_matches(symbol: str, tok: Token, number: int) -> bool:
    if symbol == "v1":
        if number in _RELAXED_V1:
            return tok.pos.startswith("VB") and tok.pos not in ("VBN", "VBG")
        return tok.pos in _BASE_OR_PRESENT and tok.lemma in _BE_HAVE
    if symbol == "v2":
        return tok.pos == "VBD" and tok.lemma in _BE_HAVE
    if symbol == "v3":
        return tok.pos == "VBN" and tok.lemma == "be"
    if symbol == "v4":
        return tok.pos == "VBN"
    if symbol == "adv":
        return tok.text.lower() == "not"
    if symbol == "n1":
        return _is_noun(tok)
    if symbol == "md":
        return tok.pos == "MD"
    if symbol == "o1":
        return not _is_noun(tok) and not _is_verb(tok)
    if symbol == "o2":
        return not _is_verb(tok)
    if symbol == "o3":
        return not _is_noun(tok)
    raise ValueError(f"unknown structural symbol {symbol!r}")


# ---------------------------------------------------------------------------
# Technique 1: tree queries for incomplete conditions

def detect_incomplete_condition_tregex(
    seg: Segment, tree: TreeNode, segment_index: int | None = None
) -> SmellFinding | None:
    """IC1/IC2 match inside the segment span marks the condition incomplete."""
    if seg.kind not in (SegmentKind.CONDITION, SegmentKind.NOT_MATCHED):
        return None
    for pattern_id, query in _incomplete_condition_queries():
        for match in find_matches(query, tree):
            if seg.start <= match.span[0] and match.span[1] <= seg.end:
                return SmellFinding(
                    kind=SmellKind.INCOMPLETE_CONDITION,
                    segment_index=segment_index,
                    span=match.span,
                    technique=f"tregex:{pattern_id}",
                )
    return None


# ---------------------------------------------------------------------------
# Technique 2: structural POS patterns

def _reduced_view(tokens: list[Token], start: int, end: int) -> list[tuple[Token, Token]]:
    """Reduced token cells: determiners, adjectives, non-'not' adverbs and
    possessives dropped; runs of originally-consecutive nouns collapse to
    one cell.  Each cell is (first token, last token)."""
    cells: list[tuple[Token, Token]] = []
    for i in range(start, end):
        tok = tokens[i]
        if tok.pos in ("DT", "PDT", "POS", "PRP$"):
            continue
        if tok.pos.startswith("JJ"):
            continue
        if tok.pos.startswith("RB") and tok.text.lower() != "not":
            continue
        if _is_noun(tok) and cells:
            prev_first, prev_last = cells[-1]
            if _is_noun(prev_last) and prev_last.index == tok.index - 1:
                cells[-1] = (prev_first, tok)
                continue
        cells.append((tok, tok))
    return cells


def _prefix_match(sequence: list[str], cells, number: int) -> tuple[int, int] | None:
    if not sequence or len(cells) < len(sequence):
        return None
    for symbol, (first, _last) in zip(sequence, cells):
        if not _symbol_matches(symbol, first, number):
            return None
    last_tok = cells[len(sequence) - 1][1]
    return (cells[0][0].index, last_tok.index + 1)


def _contiguous_match(sequence: list[str], tokens, start: int, end: int, number: int):
    width = len(sequence)
    for i in range(start, end - width + 1):
        if all(
            _symbol_matches(sym, tokens[i + k], number) for k, sym in enumerate(sequence)
        ):
            return (i, i + width)
    return None


def _passive_findings(seg, tokens, segment_index):
    if seg.kind not in (SegmentKind.CONDITION, SegmentKind.SYSTEM_RESPONSE):
        return []
    table = _structural_table()
    findings = []
    for number in _PASSIVE_NUMBERS:
        hit = _contiguous_match(table[number]["sequence"], tokens, seg.start, seg.end, number)
        if hit:
            findings.append(
                SmellFinding(SmellKind.PASSIVE_VOICE, segment_index, hit, f"structural:{number}")
            )
    return findings


def _verb_later(tokens, start: int, end: int) -> bool:
    return any(tokens[i].pos.startswith("VB") for i in range(start, end))


def _incomplete_condition_structural(seg, tokens, keywords, segment_index):
    if seg.kind not in (SegmentKind.CONDITION, SegmentKind.NOT_MATCHED):
        return []
    if seg.start >= seg.end or tokens[seg.start].text.lower() not in keywords.condition_starters:
        return []
    table = _structural_table()
    cells = _reduced_view(tokens, seg.start + 1, seg.end)
    findings = []
    for number in _INCOMPLETE_CONDITION_NUMBERS:
        sequence = table[number]["sequence"][1:]  # the sc symbol is the starter itself
        hit = _prefix_match(sequence, cells, number)
        if hit is None:
            continue
        if number in _MISSING_VERB_NUMBERS and _verb_later(tokens, hit[1], seg.end):
            continue
        findings.append(
            SmellFinding(
                SmellKind.INCOMPLETE_CONDITION,
                segment_index,
                (seg.start, hit[1]),
                f"structural:{number}",
            )
        )
    return findings


def _incomplete_response_structural(
    seg, tokens, keywords, segment_index, bare_checks=True, break_positions=frozenset()
):
    if seg.kind not in (SegmentKind.SYSTEM_RESPONSE, SegmentKind.NOT_MATCHED):
        return []
    if seg.start >= seg.end:
        return []
    first = tokens[seg.start].text.lower()
    starter_led = first in keywords.system_response_starters or seg.start in break_positions
    if seg.kind is SegmentKind.NOT_MATCHED and not starter_led and not bare_checks:
        return []
    body = seg.start + (1 if first in keywords.system_response_starters else 0)
    table = _structural_table()
    cells = _reduced_view(tokens, body, seg.end)
    findings = []
    for number in _INCOMPLETE_RESPONSE_NUMBERS:
        hit = _prefix_match(table[number]["sequence"], cells, number)
        if hit is None:
            continue
        if number in _MISSING_VERB_NUMBERS and _verb_later(tokens, hit[1], seg.end):
            continue
        findings.append(
            SmellFinding(
                SmellKind.INCOMPLETE_SYSTEM_RESPONSE,
                segment_index,
                hit,
                f"structural:{number}",
            )
        )
    return findings


def match_structural(
    seg: Segment,
    tokens: list[Token],
    keywords: KeywordConfig = DEFAULT_KEYWORDS,
    segment_index: int | None = None,
    bare_response_checks: bool = True,
    break_positions: frozenset[int] = frozenset(),
) -> list[SmellFinding]:
    """Fire every applicable word-sequence pattern on one segment.

    ``bare_response_checks=False`` keeps the response patterns away from
    unmatched spans that neither start with a response keyword nor sit at
    a line break; the detector disables them while deciding whether a
    statement is a requirement at all.
    """
    return (
        _passive_findings(seg, tokens, segment_index)
        + _incomplete_condition_structural(seg, tokens, keywords, segment_index)
        + _incomplete_response_structural(
            seg, tokens, keywords, segment_index, bare_response_checks, break_positions
        )
    )


# ---------------------------------------------------------------------------
# Technique 3: requirement-level rules

def apply_requirement_rules(
    segs: list[Segment], tokens: list[Token], keywords: KeywordConfig = DEFAULT_KEYWORDS
) -> list[SmellFinding]:
    findings: list[SmellFinding] = []
    whole = (0, len(tokens))
    responses = [s for s in segs if s.kind is SegmentKind.SYSTEM_RESPONSE]
    conditions = [s for s in segs if s.kind is SegmentKind.CONDITION]
    scopes = [s for s in segs if s.kind is SegmentKind.SCOPE]

    if len(responses) > 1:
        span = (responses[0].start, responses[-1].end)
        findings.append(SmellFinding(SmellKind.NON_ATOMIC, None, span, "rule:non_atomic"))

    if not responses and (scopes or conditions):
        findings.append(
            SmellFinding(
                SmellKind.INCOMPLETE_REQUIREMENT, None, whole, "rule:incomplete_requirement"
            )
        )

    late = [c for c in conditions if any(c.start >= r.end for r in responses)]
    if late:
        findings.append(
            SmellFinding(SmellKind.INCORRECT_ORDER, None, late[0].span, "rule:incorrect_order")
        )

    if len(conditions) >= 2:
        hit = _or_between_adjacent_conditions(segs, tokens)
        if hit is not None:
            findings.append(
                SmellFinding(
                    SmellKind.COORDINATION_AMBIGUITY, None, hit, "rule:coordination_ambiguity"
                )
            )

    if segs and all(s.kind is SegmentKind.NOT_MATCHED for s in segs):
        findings.append(
            SmellFinding(SmellKind.NOT_A_REQUIREMENT, None, whole, "rule:not_a_requirement")
        )
    return findings


def _or_between_adjacent_conditions(segs, tokens) -> tuple[int, int] | None:
    """Span of the first 'or' separating two consecutive condition segments."""
    ordered = sorted(segs, key=lambda s: s.span)
    for left, right in zip(ordered, ordered[1:]):
        if left.kind is not SegmentKind.CONDITION or right.kind is not SegmentKind.CONDITION:
            continue
        for i in range(left.end, right.start):
            if tokens[i].text.lower() == "or":
                return (i, i + 1)
    return None


# ---------------------------------------------------------------------------
# Technique 4: glossary search

def glossary_hits(
    seg: Segment,
    tokens: list[Token],
    glossary: frozenset[str] = DEFAULT_GLOSSARY,
    segment_index: int | None = None,
) -> list[SmellFinding]:
    """One imprecise-verb finding per verb token whose lemma is listed."""
    if seg.kind not in (SegmentKind.CONDITION, SegmentKind.SYSTEM_RESPONSE):
        return []
    findings = []
    for i in range(seg.start, seg.end):
        tok = tokens[i]
        if tok.pos.startswith("VB") and tok.lemma in glossary:
            findings.append(
                SmellFinding(
                    SmellKind.NOT_PRECISE_VERB, segment_index, (i, i + 1), f"glossary:{tok.lemma}"
                )
            )
    return findings


# ---------------------------------------------------------------------------
# Union

def detect(
    req: AnnotatedRequirement,
    segs: list[Segment],
    glossary: frozenset[str] = DEFAULT_GLOSSARY,
    keywords: KeywordConfig = DEFAULT_KEYWORDS,
    techniques: frozenset[str] = frozenset(TECHNIQUES),
) -> list[SmellFinding]:
    """All findings for one requirement, deduplicated per (kind, segment).

    ``techniques`` exists so tests can verify the union is independent;
    normal callers leave it alone.
    """
    tokens = req.tokens
    tree = None
    if req.tree is not None:
        try:
            tree = parse_ptb(req.tree)
        except TreeParseError:
            tree = None

    tregex_findings: list[SmellFinding] = []
    if tree is not None and "tregex" in techniques:
        for index, seg in enumerate(segs):
            finding = detect_incomplete_condition_tregex(seg, tree, index)
            if finding is not None:
                tregex_findings.append(finding)

    # an empty segment list (nothing but separators) is as unrecognized as
    # a list of unmatched spans
    all_unmatched = all(s.kind is SegmentKind.NOT_MATCHED for s in segs)
    break_positions = frozenset(m.before_token for m in req.marks)
    structural_findings: list[SmellFinding] = []
    if "structural" in techniques:
        for index, seg in enumerate(segs):
            structural_findings.extend(
                match_structural(
                    seg,
                    tokens,
                    keywords,
                    index,
                    bare_response_checks=not all_unmatched,
                    break_positions=break_positions,
                )
            )

    if all_unmatched and not tregex_findings and not structural_findings:
        if "rule" not in techniques:
            return []
        return [
            SmellFinding(
                SmellKind.NOT_A_REQUIREMENT, None, (0, len(tokens)), "rule:not_a_requirement"
            )
        ]

    rule_findings: list[SmellFinding] = []
    if "rule" in techniques:
        rule_findings = [
            f
            for f in apply_requirement_rules(segs, tokens, keywords)
            if f.kind is not SmellKind.NOT_A_REQUIREMENT
        ]

    glossary_findings: list[SmellFinding] = []
    if "glossary" in techniques:
        for index, seg in enumerate(segs):
            glossary_findings.extend(glossary_hits(seg, tokens, glossary, index))

    unique: dict[tuple[SmellKind, int | None], SmellFinding] = {}
    for finding in tregex_findings + structural_findings + rule_findings + glossary_findings:
        unique.setdefault((finding.kind, finding.segment_index), finding)
    return list(unique.values())
