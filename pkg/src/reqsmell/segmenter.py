"""Separate a requirement into scope / condition / system-response segments.

Tree queries run first; whatever they leave uncovered goes to the keyword
splitter; leftover content becomes Not-Matched segments.  Separator tokens
(commas, "and", "then", ...) stay outside all segment spans so the
coordination rule can inspect them later.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .model import (
    AnnotatedRequirement,
    ConditionType,
    Segment,
    SegmentKind,
    Token,
)
from .resources import DEFAULT_KEYWORDS, KeywordConfig, load_tregex_patterns
from .tquery import compile_query, find_matches, sister_chain_depth
from .tree import TreeNode, TreeParseError, parse_ptb

_SEGMENT_KIND_BY_TABLE = {
    "scope": SegmentKind.SCOPE,
    "condition": SegmentKind.CONDITION,
    "condition_time": SegmentKind.CONDITION,
    "system_response": SegmentKind.SYSTEM_RESPONSE,
}

_WORD_RE = re.compile(r"[A-Za-z0-9]")


@lru_cache(maxsize=1)
def _compiled_patterns():
    compiled = []
    for entry in load_tregex_patterns():
        if entry["segment"] == "incomplete_condition":
            continue  # detector patterns, not segmentation patterns
        query = compile_query(entry["query"])
        compiled.append(
            {
                "id": entry["id"],
                "kind": _SEGMENT_KIND_BY_TABLE[entry["segment"]],
                "time": entry["segment"] == "condition_time",
                "query": query,
                "chain": sister_chain_depth(query),
            }
        )
    return compiled


def _is_noun(tok: Token) -> bool:
    return tok.pos.startswith("NN") or tok.pos == "PRP"


def _is_verb(tok: Token) -> bool:
    return tok.pos.startswith("VB")


def _is_modal(tok: Token) -> bool:
    return tok.pos == "MD"


def _is_filler(tok: Token, keywords: KeywordConfig) -> bool:
    """Separator words and punctuation; never part of a segment edge."""
    return tok.text.lower() in keywords.separators or not _WORD_RE.search(tok.text)


def _extended_span(node: TreeNode, chain: int) -> tuple[int, int]:
    """Widen a match over the next ``chain`` siblings its $+ chain names."""
    start = node.leaf_span[0]
    end = node.leaf_span[1]
    current = node
    for _ in range(chain):
        parent = current.parent
        if parent is None or current.child_index + 1 >= len(parent.children):
            break
        current = parent.children[current.child_index + 1]
        end = current.leaf_span[1]
    return (start, end)


def _strictly_contains(outer: tuple[int, int], inner: tuple[int, int]) -> bool:
    return outer[0] <= inner[0] and inner[1] <= outer[1] and outer != inner


class _Claims:
    def __init__(self, size: int):
        self.taken = [False] * size

    def overlaps(self, span: tuple[int, int]) -> bool:
        return any(self.taken[span[0] : span[1]])

    def clip(self, span: tuple[int, int]) -> tuple[int, int] | None:
        start, end = span
        if start >= end or self.taken[start]:
            return None
        cursor = start
        while cursor < end and not self.taken[cursor]:
            cursor += 1
        return (start, cursor)

    def claim(self, span: tuple[int, int]) -> None:
        for i in range(span[0], span[1]):
            self.taken[i] = True

    def uncovered_runs(self) -> list[tuple[int, int]]:
        runs = []
        start = None
        for i, taken in enumerate(self.taken):
            if not taken and start is None:
                start = i
            elif taken and start is not None:
                runs.append((start, i))
                start = None
        if start is not None:
            runs.append((start, len(self.taken)))
        return runs


def segment(
    req: AnnotatedRequirement, keywords: KeywordConfig = DEFAULT_KEYWORDS
) -> list[Segment]:
    """Split one requirement into ordered, disjoint segments."""
    if not req.tokens:
        raise ValueError(f"{req.id}: requirement has no tokens")

    claims = _Claims(len(req.tokens))
    segments: list[Segment] = []

    tree = None
    if req.tree is not None:
        try:
            tree = parse_ptb(req.tree)
        except TreeParseError:
            tree = None  # degraded mode: keyword splitter only
        if tree is not None and tree.leaf_span[1] != len(req.tokens):
            tree = None  # misaligned tree: spans would not index the tokens

    if tree is not None:
        segments.extend(_tregex_segments(tree, claims))

    for run in claims.uncovered_runs():
        segments.extend(_split_run(req, run, claims, keywords))

    segments.sort(key=lambda s: s.span)
    return segments


def _tregex_segments(tree: TreeNode, claims: _Claims) -> list[Segment]:
    patterns = _compiled_patterns()
    segments: list[Segment] = []

    # Scope and condition patterns claim first, outermost span wins.
    candidates = []
    for pat in patterns:
        if pat["kind"] is SegmentKind.SYSTEM_RESPONSE:
            continue
        for match in find_matches(pat["query"], tree):
            candidates.append((pat, _extended_span(match.node, pat["chain"])))
    spans = [span for _, span in candidates]
    for pat, span in candidates:
        if any(_strictly_contains(other, span) for other in spans):
            continue
        if claims.overlaps(span):
            continue
        claims.claim(span)
        segments.append(
            Segment(
                kind=pat["kind"],
                span=span,
                source=f"tregex:{pat['id']}",
                condition_type=ConditionType.TIME if pat["time"] else None,
            )
        )

    # System responses widen from the actor NP through its VP sister and
    # split shared-subject VP coordination into one segment per action.
    sr = next(p for p in patterns if p["kind"] is SegmentKind.SYSTEM_RESPONSE)
    for match in find_matches(sr["query"], tree):
        for span in _response_spans(match.node):
            clipped = claims.clip(span)
            if clipped is None or clipped[0] >= clipped[1]:
                continue
            claims.claim(clipped)
            segments.append(
                Segment(kind=SegmentKind.SYSTEM_RESPONSE, span=clipped, source=f"tregex:{sr['id']}")
            )
    return segments


def _response_spans(np: TreeNode) -> list[tuple[int, int]]:
    parent = np.parent
    if parent is None or np.child_index + 1 >= len(parent.children):
        return [np.leaf_span]
    vp = parent.children[np.child_index + 1]
    conjuncts = _coordinated_actions(vp)
    if conjuncts:
        spans = [(np.leaf_span[0], conjuncts[0].leaf_span[1])]
        spans.extend(c.leaf_span for c in conjuncts[1:])
        return spans
    return [(np.leaf_span[0], vp.leaf_span[1])]


def _coordinated_actions(vp: TreeNode) -> list[TreeNode]:
    """VP conjuncts of the modal's complement, if it is a coordination."""
    action = None
    seen_modal = False
    for child in vp.children:
        if child.label == "MD":
            seen_modal = True
        elif seen_modal and child.label == "VP":
            action = child
            break
    if action is None:
        return []
    conjuncts = [c for c in action.children if c.label == "VP"]
    has_cc = any(c.label == "CC" for c in action.children)
    if len(conjuncts) >= 2 and has_cc:
        return conjuncts
    return []


# ---------------------------------------------------------------------------
# Keyword splitter

def _split_run(
    req: AnnotatedRequirement,
    run: tuple[int, int],
    claims: _Claims,
    keywords: KeywordConfig,
) -> list[Segment]:
    start, end = run
    cuts = {start}
    for i in range(start + 1, end):
        if req.tokens[i].text.lower() in keywords.all_starters:
            cuts.add(i)
    for mark in req.marks:
        if start < mark.before_token < end:
            cuts.add(mark.before_token)
    bounds = sorted(cuts) + [end]

    segments = []
    for a, b in zip(bounds, bounds[1:]):
        piece = _trim(req.tokens, a, b, keywords)
        if piece is None:
            continue
        seg = _validate_piece(req.tokens, piece, keywords)
        claims.claim(seg.span)
        segments.append(seg)
    return segments


def _trim(tokens, a: int, b: int, keywords: KeywordConfig) -> tuple[int, int] | None:
    # Leading starter keywords survive: pieces begin at cut keywords and the
    # starter anchors both validation and the structural patterns.
    while a < b and _is_filler(tokens[a], keywords) and tokens[a].text.lower() not in keywords.all_starters:
        a += 1
    while b > a and _is_filler(tokens[b - 1], keywords):
        b -= 1
    return (a, b) if a < b else None


def _validate_piece(
    tokens: list[Token], span: tuple[int, int], keywords: KeywordConfig
) -> Segment:
    a, b = span
    first = tokens[a].text.lower()

    if first in keywords.condition_starters:
        if _ordered_content(tokens, a + 1, b, [_is_noun, _is_verb]):
            return Segment(SegmentKind.CONDITION, span, "splitter")
    elif first in keywords.scope_starters:
        def quantifier(tok):
            return tok.lemma in keywords.quantifiers or tok.text.lower() in keywords.quantifiers

        if _ordered_content(tokens, a + 1, b, [quantifier, _is_noun]):
            return Segment(SegmentKind.SCOPE, span, "splitter")
    else:
        # The starter is optional for responses: pieces opened by a line
        # break or at the start of the requirement begin without one.
        body = a + 1 if first in keywords.system_response_starters else a
        if _ordered_content(tokens, body, b, [_is_noun, _is_modal, _is_verb]):
            return Segment(SegmentKind.SYSTEM_RESPONSE, span, "splitter")

    return Segment(SegmentKind.NOT_MATCHED, span, "residual")


def _ordered_content(tokens, start: int, end: int, predicates) -> bool:
    cursor = start
    for predicate in predicates:
        while cursor < end and not predicate(tokens[cursor]):
            cursor += 1
        if cursor >= end:
            return False
        cursor += 1
    return True


# ---------------------------------------------------------------------------
# Condition typing

_OPERATOR_RUNS = (("be", "equal", "to"), ("less", "or", "equal", "to"))
_OPERATOR_LEMMAS = frozenset({"contain", "have"})
_TIME_WORDS = frozenset({"before", "after"})


def classify_condition(seg: Segment, req: AnnotatedRequirement) -> ConditionType:
    """Type a condition segment as trigger, precondition, or time."""
    if seg.source == "tregex:C8" or seg.condition_type is ConditionType.TIME:
        return ConditionType.TIME
    tokens = req.tokens[seg.start : seg.end]
    if tokens and tokens[0].text.lower() in _TIME_WORDS:
        return ConditionType.TIME

    lemmas = [t.lemma for t in tokens]
    for run in _OPERATOR_RUNS:
        width = len(run)
        if any(tuple(lemmas[i : i + width]) == run for i in range(len(lemmas) - width + 1)):
            return ConditionType.PRECONDITION
    if any(_is_verb(t) and t.lemma in _OPERATOR_LEMMAS for t in tokens):
        return ConditionType.PRECONDITION

    if any(_is_verb(t) or _is_modal(t) for t in tokens):
        return ConditionType.TRIGGER
    return ConditionType.UNKNOWN


def annotate_condition_types(
    segments: list[Segment], req: AnnotatedRequirement
) -> list[Segment]:
    """Return segments with every condition's type filled in."""
    out = []
    for seg in segments:
        if seg.kind is SegmentKind.CONDITION:
            out.append(
                Segment(seg.kind, seg.span, seg.source, classify_condition(seg, req))
            )
        else:
            out.append(seg)
    return out
