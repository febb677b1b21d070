"""Property tests over randomly generated token streams."""

from hypothesis import given, strategies as st

from reqsmell.model import AnnotatedRequirement, Segment, SegmentKind, SmellKind, Token
from reqsmell.segmenter import annotate_condition_types, segment
from reqsmell.smells import detect, match_structural

POS_POOL = [
    "NN", "NNS", "NNP", "PRP", "DT", "JJ", "RB", "IN", "TO", "CC",
    "MD", "VB", "VBZ", "VBP", "VBD", "VBG", "VBN", "WRB", ",", ".", ":", "SYM",
]
WORD_POOL = [
    "when", "if", "for", "then", "or", "and", "not", "once", "upon", "while",
    "System-A", "order", "request", "is", "has", "been", "taken", "send",
    "must", "the", "each", "all", ";", ",", ".", "=",
]


def tokens_strategy(min_size=1, max_size=18):
    pair = st.tuples(st.sampled_from(WORD_POOL), st.sampled_from(POS_POOL))
    return st.lists(pair, min_size=min_size, max_size=max_size).map(
        lambda pairs: [
            Token(text=w, lemma={"is": "be", "been": "be", "has": "have", "taken": "take"}.get(w, w.lower()), pos=p, index=i)
            for i, (w, p) in enumerate(pairs)
        ]
    )


@given(tokens_strategy())
def test_degraded_segmentation_is_total_and_ordered(tokens):
    req = AnnotatedRequirement(id="r", text="", tokens=tokens)
    segs = segment(req)
    assert all(s.source in ("splitter", "residual") for s in segs)
    for left, right in zip(segs, segs[1:]):
        assert left.end <= right.start
    for s in segs:
        assert 0 <= s.start < s.end <= len(tokens)
        if s.kind is SegmentKind.NOT_MATCHED:
            assert s.source == "residual"


@given(tokens_strategy())
def test_degraded_detection_never_crashes(tokens):
    req = AnnotatedRequirement(id="r", text="", tokens=tokens)
    segs = annotate_condition_types(segment(req), req)
    findings = detect(req, segs)
    kinds = {f.kind for f in findings}
    if SmellKind.NOT_A_REQUIREMENT in kinds:
        assert kinds == {SmellKind.NOT_A_REQUIREMENT}


@given(tokens_strategy())
def test_passive_patterns_require_a_past_participle(tokens):
    req = AnnotatedRequirement(id="r", text="", tokens=tokens)
    seg = Segment(SegmentKind.SYSTEM_RESPONSE, (0, len(tokens)), "splitter")
    findings = match_structural(seg, req.tokens)
    if not any(t.pos == "VBN" for t in tokens):
        assert SmellKind.PASSIVE_VOICE not in {f.kind for f in findings}


@given(st.integers(min_value=0, max_value=100_000))
def test_full_pipeline_is_well_formed_on_random_trees(seed):
    import random

    from reqsmell.pipeline import analyze
    from reqsmell.tree import leaves, render_ptb

    from generators import random_tree

    tree = random_tree(random.Random(seed))
    tokens = [
        Token(text=leaf.label, lemma=leaf.label.lower(), pos=leaf.parent.label, index=i)
        for i, leaf in enumerate(leaves(tree))
    ]
    req = AnnotatedRequirement(id="r", text="", tokens=tokens, tree=render_ptb(tree))
    diag = analyze(req)

    for seg in diag.segments:
        assert 0 <= seg.start < seg.end <= len(tokens)
    for left, right in zip(diag.segments, diag.segments[1:]):
        assert left.end <= right.start
    keys = [(f.kind, f.segment_index) for f in diag.findings]
    assert len(keys) == len(set(keys))
    rec = diag.recommendation
    assert rec is not None
    not_a_requirement = SmellKind.NOT_A_REQUIREMENT in {f.kind for f in diag.findings}
    assert (rec.pattern is None) == not_a_requirement
