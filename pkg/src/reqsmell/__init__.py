"""reqsmell: a quality linter for natural-language functional requirements.

The pipeline segments each requirement into scope / condition / system
response, detects nine quality smells, and recommends one of ten rewrite
patterns; an evaluation harness scores results against annotated ground
truth.
"""

from .corpus import read_corpus, read_diagnostics, read_gold, write_diagnostics
from .evaluation import evaluate_patterns, evaluate_smells
from .model import (
    AnnotatedRequirement,
    ConditionType,
    Diagnostic,
    GroundTruthEntry,
    LayoutMark,
    Recommendation,
    Segment,
    SegmentFrequencies,
    SegmentKind,
    SmellFinding,
    SmellKind,
    Token,
)
from .pipeline import AnalysisConfig, analyze, analyze_corpus
from .recommend import count_frequencies, match_pattern, recommend
from .segmenter import classify_condition, segment
from .smells import detect
from .tquery import compile_query, find_matches
from .tree import leaves, parse_ptb, render_ptb

__all__ = [
    "AnalysisConfig",
    "AnnotatedRequirement",
    "ConditionType",
    "Diagnostic",
    "GroundTruthEntry",
    "LayoutMark",
    "Recommendation",
    "Segment",
    "SegmentFrequencies",
    "SegmentKind",
    "SmellFinding",
    "SmellKind",
    "Token",
    "analyze",
    "analyze_corpus",
    "classify_condition",
    "compile_query",
    "count_frequencies",
    "detect",
    "evaluate_patterns",
    "evaluate_smells",
    "find_matches",
    "leaves",
    "match_pattern",
    "parse_ptb",
    "read_corpus",
    "read_diagnostics",
    "read_gold",
    "recommend",
    "render_ptb",
    "segment",
    "write_diagnostics",
]

__version__ = "0.1.0"
