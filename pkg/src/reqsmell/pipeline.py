"""End-to-end analysis of whole corpora."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .model import AnnotatedRequirement, Diagnostic
from .recommend import recommend_from_analysis
from .resources import DEFAULT_GLOSSARY, DEFAULT_KEYWORDS, KeywordConfig
from .segmenter import annotate_condition_types, segment
from .smells import detect


@dataclass(frozen=True)
class AnalysisConfig:
    keywords: KeywordConfig = field(default=DEFAULT_KEYWORDS)
    glossary: frozenset[str] = field(default=DEFAULT_GLOSSARY)


DEFAULT_CONFIG = AnalysisConfig()


def analyze(req: AnnotatedRequirement, config: AnalysisConfig = DEFAULT_CONFIG) -> Diagnostic:
    segs = annotate_condition_types(segment(req, config.keywords), req)
    findings = detect(req, segs, config.glossary, config.keywords)
    recommendation = recommend_from_analysis(req, segs, findings)
    return Diagnostic(id=req.id, segments=segs, findings=findings, recommendation=recommendation)


def _analyze_star(args):
    return analyze(*args)


def analyze_corpus(
    requirements: list[AnnotatedRequirement],
    config: AnalysisConfig = DEFAULT_CONFIG,
    jobs: int = 1,
) -> list[Diagnostic]:
    """Analyze a corpus; results always come back in input order."""
    if jobs <= 1 or len(requirements) < 2:
        return [analyze(req, config) for req in requirements]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_analyze_star, [(req, config) for req in requirements]))
