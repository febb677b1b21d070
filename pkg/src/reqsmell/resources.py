"""Loaders for the bundled, overridable data files."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path


def _bundled(name: str) -> str:
    return resources.files("reqsmell.data").joinpath(name).read_text(encoding="utf-8")


@dataclass(frozen=True)
class KeywordConfig:
    condition_starters: frozenset[str]
    scope_starters: frozenset[str]
    system_response_starters: frozenset[str]
    quantifiers: frozenset[str]
    separators: frozenset[str]

    @property
    def all_starters(self) -> frozenset[str]:
        return self.condition_starters | self.scope_starters | self.system_response_starters


def load_keywords(path: str | Path | None = None) -> KeywordConfig:
    raw = Path(path).read_text(encoding="utf-8") if path else _bundled("keywords.json")
    data = json.loads(raw)
    return KeywordConfig(
        condition_starters=frozenset(data["condition_starters"]),
        scope_starters=frozenset(data["scope_starters"]),
        system_response_starters=frozenset(data["system_response_starters"]),
        quantifiers=frozenset(data["quantifiers"]),
        separators=frozenset(data["separators"]),
    )


def load_glossary(path: str | Path | None = None) -> frozenset[str]:
    """Imprecise-verb lemmas: one per line, '#' starts a comment."""
    raw = Path(path).read_text(encoding="utf-8") if path else _bundled("glossary.txt")
    lemmas = set()
    for line in raw.splitlines():
        entry = line.split("#", 1)[0].strip().lower()
        if entry:
            lemmas.add(entry)
    return frozenset(lemmas)


@lru_cache(maxsize=1)
def load_tregex_patterns() -> list[dict]:
    return json.loads(_bundled("tregex_patterns.json"))["patterns"]


@lru_cache(maxsize=1)
def load_structural_patterns() -> list[dict]:
    return json.loads(_bundled("structural_patterns.json"))["patterns"]


@lru_cache(maxsize=1)
def load_rimay_catalog() -> dict[str, dict]:
    patterns = json.loads(_bundled("rimay_patterns.json"))["patterns"]
    return {p["id"]: p for p in patterns}


DEFAULT_KEYWORDS = load_keywords()
DEFAULT_GLOSSARY = load_glossary()
