import json

from reqsmell.cli import run
from reqsmell.model import SegmentKind, SmellKind, Token, AnnotatedRequirement
from reqsmell.resources import load_glossary, load_keywords
from reqsmell.segmenter import segment
from reqsmell.smells import detect


def _tokens(tagged):
    out = []
    for i, item in enumerate(tagged.split()):
        text, pos = item.rsplit("/", 1)
        out.append(Token(text=text, lemma=text.lower(), pos=pos, index=i))
    return out


SENTENCE = "once/IN the/DT order/NN arrives/VBZ ;/: System-A/NNP must/MD send/VB the/DT report/NN ./."


def test_extending_condition_starters_changes_splitting(tmp_path):
    req = AnnotatedRequirement(id="x", text="", tokens=_tokens(SENTENCE))

    default_kinds = [s.kind for s in segment(req)]
    assert default_kinds == [SegmentKind.NOT_MATCHED, SegmentKind.SYSTEM_RESPONSE]

    base = {
        "condition_starters": ["when", "if", "where", "while", "until", "once"],
        "scope_starters": ["for"],
        "system_response_starters": ["then", ";", "else", "otherwise"],
        "quantifiers": ["each", "all", "none"],
        "separators": [",", ";", ":", ".", "and", "or", "then"],
    }
    path = tmp_path / "keywords.json"
    path.write_text(json.dumps(base), encoding="utf-8")
    extended = load_keywords(path)
    kinds = [s.kind for s in segment(req, extended)]
    assert kinds == [SegmentKind.CONDITION, SegmentKind.SYSTEM_RESPONSE]


def test_glossary_override_file(tmp_path):
    path = tmp_path / "glossary.txt"
    path.write_text("# project-specific verbs\nsend\n", encoding="utf-8")
    glossary = load_glossary(path)
    assert glossary == frozenset({"send"})

    req = AnnotatedRequirement(id="x", text="", tokens=_tokens(SENTENCE))
    segs = segment(req)
    findings = detect(req, segs, glossary=glossary)
    assert SmellKind.NOT_PRECISE_VERB in {f.kind for f in findings}


def test_config_dir_environment_override(fixtures_dir, tmp_path, monkeypatch, capsys):
    (tmp_path / "glossary.txt").write_text("send\n", encoding="utf-8")
    monkeypatch.setenv("REQSMELL_CONFIG_DIR", str(tmp_path))
    assert run(["lint", str(fixtures_dir / "paper_examples.jsonl"), "--format", "json"]) == 0
    summary = json.loads(capsys.readouterr().out)
    # with only "send" in the glossary the imprecise-verb counts change shape
    assert summary["smell_counts"]["not_precise_verb"] == 4
    monkeypatch.delenv("REQSMELL_CONFIG_DIR")
    assert run(["lint", str(fixtures_dir / "paper_examples.jsonl"), "--format", "json"]) == 0
    default_summary = json.loads(capsys.readouterr().out)
    assert default_summary["smell_counts"] != summary["smell_counts"]
