#!/usr/bin/env python3
"""Regenerate the bundled fixture corpus and its ground truth.

Each fixture is an anonymized example sentence with a hand-written
constituency tree (several deliberately reproduce the malformed parses the
detection patterns were built against, e.g. mis-tagged verbs).  Token text
and POS tags come from the tree leaves; lemmas come from the lexicon below.

Usage: python3 tools/build_fixtures.py [output-dir]
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from reqsmell.tree import leaves, parse_ptb  # noqa: E402

LEMMAS = {
    "is": "be", "are": "be", "was": "be", "were": "be", "been": "be", "being": "be",
    "be": "be", "am": "be",
    "has": "have", "have": "have", "had": "have", "having": "have",
    "creates": "create", "creating": "create", "created": "create",
    "sent": "send", "sends": "send",
    "receives": "receive", "received": "receive", "receipt": "receipt",
    "clicks": "click", "clicked": "click",
    "validated": "validate", "validates": "validate",
    "taken": "take", "takes": "take", "took": "take",
    "confirms": "confirm", "wants": "want", "recorded": "record",
    "performs": "perform", "defines": "define", "opens": "open",
    "launches": "launch", "closes": "close", "following": "follow",
    "ordering": "order", "rejected": "reject", "assigned": "assign",
    "processes": "process", "processing": "processing",
    "depositories": "depository", "messages": "message", "systems": "system",
    "rules": "rule", "reports": "report", "instructions": "instruction",
    "portfolios": "portfolio", "parameters": "parameter",
    "operations": "operation", "fields": "field", "subscriptions": "subscription",
    "details": "detail",
    "'s": "'s",
}

# (id, text, tree, gold smells, gold pattern).  A tree of None means the
# parser failed on the sentence (fragments with "=" and the like); tokens
# then come from the explicit (text, pos) list in TOKENS_WITHOUT_TREES.
FIXTURES = [
    (
        "T4-SC1",
        "For all the depositories, System-A must create a T30 transaction processing command.",
        "(S (PP (IN For) (NP (PDT all) (DT the) (NNS depositories))) (, ,) (NP (NNP System-A))"
        " (VP (MD must) (VP (VB create) (NP (DT a) (NNP T30) (NN transaction) (NN processing)"
        " (NN command)))) (. .))",
        [],
        "P1",
    ),
    (
        "T4-SC2",
        "System-A must create an instruction with the the remote code value B for each settlement request.",
        "(S (NP (NNP System-A)) (VP (MD must) (VP (VB create) (NP (NP (DT an) (NN instruction))"
        " (PP (IN with) (NP (DT the) (DT the) (JJ remote) (NN code) (NN value) (NNP B)))))"
        " (PP (IN for) (NP (DT each) (NN settlement) (NN request)))) (. .))",
        [],
        "P1",
    ),
    (
        "T4-C1",
        "When System-A creates one of the following reports: list, list with Beta, System-A must populate the field A in the report.",
        "(S (SBAR (WHADVP (WRB When)) (S (S (NP (NNP System-A)) (VP (VBZ creates) (NP (NP (CD one))"
        " (PP (IN of) (NP (DT the) (VBG following) (NNS reports)))))) (: :) (NP (NP (NN list)) (, ,)"
        " (NP (NN list) (PP (IN with) (NP (NNP Beta))))))) (, ,) (NP (NNP System-A)) (VP (MD must)"
        " (VP (VB populate) (NP (NP (DT the) (NN field) (NNP A)) (PP (IN in) (NP (DT the) (NN report))))))"
        " (. .))",
        [],
        "P7",
    ),
    (
        "T4-C2",
        "Once System-A has successfully validated a settlement request, System-A must send an acknowledge message to System-B.",
        "(S (SBAR (IN Once) (S (NP (NNP System-A)) (VP (VBZ has) (ADVP (RB successfully))"
        " (VP (VBN validated) (NP (DT a) (NN settlement) (NN request)))))) (, ,) (NP (NNP System-A))"
        " (VP (MD must) (VP (VB send) (NP (DT an) (NN acknowledge) (NN message)) (PP (TO to)"
        " (NP (NNP System-B))))) (. .))",
        [],
        "P6",
    ),
    (
        "T4-C3",
        "System-A must send a settlement request to System-B when the contract note has been received from System-C.",
        "(S (NP (NNP System-A)) (VP (MD must) (VP (VB send) (NP (DT a) (NN settlement) (NN request))"
        " (PP (TO to) (NP (NNP System-B))) (SBAR (WHADVP (WRB when)) (S (NP (DT the) (NN contract)"
        " (NN note)) (VP (VBZ has) (VP (VBN been) (VP (VBN received) (PP (IN from) (NP (NNP System-C))))))))))"
        " (. .))",
        ["incorrect_order", "passive_voice"],
        "P6",
    ),
    (
        "T4-C4",
        "When the fund frequency in reference data has an empty value, then System-A must set the fund frequency to daily.",
        "(S (WHADVP (WRB When)) (S (NP (NP (DT the) (NN fund) (NN frequency)) (PP (IN in)"
        " (NP (NN reference) (NNS data)))) (VP (VBZ has) (NP (DT an) (JJ empty) (NN value)))) (, ,)"
        " (ADVP (RB then)) (NP (NNP System-A)) (VP (MD must) (VP (VB set) (NP (DT the) (NN fund)"
        " (NN frequency)) (PP (TO to) (NP (NN daily))))) (. .))",
        [],
        "P6",
    ),
    (
        "T4-C5",
        "When the user clicks on the left side menu, portfolio section, System-A must display the portfolios.",
        "(S (WHADVP (WRB When)) (NP (DT the) (NN user)) (VP (VBZ clicks) (PP (IN on) (NP (NP (DT the)"
        " (JJ left) (NN side) (NN menu)) (, ,) (NP (NN portfolio) (NN section))))) (, ,)"
        " (NP (NNP System-A)) (VP (MD must) (VP (VB display) (NP (DT the) (NNS portfolios)))) (. .))",
        [],
        "P7",
    ),
    (
        "T4-C6",
        "When a user confirms that he wants to cancel the creation of an account record, the System-A must delete the related parameters recorded in account with status draft.",
        "(S (SBAR (WHADVP (WRB When)) (S (NP (DT a) (NN user)) (VP (VBZ confirms) (SBAR (IN that)"
        " (S (NP (PRP he)) (VP (VBZ wants) (S (VP (TO to) (VP (VB cancel) (NP (NP (DT the) (NN creation))"
        " (PP (IN of) (NP (DT an) (NN account) (NN record))))))))))))) (, ,) (NP (DT the) (NNP System-A))"
        " (VP (MD must) (VP (VB delete) (NP (NP (DT the) (JJ related) (NNS parameters)) (VP (VBN recorded)"
        " (PP (IN in) (NP (NP (NN account)) (PP (IN with) (NP (NN status) (NN draft))))))))) (. .))",
        ["not_precise_verb"],
        "P7",
    ),
    (
        "T4-C7",
        "If the settlement date is present in the instruction sent to System-A then System-A must store in data storage unit.",
        "(S (SBAR (WHADVP (WRB If)) (S (NP (DT the) (NN settlement) (NN date)) (VP (VBZ is)"
        " (ADJP (JJ present)) (PP (IN in) (NP (NP (DT the) (NN instruction)) (VP (VBN sent) (PP (TO to)"
        " (NP (NNP System-A))))))))) (ADVP (RB then)) (NP (NNP System-A)) (VP (MD must) (VP (VB store)"
        " (PP (IN in) (NP (NN data) (NN storage) (NN unit))))) (. .))",
        [],
        "P7",
    ),
    (
        "T4-C8",
        "Before the System-A cutover, System-A must update the entity-A data model.",
        "(S (PP (IN Before) (NP (DT the) (NNP System-A) (NN cutover))) (, ,) (NP (NNP System-A))"
        " (VP (MD must) (VP (VB update) (NP (DT the) (NNP entity-A) (NN data) (NN model)))) (. .))",
        [],
        "P8",
    ),
    (
        "T4-SR1",
        "System-A must send the fund details report to local team daily.",
        "(S (NP (NNP System-A)) (VP (MD must) (VP (VB send) (NP (DT the) (NN fund) (NNS details)"
        " (NN report)) (PP (TO to) (NP (JJ local) (NN team))) (ADVP (RB daily)))) (. .))",
        [],
        "P5",
    ),
    (
        "FIG6",
        "For all depositories, when System-A receives an email alert from System-B, System-A must create an MT530_transaction",
        "(S (PP (IN For) (NP (DT all) (NNS depositories))) (, ,) (SBAR (WHADVP (WRB when))"
        " (S (NP (NNP System-A)) (VP (VBZ receives) (NP (DT an) (NN email) (NN alert)) (PP (IN from)"
        " (NP (NNP System-B)))))) (, ,) (NP (NNP System-A)) (VP (MD must) (VP (VB create)"
        " (NP (DT an) (NNP MT530_transaction)))))",
        [],
        "P3",
    ),
    (
        "RUN-FIG5",
        "Upon reception of a settlement instruction from System-A, System-B must process the settlement instruction and the input media field must be set to SINF",
        "(S (PP (IN Upon) (NP (NP (NN reception)) (PP (IN of) (NP (NP (DT a) (NN settlement)"
        " (NN instruction)) (PP (IN from) (NP (NNP System-A))))))) (, ,) (S (NP (NNP System-B))"
        " (VP (MD must) (VP (VB process) (NP (DT the) (NN settlement) (NN instruction))))) (CC and)"
        " (S (NP (DT the) (NN input) (NN media) (NN field)) (VP (MD must) (VP (VB be) (VP (VBN set)"
        " (PP (TO to) (NP (NNP SINF))))))))",
        ["incomplete_condition", "non_atomic", "passive_voice", "not_precise_verb"],
        "P7",
    ),
    (
        "T3-NONATOMIC",
        "System-A must add System-B to their downstream systems and allow System-C to subscribe to the Reporting flow.",
        "(S (NP (NNP System-A)) (VP (MD must) (VP (VP (VB add) (NP (NNP System-B)) (PP (TO to)"
        " (NP (PRP$ their) (JJ downstream) (NNS systems)))) (CC and) (VP (VB allow) (S (NP (NNP System-C))"
        " (VP (TO to) (VP (VB subscribe) (PP (TO to) (NP (DT the) (NNP Reporting) (NN flow))))))))) (. .))",
        ["non_atomic"],
        "P5",
    ),
    (
        "T3-INCOMPLETE-REQ",
        "When System-A receives a message from Security Manager and if the message is part of the B-file, according to the mapping rules.",
        "(S (SBAR (WHADVP (WRB When)) (S (NP (NNP System-A)) (VP (VBZ receives) (NP (DT a) (NN message))"
        " (PP (IN from) (NP (NNP Security) (NNP Manager)))))) (CC and) (SBAR (IN if) (S (NP (DT the)"
        " (NN message)) (VP (VBZ is) (NP (NP (NN part)) (PP (IN of) (NP (DT the) (NNP B-file))))))) (, ,)"
        " (PP (VBG according) (PP (TO to) (NP (DT the) (NN mapping) (NNS rules)))) (. .))",
        ["incomplete_requirement"],
        "P10",
    ),
    (
        "T3-INCORRECT-ORDER",
        "When the user is on the Utilities page and the user clicks on the button Display on main page, System-A must open the Alert section when the user launches System-A.",
        "(S (SBAR (WHADVP (WRB When)) (S (S (NP (DT the) (NN user)) (VP (VBZ is) (PP (IN on)"
        " (NP (DT the) (NNP Utilities) (NN page))))) (CC and) (S (NP (DT the) (NN user)) (VP (VBZ clicks)"
        " (PP (IN on) (NP (NP (DT the) (NN button)) (NP (NNP Display) (PP (IN on) (NP (JJ main)"
        " (NN page)))))))))) (, ,) (NP (NNP System-A)) (VP (MD must) (VP (VB open) (NP (DT the)"
        " (NNP Alert) (NN section)) (SBAR (WHADVP (WRB when)) (S (NP (DT the) (NN user))"
        " (VP (VBZ launches) (NP (NNP System-A))))))) (. .))",
        ["incorrect_order"],
        "P10",
    ),
    (
        "T3-COORD-AMBIG",
        "When System-A performs eligibility check for a participant or if the holding type is complex or if the holding type is simple and the F-value is Prime, then System-B must reject the transaction.",
        "(S (SBAR (WHADVP (WRB When)) (S (NP (NNP System-A)) (VP (VBZ performs) (NP (NN eligibility)"
        " (NN check)) (PP (IN for) (NP (DT a) (NN participant)))))) (CC or) (SBAR (IN if) (S (NP (DT the)"
        " (NN holding) (NN type)) (VP (VBZ is) (ADJP (JJ complex))))) (CC or) (SBAR (IN if) (S (S (NP (DT the)"
        " (NN holding) (NN type)) (VP (VBZ is) (ADJP (JJ simple)))) (CC and) (S (NP (DT the) (NNP F-value))"
        " (VP (VBZ is) (NP (NNP Prime)))))) (, ,) (ADVP (RB then)) (NP (NNP System-B)) (VP (MD must)"
        " (VP (VB reject) (NP (DT the) (NN transaction)))) (. .))",
        ["coordination_ambiguity", "not_precise_verb"],
        "P10",
    ),
    (
        "T3-NOT-REQ",
        "The R6 instruction defines the original instruction.",
        "(S (NP (DT The) (NNP R6) (NN instruction)) (VP (VBZ defines) (NP (DT the) (JJ original)"
        " (NN instruction))) (. .))",
        ["not_a_requirement"],
        None,
    ),
    (
        "T3-INCOMPLETE-COND",
        "Upon receipt of a message in the message Queue, System-A must set the state to unprocessed.",
        "(S (PP (IN Upon) (NP (NP (NN receipt)) (PP (IN of) (NP (NP (DT a) (NN message)) (PP (IN in)"
        " (NP (DT the) (NN message) (NNP Queue))))))) (, ,) (NP (NNP System-A)) (VP (MD must) (VP (VB set)"
        " (NP (DT the) (NN state)) (PP (TO to) (NP (NN unprocessed))))) (. .))",
        ["incomplete_condition"],
        "P7",
    ),
    (
        "T3-INCOMPLETE-SR",
        "When the user clicks on the Filter button, System-A opens the Filter screen.",
        "(S (SBAR (WHADVP (WRB When)) (S (NP (DT the) (NN user)) (VP (VBZ clicks) (PP (IN on)"
        " (NP (DT the) (NNP Filter) (NN button)))))) (, ,) (NP (NNP System-A)) (VP (VBZ opens)"
        " (NP (DT the) (NNP Filter) (NN screen))) (. .))",
        ["incomplete_system_response", "incomplete_requirement"],
        "P7",
    ),
    (
        "T3-PASSIVE",
        "When a rejection order is received for a cancellation request, System-A must raise a web alert.",
        "(S (SBAR (WHADVP (WRB When)) (S (NP (DT a) (NN rejection) (NN order)) (VP (VBZ is)"
        " (VP (VBN received) (PP (IN for) (NP (DT a) (NN cancellation) (NN request))))))) (, ,)"
        " (NP (NNP System-A)) (VP (MD must) (VP (VB raise) (NP (DT a) (NN web) (NN alert)))) (. .))",
        ["passive_voice", "not_precise_verb"],
        "P7",
    ),
    (
        "T3-IMPRECISE",
        "System-A must be able to process System-Bs instructions with input media INPUT.",
        "(S (NP (NNP System-A)) (VP (MD must) (VP (VB be) (ADJP (JJ able) (S (VP (TO to) (VP (VB process)"
        " (NP (NNP System-Bs) (NNS instructions)) (PP (IN with) (NP (NN input) (NNS media)"
        " (NNP INPUT))))))))) (. .))",
        ["not_precise_verb"],
        "P5",
    ),
    (
        "T7-EIC1",
        "Upon reception from System-A the status Pending of an Instruction, then System-B must update the status.",
        "(S (PP (IN Upon) (NP (NP (NN reception)) (PP (IN from) (NP (NNP System-A))) (NP (NP (DT the)"
        " (NN status) (NNP Pending)) (PP (IN of) (NP (DT an) (NNP Instruction)))))) (, ,) (ADVP (RB then))"
        " (NP (NNP System-B)) (VP (MD must) (VP (VB update) (NP (DT the) (NN status)))) (. .))",
        ["incomplete_condition"],
        "P7",
    ),
    (
        "T7-EIC2",
        "When creating a new participant, System-A must create the participant profile.",
        "(S (SBAR (WHADVP (WRB When)) (S (VP (VBG creating) (NP (DT a) (JJ new) (NN participant)))))"
        " (, ,) (NP (NNP System-A)) (VP (MD must) (VP (VB create) (NP (DT the) (NN participant)"
        " (NN profile)))) (. .))",
        ["incomplete_condition"],
        "P7",
    ),
    # Known-limitation rows: the gold is the human judgment; the tool is
    # expected to disagree exactly as documented (mis-tagged verbs and a
    # bullet-local condition).
    (
        "R1",
        "The System-A must route the outbound messages to System-B instead of System-C.",
        "(S (NP (DT The) (NNP System-A)) (VP (MD must) (NP (NP (NN route)) (NP (DT the) (JJ outbound)"
        " (NNS messages)) (PP (TO to) (NP (NNP System-B))) (ADVP (RB instead)) (PP (IN of)"
        " (NP (NNP System-C))))) (. .))",
        [],
        "P5",
    ),
    (
        "R2",
        "Upon receipt of a valid C01 cancellation from System-A Participant, then the System-B must route the cancellation to the same destination.",
        "(S (PP (IN Upon) (NP (NP (NN receipt)) (PP (IN of) (NP (NP (DT a) (JJ valid) (NNP C01)"
        " (NN cancellation)) (PP (IN from) (NP (NNP System-A) (NNP Participant))))))) (, ,)"
        " (ADVP (RB then)) (NP (DT the) (NNP System-B)) (VP (MD must) (NP (NP (NN route)) (NP (DT the)"
        " (NN cancellation)) (PP (TO to) (NP (DT the) (JJ same) (NN destination))))) (. .))",
        ["incomplete_condition"],
        "P7",
    ),
    (
        "R3",
        "if the System-A Order Issuer Ordering data = Value-A",
        None,
        ["incomplete_condition", "incomplete_requirement"],
        "P6",
    ),
    (
        "R4",
        "When the user clicks on the Edit icon of Screen-1, System-A must set in updatable mode the following fields: Include portfolio in the S-Order, Alert to operations when Order is rejected.",
        "(S (SBAR (WHADVP (WRB When)) (S (NP (DT the) (NN user)) (VP (VBZ clicks) (PP (IN on)"
        " (NP (NP (DT the) (NNP Edit) (NN icon)) (PP (IN of) (NP (NNP Screen-1)))))))) (, ,)"
        " (NP (NNP System-A)) (VP (MD must) (VP (VB set) (PP (IN in) (NP (JJ updatable) (NN mode)))"
        " (NP (NP (DT the) (VBG following) (NNS fields)) (: :) (NP (NP (NNP Include) (NN portfolio))"
        " (PP (IN in) (NP (DT the) (NNP S-Order)))) (, ,) (NP (NP (NNP Alert)) (PP (TO to)"
        " (NP (NNS operations))))) (SBAR (WHADVP (WRB when)) (S (NP (NNP Order)) (VP (VBZ is)"
        " (VP (VBN rejected))))))) (. .))",
        ["passive_voice"],
        "P7",
    ),
    (
        "R5",
        "If the Participant Status = Delete, then System-A must populate the field Status with the value inactive.",
        None,
        ["incomplete_condition"],
        "P6",
    ),
]

TOKENS_WITHOUT_TREES = {
    # "Ordering" mis-tagged as a verb inside the compound noun.
    "R3": [
        ("if", "IN"), ("the", "DT"), ("System-A", "NNP"), ("Order", "NNP"),
        ("Issuer", "NNP"), ("Ordering", "VBG"), ("data", "NNS"), ("=", "SYM"),
        ("Value-A", "NNP"),
    ],
    # First "Status" mis-tagged as a verb.
    "R5": [
        ("If", "IN"), ("the", "DT"), ("Participant", "NNP"), ("Status", "VBZ"),
        ("=", "SYM"), ("Delete", "NNP"), (",", ","), ("then", "RB"),
        ("System-A", "NNP"), ("must", "MD"), ("populate", "VB"), ("the", "DT"),
        ("field", "NN"), ("Status", "NNP"), ("with", "IN"), ("the", "DT"),
        ("value", "NN"), ("inactive", "JJ"), (".", "."),
    ],
}

MARKS = {
    "R4": [
        {"kind": "bullet", "word": "Include"},
        {"kind": "bullet", "word": "Alert"},
    ],
}


def lemma_of(text: str) -> str:
    return LEMMAS.get(text.lower(), text.lower())


def token_records(req_id: str, tree_text: str | None):
    if tree_text is None:
        pairs = TOKENS_WITHOUT_TREES[req_id]
    else:
        pairs = [(leaf.label, leaf.parent.label) for leaf in leaves(parse_ptb(tree_text))]
    return [
        {"text": text, "lemma": lemma_of(text), "pos": pos, "index": i}
        for i, (text, pos) in enumerate(pairs)
    ]


def mark_records(req_id: str, tokens):
    records = []
    for mark in MARKS.get(req_id, []):
        index = next(i for i, t in enumerate(tokens) if t["text"] == mark["word"])
        records.append({"kind": mark["kind"], "before_token": index})
    return records


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)

    corpus_lines = []
    gold_lines = []
    for req_id, text, tree_text, smells, pattern in FIXTURES:
        tokens = token_records(req_id, tree_text)
        record = {
            "id": req_id,
            "text": text,
            "tokens": tokens,
            "tree": tree_text,
            "marks": mark_records(req_id, tokens),
        }
        corpus_lines.append(json.dumps(record, ensure_ascii=False))
        gold_lines.append(
            json.dumps(
                {"id": req_id, "smells": sorted(smells), "pattern": pattern},
                ensure_ascii=False,
            )
        )

    (out_dir / "paper_examples.jsonl").write_text("\n".join(corpus_lines) + "\n", encoding="utf-8")
    (out_dir / "gold.jsonl").write_text("\n".join(gold_lines) + "\n", encoding="utf-8")
    print(f"wrote {len(corpus_lines)} requirements to {out_dir}")


if __name__ == "__main__":
    main()
