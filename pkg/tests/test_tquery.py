import random

import pytest

from reqsmell.resources import load_tregex_patterns
from reqsmell.tquery import (
    Disjunction,
    Op,
    QueryCompileError,
    Relation,
    compile_query,
    find_matches,
    sister_chain_depth,
)
from reqsmell.tree import parse_ptb

from generators import random_query_text, random_tree
from oracle_matcher import brute_force_matches
from test_tree import FIG6_TREE

C3 = "SBAR < (WHADVP $+ S < (NP $++ VP))"


# ---------------------------------------------------------------------------
# Compiler

def test_compile_bare_label():
    query = compile_query("NP")
    assert query.description.value == "NP"
    assert not query.description.is_regex
    assert query.constraints == []


def test_compile_c3_chains_onto_bare_sister():
    query = compile_query(C3)
    assert query.description.value == "SBAR"
    (rel,) = query.constraints
    assert rel.op is Op.PARENT_OF
    whadvp = rel.target
    assert whadvp.description.value == "WHADVP"
    (sister,) = whadvp.constraints
    assert sister.op is Op.IMM_LEFT_SISTER
    s_node = sister.target
    assert s_node.description.value == "S"
    (inner,) = s_node.constraints  # chained onto S, not WHADVP
    assert inner.op is Op.PARENT_OF
    np = inner.target
    assert np.description.value == "NP"
    (left,) = np.constraints
    assert left.op is Op.LEFT_SISTER
    assert left.target.description.value == "VP"


def test_compile_ic2_negated_dominated_by_regex():
    query = compile_query("(PP < ((IN < Upon) $+ (NP < ((NP << NN) $++ PP)))) !>> /(VP|SBAR)/")
    assert query.description.value == "PP"
    child_rel, neg_rel = query.constraints
    assert child_rel.op is Op.PARENT_OF and not child_rel.negated
    assert neg_rel.op is Op.DOMINATED_BY and neg_rel.negated
    assert neg_rel.target.description.is_regex
    assert neg_rel.target.description.value == "(VP|SBAR)"


def test_compile_negated_description_target():
    query = compile_query("IN > !VP")
    (rel,) = query.constraints
    assert rel.op is Op.CHILD_OF and not rel.negated
    assert rel.target.description.negated
    assert rel.target.description.value == "VP"


def test_compile_disjunction_group():
    query = compile_query("IN [> SBAR | > S] & > !VP")
    group, neg_desc = query.constraints
    assert isinstance(group, Disjunction)
    assert [r.target.description.value for r in group.alternatives] == ["SBAR", "S"]
    assert isinstance(neg_desc, Relation)


def test_compile_optional_relation():
    query = compile_query("MD ?$+ ADVP $++ VP")
    optional, later = query.constraints
    assert optional.optional and optional.op is Op.IMM_LEFT_SISTER
    # the optional target must not capture the chain
    assert later.op is Op.LEFT_SISTER


def test_compile_errors_carry_offsets():
    with pytest.raises(QueryCompileError):
        compile_query("NP <")
    with pytest.raises(QueryCompileError):
        compile_query("NP < (VP")
    with pytest.raises(QueryCompileError):
        compile_query("NP << , VP [")
    with pytest.raises(QueryCompileError):
        compile_query("")
    with pytest.raises(QueryCompileError) as err:
        compile_query("NP < /unterminated")
    assert err.value.offset == 5
    with pytest.raises(QueryCompileError):
        compile_query("NP ~ VP")


def test_optional_and_negated_relation_is_rejected():
    with pytest.raises(ValueError):
        Relation(Op.PARENT_OF, compile_query("NP"), negated=True, optional=True)


def test_all_bundled_patterns_compile():
    for entry in load_tregex_patterns():
        query = compile_query(entry["query"])
        assert query.description.value


def test_sister_chain_depths_of_bundled_patterns():
    depths = {
        entry["id"]: sister_chain_depth(compile_query(entry["query"]))
        for entry in load_tregex_patterns()
    }
    assert depths["C1"] == 1
    assert depths["C2"] == 1
    assert depths["C4"] == 1
    assert depths["C5"] == 2
    assert depths["SR1"] == 1
    for anchored in ("SC1", "SC2", "C3", "C6", "C7", "C8", "IC1", "IC2"):
        assert depths[anchored] == 0


# ---------------------------------------------------------------------------
# Engine

def test_single_label_match():
    tree = parse_ptb("(NP (NN report))")
    matches = find_matches(compile_query("NP"), tree)
    assert len(matches) == 1
    assert matches[0].node is tree
    assert matches[0].span == (0, 1)


def test_c3_matches_condition_clause_in_fig6_tree():
    tree = parse_ptb(FIG6_TREE)
    matches = find_matches(compile_query(C3), tree)
    assert len(matches) == 1
    assert matches[0].span == (4, 12)  # "when System-A receives ... System-B"


def test_leaf_word_matching_is_case_insensitive():
    tree = parse_ptb("(SBAR (IN Once) (S (NP (NNP X)) (VP (VBZ runs))))")
    assert find_matches(compile_query("IN < once"), tree)
    assert find_matches(compile_query("IN < /^once$/"), tree)
    # internal labels stay case-sensitive
    assert not find_matches(compile_query("in"), tree)


def test_negated_relation_means_no_witness():
    tree = parse_ptb("(S (VP (VB go)) (NP (NN home)))")
    assert not find_matches(compile_query("NP !>> S"), tree)
    assert find_matches(compile_query("NP !>> VP"), tree)


def test_matches_are_preorder_and_unique():
    tree = parse_ptb("(S (NP (NP (NN a)) (NP (NN b))) (NP (NN c)))")
    spans = [m.span for m in find_matches(compile_query("NP"), tree)]
    assert spans == [(0, 2), (0, 1), (1, 2), (2, 3)]
    nodes = [m.node for m in find_matches(compile_query("NP"), tree)]
    assert len({id(n) for n in nodes}) == len(nodes)


def test_determinism():
    rng = random.Random(7)
    tree = random_tree(rng)
    query = compile_query("NP $++ VP")
    assert [m.span for m in find_matches(query, tree)] == [
        m.span for m in find_matches(query, tree)
    ]


def test_leftmost_descendant_walks_first_children_only():
    tree = parse_ptb("(S (NP (NP (NN a)) (VP (VB b))) (VP (VB c)))")
    # the NPs sit on S's first-child chain; neither VP does
    assert [m.node.label for m in find_matches(compile_query("S <<, NP"), tree)] == ["S"]
    assert not find_matches(compile_query("S <<, VP"), tree)
    # leaves have no descendants at all
    assert not find_matches(compile_query("a <<, a"), tree)


def test_sibling_relations_fail_at_the_root():
    tree = parse_ptb("(S (NP (NN a)) (VP (VB b)))")
    assert not find_matches(compile_query("S $++ NP"), tree)
    assert not find_matches(compile_query("S >- S"), tree)


def test_last_child_relation():
    tree = parse_ptb("(S (NP (NN a)) (VP (VB b)))")
    assert [m.node.label for m in find_matches(compile_query("VP >- S"), tree)] == ["VP"]
    assert not find_matches(compile_query("NP >- S"), tree)


def test_anchored_regex_on_internal_labels_is_case_sensitive():
    tree = parse_ptb("(SBAR (S (NP (NN a)) (VP (VB b))))")
    assert [m.node.label for m in find_matches(compile_query("/^S$/"), tree)] == ["S"]
    assert len(find_matches(compile_query("/^S/"), tree)) == 2  # SBAR and S
    assert not find_matches(compile_query("/^s$/"), tree)


def test_negated_description_never_matches_its_label():
    tree = parse_ptb("(S (NP (NN a)) (VP (VB b)))")
    labels = [m.node.label for m in find_matches(compile_query("!NP"), tree)]
    assert "NP" not in labels
    assert "S" in labels and "VP" in labels


# ---------------------------------------------------------------------------
# Relation laws on random trees

def _pairs(tree):
    nodes = list(tree.walk())
    return [(a, b) for a in nodes for b in nodes]


def _holds(op, a, b, tree):
    from oracle_matcher import TreeFacts

    return TreeFacts(tree).holds(op, a, b)


def test_relation_laws_on_random_trees():
    rng = random.Random(20240)
    for _ in range(60):
        tree = random_tree(rng, max_internal=8)
        from oracle_matcher import TreeFacts

        facts = TreeFacts(tree)
        nodes = facts.nodes
        for a in nodes:
            for b in nodes:
                # inverse pairs
                assert facts.holds(Op.PARENT_OF, a, b) == facts.holds(Op.CHILD_OF, b, a)
                assert facts.holds(Op.IMM_LEFT_SISTER, a, b) == facts.holds(
                    Op.IMM_RIGHT_SISTER, b, a
                )
                # << is the transitive closure of <
                if facts.holds(Op.PARENT_OF, a, b):
                    assert facts.holds(Op.DOMINATES, a, b)
                if facts.holds(Op.DOMINATES, a, b):
                    chain = any(
                        facts.holds(Op.PARENT_OF, a, mid) and facts.holds(Op.DOMINATES, mid, b)
                        for mid in nodes
                    ) or facts.holds(Op.PARENT_OF, a, b)
                    assert chain
                # <<, walks first children only, proper descendants
                if facts.holds(Op.LEFTMOST_DESCENDANT, a, b):
                    assert facts.holds(Op.DOMINATES, a, b)
                    assert facts.holds(Op.FIRST_CHILD, a, b) or any(
                        facts.holds(Op.FIRST_CHILD, a, mid)
                        and facts.holds(Op.LEFTMOST_DESCENDANT, mid, b)
                        for mid in nodes
                    )
                # >- means B's last child is A
                if facts.holds(Op.LAST_CHILD_OF, a, b):
                    assert b.children[-1] is a


# ---------------------------------------------------------------------------
# Engine equivalence with the brute-force oracle (fast spot check; the full
# acceptance-sized comparison lives in test_acceptance.py)

def test_engine_matches_oracle_spot_check():
    rng = random.Random(99)
    bundled = [compile_query(e["query"]) for e in load_tregex_patterns()]
    randoms = [compile_query(random_query_text(rng)) for _ in range(20)]
    for _ in range(60):
        tree = random_tree(rng)
        for query in bundled + randoms:
            engine = [m.node for m in find_matches(query, tree)]
            oracle = brute_force_matches(query, tree)
            assert [id(n) for n in engine] == [id(n) for n in oracle]
