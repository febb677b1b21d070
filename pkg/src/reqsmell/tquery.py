"""Compiler and evaluator for a Tregex-subset query language over trees.

Supported relations (A is the host, B the target):

    A < B     B is a child of A            A > B     A is a child of B
    A << B    B is a proper descendant     A >> B    A is a proper descendant of B
    A <, B    B is the first child of A    A >- B    A is the last child of B
    A <<, B   B is reachable from A by a chain of first-child links
    A $+ B    A is the immediate left sister of B
    A $- B    A is the immediate right sister of B
    A $++ B   A is a left sister of B      A $-- B   A is a right sister of B

Query syntax: a node description (label literal or ``/regex/``, optionally
``!``-negated) followed by constraints.  ``&`` and juxtaposition both mean
conjunction; ``[R1 | R2]`` is a disjunction of relations; ``!`` negates a
relation (no node may stand in it); ``?`` makes a relation optional (it
never fails).  A parenthesized target ``(B ...)`` is closed: following
constraints still attach to the current node.  A bare target stays open:
following constraints chain onto it, so ``SBAR < (WHADVP $+ S < (NP $++
VP))`` constrains the S, not the WHADVP.

Regex descriptions are unanchored (``re.search``) unless written with
``^``/``$``.  Descriptions match leaf words case-insensitively and
internal labels case-sensitively.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .tree import TreeNode


class QueryCompileError(ValueError):
    """Raised on malformed query text; carries a character offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class Op(enum.Enum):
    PARENT_OF = "<"
    CHILD_OF = ">"
    DOMINATES = "<<"
    DOMINATED_BY = ">>"
    FIRST_CHILD = "<,"
    LEFTMOST_DESCENDANT = "<<,"
    LAST_CHILD_OF = ">-"
    IMM_LEFT_SISTER = "$+"
    IMM_RIGHT_SISTER = "$-"
    LEFT_SISTER = "$++"
    RIGHT_SISTER = "$--"


@dataclass
class NodeDescription:
    """Label matcher: a literal or a /regex/, optionally negated."""

    value: str
    is_regex: bool = False
    negated: bool = False

    def __post_init__(self):
        if self.is_regex:
            self._exact = re.compile(self.value)
            self._folded = re.compile(self.value, re.IGNORECASE)
        else:
            self._exact = None
            self._folded = None

    def matches(self, node: TreeNode) -> bool:
        label = node.label
        if self.is_regex:
            rx = self._folded if node.is_leaf else self._exact
            hit = rx.search(label) is not None
        elif node.is_leaf:
            hit = label.lower() == self.value.lower()
        else:
            hit = label == self.value
        return hit != self.negated


@dataclass
class Relation:
    op: Op
    target: "QueryNode"
    negated: bool = False
    optional: bool = False

    def __post_init__(self):
        if self.negated and self.optional:
            raise ValueError("a relation cannot be both negated and optional")


@dataclass
class Disjunction:
    alternatives: list[Relation]


@dataclass
class QueryNode:
    description: NodeDescription
    constraints: list[Relation | Disjunction] = field(default_factory=list)


@dataclass(frozen=True)
class Match:
    node: TreeNode
    span: tuple[int, int]


# ---------------------------------------------------------------------------
# Compiler

_OPS = sorted((op.value for op in Op), key=len, reverse=True)
_PUNCT = "()[]|&!?"
_LITERAL_STOP = set(" \t\r\n()[]|&!?/<>$")


def _scan(text: str) -> list[tuple[str, str, int]]:
    """Tokenize to (kind, value, offset); kinds: op, punct, regex, literal."""
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        matched_op = next((op for op in _OPS if text.startswith(op, i)), None)
        if matched_op is not None:
            tokens.append(("op", matched_op, i))
            i += len(matched_op)
        elif ch in _PUNCT:
            tokens.append(("punct", ch, i))
            i += 1
        elif ch == "/":
            end = text.find("/", i + 1)
            if end < 0:
                raise QueryCompileError("unterminated /regex/", i)
            body = text[i + 1 : end]
            if not body:
                raise QueryCompileError("empty /regex/", i)
            if any(c.isspace() for c in body):
                raise QueryCompileError("whitespace inside /regex/", i)
            tokens.append(("regex", body, i))
            i = end + 1
        else:
            start = i
            while i < n and text[i] not in _LITERAL_STOP:
                i += 1
            tokens.append(("literal", text[start:i], start))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _scan(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise QueryCompileError("unexpected end of query", len(self.text))
        self.pos += 1
        return tok

    def parse(self) -> QueryNode:
        root = self.parse_node_pattern()
        tok = self.peek()
        if tok is not None:
            raise QueryCompileError(f"trailing input {tok[1]!r}", tok[2])
        return root

    def parse_node_pattern(self) -> QueryNode:
        head = self.parse_primary()
        active = head
        while True:
            tok = self.peek()
            if tok is None or (tok[0] == "punct" and tok[1] in ")]|"):
                return head
            if tok[0] == "punct" and tok[1] == "&":
                self.take()
                continue
            if tok[0] == "punct" and tok[1] == "[":
                active.constraints.append(self.parse_disjunction())
                continue
            relation, rebind = self.parse_relation()
            active.constraints.append(relation)
            if rebind:
                active = relation.target

    def parse_primary(self) -> QueryNode:
        tok = self.peek()
        if tok is not None and tok[0] == "punct" and tok[1] == "(":
            self.take()
            node = self.parse_node_pattern()
            self.expect(")")
            return node
        return QueryNode(self.parse_description())

    def parse_description(self) -> NodeDescription:
        tok = self.take()
        negated = False
        if tok[0] == "punct" and tok[1] == "!":
            negated = True
            tok = self.take()
        if tok[0] == "regex":
            try:
                return NodeDescription(tok[1], is_regex=True, negated=negated)
            except re.error as exc:
                raise QueryCompileError(f"bad regex: {exc}", tok[2]) from exc
        if tok[0] == "literal":
            if not tok[1]:
                raise QueryCompileError("empty node description", tok[2])
            return NodeDescription(tok[1], negated=negated)
        raise QueryCompileError(f"expected node description, got {tok[1]!r}", tok[2])

    def parse_relation(self) -> tuple[Relation, bool]:
        """Parse one relation item; also report whether its target stays
        open for chaining (bare, positive, non-optional)."""
        tok = self.take()
        negated = optional = False
        if tok[0] == "punct" and tok[1] == "!":
            negated = True
            tok = self.take()
        elif tok[0] == "punct" and tok[1] == "?":
            optional = True
            tok = self.take()
        if tok[0] != "op":
            raise QueryCompileError(f"expected relation operator, got {tok[1]!r}", tok[2])
        op = Op(tok[1])

        nxt = self.peek()
        if nxt is not None and nxt[0] == "punct" and nxt[1] == "(":
            self.take()
            target = self.parse_node_pattern()
            self.expect(")")
            bare = False
        else:
            target = QueryNode(self.parse_description())
            bare = not negated and not optional
        return Relation(op, target, negated=negated, optional=optional), bare

    def parse_disjunction(self) -> Disjunction:
        self.expect("[")
        alternatives = [self.parse_relation()[0]]
        while True:
            tok = self.peek()
            if tok is None:
                raise QueryCompileError("unclosed '['", len(self.text))
            if tok[0] == "punct" and tok[1] == "|":
                self.take()
                alternatives.append(self.parse_relation()[0])
            elif tok[0] == "punct" and tok[1] == "]":
                self.take()
                return Disjunction(alternatives)
            else:
                raise QueryCompileError(f"expected '|' or ']', got {tok[1]!r}", tok[2])

    def expect(self, punct: str):
        tok = self.peek()
        if tok is None:
            raise QueryCompileError(f"expected {punct!r}", len(self.text))
        if tok[0] != "punct" or tok[1] != punct:
            raise QueryCompileError(f"expected {punct!r}, got {tok[1]!r}", tok[2])
        self.take()


def compile_query(query_text: str) -> QueryNode:
    """Compile query text to its AST root."""
    return _Parser(query_text).parse()


# ---------------------------------------------------------------------------
# Engine

def _candidates(op: Op, node: TreeNode) -> list[TreeNode]:
    """Nodes B for which (node op B) holds, before matching B itself."""
    if op is Op.PARENT_OF:
        return list(node.children)
    if op is Op.CHILD_OF:
        return [node.parent] if node.parent is not None else []
    if op is Op.DOMINATES:
        return list(node.descendants())
    if op is Op.DOMINATED_BY:
        out = []
        cur = node.parent
        while cur is not None:
            out.append(cur)
            cur = cur.parent
        return out
    if op is Op.FIRST_CHILD:
        return [node.children[0]] if node.children else []
    if op is Op.LEFTMOST_DESCENDANT:
        out = []
        cur = node
        while cur.children:
            cur = cur.children[0]
            out.append(cur)
        return out
    if op is Op.LAST_CHILD_OF:
        parent = node.parent
        if parent is not None and node.child_index == len(parent.children) - 1:
            return [parent]
        return []
    parent = node.parent
    if parent is None:
        return []
    siblings = parent.children
    i = node.child_index
    if op is Op.IMM_LEFT_SISTER:
        return [siblings[i + 1]] if i + 1 < len(siblings) else []
    if op is Op.IMM_RIGHT_SISTER:
        return [siblings[i - 1]] if i > 0 else []
    if op is Op.LEFT_SISTER:
        return list(siblings[i + 1 :])
    if op is Op.RIGHT_SISTER:
        return list(siblings[:i])
    raise AssertionError(op)


def _satisfies(query: QueryNode, node: TreeNode) -> bool:
    if not query.description.matches(node):
        return False
    for item in query.constraints:
        if isinstance(item, Disjunction):
            if not any(_relation_holds(rel, node) for rel in item.alternatives):
                return False
        elif not _relation_holds(item, node):
            return False
    return True


def _relation_holds(rel: Relation, node: TreeNode) -> bool:
    if rel.optional:
        return True
    found = any(_satisfies(rel.target, cand) for cand in _candidates(rel.op, node))
    return not found if rel.negated else found


def find_matches(query: QueryNode, tree: TreeNode) -> list[Match]:
    """All tree nodes satisfying the query, in pre-order; one Match per node."""
    return [Match(node, node.leaf_span) for node in tree.walk() if _satisfies(query, node)]


def sister_chain_depth(query: QueryNode) -> int:
    """Length of the root's chain of positive immediate-left-sister targets.

    Segment extraction widens a match over this many following siblings:
    patterns anchored on the first word of a phrase (e.g. a WHADVP) claim
    the sibling nodes their ``$+`` constraints name.
    """
    depth = 0
    current = query
    while current is not None:
        step = next(
            (
                item
                for item in current.constraints
                if isinstance(item, Relation)
                and item.op is Op.IMM_LEFT_SISTER
                and not item.negated
                and not item.optional
            ),
            None,
        )
        if step is None:
            return depth
        depth += 1
        current = step.target
    return depth
