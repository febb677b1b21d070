"""Bracketed (Penn-Treebank style) constituency trees.

Grammar:  node := "(" LABEL node+ ")" | WORD
Whitespace between tokens is insignificant.  Leaves are words; their
parent is a preterminal (POS) node with exactly one child.
"""

from __future__ import annotations


class TreeParseError(ValueError):
    """Raised on malformed bracketed input; carries a character offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class TreeNode:
    """One node of a constituency tree.

    Immutable after parse.  ``label`` is the constituent tag, or the word
    itself for leaves.  ``leaf_span`` is the half-open token interval
    [start, end) the node covers.  ``parent`` / ``child_index`` are wired
    by the parser so relational queries can walk in every direction.
    """

    __slots__ = ("label", "children", "parent", "child_index", "leaf_span")

    def __init__(self, label: str, children: list["TreeNode"] | None = None):
        self.label = label
        self.children: list[TreeNode] = children if children is not None else []
        self.parent: TreeNode | None = None
        self.child_index: int = -1
        self.leaf_span: tuple[int, int] = (-1, -1)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __repr__(self) -> str:
        return f"TreeNode({render_ptb(self)!r})"

    def walk(self):
        """Yield this node and all descendants in pre-order."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def descendants(self):
        """Proper descendants in pre-order."""
        it = self.walk()
        next(it)
        return it

    def structurally_equal(self, other: "TreeNode") -> bool:
        if self.label != other.label or len(self.children) != len(other.children):
            return False
        return all(a.structurally_equal(b) for a, b in zip(self.children, other.children))


def parse_ptb(text: str) -> TreeNode:
    """Parse one bracketed tree and return its root.

    Rejects unbalanced parentheses, empty constituents (``()`` or a label
    with no children), and trailing garbage, reporting the character
    offset of the problem.
    """
    tokens = _lex(text)
    if not tokens:
        raise TreeParseError("empty input", 0)
    root, pos = _parse_node(text, tokens, 0)
    if pos != len(tokens):
        raise TreeParseError("trailing garbage after tree", tokens[pos][1])
    _assign_spans(root, 0)
    _wire_parents(root)
    return root


def _lex(text: str) -> list[tuple[str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append((ch, i))
            i += 1
        else:
            start = i
            while i < n and not text[i].isspace() and text[i] not in "()":
                i += 1
            tokens.append((text[start:i], start))
    return tokens


def _parse_node(text: str, tokens: list[tuple[str, int]], pos: int) -> tuple[TreeNode, int]:
    tok, off = tokens[pos]
    if tok == ")":
        raise TreeParseError("unexpected ')'", off)
    if tok != "(":
        return TreeNode(tok), pos + 1

    pos += 1
    if pos >= len(tokens):
        raise TreeParseError("unclosed '('", len(text))
    label, label_off = tokens[pos]
    if label in ("(", ")"):
        raise TreeParseError("constituent without label", label_off)
    pos += 1

    children: list[TreeNode] = []
    while True:
        if pos >= len(tokens):
            raise TreeParseError("unclosed '('", len(text))
        tok, off = tokens[pos]
        if tok == ")":
            pos += 1
            break
        child, pos = _parse_node(text, tokens, pos)
        children.append(child)
    if not children:
        raise TreeParseError(f"constituent '{label}' has no children", label_off)
    leaf_children = [c for c in children if c.is_leaf]
    if leaf_children and len(children) != 1:
        raise TreeParseError(
            f"preterminal '{label}' must have exactly one leaf child", label_off
        )
    return TreeNode(label, children), pos


def _assign_spans(node: TreeNode, start: int) -> int:
    if node.is_leaf:
        node.leaf_span = (start, start + 1)
        return start + 1
    cursor = start
    for child in node.children:
        cursor = _assign_spans(child, cursor)
    node.leaf_span = (start, cursor)
    return cursor


def _wire_parents(root: TreeNode) -> None:
    for node in root.walk():
        for i, child in enumerate(node.children):
            child.parent = node
            child.child_index = i


def leaves(node: TreeNode) -> list[TreeNode]:
    """Leaves under ``node`` in left-to-right order."""
    if node.is_leaf:
        return [node]
    out: list[TreeNode] = []
    for child in node.children:
        out.extend(leaves(child))
    return out


def leaf_texts(node: TreeNode) -> list[str]:
    return [leaf.label for leaf in leaves(node)]


def render_ptb(node: TreeNode) -> str:
    """Canonical single-space bracketed form; inverse of parse_ptb."""
    if node.is_leaf:
        return node.label
    inner = " ".join(render_ptb(c) for c in node.children)
    return f"({node.label} {inner})"
