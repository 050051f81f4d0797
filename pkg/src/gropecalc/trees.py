"""Rooted trivalent trees and trees-with-boxes.

A tree node is a ``Tip`` (leaf), a ``Join`` of exactly two subtrees, or a
``Box`` holding two or more symplectic pairs (each pair a ``Join``).  A
box-free tree is the type of a genus-one grope / tree clasper; a box of
arity g encodes a genus-g surface stage.

Children of a ``Join`` are mathematically unordered; instances keep the
construction order and :func:`canonical_code` compares trees up to the
unordered isomorphism.  Orientation signs coming from swapping children
are handled in :func:`canonical_plane` and consumed by the diagram-space
module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Union


class TreeError(ValueError):
    """Structural violation (box arity, bad child type, ...)."""


class TreeParseError(ValueError):
    """Syntax error in the tree grammar; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Tip:
    """Leaf of the tree.  ``label`` is optional and used by the Lie bridge."""

    label: Optional[str] = None


@dataclass(frozen=True)
class Join:
    left: "TreeNode"
    right: "TreeNode"

    def __post_init__(self):
        for child in (self.left, self.right):
            if not isinstance(child, (Tip, Join, Box)):
                raise TreeError(f"Join child must be a tree node, got {child!r}")


@dataclass(frozen=True)
class Box:
    pairs: tuple

    def __post_init__(self):
        if len(self.pairs) < 2:
            raise TreeError("Box needs at least 2 symplectic pairs")
        for p in self.pairs:
            if not isinstance(p, Join):
                raise TreeError(f"Box children must be Join pairs, got {p!r}")


TreeNode = Union[Tip, Join, Box]


def box(items) -> TreeNode:
    """Normalizing Box factory: flattens nested boxes, collapses arity 1.

    Items may be Joins or Boxes; Boxes contribute their pairs directly
    (no box sits immediately inside a box).
    """
    pairs = []
    for it in items:
        if isinstance(it, Box):
            pairs.extend(it.pairs)
        elif isinstance(it, Join):
            pairs.append(it)
        else:
            raise TreeError(f"Box entries must be Join or Box, got {it!r}")
    if len(pairs) == 0:
        raise TreeError("empty Box")
    if len(pairs) == 1:
        return pairs[0]
    return Box(tuple(pairs))


def is_box_free(t: TreeNode) -> bool:
    if isinstance(t, Tip):
        return True
    if isinstance(t, Join):
        return is_box_free(t.left) and is_box_free(t.right)
    return False


def require_box_free(t: TreeNode, what: str = "operation"):
    if not is_box_free(t):
        raise TreeError(f"{what} requires a box-free tree")


# ---------------------------------------------------------------------------
# grammar:  tree := "*" | "(" tree SP tree ")" | "[" pair (SP pair)+ "]"
#           pair := "(" tree SP tree ")"
# ---------------------------------------------------------------------------

def parse_tree(text: str) -> TreeNode:
    """Parse the whitespace-insensitive tree grammar."""
    pos = 0
    n = len(text)

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    def parse_node(i):
        i = skip_ws(i)
        if i >= n:
            raise TreeParseError("unexpected end of input", i)
        ch = text[i]
        if ch == "*":
            return Tip(), i + 1
        if ch == "(":
            left, i = parse_node(i + 1)
            right, i = parse_node(i)
            i = skip_ws(i)
            if i >= n or text[i] != ")":
                raise TreeParseError("expected ')'", i)
            return Join(left, right), i + 1
        if ch == "[":
            pairs = []
            i += 1
            while True:
                i = skip_ws(i)
                if i < n and text[i] == "]":
                    break
                if i >= n:
                    raise TreeParseError("expected ']'", i)
                if text[i] != "(":
                    raise TreeParseError("Box entries must be pairs '(a b)'", i)
                pair, i = parse_node(i)
                pairs.append(pair)
            if len(pairs) < 2:
                raise TreeParseError("Box needs at least 2 pairs", i)
            return box(pairs), i + 1
        raise TreeParseError(f"unexpected character {ch!r}", i)

    node, pos = parse_node(0)
    pos = skip_ws(pos)
    if pos != n:
        raise TreeParseError("trailing input", pos)
    return node


def print_tree(t: TreeNode) -> str:
    if isinstance(t, Tip):
        return "*"
    if isinstance(t, Join):
        return f"({print_tree(t.left)} {print_tree(t.right)})"
    return "[" + " ".join(print_tree(p) for p in t.pairs) + "]"


# ---------------------------------------------------------------------------
# class and shape predicates
# ---------------------------------------------------------------------------

def class_of(t: TreeNode) -> int:
    """Grope class: tips are 1, a join adds, a box takes the pair minimum."""
    if isinstance(t, Tip):
        return 1
    if isinstance(t, Join):
        return class_of(t.left) + class_of(t.right)
    return min(class_of(p) for p in t.pairs)


def tip_count(t: TreeNode) -> int:
    if isinstance(t, Tip):
        return 1
    if isinstance(t, Join):
        return tip_count(t.left) + tip_count(t.right)
    return sum(tip_count(p) for p in t.pairs)


def tips_in_order(t: TreeNode) -> list:
    """Tips in stored (left-to-right) order."""
    out = []

    def walk(node):
        if isinstance(node, Tip):
            out.append(node)
        elif isinstance(node, Join):
            walk(node.left)
            walk(node.right)
        else:
            for p in node.pairs:
                walk(p)

    walk(t)
    return out


def with_labels(t: TreeNode, labels) -> TreeNode:
    """Relabel tips in stored order.  Lengths must match."""
    labels = list(labels)
    if len(labels) != tip_count(t):
        raise TreeError("label count does not match tip count")
    it = iter(labels)

    def walk(node):
        if isinstance(node, Tip):
            return Tip(next(it))
        if isinstance(node, Join):
            return Join(walk(node.left), walk(node.right))
        return Box(tuple(walk(p) for p in node.pairs))

    return walk(t)


def is_half_grope(t: TreeNode) -> bool:
    """Caterpillar test: some root-to-tip path visits every internal node."""
    require_box_free(t, "is_half_grope")
    if isinstance(t, Tip):
        return True
    left_tip = isinstance(t.left, Tip)
    right_tip = isinstance(t.right, Tip)
    if left_tip and right_tip:
        return True
    if left_tip:
        return is_half_grope(t.right)
    if right_tip:
        return is_half_grope(t.left)
    return False


def is_symmetric(t: TreeNode) -> Optional[int]:
    """Height h if t is the full binary tree of depth h, else None."""
    require_box_free(t, "is_symmetric")
    if isinstance(t, Tip):
        return 0
    hl = is_symmetric(t.left)
    if hl is None:
        return None
    hr = is_symmetric(t.right)
    if hr != hl:
        return None
    return hl + 1


def gen_half(k: int) -> TreeNode:
    """The class-k caterpillar (right-normed commutator shape)."""
    if k < 2:
        raise TreeError("half-grope trees need class >= 2")
    t = Join(Tip(), Tip())
    for _ in range(k - 2):
        t = Join(t, Tip())
    return t


def gen_symmetric(h: int) -> TreeNode:
    """The full binary tree of height h (class 2**h)."""
    if h < 1:
        raise TreeError("symmetric trees need height >= 1")
    t = Join(Tip(), Tip())
    for _ in range(h - 1):
        t = Join(t, t)
    return t


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def canonical_code(t: TreeNode) -> str:
    """Iso-invariant code: children sorted, labels included when present."""
    if isinstance(t, Tip):
        return "*" if t.label is None else f"*{t.label};"
    if isinstance(t, Join):
        a, b = sorted((canonical_code(t.left), canonical_code(t.right)))
        return f"({a}{b})"
    return "[" + "".join(sorted(canonical_code(p) for p in t.pairs)) + "]"


def canonical_plane(t: TreeNode):
    """Canonical plane representative of a box-free tree with a swap sign.

    Returns ``(tree, code, sign, ambiguous)``.  The sign is -1 to the
    number of child swaps performed; ``ambiguous`` is True when some
    vertex joins two isomorphic subtrees, in which case the sign is not
    determined by the isomorphism class (the diagram is 2-torsion).
    """
    require_box_free(t, "canonical_plane")

    def walk(node):
        if isinstance(node, Tip):
            code = "*" if node.label is None else f"*{node.label};"
            return node, code, 1, False
        ltree, lcode, lsign, lamb = walk(node.left)
        rtree, rcode, rsign, ramb = walk(node.right)
        amb = lamb or ramb
        if lcode < rcode:
            return Join(ltree, rtree), f"({lcode}{rcode})", lsign * rsign, amb
        if rcode < lcode:
            return Join(rtree, ltree), f"({rcode}{lcode})", -lsign * rsign, amb
        return Join(ltree, rtree), f"({lcode}{rcode})", lsign * rsign, True

    tree, code, sign, amb = walk(t)
    return tree, code, sign, amb


def trees_isomorphic(a: TreeNode, b: TreeNode) -> bool:
    return canonical_code(a) == canonical_code(b)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _trees_of_class(k: int) -> tuple:
    if k == 1:
        return (Tip(),)
    out = []
    for i in range(1, k // 2 + 1):
        lefts = _trees_of_class(i)
        rights = _trees_of_class(k - i)
        if i < k - i:
            for a in lefts:
                for b in rights:
                    out.append(Join(a, b))
        else:
            for ai, a in enumerate(lefts):
                for b in lefts[ai:]:
                    out.append(Join(a, b))
    return tuple(out)


def enumerate_trees(k: int) -> list:
    """All box-free rooted trees of class k, one per isomorphism class."""
    if k < 1:
        raise TreeError("class must be >= 1")
    return list(_trees_of_class(k))


def enumerate_plane_trees(k: int) -> Iterator[TreeNode]:
    """Naive oracle: every plane (ordered) tree with k tips, with repeats."""
    if k == 1:
        yield Tip()
        return
    for i in range(1, k):
        for a in enumerate_plane_trees(i):
            for b in enumerate_plane_trees(k - i):
                yield Join(a, b)


def enumerate_box_trees(max_tips: int, max_boxes: int) -> list:
    """All trees-with-boxes with at most ``max_tips`` tips and
    ``max_boxes`` boxes, one per isomorphism class.

    Exhaustive generate-and-filter over the grammar; used by the
    refinement acceptance sweep, so sizes stay small.
    """
    # seen[(tips, boxes)] -> dict code -> tree
    by_size = {}

    def record(t):
        key = (tip_count(t), _box_count(t))
        by_size.setdefault(key, {}).setdefault(canonical_code(t), t)

    record(Tip())
    # grow by tip count; at each size, combine smaller pieces
    for tips in range(2, max_tips + 1):
        for ltips in range(1, tips):
            rtips = tips - ltips
            for (lt, lb), lmap in list(by_size.items()):
                if lt != ltips:
                    continue
                for (rt, rb), rmap in list(by_size.items()):
                    if rt != rtips or lb + rb > max_boxes:
                        continue
                    for a in lmap.values():
                        for b in rmap.values():
                            record(Join(a, b))
        # boxes of arity >= 2 from available pairs of this tip total
        _grow_boxes(by_size, tips, max_boxes, record)
    out = []
    for (tips, boxes), m in sorted(by_size.items()):
        if tips <= max_tips and boxes <= max_boxes:
            out.extend(m.values())
    return out


def _grow_boxes(by_size, tips, max_boxes, record):
    # collect all Join-shaped trees with <= tips tips, group by (tips, boxes)
    joins = []
    for (t, b), m in by_size.items():
        for tree in m.values():
            if isinstance(tree, Join):
                joins.append((t, b, tree))

    def build(pairs, tips_left, boxes_left, start):
        if len(pairs) >= 2:
            record(Box(tuple(pairs)))
        for i in range(start, len(joins)):
            t, b, tree = joins[i]
            if t > tips_left or b > boxes_left:
                continue
            build(pairs + [tree], tips_left - t, boxes_left - b, i)

    # a box with m pairs uses one box itself
    build([], tips, max_boxes - 1, 0)


def _box_count(t: TreeNode) -> int:
    if isinstance(t, Tip):
        return 0
    if isinstance(t, Join):
        return _box_count(t.left) + _box_count(t.right)
    return 1 + sum(_box_count(p) for p in t.pairs)
