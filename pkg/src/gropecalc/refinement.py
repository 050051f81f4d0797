"""Reduce a tree-with-boxes to a sequence of genus-one (box-free) trees.

A box one level above its dual subtree is pushed up by distributing the
dual over the pairs::

    Join(Box[p1..pm], A)  ->  Box[Join(p1, A), ..., Join(pm, A)]

with nested boxes flattened.  Iterating until every box reaches the root
and splitting the root box gives the output sequence.  Each step
preserves the class, so every output has class >= the input class.
"""

from __future__ import annotations

from .trees import Box, Join, Tip, TreeError, TreeNode, box, is_box_free


class RefineError(ValueError):
    pass


# -- node paths -------------------------------------------------------------
#
# A path is a tuple of child indices into the stored order: Join children
# are 0/1, Box children are 0..arity-1.

def node_at(t: TreeNode, path) -> TreeNode:
    node = t
    for i in path:
        if isinstance(node, Tip):
            raise RefineError(f"path {path} walks through a tip")
        kids = (node.left, node.right) if isinstance(node, Join) else node.pairs
        if not (0 <= i < len(kids)):
            raise RefineError(f"path {path} leaves the tree")
        node = kids[i]
    return node


def _replace(t: TreeNode, path, new: TreeNode) -> TreeNode:
    if not path:
        return new
    i = path[0]
    if isinstance(t, Join):
        kids = [t.left, t.right]
        kids[i] = _replace(kids[i], path[1:], new)
        return Join(kids[0], kids[1])
    if isinstance(t, Box):
        kids = list(t.pairs)
        kids[i] = _replace(kids[i], path[1:], new)
        return box(kids)
    raise RefineError("path walks through a tip")


def box_paths(t: TreeNode) -> list:
    """Paths of all Box nodes in preorder."""
    out = []

    def walk(node, path):
        if isinstance(node, Join):
            walk(node.left, path + (0,))
            walk(node.right, path + (1,))
        elif isinstance(node, Box):
            out.append(path)
            for i, p in enumerate(node.pairs):
                walk(p, path + (i,))

    walk(t, ())
    return out


def push_box_step(t: TreeNode, location) -> TreeNode:
    """Push the box at ``location`` one level up through its parent Join.

    ``location`` addresses the Box; its parent must be a Join.  The dual
    subtree is duplicated wholesale (boxes inside it included) into every
    pair, and a box surfacing directly under another box is flattened.
    """
    location = tuple(location)
    target = node_at(t, location)
    if not isinstance(target, Box):
        raise RefineError("no box at location")
    if not location:
        raise RefineError("box already at the root")
    parent_path = location[:-1]
    parent = node_at(t, parent_path)
    if not isinstance(parent, Join):
        raise RefineError("box must sit directly under a Join")
    dual = parent.right if location[-1] == 0 else parent.left
    pushed = box([Join(p, dual) for p in target.pairs])
    # _replace rebuilds enclosing boxes through the box() factory, which
    # flattens a box surfacing directly under another box
    return _replace(t, parent_path, pushed)


def termination_measure(t: TreeNode) -> int:
    """Polynomial interpretation that strictly decreases under
    push_box_step: tips weigh 2, joins multiply, boxes add one."""
    if isinstance(t, Tip):
        return 2
    if isinstance(t, Join):
        return termination_measure(t.left) * termination_measure(t.right)
    return sum(termination_measure(p) for p in t.pairs) + 1


def _innermost_leftmost_box(t: TreeNode):
    paths = [p for p in box_paths(t) if p]
    if not paths:
        return None
    depth = max(len(p) for p in paths)
    return min(p for p in paths if len(p) == depth)


def refine(t: TreeNode) -> list:
    """Ordered list of box-free trees realizing the tree-with-boxes.

    Box-free input returns ``[t]``.  Push order is innermost-leftmost;
    the output order is the root split order.
    """
    while True:
        loc = _innermost_leftmost_box(t)
        if loc is None:
            break
        t = push_box_step(t, loc)
    if isinstance(t, Box):
        return list(t.pairs)
    return [t]


def expected_output_count(t: TreeNode) -> int:
    """Independent count oracle: joins multiply branch counts, boxes add.

    For parallel (non-nested) boxes this is the product of the box
    arities; nesting makes it the full recursive expansion count.
    """
    if isinstance(t, Tip):
        return 1
    if isinstance(t, Join):
        return expected_output_count(t.left) * expected_output_count(t.right)
    return sum(expected_output_count(p) for p in t.pairs)
