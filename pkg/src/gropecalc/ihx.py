"""Rewrite rooted trees into caterpillars via local IHX moves.

The local move at an internal edge (u = parent, w = child) replaces the
subtree pattern ``[[A,B],C]`` (A, B the children of w; C the sibling)
by the two resolutions ``[[A,C],B]`` and ``[[B,C],A]``, with the signed
identity

    [[A,B],C]  =  [[A,C],B]  -  [[B,C],A]

which is the cyclic Jacobi identity read on plane trees.  Signs are
composed with the child-swap parities picked up when re-canonicalizing,
so the signed identity holds in the diagram-space quotient; the
diagram-space and Lie-bracket oracles certify the convention.

Rewriting strategy: while some internal vertex is missed by a maximal
chain, resolve the edge joining a missed vertex to the chain; both
resolutions splice the missed vertex into the chain, so the maximal
chain length strictly increases and the rewrite terminates in
caterpillars of the same class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .trees import (
    Join,
    Tip,
    TreeError,
    TreeNode,
    canonical_plane,
    class_of,
    is_half_grope,
    require_box_free,
)


class IhxError(ValueError):
    pass


@dataclass(frozen=True)
class SignedTree:
    sign: int
    tree: TreeNode

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise IhxError("sign must be +1 or -1")
        require_box_free(self.tree, "SignedTree")


# ---------------------------------------------------------------------------
# chains
# ---------------------------------------------------------------------------

def _height(node: TreeNode) -> int:
    if isinstance(node, Tip):
        return 0
    return 1 + max(_height(node.left), _height(node.right))


def chain_length(t: TreeNode) -> int:
    """Edge count of the longest chain through the root's pendant edge,
    i.e. one more than the height of the top node.  Caterpillars of
    class k are exactly the trees reaching the maximum value k."""
    require_box_free(t, "chain_length")
    if isinstance(t, Tip):
        raise IhxError("chain_length needs class >= 2")
    return 1 + _height(t)


# ---------------------------------------------------------------------------
# the local move
# ---------------------------------------------------------------------------

def internal_edges(t: TreeNode) -> list:
    """Paths of child Joins whose parent is also a Join."""
    out = []

    def walk(node, path):
        if not isinstance(node, Join):
            return
        for i, child in enumerate((node.left, node.right)):
            if isinstance(child, Join):
                out.append(path + (i,))
            walk(child, path + (i,))

    walk(t, ())
    return out


def _node_at(t, path):
    node = t
    for i in path:
        node = (node.left, node.right)[i]
    return node


def _replace(t, path, new):
    if not path:
        return new
    kids = [t.left, t.right]
    kids[path[0]] = _replace(kids[path[0]], path[1:], new)
    return Join(kids[0], kids[1])


def ihx_step(t: TreeNode, edge) -> tuple:
    """Resolve t at an internal edge into two signed trees (H, X).

    ``edge`` is the path to the child Join of the edge; it must not lead
    to a tip.  Both outputs have the same class as t, and the identity
    t = sign(H) H + sign(X) X holds in the diagram-space quotient.
    """
    require_box_free(t, "ihx_step")
    edge = tuple(edge)
    if not edge:
        raise IhxError("the root edge is not internal")
    w = _node_at(t, edge)
    if not isinstance(w, Join):
        raise IhxError("edge incident to a tip")
    parent = _node_at(t, edge[:-1])
    sib = parent.right if edge[-1] == 0 else parent.left
    a, b = w.left, w.right
    # plane reading: parent = [w, C] gives [[A,B],C]; parent = [C, w]
    # is the antisymmetry flip of it
    base = 1 if edge[-1] == 0 else -1
    h_local = Join(Join(a, sib), b)
    x_local = Join(Join(b, sib), a)
    h_tree = _replace(t, edge[:-1], h_local)
    x_tree = _replace(t, edge[:-1], x_local)
    return SignedTree(base, h_tree), SignedTree(-base, x_tree)


def _canonical_signed(st: SignedTree) -> SignedTree:
    tree, _, sign, _ = canonical_plane(st.tree)
    return SignedTree(st.sign * sign, tree)


# ---------------------------------------------------------------------------
# the rewriting loop
# ---------------------------------------------------------------------------

def _pick_edge(t: TreeNode):
    """Edge of the next IHX move: a maximal chain is the root-to-tip
    path descending into the taller child; the move resolves the edge
    joining the chain to the first off-chain internal vertex along it.
    Returns None for caterpillars (no internal vertex is missed).
    """
    path = ()
    node = t
    while isinstance(node, Join):
        hl, hr = _height(node.left), _height(node.right)
        on = 0 if hl >= hr else 1
        off = (node.left, node.right)[1 - on]
        if isinstance(off, Join):
            return path + (1 - on,)
        path = path + (on,)
        node = (node.left, node.right)[on]
    return None


def ihx_reduce(t: TreeNode) -> list:
    """Rewrite a box-free tree into signed caterpillars of the same class."""
    result, _ = ihx_reduce_trace(t)
    return result


def ihx_reduce_trace(t: TreeNode) -> tuple:
    """Like :func:`ihx_reduce` but also returns the rewrite trace, one
    record per applied move."""
    require_box_free(t, "ihx_reduce")
    if class_of(t) < 2:
        raise IhxError("ihx_reduce needs class >= 2")
    trace = []
    out = []
    step = [0]

    def rec(st: SignedTree):
        st = _canonical_signed(st)
        if is_half_grope(st.tree):
            out.append(st)
            return
        edge = _pick_edge(st.tree)
        if edge is None:
            raise IhxError("internal: maximal chain covers a non-caterpillar")
        h, x = ihx_step(st.tree, edge)
        l0 = chain_length(st.tree)
        if not (chain_length(h.tree) > l0 and chain_length(x.tree) > l0):
            raise IhxError("internal: chain length did not increase")
        trace.append(
            {
                "step": step[0],
                "tree": st.tree,
                "edge": list(edge),
                "results": [(h.sign, h.tree), (x.sign, x.tree)],
            }
        )
        step[0] += 1
        rec(SignedTree(st.sign * h.sign, h.tree))
        rec(SignedTree(st.sign * x.sign, x.tree))

    rec(SignedTree(1, t))
    return out, trace
