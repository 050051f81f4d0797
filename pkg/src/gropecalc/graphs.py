"""Connected unitrivalent multigraphs and their three degrees.

Vertices have degree 1 or 3; loops and parallel edges are allowed (the
theta graph and glued-tip graphs need them), so edges are first-class
objects identified by index, and incidence is stored as half-edges
``(edge_id, end)``.  Each trivalent vertex carries a cyclic order of its
three half-edges; degree computations ignore it, canonical forms record
its parity as a sign.  An optional root is a marked univalent vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .trees import Join, Tip, TreeError, TreeNode


class GraphError(ValueError):
    """Invariant violation on construction or an invalid operation."""


class GraphParseError(ValueError):
    pass


class UnitrivalentGraph:
    """Immutable connected multigraph with all degrees in {1, 3}."""

    __slots__ = ("n", "edges", "inc", "root", "_canon")

    def __init__(self, n: int, edges: Sequence[tuple], inc=None, root: Optional[int] = None):
        edges = tuple((int(u), int(v)) for u, v in edges)
        if inc is None:
            slots = [[] for _ in range(n)]
            for eid, (u, v) in enumerate(edges):
                slots[u].append((eid, 0))
                slots[v].append((eid, 1))
            inc = tuple(tuple(s) for s in slots)
        else:
            inc = tuple(tuple(s) for s in inc)
        self.n = n
        self.edges = edges
        self.inc = inc
        self.root = root
        self._canon = None
        self._validate()

    def _validate(self):
        if self.n <= 0:
            raise GraphError("graph needs at least one vertex")
        if self.n % 2 != 0:
            raise GraphError("odd vertex count (Vassiliev degree must be an integer)")
        if len(self.inc) != self.n:
            raise GraphError("incidence length mismatch")
        seen = {}
        for v, slots in enumerate(self.inc):
            if len(slots) not in (1, 3):
                raise GraphError(f"vertex {v} has degree {len(slots)}")
            for eid, end in slots:
                if not (0 <= eid < len(self.edges)) or end not in (0, 1):
                    raise GraphError(f"bad half-edge ({eid},{end}) at vertex {v}")
                if (eid, end) in seen:
                    raise GraphError(f"half-edge ({eid},{end}) used twice")
                seen[(eid, end)] = v
                if self.edges[eid][end] != v:
                    raise GraphError(f"half-edge ({eid},{end}) not incident to vertex {v}")
        if len(seen) != 2 * len(self.edges):
            raise GraphError("incidence does not cover every half-edge")
        if self.root is not None:
            if not (0 <= self.root < self.n):
                raise GraphError("root out of range")
            if len(self.inc[self.root]) != 1:
                raise GraphError("root must be univalent")
        if not self._connected():
            raise GraphError("graph must be connected")

    def _connected(self) -> bool:
        seen = {0}
        stack = [0]
        adj = self.adjacency()
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, v: int) -> int:
        return len(self.inc[v])

    def endpoints(self, eid: int) -> tuple:
        return self.edges[eid]

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if u == v:
            return w
        if w == v:
            return u
        raise GraphError(f"edge {eid} not incident to {v}")

    def univalent_vertices(self):
        return [v for v in range(self.n) if self.degree(v) == 1]

    def is_tree(self) -> bool:
        return len(self.edges) == self.n - 1

    def __eq__(self, other):
        return (
            isinstance(other, UnitrivalentGraph)
            and self.n == other.n
            and self.edges == other.edges
            and self.inc == other.inc
            and self.root == other.root
        )

    def __hash__(self):
        return hash((self.n, self.edges, self.inc, self.root))

    def __repr__(self):
        r = f", root={self.root}" if self.root is not None else ""
        return f"UnitrivalentGraph(n={self.n}, edges={list(self.edges)}{r})"


# ---------------------------------------------------------------------------
# degrees
# ---------------------------------------------------------------------------

def vassiliev_degree(g: UnitrivalentGraph) -> int:
    """Half the vertex count."""
    return g.n // 2


def loop_degree(g: UnitrivalentGraph) -> int:
    """First Betti number of a connected graph: E - V + 1."""
    return len(g.edges) - g.n + 1


def grope_degree(g: UnitrivalentGraph) -> int:
    return vassiliev_degree(g) + loop_degree(g)


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Canonical labeling with a cyclic-order parity sign.

    ``code`` identifies the rooted isomorphism class of the underlying
    multigraph (orientation excluded); ``sign`` relates the input's cyclic
    orders to the reference orientation of the canonical representative.
    ``ambiguous`` is True when an automorphism reverses the orientation
    parity, i.e. when the sign is not an isomorphism invariant (such
    diagrams are 2-torsion in the quotient modules).
    """

    code: bytes
    sign: int
    ambiguous: bool
    labeling: tuple


def _initial_colors(g: UnitrivalentGraph):
    loops = [0] * g.n
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
    sig = [
        (g.degree(v), 1 if v == g.root else 0, loops[v])
        for v in range(g.n)
    ]
    ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
    return [ranks[s] for s in sig]


def _labelings(g: UnitrivalentGraph):
    """Yield vertex labelings via individualization-refinement.

    A labeling is a tuple ``perm`` with ``perm[v] = new label of v``.
    Refinement is isomorphism-invariant and the first non-singleton color
    class is fully branched, so isomorphic graphs yield identical code
    sets and the minimum over the yielded labelings is canonical.
    """
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)

    def refine(colors):
        while True:
            sig = [
                (colors[v], tuple(sorted(colors[w] for w in adj[v])))
                for v in range(g.n)
            ]
            ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
            new = [ranks[s] for s in sig]
            if new == colors:
                return colors
            colors = new

    def rec(colors):
        colors = refine(colors)
        cells = {}
        for v in range(g.n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            order = sorted(range(g.n), key=lambda v: colors[v])
            perm = [0] * g.n
            for label, v in enumerate(order):
                perm[v] = label
            yield tuple(perm)
            return
        for v in target:
            branched = [2 * c + 1 for c in colors]
            branched[v] = 2 * colors[v]
            yield from rec(branched)

    yield from rec(_initial_colors(g))


def _structure_code(g: UnitrivalentGraph, perm):
    root = -1 if g.root is None else perm[g.root]
    es = sorted(
        (perm[u], perm[v]) if perm[u] <= perm[v] else (perm[v], perm[u])
        for u, v in g.edges
    )
    return (g.n, root, tuple(es))


def canonical_form(g: UnitrivalentGraph) -> CanonicalForm:
    """Minimal structure code over refined labelings, plus orientation sign.

    Among labelings achieving the minimal code, the lexicographically
    least permutation is used to transport the cyclic orders; the sign is
    the parity of vertices whose transported cyclic order disagrees with
    the reference (ascending) orientation.
    """
    if g._canon is not None:
        return g._canon
    best_code = None
    best_perms = []
    for perm in _labelings(g):
        code = _structure_code(g, perm)
        if best_code is None or code < best_code:
            best_code = code
            best_perms = [perm]
        elif code == best_code:
            best_perms.append(perm)
    signs = {_orientation_sign(g, perm, best_code) for perm in best_perms}
    perm0 = min(best_perms)
    sign = _orientation_sign(g, perm0, best_code)
    form = CanonicalForm(
        code=repr(best_code).encode(),
        sign=sign,
        ambiguous=(len(signs) == 2),
        labeling=perm0,
    )
    g._canon = form
    return form


def _orientation_sign(g: UnitrivalentGraph, perm, code) -> int:
    """Parity of transported cyclic orders against ascending reference."""
    canon_eid = _canon_edge_ids(g, perm, code)
    sign = 1
    for v in range(g.n):
        if g.degree(v) != 3:
            continue
        names = []
        loop_seen = {}
        for eid, end in g.inc[v]:
            u, w = g.edges[eid]
            if u == w:
                # loop: order ends by first appearance in this cyclic tuple
                k = loop_seen.setdefault(eid, 0)
                loop_seen[eid] = k + 1
                names.append(2 * canon_eid[eid] + k)
            else:
                here = perm[v]
                there = perm[g.other_end(eid, v)]
                names.append(2 * canon_eid[eid] + (0 if here < there else 1))
        # rotate the 3-cycle so the least name comes first
        i = names.index(min(names))
        a, b, c = names[i], names[(i + 1) % 3], names[(i + 2) % 3]
        if b > c:
            sign = -sign
    return sign


def _canon_edge_ids(g: UnitrivalentGraph, perm, code):
    """Canonical edge id of every input edge under a labeling.

    Parallel copies are tie-broken by the first appearance of the edge in
    the cyclic data of the relabeled graph, so the assignment is a
    deterministic function of (graph, perm)."""
    sorted_pairs = list(code[2])
    buckets = {}
    for eid, (u, v) in enumerate(g.edges):
        a, b = perm[u], perm[v]
        if a > b:
            a, b = b, a
        buckets.setdefault((a, b), []).append(eid)
    pair_slots = {}
    for idx, pair in enumerate(sorted_pairs):
        pair_slots.setdefault(pair, []).append(idx)
    first_touch = {}
    counter = 0
    for v in sorted(range(g.n), key=lambda x: perm[x]):
        for eid, end in g.inc[v]:
            if eid not in first_touch:
                first_touch[eid] = counter
            counter += 1
    canon_eid = {}
    for pair, eids in buckets.items():
        eids_sorted = sorted(eids, key=lambda e: first_touch[e])
        for slot, e in zip(pair_slots[pair], eids_sorted):
            canon_eid[e] = slot
    return canon_eid


def canonical_representative(g: UnitrivalentGraph) -> UnitrivalentGraph:
    """The canonical graph of g's isomorphism class with the reference
    (ascending) orientation at every trivalent vertex."""
    form = canonical_form(g)
    perm = form.labeling
    code = _structure_code(g, perm)
    canon_eid = _canon_edge_ids(g, perm, code)
    edges = list(code[2])
    inc = [[] for _ in range(g.n)]
    for v in range(g.n):
        names = []
        loop_seen = {}
        for eid, end in g.inc[v]:
            u, w = g.edges[eid]
            if u == w:
                k = loop_seen.setdefault(eid, 0)
                loop_seen[eid] = k + 1
                names.append((canon_eid[eid], k))
            else:
                here = perm[v]
                there = perm[g.other_end(eid, v)]
                names.append((canon_eid[eid], 0 if here < there else 1))
        inc[perm[v]] = sorted(names)
    root = None if g.root is None else perm[g.root]
    return UnitrivalentGraph(g.n, edges, inc, root=root)


def isomorphic(a: UnitrivalentGraph, b: UnitrivalentGraph) -> bool:
    return canonical_form(a).code == canonical_form(b).code


# ---------------------------------------------------------------------------
# cut and glue
# ---------------------------------------------------------------------------

def cut_edges(g: UnitrivalentGraph, edge_ids: Iterable[int]) -> UnitrivalentGraph:
    """Cut each edge into two new univalent vertices.

    The cut set must have exactly ``loop_degree(g)`` edges and leave a
    connected acyclic graph.  Edge ids of kept edges are preserved: edge
    ``e`` keeps its id but now ends at a fresh tip, and the partner tip's
    edge is appended, so :func:`glue_graph_tips` can reverse the cut
    exactly.
    """
    edge_ids = sorted(set(int(e) for e in edge_ids))
    for e in edge_ids:
        if not (0 <= e < len(g.edges)):
            raise GraphError(f"no edge {e}")
    if len(edge_ids) != loop_degree(g):
        raise GraphError(
            f"cut set must have {loop_degree(g)} edges, got {len(edge_ids)}"
        )
    n = g.n
    edges = list(g.edges)
    inc = [list(s) for s in g.inc]
    for e in edge_ids:
        u, v = edges[e]
        x = n
        y = n + 1
        n += 2
        # keep id e for the u-side, append a fresh edge for the v-side
        edges[e] = (u, x)
        new_id = len(edges)
        edges.append((v, y))
        inc.append([(e, 1)])
        inc.append([(new_id, 1)])
        # v's slot switches from e to the new edge, same cyclic position
        slots = inc[v]
        for i, (eid, end) in enumerate(slots):
            if eid == e and end == 1:
                slots[i] = (new_id, 0)
                break
        else:
            raise GraphError("internal: cut bookkeeping")
        # u keeps (e, 0); if e was a loop both ends sat at u
        if u == v:
            pass
    try:
        out = UnitrivalentGraph(n, edges, inc, root=g.root)
    except GraphError as exc:
        raise GraphError(f"cut produced an invalid graph: {exc}") from exc
    if not out.is_tree():
        raise GraphError("cut set does not break every cycle")
    return out


def glue_graph_tips(g: UnitrivalentGraph, pairs: Sequence[tuple]) -> UnitrivalentGraph:
    """Merge pairs of univalent vertices into edges (inverse of cutting)."""
    flat = [v for p in pairs for v in p]
    if len(set(flat)) != len(flat):
        raise GraphError("tips may appear in at most one pair")
    for x, y in pairs:
        for v in (x, y):
            if not (0 <= v < g.n) or g.degree(v) != 1:
                raise GraphError(f"vertex {v} is not a tip")
            if v == g.root:
                raise GraphError("the root is never glued")
        if x == y:
            raise GraphError("cannot glue a tip to itself")
    tipset = set(flat)
    edges = list(g.edges)
    inc = [list(s) for s in g.inc]
    dead_edges = set()
    for x, y in pairs:
        ex, _ = inc[x][0]
        ey, _ = inc[y][0]
        if ex == ey:
            raise GraphError("cannot glue the two ends of a single edge")
        u = g.other_end(ex, x)
        v = g.other_end(ey, y)
        if u in tipset or v in tipset:
            raise GraphError("glued tips must not be adjacent to glued tips")
        # reuse ex as the merged edge u -- v; drop ey
        end_u = 0 if edges[ex][0] == u else 1
        if end_u == 0:
            edges[ex] = (u, v)
        else:
            edges[ex] = (v, u)
        for i, (eid, end) in enumerate(inc[v]):
            if eid == ey:
                inc[v][i] = (ex, 1 - end_u)
                break
        dead_edges.add(ey)
    # drop tip vertices and dead edges, compacting ids
    vmap = {}
    for v in range(g.n):
        if v not in tipset:
            vmap[v] = len(vmap)
    emap = {}
    new_edges = []
    for eid, (u, v) in enumerate(edges):
        if eid in dead_edges or u in tipset or v in tipset:
            continue
        emap[eid] = len(new_edges)
        new_edges.append((vmap[u], vmap[v]))
    new_inc = []
    for v in range(g.n):
        if v in tipset:
            continue
        new_inc.append([(emap[eid], end) for eid, end in inc[v]])
    root = None if g.root is None else vmap[g.root]
    return UnitrivalentGraph(len(vmap), new_edges, new_inc, root=root)


# ---------------------------------------------------------------------------
# tree <-> graph
# ---------------------------------------------------------------------------

def tree_to_graph(t: TreeNode, rooted: bool = True) -> UnitrivalentGraph:
    """Rooted graph of a box-free tree: tips and the root become univalent
    vertices, joins become trivalent vertices with cyclic order
    (parent, left, right)."""
    if not isinstance(t, (Tip, Join)):
        raise TreeError("tree_to_graph needs a box-free tree")
    edges = []
    inc = {}
    counter = [0]

    def new_vertex():
        v = counter[0]
        counter[0] += 1
        inc[v] = []
        return v

    root = new_vertex()

    def build(node, parent):
        v = new_vertex()
        eid = len(edges)
        edges.append((parent, v))
        inc[parent].append((eid, 0))
        inc[v].append((eid, 1))
        if isinstance(node, Join):
            build(node.left, v)
            build(node.right, v)
        return v

    build(t, root)
    n = counter[0]
    return UnitrivalentGraph(
        n, edges, [inc[v] for v in range(n)], root=root if rooted else None
    )


def graph_to_tree(g: UnitrivalentGraph) -> TreeNode:
    """Recover the rooted tree from a tree-shaped rooted graph."""
    if g.root is None:
        raise GraphError("graph_to_tree needs a root")
    if not g.is_tree():
        raise GraphError("graph has cycles; cut them first")

    def down(v, via_eid):
        if g.degree(v) == 1:
            return Tip()
        slots = [eid for eid, _ in g.inc[v]]
        i = slots.index(via_eid)
        a = slots[(i + 1) % 3]
        b = slots[(i + 2) % 3]
        return Join(
            down(g.other_end(a, v), a),
            down(g.other_end(b, v), b),
        )

    eid, _ = g.inc[g.root][0]
    return down(g.other_end(eid, g.root), eid)


def glue_tips(t: TreeNode, pairing: Sequence[tuple]) -> UnitrivalentGraph:
    """Glue tip pairs of a box-free tree; tips indexed in stored order.

    The root vertex is never part of the pairing.  Returns the rooted
    graph (equal to ``tree_to_graph(t)`` for an empty pairing).
    """
    g = tree_to_graph(t)
    tips = [v for v in range(g.n) if g.degree(v) == 1 and v != g.root]
    try:
        pairs = [(tips[i], tips[j]) for i, j in pairing]
    except IndexError as exc:
        raise GraphError("tip index out of range") from exc
    if not pairs:
        return g
    return glue_graph_tips(g, pairs)


# ---------------------------------------------------------------------------
# named small graphs
# ---------------------------------------------------------------------------

def theta_graph() -> UnitrivalentGraph:
    """Two vertices joined by three parallel edges."""
    return UnitrivalentGraph(
        2,
        [(0, 1), (0, 1), (0, 1)],
        inc=[[(0, 0), (1, 0), (2, 0)], [(0, 1), (2, 1), (1, 1)]],
    )


def single_edge_graph() -> UnitrivalentGraph:
    return UnitrivalentGraph(2, [(0, 1)])


def dumbbell_graph() -> UnitrivalentGraph:
    return UnitrivalentGraph(
        2,
        [(0, 0), (0, 1), (1, 1)],
        inc=[[(0, 0), (0, 1), (1, 0)], [(1, 1), (2, 0), (2, 1)]],
    )


# ---------------------------------------------------------------------------
# the textual graph format
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> UnitrivalentGraph:
    """Line format: header ``graph``; ``t <id>: e1 e2 e3`` (cyclic order as
    written); ``u <id>: e``; optional ``root <id>``.  Edge tokens are
    opaque and must appear exactly twice."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != "graph":
        raise GraphParseError("missing 'graph' header")
    vert_rows = []
    root_name = None
    for ln in lines[1:]:
        if ln.startswith("root"):
            parts = ln.split()
            if len(parts) != 2:
                raise GraphParseError(f"bad root line: {ln!r}")
            root_name = parts[1]
            continue
        kind, rest = ln[0], ln[1:]
        if kind not in ("t", "u") or ":" not in rest:
            raise GraphParseError(f"bad vertex line: {ln!r}")
        name, es = rest.split(":", 1)
        name = name.strip()
        etoks = es.split()
        if kind == "t" and len(etoks) != 3:
            raise GraphParseError(f"trivalent vertex {name} needs 3 edges")
        if kind == "u" and len(etoks) != 1:
            raise GraphParseError(f"univalent vertex {name} needs 1 edge")
        vert_rows.append((name, etoks))
    vid = {name: i for i, (name, _) in enumerate(vert_rows)}
    if len(vid) != len(vert_rows):
        raise GraphParseError("duplicate vertex id")
    # assign edge ids and ends in order of appearance
    eid = {}
    ends_used = {}
    edges = []
    inc = [[] for _ in vert_rows]
    for name, etoks in vert_rows:
        v = vid[name]
        for tok in etoks:
            if tok not in eid:
                eid[tok] = len(edges)
                edges.append([None, None])
                ends_used[tok] = 0
            k = ends_used[tok]
            if k > 1:
                raise GraphParseError(f"edge {tok} appears more than twice")
            edges[eid[tok]][k] = v
            inc[v].append((eid[tok], k))
            ends_used[tok] = k + 1
    for tok, k in ends_used.items():
        if k != 2:
            raise GraphParseError(f"edge {tok} appears {k} times, expected 2")
    root = None
    if root_name is not None:
        if root_name not in vid:
            raise GraphParseError(f"unknown root vertex {root_name}")
        root = vid[root_name]
    try:
        return UnitrivalentGraph(len(vert_rows), [tuple(e) for e in edges], inc, root=root)
    except GraphError as exc:
        raise GraphParseError(str(exc)) from exc


def print_graph(g: UnitrivalentGraph) -> str:
    out = ["graph"]
    for v in range(g.n):
        kind = "t" if g.degree(v) == 3 else "u"
        # loops print the same token twice; ends are implicit in order
        toks = " ".join(f"e{eid}" for eid, _ in g.inc[v])
        out.append(f"{kind} v{v}: {toks}")
    if g.root is not None:
        out.append(f"root v{g.root}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------
#
# Exhaustive census by vertex count.  Every connected unitrivalent
# multigraph with >= 4 vertices reduces by one of three moves, each
# dropping two vertices:
#
#   leaf splice:  remove a tip and its trivalent neighbor, splicing the
#                 neighbor's two remaining half-edges into one edge;
#   loop splice:  remove a looped vertex and its trivalent neighbor,
#                 splicing the neighbor's remaining half-edges
#                 (applies to cubic graphs whose cycles are all loops);
#   edge splice:  remove a non-loop cycle edge of a cubic graph and
#                 splice both endpoints.
#
# Running the inverses (subdivide an edge and hang a tip / hang a looped
# vertex / subdivide two edges and join) from the 2-vertex base cases
# therefore reaches everything; duplicates are removed canonically.

def _grow_leaf(g: UnitrivalentGraph, eid: int) -> UnitrivalentGraph:
    """Subdivide edge eid with a new trivalent vertex carrying a new tip."""
    u, v = g.edges[eid]
    n = g.n
    w, tip = n, n + 1
    edges = list(g.edges)
    inc = [list(s) for s in g.inc]
    # eid keeps its u end, now ends at w
    edges[eid] = (u, w)
    back = len(edges)
    edges.append((w, v))
    leaf = len(edges)
    edges.append((w, tip))
    for i, (e, end) in enumerate(inc[v]):
        if e == eid and end == 1:
            inc[v][i] = (back, 1)
            break
    else:
        # loop at u == v: rewrite the second (e,1) slot
        raise GraphError("internal: grow bookkeeping")
    inc.append([(eid, 1), (back, 0), (leaf, 0)])
    inc.append([(leaf, 1)])
    return UnitrivalentGraph(n + 2, edges, inc)


def _grow_loop(g: UnitrivalentGraph, eid: int) -> UnitrivalentGraph:
    """Subdivide edge eid with a new trivalent vertex joined to a new
    looped vertex."""
    u, v = g.edges[eid]
    n = g.n
    w, z = n, n + 1
    edges = list(g.edges)
    inc = [list(s) for s in g.inc]
    edges[eid] = (u, w)
    back = len(edges)
    edges.append((w, v))
    stem = len(edges)
    edges.append((w, z))
    loop = len(edges)
    edges.append((z, z))
    for i, (e, end) in enumerate(inc[v]):
        if e == eid and end == 1:
            inc[v][i] = (back, 1)
            break
    else:
        raise GraphError("internal: grow bookkeeping")
    inc.append([(eid, 1), (back, 0), (stem, 0)])
    inc.append([(stem, 1), (loop, 0), (loop, 1)])
    return UnitrivalentGraph(n + 2, edges, inc)


def _grow_bridge(g: UnitrivalentGraph, e1: int, e2: int) -> UnitrivalentGraph:
    """Subdivide edges e1 and e2 (possibly equal) and join the two new
    vertices by an edge."""
    n = g.n
    a, b = n, n + 1
    edges = list(g.edges)
    inc = [list(s) for s in g.inc]

    def subdivide(eid, mid):
        u, v = edges[eid]
        edges[eid] = (u, mid)
        back = len(edges)
        edges.append((mid, v))
        for i, (e, end) in enumerate(inc[v]):
            if e == eid and end == 1:
                inc[v][i] = (back, 1)
                break
        else:
            raise GraphError("internal: grow bookkeeping")
        return back

    back1 = subdivide(e1, a)
    # if e1 == e2 the second subdivision splits the freshly added back edge
    second = e2 if e1 != e2 else back1
    back2 = subdivide(second, b)
    join = len(edges)
    edges.append((a, b))
    inc.append([(e1, 1), (back1, 0), (join, 0)])
    inc.append([(second, 1), (back2, 0), (join, 1)])
    return UnitrivalentGraph(n + 2, edges, inc)


def _base_graphs():
    lollipop = UnitrivalentGraph(
        2,
        [(0, 0), (0, 1)],
        inc=[[(0, 0), (0, 1), (1, 0)], [(1, 1)]],
    )
    return [single_edge_graph(), lollipop, theta_graph(), dumbbell_graph()]


@lru_cache(maxsize=None)
def _census_up_to(max_vertices: int) -> tuple:
    """All connected unitrivalent multigraphs with at most ``max_vertices``
    vertices, one per isomorphism class, unrooted."""
    if max_vertices < 2:
        return ()
    seen = {}
    for g in _base_graphs():
        seen[canonical_form(g).code] = g
    frontier = list(seen.values())
    n = 2
    while n + 2 <= max_vertices:
        new_frontier = []
        for g in frontier:
            candidates = []
            ne = len(g.edges)
            for e in range(ne):
                candidates.append(_grow_leaf(g, e))
                candidates.append(_grow_loop(g, e))
            cubic = not g.univalent_vertices()
            if cubic:
                for e1 in range(ne):
                    for e2 in range(e1, ne):
                        candidates.append(_grow_bridge(g, e1, e2))
            for c in candidates:
                code = canonical_form(c).code
                if code not in seen:
                    seen[code] = c
                    new_frontier.append(c)
        # growth moves add 2 vertices, so the frontier is everything of
        # size n+2; graphs of size <= n never reappear
        frontier = new_frontier
        n += 2
    return tuple(seen.values())


def enumerate_graphs(d: int, max_vertices: int) -> list:
    """All connected unitrivalent graphs of grope degree d with at most
    ``max_vertices`` vertices, one per isomorphism class."""
    if d < 1:
        raise GraphError("grope degree must be >= 1")
    return [g for g in _census_up_to(max_vertices) if grope_degree(g) == d]


def naive_enumerate_graphs(max_vertices: int) -> list:
    """Generate-and-filter oracle for :func:`enumerate_graphs`.

    Enumerates labeled edge multisets with degrees in {1,3} directly,
    keeps connected ones, and deduplicates canonically.  Exponential;
    only usable for very small sizes.
    """
    out = {}
    for n in range(2, max_vertices + 1, 2):
        slots = [(i, j) for i in range(n) for j in range(i, n)]

        def rec(idx, deg, edges):
            if idx == len(slots):
                if all(d in (1, 3) for d in deg):
                    try:
                        g = UnitrivalentGraph(n, edges)
                    except GraphError:
                        return
                    out.setdefault(canonical_form(g).code, g)
                return
            i, j = slots[idx]
            cap = 3
            rec(idx + 1, deg, edges)
            for mult in range(1, cap + 1):
                add = 2 * mult if i == j else mult
                if deg[i] + (add if i == j else mult) > 3:
                    break
                if i != j and deg[j] + mult > 3:
                    break
                deg2 = list(deg)
                if i == j:
                    deg2[i] += 2 * mult
                else:
                    deg2[i] += mult
                    deg2[j] += mult
                rec(idx + 1, deg2, edges + [(i, j)] * mult)

        rec(0, [0] * n, [])
    return list(out.values())


def random_graph(rng, max_vertices: int = 14, rooted: bool = False) -> UnitrivalentGraph:
    """Seeded random connected unitrivalent graph: a random plane tree with
    a random set of disjoint tip pairs glued."""
    from .trees import Tip as _Tip, Join as _Join

    def rand_tree(k):
        if k == 1:
            return _Tip()
        i = rng.randint(1, k - 1)
        return _Join(rand_tree(i), rand_tree(k - i))

    while True:
        k = rng.randint(1, (max_vertices + 2) // 2 + 2)
        t = rand_tree(k)
        g = tree_to_graph(t, rooted=True)
        tips = [v for v in range(g.n) if g.degree(v) == 1 and v != g.root]
        max_pairs = len(tips) // 2
        npairs = rng.randint(0, max_pairs)
        rng.shuffle(tips)
        pairs = [(tips[2 * i], tips[2 * i + 1]) for i in range(npairs)]
        try:
            if pairs:
                g = glue_graph_tips(g, pairs)
        except GraphError:
            continue
        if g.n <= max_vertices:
            break
    if not rooted:
        g = UnitrivalentGraph(g.n, g.edges, g.inc, root=None)
    return g
