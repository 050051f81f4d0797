"""Abstract-state simulator of the clasper leaf cleanup algorithm.

A clasper is a rooted tree type plus per-leaf disk data: framing, knot
complexity (unknottedness), and counts of intersections with clasper
edges (e), the knot (k) and clasps (cl).  Cleanup first zeroes framings
(step 1) and unknots leaves (step 2), then repeatedly splits bad disks
(step 3) with one move per bad-disk type:

    (E)      edge intersections only: trade for a cap plus claspers of
             higher grope degree (a Y grafted at that tip);
    (K)      several knot intersections: split them into two caps;
    (Cl)     several clasps: split into two clasp groups;
    (E,K)    edges and knot: separate them, the knot part becomes a cap;
    (EK,Cl)  clasps plus other intersections: separate the clasps.

Each move strictly decreases the lexicographic complexity quintuple
(c1..c5) on both daughters or raises the grope degree, which is capped,
so every run terminates; :func:`verify_trace` machine-checks this and
the per-move worst-case increase sets on recorded traces.

An :class:`InterferencePolicy` makes the "may increase" entries of the
worst-case analysis executable: the adversarial mode adds bounded e/k
intersections to the second daughter's leaves, but only on leaves that
are not caps, never clasps, so no move's guaranteed decrease is broken.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, replace
from functools import lru_cache

from .trees import (
    Join,
    Tip,
    TreeError,
    TreeNode,
    class_of,
    parse_tree,
    print_tree,
    tip_count,
)


class ClasperError(ValueError):
    pass


# ---------------------------------------------------------------------------
# state
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LeafState:
    framing: int = 0
    knot_complexity: int = 0
    e_count: int = 0
    k_count: int = 0
    clasp_count: int = 0
    is_root: bool = False

    def __post_init__(self):
        if (
            self.knot_complexity < 0
            or self.e_count < 0
            or self.k_count < 0
            or self.clasp_count < 0
        ):
            raise ClasperError("leaf counts must be >= 0")
        if self.is_root and not (
            self.framing == 0
            and self.knot_complexity == 0
            and self.e_count == 0
            and self.k_count == 1
            and self.clasp_count == 0
        ):
            raise ClasperError("root leaf must be a single-knot-intersection cap")

    def is_cap(self) -> bool:
        return self.e_count == 0 and self.clasp_count == 0


ROOT_LEAF = LeafState(k_count=1, is_root=True)


_TREE_CLASS = {}


def _cached_class(tree: TreeNode) -> int:
    # box-free trees: class == tip count; keyed by identity, the value
    # keeps the tree alive so ids are never recycled
    hit = _TREE_CLASS.get(id(tree))
    if hit is not None:
        return hit[1]
    c = class_of(tree)
    _TREE_CLASS[id(tree)] = (tree, c)
    return c

GOOD_CAP = LeafState(k_count=1)


def classify_leaf(l: LeafState) -> str:
    """Disk taxonomy; requires framing 0 and an unknotted leaf."""
    if l.framing != 0 or l.knot_complexity != 0:
        raise ClasperError("classification needs a 0-framed unknotted leaf")
    if l.is_root:
        return "root"
    e, k, cl = l.e_count, l.k_count, l.clasp_count
    if cl == 0:
        if e == 0:
            if k == 1:
                return "good_cap"
            if k >= 2:
                return "D_K"
            return "null_cap"  # no intersections at all: the surgery is a no-op
        return "D_E" if k == 0 else "D_EK"
    if e == 0 and k == 0:
        return "good_clasp" if cl == 1 else "D_Cl"
    return "D_EKCl"


BAD_CLASSES = {"D_E", "D_K", "D_Cl", "D_EK", "D_EKCl"}


@dataclass(frozen=True)
class ClasperState:
    tree: TreeNode
    tips: tuple  # LeafState per tip, stored tip order
    root: LeafState = ROOT_LEAF
    grope_deg: int = 0

    def __post_init__(self):
        if not isinstance(self.tree, (Tip, Join)):
            raise ClasperError("clasper type must be a box-free tree")
        if len(self.tips) != _cached_class(self.tree):
            raise ClasperError("one leaf state per tip required")
        if not self.root.is_root or any(l.is_root for l in self.tips):
            raise ClasperError("exactly one root leaf")
        if self.grope_deg == 0:
            object.__setattr__(self, "grope_deg", _cached_class(self.tree))
        elif self.grope_deg != _cached_class(self.tree):
            raise ClasperError("grope_deg must equal the class of the tree type")

    @property
    def leaves(self) -> tuple:
        return (self.root,) + self.tips

    def with_tip(self, i: int, leaf: LeafState) -> "ClasperState":
        tips = list(self.tips)
        tips[i] = leaf
        return ClasperState(self.tree, tuple(tips), self.root, self.grope_deg)

    def bad_tips(self):
        return [
            i for i, l in enumerate(self.tips) if classify_leaf(l) in BAD_CLASSES
        ]

    def all_good(self) -> bool:
        return all(
            classify_leaf(l) in ("good_cap", "good_clasp") for l in self.tips
        )


def simple_clasper(tree: TreeNode) -> ClasperState:
    """Capped clasper whose every cap meets the knot once."""
    return ClasperState(tree, tuple(GOOD_CAP for _ in range(tip_count(tree))))


@dataclass(frozen=True, order=True)
class Complexity:
    c1: int
    c2: int
    c3: int
    c4: int
    c5: int

    def as_list(self):
        return [self.c1, self.c2, self.c3, self.c4, self.c5]


def complexity_of(s: ClasperState) -> Complexity:
    """The quintuple of one clasper: caps count negatively, then knot
    intersections on caps, total clasps, and the two mixed-disk counts."""
    caps = [l for l in s.tips if l.is_cap()]
    c1 = -len(caps)
    c2 = sum(l.k_count for l in caps)
    c3 = sum(l.clasp_count for l in s.tips)
    c4 = 0
    c5 = 0
    for l in s.tips:
        e, k, cl = l.e_count, l.k_count, l.clasp_count
        if cl == 0 and e >= 1 and k >= 1:
            c4 += 1
        if cl >= 1 and (e >= 1 or k >= 1):
            c5 += 1
    return Complexity(c1, c2, c3, c4, c5)


def complexity(configuration) -> list:
    """Per-clasper complexity quintuples of a configuration."""
    return [complexity_of(s) for s in configuration]


@dataclass(frozen=True)
class InterferencePolicy:
    mode: str = "zero"
    bound: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("zero", "adversarial"):
            raise ClasperError("policy mode must be 'zero' or 'adversarial'")
        if self.bound < 0:
            raise ClasperError("policy bound must be >= 0")


ZERO_POLICY = InterferencePolicy()


def interference_budget(initial: ClasperState, policy: InterferencePolicy) -> dict:
    """Total adversarial increments available in one run, per count type.

    The per-move cap is ``bound`` on each count of a daughter.  The run
    total has to be finite as well: every injected intersection lands on
    a branch whose cleanup multiplies, so an always-on adversary outruns
    the one-intersection-per-move progress of (K) and the configuration
    explodes combinatorially.  Twice the bound per count keeps the
    worst-case-table increases observable in traces at bounded cost."""
    return {"e": 2 * policy.bound, "k": 2 * policy.bound}


def _interfere(s: ClasperState, policy: InterferencePolicy, rng, budget=None) -> ClasperState:
    """Bounded adversarial increments on a second daughter.

    Only leaves that are not caps may gain e/k intersections (a cap
    gaining intersections would raise c1 or c2, which the worst-case
    analysis forbids), and clasps are never created (second daughters
    avoid the first daughter's caps when sliding).  Increments per
    daughter stay <= bound on each count and draw down the run budget.
    """
    if policy.mode == "zero" or policy.bound == 0 or rng is None:
        return s
    if budget is not None and budget["e"] <= 0 and budget["k"] <= 0:
        return s
    room_e = policy.bound if budget is None else min(policy.bound, budget["e"])
    room_k = policy.bound if budget is None else min(policy.bound, budget["k"])
    targets = [i for i, l in enumerate(s.tips) if not l.is_cap()]
    if not targets:
        return s
    tips = list(s.tips)
    spent_e = spent_k = 0
    for i in targets:
        de = rng.randint(0, room_e - spent_e) if room_e > spent_e else 0
        dk = rng.randint(0, room_k - spent_k) if room_k > spent_k else 0
        if de or dk:
            l = tips[i]
            tips[i] = replace(l, e_count=l.e_count + de, k_count=l.k_count + dk)
            spent_e += de
            spent_k += dk
    if budget is not None:
        budget["e"] -= spent_e
        budget["k"] -= spent_k
    if spent_e == 0 and spent_k == 0:
        return s
    return ClasperState(s.tree, tuple(tips), s.root, s.grope_deg)


# ---------------------------------------------------------------------------
# steps 1 and 2
# ---------------------------------------------------------------------------

def zero_frame(s: ClasperState, leaf: int) -> ClasperState:
    """Step 1 at one leaf: a symplectic basis change zeroes the framing
    without changing the tree type or any other leaf data."""
    l = s.tips[leaf]
    if l.framing == 0:
        raise ClasperError("already 0-framed")
    return s.with_tip(leaf, replace(l, framing=0))


def unknot_step(s: ClasperState, leaf: int, split=None) -> tuple:
    """Step 2 at one leaf: zip along arcs unknotting the leaf; the two
    daughters carry strictly smaller knot complexities u1, u2."""
    l = s.tips[leaf]
    u = l.knot_complexity
    if u < 1:
        raise ClasperError("leaf is already unknotted")
    if split is None:
        split = ((u - 1 + 1) // 2, (u - 1) // 2)
    u1, u2 = split
    if not (0 <= u1 < u and 0 <= u2 < u):
        raise ClasperError("both parts must be strictly smaller than u")
    return (
        s.with_tip(leaf, replace(l, knot_complexity=u1)),
        s.with_tip(leaf, replace(l, knot_complexity=u2)),
    )


# ---------------------------------------------------------------------------
# the zip construction and the five moves
# ---------------------------------------------------------------------------

def zip_leaf(s: ClasperState, leaf: int, partition, policy: InterferencePolicy = ZERO_POLICY, rng=None, budget=None) -> tuple:
    """Split one leaf's counts between two daughters.

    ``partition`` is ``((e1,k1,cl1), (e2,k2,cl2))`` and must conserve the
    leaf's counts.  The first daughter is the parent with the split leaf
    replaced; the second daughter's other leaves are parallels of the
    parent's, then the interference policy applies to it.
    """
    l = s.tips[leaf]
    (e1, k1, cl1), (e2, k2, cl2) = partition
    parts = (e1, k1, cl1, e2, k2, cl2)
    if any(x < 0 for x in parts):
        raise ClasperError("partition parts must be >= 0")
    if (e1 + e2, k1 + k2, cl1 + cl2) != (l.e_count, l.k_count, l.clasp_count):
        raise ClasperError("partition does not conserve the leaf counts")
    c1 = s.with_tip(leaf, replace(l, e_count=e1, k_count=k1, clasp_count=cl1))
    c2 = s.with_tip(leaf, replace(l, e_count=e2, k_count=k2, clasp_count=cl2))
    return c1, _interfere(c2, policy, rng, budget)


_GRAFT_CACHE = {}


def _graft_y_at_tip(tree: TreeNode, tip_index: int) -> TreeNode:
    # identity-keyed cache (values keep the keys alive) so repeated
    # emissions share tree objects instead of allocating fresh copies
    hit = _GRAFT_CACHE.get((id(tree), tip_index))
    if hit is not None:
        return hit[1]
    counter = [0]

    def walk(node):
        if isinstance(node, Tip):
            i = counter[0]
            counter[0] += 1
            return Join(Tip(), Tip()) if i == tip_index else node
        return Join(walk(node.left), walk(node.right))

    out = walk(tree)
    if counter[0] <= tip_index:
        raise ClasperError("tip index out of range")
    _GRAFT_CACHE[(id(tree), tip_index)] = (tree, out)
    return out


def move_E(s: ClasperState, leaf: int, policy: InterferencePolicy = ZERO_POLICY, rng=None, budget=None) -> tuple:
    """(E): the disk meets only clasper edges.  The first daughter keeps
    the tree with the leaf traded for a cap picking up knot
    intersections in pairs; the edges' intersections move into claspers
    of strictly higher grope degree (a Y grafted at that tip)."""
    l = s.tips[leaf]
    if classify_leaf(l) != "D_E":
        raise ClasperError("move (E) needs a D_E leaf")
    adversarial = policy.mode == "adversarial" and rng is not None
    pairs = 0
    if adversarial:
        room = policy.bound if budget is None else min(policy.bound, budget["k"] // 2)
        pairs = rng.randint(0, room) if room > 0 else 0
        if budget is not None:
            budget["k"] -= 2 * pairs
    emit = l.e_count
    c1 = s.with_tip(leaf, LeafState(k_count=2 * pairs))
    higher_tree = _graft_y_at_tip(s.tree, leaf)
    higher = []
    for _ in range(emit):
        tips = []
        for _ in range(tip_count(higher_tree)):
            extra = 0
            if adversarial:
                # capped leaves with a bounded knot perturbation drawn
                # from the run budget; edge or clasp intersections on
                # emitted claspers would cascade into unbounded families,
                # which nothing in the worst-case analysis requires
                room = policy.bound if budget is None else min(policy.bound, budget["k"])
                extra = rng.randint(0, room) if room > 0 else 0
                if budget is not None:
                    budget["k"] -= extra
            tips.append(GOOD_CAP if extra == 0 else LeafState(k_count=1 + extra))
        higher.append(ClasperState(higher_tree, tuple(tips)))
    return c1, higher


def move_K(s: ClasperState, leaf: int, policy: InterferencePolicy = ZERO_POLICY, rng=None, budget=None) -> tuple:
    """(K): too many knot intersections; balanced split, both nonempty."""
    l = s.tips[leaf]
    if classify_leaf(l) != "D_K":
        raise ClasperError("move (K) needs a D_K leaf")
    ka = (l.k_count + 1) // 2
    kb = l.k_count - ka
    return zip_leaf(s, leaf, ((0, ka, 0), (0, kb, 0)), policy, rng, budget)


def move_Cl(s: ClasperState, leaf: int, policy: InterferencePolicy = ZERO_POLICY, rng=None, budget=None) -> tuple:
    """(Cl): too many clasps; balanced split into two clasp groups."""
    l = s.tips[leaf]
    if classify_leaf(l) != "D_Cl":
        raise ClasperError("move (Cl) needs a D_Cl leaf")
    ca = (l.clasp_count + 1) // 2
    cb = l.clasp_count - ca
    return zip_leaf(s, leaf, ((0, 0, ca), (0, 0, cb)), policy, rng, budget)


def move_EK(s: ClasperState, leaf: int, policy: InterferencePolicy = ZERO_POLICY, rng=None, budget=None) -> tuple:
    """(E,K): separate edge from knot intersections; the first daughter
    keeps the edge part, the second gains a cap."""
    l = s.tips[leaf]
    if classify_leaf(l) != "D_EK":
        raise ClasperError("move (E,K) needs a D_EK leaf")
    return zip_leaf(
        s, leaf, ((l.e_count, 0, 0), (0, l.k_count, 0)), policy, rng, budget
    )


def move_EKCl(s: ClasperState, leaf: int, policy: InterferencePolicy = ZERO_POLICY, rng=None, budget=None) -> tuple:
    """(EK,Cl): separate the clasps from everything else; the first
    daughter keeps the clasps."""
    l = s.tips[leaf]
    if classify_leaf(l) != "D_EKCl":
        raise ClasperError("move (EK,Cl) needs a D_EKCl leaf")
    return zip_leaf(
        s, leaf, ((0, 0, l.clasp_count), (l.e_count, l.k_count, 0)), policy, rng, budget
    )


_MOVE_FOR_CLASS = {
    "D_K": ("K", move_K),
    "D_Cl": ("Cl", move_Cl),
    "D_EK": ("EK", move_EK),
    "D_EKCl": ("EKCl", move_EKCl),
}


# ---------------------------------------------------------------------------
# the cleanup loop
# ---------------------------------------------------------------------------

def step_ceiling(initial: ClasperState, policy: InterferencePolicy, max_degree: int) -> int:
    """Generous a-priori bound on the number of recorded steps.

    Termination itself is certified per run by :func:`verify_trace`
    (every step lexicographically decreases a quintuple of
    bounded-below integers or raises the capped grope degree); this
    ceiling only turns a hypothetical non-termination bug into a loud
    failure instead of a hang.
    """
    totals = sum(
        l.e_count + l.k_count + l.clasp_count + l.knot_complexity + abs(l.framing)
        for l in initial.tips
    )
    width = max_degree + 2
    return 20_000 * (1 + totals) * (1 + policy.bound) * width * width


def cleanup(
    initial: ClasperState,
    policy: InterferencePolicy = ZERO_POLICY,
    strategy: str = "fifo",
    max_degree: int = 0,
):
    """Run steps 1-3 until every clasper at degree <= max_degree has only
    good leaves.

    Returns ``(terminal, remainder, trace)``: terminal claspers have
    only good (single-cap or single-clasp) non-root leaves; remainder
    collects emitted claspers above the degree cap, unprocessed; the
    trace records one dict per step (see :func:`verify_trace` and the
    JSON-lines schema).
    """
    if max_degree == 0:
        max_degree = 2 * class_of(initial.tree)
    if max_degree < class_of(initial.tree):
        raise ClasperError("max_degree must be at least the initial class")
    if strategy not in ("fifo", "lifo", "random"):
        raise ClasperError("strategy must be fifo, lifo or random")
    rng = random.Random(policy.seed)
    budget = interference_budget(initial, policy)
    # fifo pops from the left of a deque; lifo and random pop from the
    # end of a list (random swaps a uniform pick to the end first)
    queue = deque([(0, initial)]) if strategy == "fifo" else [(0, initial)]
    next_id = 1
    terminal, remainder, trace = [], [], []
    ceiling = step_ceiling(initial, policy, max_degree)
    step = 0

    def record(move, cid, leaf, parent, daughters, extra=None):
        rec = {
            "step": len(trace),
            "move": move,
            "clasper_id": cid,
            "leaf_id": leaf,
            "grope_deg": parent.grope_deg,
            "parent_complexity": complexity_of(parent).as_list(),
            "daughters": daughters,
            "seed": policy.seed,
        }
        if extra:
            rec.update(extra)
        trace.append(rec)

    while queue:
        step += 1
        if step > ceiling:
            raise ClasperError("step ceiling exceeded; termination bug")
        if strategy == "fifo":
            cid, s = queue.popleft()
        elif strategy == "lifo":
            cid, s = queue.pop()
        else:
            i = rng.randrange(len(queue))
            last = len(queue) - 1
            if i != last:
                queue[i], queue[last] = queue[last], queue[i]
            cid, s = queue.pop()
        if s.grope_deg > max_degree:
            remainder.append(s)
            continue
        framed = [i for i, l in enumerate(s.tips) if l.framing != 0]
        if framed:
            i = framed[0]
            d = zero_frame(s, i)
            record(
                "zero_frame",
                cid,
                i,
                s,
                [{"complexity": complexity_of(d).as_list()}],
                {"framing_before": s.tips[i].framing},
            )
            queue.append((cid, d))
            continue
        knotted = [i for i, l in enumerate(s.tips) if l.knot_complexity > 0]
        if knotted:
            i = knotted[0]
            d1, d2 = unknot_step(s, i)
            record(
                "unknot",
                cid,
                i,
                s,
                [
                    {"complexity": complexity_of(d1).as_list()},
                    {"complexity": complexity_of(d2).as_list()},
                ],
                {
                    "u_before": s.tips[i].knot_complexity,
                    "u_split": [
                        d1.tips[i].knot_complexity,
                        d2.tips[i].knot_complexity,
                    ],
                },
            )
            queue.append((next_id, d1))
            queue.append((next_id + 1, d2))
            next_id += 2
            continue
        kinds = [classify_leaf(l) for l in s.tips]
        if "null_cap" in kinds:
            # a cap disjoint from the knot makes the whole surgery a no-op
            record("discard", cid, kinds.index("null_cap"), s, [])
            continue
        bad = [i for i, kind in enumerate(kinds) if kind in BAD_CLASSES]
        if not bad:
            terminal.append(s)
            continue
        i = bad[0]
        kind = kinds[i]
        if kind == "D_E":
            d1, higher = move_E(s, i, policy, rng, budget)
            record(
                "E",
                cid,
                i,
                s,
                [{"complexity": complexity_of(d1).as_list()}]
                + [{"grope_deg": h.grope_deg} for h in higher],
            )
            queue.append((next_id, d1))
            next_id += 1
            for h in higher:
                queue.append((next_id, h))
                next_id += 1
        else:
            move_name, fn = _MOVE_FOR_CLASS[kind]
            d1, d2 = fn(s, i, policy, rng, budget)
            record(
                move_name,
                cid,
                i,
                s,
                [
                    {"complexity": complexity_of(d1).as_list()},
                    {"complexity": complexity_of(d2).as_list()},
                ],
            )
            queue.append((next_id, d1))
            queue.append((next_id + 1, d2))
            next_id += 2
    return terminal, remainder, trace


# ---------------------------------------------------------------------------
# trace verification
# ---------------------------------------------------------------------------

# per move and daughter position: (component that must strictly drop,
# components allowed to rise); component indices into (c1..c5)
_TABLE = {
    ("E", 0): (0, {1}),
    ("K", 0): (1, set()),
    ("K", 1): (1, {3, 4}),
    ("Cl", 0): (2, set()),
    ("Cl", 1): (2, {3, 4}),
    ("EK", 0): (3, set()),
    ("EK", 1): (0, {1, 3, 4}),
    ("EKCl", 0): (4, set()),
    ("EKCl", 1): (2, {1, 3, 4}),
}


def verify_trace(trace) -> bool:
    """Check every recorded step against the termination argument.

    Step-3 moves must lexicographically decrease the quintuple on every
    same-degree daughter, strictly decrease their designated component,
    and only increase components the worst-case table allows; emitted
    claspers must carry strictly larger grope degree.  Step-1/2 records
    must zero a framing resp. strictly decrease the knot complexity with
    all counts unchanged.
    """
    for rec in trace:
        move = rec["move"]
        parent = rec["parent_complexity"]
        daughters = rec["daughters"]
        if move == "zero_frame":
            if rec.get("framing_before", 0) == 0:
                return False
            if len(daughters) != 1 or daughters[0].get("complexity") != parent:
                return False
            continue
        if move == "unknot":
            u = rec.get("u_before", 0)
            split = rec.get("u_split", [])
            if u < 1 or len(split) != 2:
                return False
            if not all(0 <= x < u for x in split):
                return False
            if any(d.get("complexity") != parent for d in daughters):
                return False
            continue
        if move == "discard":
            if daughters:
                return False
            continue
        same_degree = [d for d in daughters if "complexity" in d]
        emitted = [d for d in daughters if "complexity" not in d]
        for d in emitted:
            if d.get("grope_deg", 0) <= rec.get("grope_deg", 0):
                return False
        expected = {"E": 1, "K": 2, "Cl": 2, "EK": 2, "EKCl": 2}.get(move)
        if expected is None or len(same_degree) != expected:
            return False
        if move != "E" and emitted:
            return False
        for pos, d in enumerate(same_degree):
            c = d["complexity"]
            drop, allowed = _TABLE[(move, pos)]
            if not c[drop] < parent[drop]:
                return False
            if not tuple(c) < tuple(parent):
                return False
            for j in range(5):
                if c[j] > parent[j] and j not in allowed:
                    return False
    return True


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def parse_clasper_state(text: str) -> ClasperState:
    """Tree grammar line, then ``leaf <tip-index>: f=.. u=.. e=.. k=.. cl=..``
    lines; unlisted tips default to good caps."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ClasperError("empty clasper state")
    tree = parse_tree(lines[0])
    k = tip_count(tree)
    tips = [GOOD_CAP] * k
    for ln in lines[1:]:
        if not ln.startswith("leaf"):
            raise ClasperError(f"bad state line: {ln!r}")
        head, _, fields = ln.partition(":")
        idx = int(head.split()[1])
        if not (0 <= idx < k):
            raise ClasperError(f"tip index {idx} out of range")
        vals = {"f": 0, "u": 0, "e": 0, "k": 0, "cl": 0}
        for tok in fields.split():
            key, _, val = tok.partition("=")
            if key not in vals:
                raise ClasperError(f"unknown leaf field {key!r}")
            vals[key] = int(val)
        tips[idx] = LeafState(
            framing=vals["f"],
            knot_complexity=vals["u"],
            e_count=vals["e"],
            k_count=vals["k"],
            clasp_count=vals["cl"],
        )
    return ClasperState(tree, tuple(tips))


def print_clasper_state(s: ClasperState) -> str:
    out = [print_tree(s.tree)]
    for i, l in enumerate(s.tips):
        out.append(
            f"leaf {i}: f={l.framing} u={l.knot_complexity} "
            f"e={l.e_count} k={l.k_count} cl={l.clasp_count}"
        )
    return "\n".join(out) + "\n"
