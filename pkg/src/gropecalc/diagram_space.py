"""Exact presentations of rooted-tree diagram modules modulo AS and IHX.

Generators of class k are the canonical representatives of box-free
rooted trees with k tips.  Coordinates are sign-normalized: an oriented
(plane) tree embeds as ``swap-parity * e(canonical representative)``, so
the antisymmetry relation at a vertex with non-isomorphic branches is
the identity 0 = 0 and is omitted, while a vertex joining two isomorphic
branches contributes the 2-torsion row ``2 D``.  IHX rows come from the
signed local resolution of :mod:`gropecalc.ihx` at every internal edge.

Quotients are computed by exact Smith normal form over the integers; a
naive independent elimination and a fraction-free rank computation
cross-check every result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .ihx import ihx_step, internal_edges
from .snf import (
    SmithForm,
    bareiss_rank,
    determinant,
    mat_mul,
    naive_invariant_factors,
    smith_normal_form,
)
from .trees import (
    Join,
    TreeNode,
    canonical_plane,
    class_of,
    enumerate_trees,
    is_half_grope,
    print_tree,
)


class DiagramSpaceError(ValueError):
    pass


class DiagramVector:
    """Sparse integer/rational combination of canonical diagrams.

    Keys are canonical tree codes; zero coefficients are dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for k, c in coeffs.items():
                if c:
                    self.coeffs[k] = c

    @classmethod
    def from_tree(cls, t: TreeNode, coeff=1) -> "DiagramVector":
        """Embed an oriented (plane) tree with its swap-parity sign."""
        _, code, sign, _ = canonical_plane(t)
        return cls({code: sign * coeff})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return DiagramVector(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) - c
        return DiagramVector(out)

    def scale(self, c):
        return DiagramVector({k: c * v for k, v in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, DiagramVector) and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "DiagramVector(0)"
        parts = [f"{c}*{k}" for k, c in sorted(self.coeffs.items())]
        return "DiagramVector(" + " + ".join(parts) + ")"


@dataclass
class ModulePresentation:
    """Ordered generators (canonical codes) plus integer relation rows."""

    generators: list
    rows: list  # list of dense integer rows
    gen_trees: dict = field(default_factory=dict)

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.generators):
                raise DiagramSpaceError("relation row references unknown generators")

    def index(self, code) -> int:
        try:
            return self.generators.index(code)
        except ValueError:
            raise DiagramSpaceError(f"unknown generator {code!r}") from None

    def dump(self) -> str:
        """Generators, then rows as sparse ``index:coeff`` pairs."""
        out = ["generators"]
        out.extend(self.generators)
        out.append("relations")
        for row in self.rows:
            items = [f"{i}:{c}" for i, c in enumerate(row) if c]
            out.append(" ".join(items) if items else "0")
        return "\n".join(out) + "\n"


def generators_of_class(k: int) -> list:
    """Canonical trees of class k sorted by canonical code."""
    trees = []
    for t in enumerate_trees(k):
        tree, code, _, _ = canonical_plane(t)
        trees.append((code, tree))
    trees.sort(key=lambda p: p[0])
    return trees


def as_relations(k: int):
    """Antisymmetry rows of class k in sign-normalized coordinates.

    Swapping the branches at a vertex re-canonicalizes to ``sign * D``,
    so the row ``D + D_swapped`` is ``(1 + sign) D``: the generic swap
    gives the zero row (omitted), a swap undone by an automorphism gives
    the 2-torsion row ``2 D``.
    """
    if k < 2:
        raise DiagramSpaceError("need class >= 2")
    gens = generators_of_class(k)
    rows = []
    seen = set()
    for gi, (code, tree) in enumerate(gens):
        for path in _vertices(tree):
            flipped = _flip_at(tree, path)
            _, fcode, fsign, _ = canonical_plane(flipped)
            assert fcode == code, "a swap never changes the isomorphism class"
            coeff = 1 + fsign
            if coeff == 0:
                continue
            key = (gi, coeff)
            if key in seen:
                continue
            seen.add(key)
            row = [0] * len(gens)
            row[gi] = coeff
            rows.append(row)
    return rows


def _vertices(t: TreeNode):
    out = []

    def walk(node, path):
        if isinstance(node, Join):
            out.append(path)
            walk(node.left, path + (0,))
            walk(node.right, path + (1,))

    walk(t, ())
    return out


def _flip_at(t: TreeNode, path) -> TreeNode:
    if not path:
        return Join(t.right, t.left)
    kids = [t.left, t.right]
    kids[path[0]] = _flip_at(kids[path[0]], path[1:])
    return Join(kids[0], kids[1])


def ihx_relations(k: int):
    """One row per (generator, internal edge), deduplicated: the signed
    identity I - sH*H - sX*X = 0 in normalized coordinates."""
    if k < 2:
        raise DiagramSpaceError("need class >= 2")
    gens = generators_of_class(k)
    index = {code: i for i, (code, _) in enumerate(gens)}
    rows = []
    seen = set()
    for gi, (code, tree) in enumerate(gens):
        for edge in internal_edges(tree):
            h, x = ihx_step(tree, edge)
            row = [0] * len(gens)
            row[gi] += 1
            for st in (h, x):
                _, scode, ssign, _ = canonical_plane(st.tree)
                row[index[scode]] -= st.sign * ssign
            if all(c == 0 for c in row):
                continue
            key = tuple(row)
            neg = tuple(-c for c in row)
            if key in seen or neg in seen:
                continue
            seen.add(key)
            rows.append(row)
    return rows


def build_presentation(k: int, include_ihx: bool = True) -> ModulePresentation:
    gens = generators_of_class(k)
    rows = as_relations(k)
    if include_ihx:
        rows = rows + ihx_relations(k)
    return ModulePresentation(
        generators=[code for code, _ in gens],
        rows=rows,
        gen_trees={code: tree for code, tree in gens},
    )


@dataclass
class QuotientResult:
    invariant_factors: list  # nontrivial factors (> 1)
    free_rank: int
    diag: list  # all nonzero diagonal entries incl. 1s
    snf: SmithForm

    def group_description(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}" if self.free_rank > 1 else "Z")
        return " + ".join(parts) if parts else "0"


def quotient(p: ModulePresentation) -> QuotientResult:
    """Invariant factors of the quotient, cross-checked by two other
    elimination routes (exactness is the whole point)."""
    n = len(p.generators)
    A = p.rows if p.rows else [[0] * n]
    sf = smith_normal_form(A)
    # independent checks
    naive = [d for d in naive_invariant_factors(A) if d != 0]
    if naive != sf.diag:
        raise DiagramSpaceError(
            f"SNF oracles disagree: {sf.diag} vs naive {naive}"
        )
    if bareiss_rank(A) != sf.rank:
        raise DiagramSpaceError("rank oracle disagrees with SNF")
    if abs(determinant(sf.U)) != 1 or abs(determinant(sf.V)) != 1:
        raise DiagramSpaceError("transform matrices are not unimodular")
    D = mat_mul(mat_mul(sf.U, [list(map(int, r)) for r in A]), sf.V)
    for i, row in enumerate(D):
        for j, val in enumerate(row):
            expected = sf.diag[i] if i == j and i < len(sf.diag) else 0
            if val != expected:
                raise DiagramSpaceError("U*A*V is not the computed diagonal")
    return QuotientResult(
        invariant_factors=[d for d in sf.diag if d > 1],
        free_rank=n - sf.rank,
        diag=sf.diag,
        snf=sf,
    )


def _coordinates(v: DiagramVector, p: ModulePresentation):
    x = [0] * len(p.generators)
    for code, c in v.coeffs.items():
        x[p.index(code)] = c
    return x


def reduce_vector(v: DiagramVector, p: ModulePresentation, rational: bool = False):
    """Normal form of v against the relation lattice.

    The SNF change of basis V turns membership into divisibility: with
    y = x V, the class of v is determined by y_i mod d_i on the torsion
    coordinates and y_i on the free ones.  Over the rationals the
    torsion coordinates vanish.  Returns the reduced y.
    """
    q = quotient(p)
    sf = q.snf
    x = _coordinates(v, p)
    y = [
        sum(x[i] * sf.V[i][j] for i in range(len(x)))
        for j in range(len(p.generators))
    ]
    out = []
    for j, val in enumerate(y):
        if j < sf.rank:
            d = sf.diag[j]
            out.append(0 if rational else val % d)
        else:
            out.append(Fraction(val) if rational else val)
    return out


def is_zero_in_quotient(v: DiagramVector, p: ModulePresentation, rational: bool = False) -> bool:
    return all(c == 0 for c in reduce_vector(v, p, rational=rational))


def span_check(k: int) -> bool:
    """Do the class-k caterpillars generate the quotient module (over Z)?

    Stacks the caterpillar unit rows onto the relations; generation is
    equivalent to the stacked quotient being trivial.
    """
    p = build_presentation(k)
    n = len(p.generators)
    rows = [list(r) for r in p.rows]
    for i, code in enumerate(p.generators):
        if is_half_grope(p.gen_trees[code]):
            unit = [0] * n
            unit[i] = 1
            rows.append(unit)
    sf = smith_normal_form(rows if rows else [[0] * n])
    return sf.rank == n and all(d == 1 for d in sf.diag)


def format_generator(p: ModulePresentation, code) -> str:
    return print_tree(p.gen_trees[code])
