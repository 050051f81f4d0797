"""Free-group Magnus expansion and the tree <-> commutator dictionary.

A box-free tree with labeled tips reads as an iterated group commutator
([a,b] = a b a^-1 b^-1); the Magnus embedding x -> 1 + X expands a word
into a noncommutative power series.  For a class-k tree with distinct
labels every term below degree k cancels and the degree-k term is the
Lie bracket of the tree, which is what the lower-central-series check
and the IHX sign certification consume.

Series are truncated at degree N and stored as one dense int64 numpy
block per degree (monomials of degree d over m letters indexed in base
m).  Coefficients of a product of L generator factors at degree <= N are
bounded by roughly 2^N * C(L, N), far inside int64 for the class <= 8
trees this package handles; a guard raises if a word could overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .trees import TreeNode, Tip, Join, TreeError, tips_in_order, with_labels, require_box_free


class MagnusError(ValueError):
    pass


GroupWord = tuple  # of (symbol, +1 | -1)


def tree_to_bracket(t: TreeNode, labels=None) -> GroupWord:
    """Fully bracketed commutator word of a labeled tree.

    ``labels`` are assigned to tips in stored order when given; otherwise
    every tip must already carry a label.
    """
    require_box_free(t, "tree_to_bracket")
    if labels is not None:
        t = with_labels(t, labels)
    for tip in tips_in_order(t):
        if tip.label is None:
            raise MagnusError("tree_to_bracket needs labeled tips")

    def walk(node) -> list:
        if isinstance(node, Tip):
            return [(node.label, 1)]
        wl = walk(node.left)
        wr = walk(node.right)
        inv = lambda w: [(s, -e) for s, e in reversed(w)]
        return wl + wr + inv(wl) + inv(wr)

    return tuple(walk(t))


def word_inverse(w: GroupWord) -> GroupWord:
    return tuple((s, -e) for s, e in reversed(w))


def commutator(a: GroupWord, b: GroupWord) -> GroupWord:
    return tuple(list(a) + list(b) + list(word_inverse(a)) + list(word_inverse(b)))


@dataclass
class TruncatedSeries:
    """Noncommutative integer power series modulo degree > N."""

    letters: tuple
    N: int
    blocks: list  # blocks[d]: int64 array of length len(letters)**d

    def coefficient(self, word) -> int:
        d = len(word)
        if d > self.N:
            raise MagnusError(f"degree {d} beyond truncation {self.N}")
        m = len(self.letters)
        idx = 0
        pos = {l: i for i, l in enumerate(self.letters)}
        for s in word:
            idx = idx * m + pos[s]
        return int(self.blocks[d][idx])

    def degree_terms(self, d) -> dict:
        """Nonzero coefficients of degree d as {letter tuple: int}."""
        m = len(self.letters)
        out = {}
        block = self.blocks[d]
        for flat in np.nonzero(block)[0]:
            word = []
            x = int(flat)
            for _ in range(d):
                word.append(self.letters[x % m])
                x //= m
            out[tuple(reversed(word))] = int(block[flat])
        return out

    def first_nonzero_degree(self):
        for d in range(1, self.N + 1):
            if np.any(self.blocks[d]):
                return d
        return None

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.letters == other.letters
            and self.N == other.N
            and all(np.array_equal(a, b) for a, b in zip(self.blocks, other.blocks))
        )


def magnus(w: GroupWord, N: int, letters=None) -> TruncatedSeries:
    """Exact Magnus expansion of a group word, truncated beyond degree N."""
    if N < 1:
        raise MagnusError("truncation degree must be >= 1")
    if letters is None:
        letters = tuple(sorted({s for s, _ in w}))
    else:
        letters = tuple(letters)
        missing = {s for s, _ in w} - set(letters)
        if missing:
            raise MagnusError(f"letters {missing} not in alphabet")
    m = len(letters)
    if w and sum(comb(len(w), j) * (2 ** j) for j in range(N + 1)) >= 2 ** 62:
        raise MagnusError("word too long for int64 coefficients")
    pos = {l: i for i, l in enumerate(letters)}
    blocks = [np.zeros(m ** d, dtype=np.int64) for d in range(N + 1)]
    blocks[0][0] = 1
    for sym, exp in w:
        l = pos[sym]
        # factor (1 + X)^{+-1} truncated: coefficient c_j on the word l^j
        cs = [1] + [1 if exp > 0 and j == 1 else 0 for j in range(1, N + 1)]
        if exp < 0:
            cs = [(-1) ** j for j in range(N + 1)]
        new = [np.zeros(m ** d, dtype=np.int64) for d in range(N + 1)]
        for d in range(N + 1):
            for j in range(d + 1):
                c = cs[j]
                if c == 0:
                    continue
                src = blocks[d - j]
                if not np.any(src):
                    continue
                if j == 0:
                    new[d] += c * src
                else:
                    r = l * (m ** j - 1) // (m - 1) if m > 1 else 0
                    new[d].reshape(m ** (d - j), m ** j)[:, r] += c * src
        blocks = new
    return TruncatedSeries(letters, N, blocks)


def lcs_degree(w: GroupWord, N: int):
    """Smallest k <= N with a nonzero degree-k Magnus term, else None
    (meaning the word sits in the (N+1)-st lower central series term or
    is trivial)."""
    if not w:
        return None
    return magnus(w, N).first_nonzero_degree()


def bracket_polynomial(t: TreeNode, labels=None) -> dict:
    """Lie element of the tree: group commutators replaced by algebra
    commutators.  Returns {letter tuple: integer coefficient}."""
    require_box_free(t, "bracket_polynomial")
    if labels is not None:
        t = with_labels(t, labels)

    def walk(node) -> dict:
        if isinstance(node, Tip):
            if node.label is None:
                raise MagnusError("bracket_polynomial needs labeled tips")
            return {(node.label,): 1}
        pl = walk(node.left)
        pr = walk(node.right)
        out = {}

        def acc(p, q, sgn):
            for wa, ca in p.items():
                for wb, cb in q.items():
                    key = wa + wb
                    out[key] = out.get(key, 0) + sgn * ca * cb

        acc(pl, pr, 1)
        acc(pr, pl, -1)
        return {k: v for k, v in out.items() if v}

    return walk(t)


def poly_to_block(poly: dict, letters, degree: int) -> np.ndarray:
    """Dense degree block of a homogeneous polynomial."""
    letters = tuple(letters)
    m = len(letters)
    pos = {l: i for i, l in enumerate(letters)}
    block = np.zeros(m ** degree, dtype=np.int64)
    for word, c in poly.items():
        if len(word) != degree:
            raise MagnusError("polynomial is not homogeneous of that degree")
        idx = 0
        for s in word:
            idx = idx * m + pos[s]
        block[idx] += c
    return block


def leading_term_matches_bracket(t: TreeNode, labels=None) -> bool:
    """Magnus terms below the class vanish and the class-degree term is
    exactly the algebra bracket of the tree."""
    if labels is not None:
        t = with_labels(t, labels)
    from .trees import class_of

    k = class_of(t)
    w = tree_to_bracket(t)
    series = magnus(w, k)
    for d in range(1, k):
        if np.any(series.blocks[d]):
            return False
    expected = poly_to_block(bracket_polynomial(t), series.letters, k)
    return np.array_equal(series.blocks[k], expected)
