"""Exact integer Smith normal form with transform tracking.

Everything runs on Python ints (arbitrary precision).  ``smith_normal_form``
returns unimodular U, V with U A V = D diagonal and the divisibility
chain d1 | d2 | ...; ``naive_invariant_factors`` is an independent
oracle with a different elimination strategy and no transforms, and
``bareiss_rank`` cross-checks the rational rank fraction-free.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class SmithForm:
    diag: list  # nonzero invariant factors d1 | d2 | ...
    rank: int
    U: list  # rows x rows, unimodular
    V: list  # cols x cols, unimodular
    shape: tuple


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(A) -> SmithForm:
    """Diagonalize an integer matrix by unimodular row/column operations."""
    m = len(A)
    n = len(A[0]) if m else 0
    M = [list(map(int, row)) for row in A]
    for row in M:
        if len(row) != n:
            raise ValueError("ragged matrix")
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):
        Md, Ms = M[dst], M[src]
        for k in range(n):
            Md[k] += c * Ms[k]
        Ud, Us = U[dst], U[src]
        for k in range(m):
            Ud[k] += c * Us[k]

    def add_col(dst, src, c):
        for r in M:
            r[dst] += c * r[src]
        for r in V:
            r[dst] += c * r[src]

    def negate_row(i):
        M[i] = [-x for x in M[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while True:
        # locate a pivot: smallest |entry| in the remaining block
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j] != 0 and (pivot is None or abs(M[i][j]) < abs(M[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear column t
            done = True
            for i in range(t + 1, m):
                if M[i][t] != 0:
                    q = M[i][t] // M[t][t]
                    add_row(i, t, -q)
                    if M[i][t] != 0:
                        swap_rows(i, t)
                        done = False
            # clear row t
            for j in range(t + 1, n):
                if M[t][j] != 0:
                    q = M[t][j] // M[t][t]
                    add_col(j, t, -q)
                    if M[t][j] != 0:
                        swap_cols(j, t)
                        done = False
            if done:
                break
        if M[t][t] < 0:
            negate_row(t)
        t += 1

    # enforce the divisibility chain d_i | d_{i+1}
    r = t
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            a, b = M[i][i], M[i + 1][i + 1]
            if b % a != 0:
                changed = True
                # fold b into the a position and rediagonalize the 2x2
                add_col(i, i + 1, 1)
                while True:
                    if M[i + 1][i] == 0 and M[i][i + 1] == 0:
                        break
                    if M[i + 1][i] != 0:
                        q = M[i + 1][i] // M[i][i]
                        add_row(i + 1, i, -q)
                        if M[i + 1][i] != 0:
                            swap_rows(i, i + 1)
                    if M[i][i + 1] != 0:
                        q = M[i][i + 1] // M[i][i]
                        add_col(i + 1, i, -q)
                        if M[i][i + 1] != 0:
                            swap_cols(i, i + 1)
                if M[i][i] < 0:
                    negate_row(i)
                if M[i + 1][i + 1] < 0:
                    negate_row(i + 1)
    diag = [M[i][i] for i in range(r)]
    return SmithForm(diag=diag, rank=r, U=U, V=V, shape=(m, n))


def naive_invariant_factors(A) -> list:
    """Textbook oracle: first-nonzero pivoting, gcd by repeated remainder,
    then a gcd pass for the divisibility chain.  No transforms."""
    M = [list(map(int, row)) for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    t = 0
    while t < min(m, n):
        # find first nonzero in the block, row-major
        pr = pc = -1
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j] != 0:
                    pr, pc = i, j
                    break
            if pr >= 0:
                break
        if pr < 0:
            break
        M[t], M[pr] = M[pr], M[t]
        for row in M:
            row[t], row[pc] = row[pc], row[t]
        while True:
            stuck = True
            for i in range(t + 1, m):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    M[i] = [x - q * y for x, y in zip(M[i], M[t])]
                    if M[i][t]:
                        M[t], M[i] = M[i], M[t]
                        stuck = False
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    for row in M:
                        row[j] -= q * row[t]
                    if M[t][j]:
                        for row in M:
                            row[t], row[j] = row[j], row[t]
                        stuck = False
            if stuck:
                break
        t += 1
    diag = [abs(M[i][i]) for i in range(t)]
    # divisibility chain via gcd/lcm smoothing
    from math import gcd

    for _ in range(len(diag)):
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            g = gcd(a, b)
            diag[i], diag[i + 1] = g, a * b // g
    return diag


def bareiss_rank(A) -> int:
    """Fraction-free Gaussian elimination rank over the rationals."""
    M = [list(map(int, row)) for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, m):
            if M[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        for i in range(row + 1, m):
            for j in range(col + 1, n):
                M[i][j] = (M[row][col] * M[i][j] - M[i][col] * M[row][j]) // prev
            M[i][col] = 0
        prev = M[row][col]
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def determinant(A) -> int:
    """Exact determinant (Bareiss)."""
    M = [list(map(int, row)) for row in A]
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def mat_mul(A, B):
    if not A or not B:
        return []
    m, k, n = len(A), len(B), len(B[0])
    return [
        [sum(A[i][t] * B[t][j] for t in range(k)) for j in range(n)]
        for i in range(m)
    ]
