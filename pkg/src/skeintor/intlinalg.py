"""Small exact integer matrix utilities.

Hand-rolled Hermite and Smith normal forms with transformation
matrices; the dimensions in this package never exceed a dozen, so the
naive algorithms with Python integers are exact and fast enough.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            v = ai[k]
            if v:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    oi[j] += v * bk[j]
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(row) for row in zip(*a)] if a else []


def hnf_columns(columns: list[list[int]]) -> list[list[int]]:
    """Canonical column Hermite normal form of the spanned lattice.

    Input and output are lists of column vectors.  The output basis is
    in column echelon form with positive pivots and the entries to the
    left of each pivot reduced into [0, pivot); it depends only on the
    spanned lattice, so it serves as the canonical representative.
    """
    if not columns:
        return []
    rows = len(columns[0])
    cols = [list(c) for c in columns]
    piv = 0
    for i in range(rows):
        while True:
            nz = [k for k in range(piv, len(cols)) if cols[k][i]]
            if not nz:
                break
            k = min(nz, key=lambda k: abs(cols[k][i]))
            cols[piv], cols[k] = cols[k], cols[piv]
            if len(nz) == 1:
                break
            for k in range(piv + 1, len(cols)):
                if cols[k][i]:
                    q = cols[k][i] // cols[piv][i]
                    for z in range(rows):
                        cols[k][z] -= q * cols[piv][z]
        if piv < len(cols) and cols[piv][i]:
            if cols[piv][i] < 0:
                cols[piv] = [-x for x in cols[piv]]
            p = cols[piv][i]
            for k in range(piv):
                q = cols[k][i] // p
                if q:
                    for z in range(rows):
                        cols[k][z] -= q * cols[piv][z]
            piv += 1
    return cols[:piv]


class _SnfState:
    """Workspace tracking S = U @ original @ V under row/column operations."""

    def __init__(self, mat: Matrix):
        self.rows = len(mat)
        self.cols = len(mat[0]) if mat else 0
        self.S = [row[:] for row in mat]
        self.U = identity(self.rows)
        self.V = identity(self.cols)

    def swap_rows(self, a, b):
        self.S[a], self.S[b] = self.S[b], self.S[a]
        self.U[a], self.U[b] = self.U[b], self.U[a]

    def swap_cols(self, a, b):
        for row in self.S:
            row[a], row[b] = row[b], row[a]
        for row in self.V:
            row[a], row[b] = row[b], row[a]

    def add_row(self, src, dst, q):
        for j in range(self.cols):
            self.S[dst][j] += q * self.S[src][j]
        for j in range(self.rows):
            self.U[dst][j] += q * self.U[src][j]

    def add_col(self, src, dst, q):
        for row in self.S:
            row[dst] += q * row[src]
        for row in self.V:
            row[dst] += q * row[src]

    def negate_row(self, i):
        self.S[i] = [-x for x in self.S[i]]
        self.U[i] = [-x for x in self.U[i]]

    def diagonalize_from(self, t: int):
        S = self.S
        while t < min(self.rows, self.cols):
            pos = None
            best = None
            for i in range(t, self.rows):
                for j in range(t, self.cols):
                    if S[i][j] and (best is None or abs(S[i][j]) < best):
                        best = abs(S[i][j])
                        pos = (i, j)
            if pos is None:
                return
            self.swap_rows(t, pos[0])
            self.swap_cols(t, pos[1])
            while True:
                dirty = False
                for i in range(t + 1, self.rows):
                    if S[i][t]:
                        self.add_row(t, i, -(S[i][t] // S[t][t]))
                        if S[i][t]:
                            self.swap_rows(t, i)
                            dirty = True
                for j in range(t + 1, self.cols):
                    if S[t][j]:
                        self.add_col(t, j, -(S[t][j] // S[t][t]))
                        if S[t][j]:
                            self.swap_cols(t, j)
                            dirty = True
                if not dirty:
                    break
            if S[t][t] < 0:
                self.negate_row(t)
            t += 1


def snf(mat: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with transforms: returns (S, U, V), S = U mat V.

    S is diagonal with each diagonal entry dividing the next; U and V
    are unimodular.
    """
    st = _SnfState(mat)
    st.diagonalize_from(0)
    # enforce the divisibility chain
    n = min(st.rows, st.cols)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            a, b = st.S[i][i], st.S[i + 1][i + 1]
            if a and b % a:
                st.add_col(i + 1, i, 1)
                st.diagonalize_from(i)
                changed = True
                break
    return st.S, st.U, st.V


def congruence_kernel(mat: Matrix, modulus: int) -> list[list[int]]:
    """Basis (list of columns) of the lattice {x : mat @ x == 0 mod modulus}.

    Always full rank: the lattice contains modulus * Z^n.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if modulus == 1 or rows == 0:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    S, _, V = snf(mat)
    out = []
    for i in range(cols):
        s = S[i][i] if i < rows else 0
        mult = modulus // gcd(s, modulus)
        out.append([V[z][i] * mult for z in range(cols)])
    return out


def det_int(mat: Matrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve_rational(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    """Solve a X = b exactly over the rationals (a square and invertible)."""
    n = len(a)
    aug = [[Fraction(x) for x in a[i]] + [Fraction(x) for x in b[i]] for i in range(n)]
    width = len(aug[0])
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [v / inv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[col])]
    return [row[n:width] for row in aug]
