"""Root-of-unity bookkeeping, Chebyshev threading, and the lattice
computations behind the center and PI-degree of the sliced algebra.

Everything here is exact integer arithmetic except the Kostov
genericity test, whose input is an arbitrary complex vector and which
therefore uses floating point with an explicit tolerance.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .intlinalg import (
    congruence_kernel,
    det_int,
    hnf_columns,
    mat_mul,
    solve_rational,
    transpose,
)
from .ring import Cyclotomic
from .surface import DTDatum, _datum_tables, q_matrix, surface_excluded, tilde_q


# ---------------------------------------------------------------------------
# orders attached to a root of unity


@dataclass(frozen=True)
class RootOfUnity:
    """A primitive root of unity of order ``n`` with its derived orders.

    ``n2`` is the order of the root itself, ``n1`` the order of its
    square, ``big_n`` the order of its fourth power; ``epsilon`` is the
    fourth root of unity the root raises to the square of ``big_n``.
    """

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("order must be a positive integer")

    @property
    def n2(self) -> int:
        return self.n

    @property
    def n1(self) -> int:
        return self.n // gcd(self.n, 2)

    @property
    def big_n(self) -> int:
        return self.n // gcd(self.n, 4)

    @property
    def epsilon_exponent(self) -> int:
        return (self.big_n * self.big_n) % self.n

    @property
    def epsilon_class(self) -> str:
        e = self.epsilon_exponent
        if e == 0:
            return "1"
        if (2 * e) % self.n == 0:
            return "-1"
        return "i" if e == self.n // 4 else "-i"

    def epsilon(self) -> Cyclotomic:
        """The value of epsilon inside Z[zeta_{2n}] (as a power of xi)."""
        return Cyclotomic.root(2 * self.n, 2 * self.epsilon_exponent)

    def xi(self) -> Cyclotomic:
        return Cyclotomic.root(2 * self.n, 2)


def orders(n: int) -> tuple[int, int, int, str]:
    """(order of xi, order of xi^2, order of xi^4, epsilon class)."""
    root = RootOfUnity(n)
    return (root.n2, root.n1, root.big_n, root.epsilon_class)


# ---------------------------------------------------------------------------
# Chebyshev polynomials of the first kind and threading coefficients


@lru_cache(maxsize=None)
def chebyshev(k: int) -> tuple[int, ...]:
    """Dense coefficients (constant term first) of T_k.

    T_0 = 2, T_1 = z, T_k = z T_{k-1} - T_{k-2}; equivalently the
    polynomial with T_k(x + 1/x) = x^k + x^{-k}.
    """
    if k < 0:
        raise ValueError("index must be non-negative")
    if k == 0:
        return (2,)
    if k == 1:
        return (0, 1)
    a, b = chebyshev(k - 2), chebyshev(k - 1)
    shifted = (0,) + b
    return tuple(s - (a[i] if i < len(a) else 0) for i, s in enumerate(shifted))


def threading_coeffs(big_n: int) -> tuple[int, ...]:
    """Coefficients (c_0 .. c_N) threading a curve through T_N."""
    if big_n < 1:
        raise ValueError("threading degree must be at least 1")
    cs = chebyshev(big_n)
    if len(cs) != big_n + 1 or cs[-1] != 1:
        raise AssertionError("Chebyshev polynomial is not monic of the right degree")
    return cs


# ---------------------------------------------------------------------------
# PI-degree


def pi_degree(g: int, m: int, xi: RootOfUnity) -> int:
    """PI-degree of the sliced algebra of the (g, m) surface at xi."""
    if surface_excluded(g, m):
        raise ValueError(f"excluded surface (g, m) = ({g}, {m})")
    r = 3 * g - 3 + m
    base = xi.big_n ** r
    return base if xi.n1 % 2 else (2 ** g) * base


# ---------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class LatticeBasis:
    """A full-rank sublattice of Z^ambient, stored as its canonical
    column Hermite normal form, so equality is lattice equality."""

    ambient: int
    columns: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_columns(ambient: int, columns) -> "LatticeBasis":
        cols = hnf_columns([list(c) for c in columns])
        if len(cols) != ambient:
            raise ValueError("columns do not span a full-rank sublattice")
        return LatticeBasis(ambient, tuple(tuple(c) for c in cols))

    @staticmethod
    def standard(ambient: int) -> "LatticeBasis":
        return LatticeBasis.from_columns(
            ambient, [[1 if i == j else 0 for i in range(ambient)] for j in range(ambient)]
        )

    def matrix(self) -> list[list[int]]:
        """Columns as a matrix (rows of the ambient space)."""
        return [list(row) for row in zip(*self.columns)]

    def scaled(self, k: int) -> "LatticeBasis":
        if k == 0:
            raise ValueError("scaling by zero collapses the lattice")
        return LatticeBasis.from_columns(
            self.ambient, [[k * x for x in col] for col in self.columns]
        )

    def covolume(self) -> int:
        return abs(det_int(self.matrix()))


def lattice_index(sub: LatticeBasis, sup: LatticeBasis) -> int:
    """Index [sup : sub]; raises when sub is not contained in sup."""
    if sub.ambient != sup.ambient:
        raise ValueError("ambient dimensions differ")
    coords = solve_rational(sup.matrix(), sub.matrix())
    ints = []
    for row in coords:
        for v in row:
            if v.denominator != 1:
                raise ValueError("first lattice is not contained in the second")
        ints.append([int(v) for v in row])
    idx = abs(det_int(ints))
    if idx == 0:
        raise ValueError("degenerate sublattice")
    return idx


def _parity_matrix(datum: DTDatum) -> list[list[int]]:
    tb = _datum_tables(datum)
    rows = []
    for curves in tb.face_curves:
        row = [0] * datum.r
        for c in curves:
            row[c] += 1
        rows.append(row)
    return rows


def lambda_hat(datum: DTDatum) -> LatticeBasis:
    """Integer span of the coordinate monoid: lengths obey the boundary
    parity condition at every face, twists are free."""
    r = datum.r
    nblock = congruence_kernel(_parity_matrix(datum), 2)
    cols = [list(c) + [0] * r for c in nblock]
    for i in range(r):
        unit = [0] * (2 * r)
        unit[r + i] = 1
        cols.append(unit)
    return LatticeBasis.from_columns(2 * r, cols)


def _gram(datum: DTDatum, basis: LatticeBasis) -> list[list[int]]:
    tq = tilde_q(q_matrix(datum))
    B = basis.matrix()
    return mat_mul(mat_mul(transpose(B), [list(row) for row in tq.rows]), B)


def kernel_lattice(datum: DTDatum, modulus: int) -> LatticeBasis:
    """Vectors of the coordinate span pairing into modulus * Z against
    the whole span, under the doubled form."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    span = lambda_hat(datum)
    sol = congruence_kernel(_gram(datum, span), modulus)
    B = span.matrix()
    cols = [[sum(B[i][k] * col[k] for k in range(len(col))) for i in range(2 * datum.r)] for col in sol]
    return LatticeBasis.from_columns(2 * datum.r, cols)


def even_sublattice(datum: DTDatum) -> LatticeBasis:
    """The even part of the span: vectors pairing into 4Z against the span.

    Lattice form of the statement that even diagrams are those with even
    geometric intersection with every curve.
    """
    return kernel_lattice(datum, 4)


# ---------------------------------------------------------------------------
# Kostov genericity of a boundary-trace vector


def kostov_generic(ws, tol: float = 1e-9) -> bool:
    """Whether no product of eigenvalue choices across the punctures is 1.

    For each w the two candidate eigenvalues solve z + 1/z = w; the
    vector is generic when every one of the 2^m sign-choice products
    stays at least ``tol`` away from 1 and no w is within ``tol`` of
    plus or minus 2.  The empty product is 1, so an empty vector is not
    generic by convention.
    """
    pairs = []
    for w in ws:
        w = complex(w)
        if abs(w - 2) <= tol or abs(w + 2) <= tol:
            return False
        root = (w + cmath.sqrt(w * w - 4)) / 2
        pairs.append((root, 1 / root))
    for choice in itertools.product((0, 1), repeat=len(pairs)):
        prod = complex(1)
        for pair, pick in zip(pairs, choice):
            prod *= pair[pick]
        if abs(prod - 1) <= tol:
            return False
    return True
