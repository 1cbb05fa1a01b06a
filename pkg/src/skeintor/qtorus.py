"""General quantum tori on an antisymmetric integer matrix.

Elements are stored in the Weyl-normalized monomial basis: a term is an
exponent vector together with a :class:`~skeintor.ring.GroundElem`
coefficient.  Unnormalized generator products never materialize; the
product of two normalized monomials is again a normalized monomial up
to an explicit half-integer power of the quantum parameter, which makes
every operation closed-form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .ring import GroundElem, GroundRing


@dataclass(frozen=True)
class AntisymMatrix:
    """An antisymmetric integer matrix giving the commutation exponents."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(n):
                if self.rows[i][j] != -self.rows[j][i]:
                    raise ValueError("matrix must be antisymmetric")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def pairing(self, k: Sequence[int], l: Sequence[int]) -> int:
        """The bilinear form sum_{ij} Q_ij k_i l_j."""
        if len(k) != self.dim or len(l) != self.dim:
            raise ValueError("vector length must equal the matrix dimension")
        total = 0
        for i, ki in enumerate(k):
            if ki:
                row = self.rows[i]
                total += ki * sum(row[j] * lj for j, lj in enumerate(l) if lj)
        return total

    def pairing_row(self, k: Sequence[int]) -> tuple[int, ...]:
        """The row vector k^T Q, so pairing(k, l) = dot(pairing_row(k), l)."""
        n = self.dim
        out = [0] * n
        for i, ki in enumerate(k):
            if ki:
                row = self.rows[i]
                for j in range(n):
                    out[j] += ki * row[j]
        return tuple(out)


def pairing(matrix: AntisymMatrix, k: Sequence[int], l: Sequence[int]) -> int:
    return matrix.pairing(k, l)


@dataclass(frozen=True)
class QuantumTorus:
    """A quantum torus: commutation matrix plus coefficient ground ring."""

    matrix: AntisymMatrix
    ring: GroundRing = GroundRing()

    @property
    def rank(self) -> int:
        return self.matrix.dim

    def zero(self) -> "TorusElement":
        return TorusElement(self, {})

    def one(self) -> "TorusElement":
        return self.monomial((0,) * self.rank)

    def monomial(self, exponent: Sequence[int], coeff: GroundElem | None = None) -> "TorusElement":
        k = tuple(exponent)
        if len(k) != self.rank:
            raise ValueError("exponent length mismatch")
        c = self.ring.one() if coeff is None else coeff
        if c.is_zero():
            return self.zero()
        return TorusElement(self, {k: c})

    def generator(self, i: int, power: int = 1) -> "TorusElement":
        exps = [0] * self.rank
        exps[i] = power
        return self.monomial(exps)

    def from_terms(self, terms: dict[tuple[int, ...], GroundElem]) -> "TorusElement":
        return TorusElement(self, {k: c for k, c in terms.items() if not c.is_zero()})


class TorusElement:
    """Finitely supported map from exponent vectors to coefficients."""

    __slots__ = ("torus", "terms")

    def __init__(self, torus: QuantumTorus, terms: dict[tuple[int, ...], GroundElem]):
        self.torus = torus
        self.terms = terms

    def _check(self, other: "TorusElement"):
        if self.torus.matrix is not other.torus.matrix and self.torus.matrix != other.torus.matrix:
            raise ValueError("elements live in different quantum tori")

    def __add__(self, other: "TorusElement") -> "TorusElement":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return TorusElement(self.torus, out)

    def __neg__(self) -> "TorusElement":
        return TorusElement(self.torus, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        return elem_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((k, frozenset(c.terms.items())) for k, c in self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, c: GroundElem) -> "TorusElement":
        if c.is_zero():
            return self.torus.zero()
        return TorusElement(self.torus, {k: v * c for k, v in self.terms.items()})

    def shift_q(self, half_steps: int) -> "TorusElement":
        """Multiply by q^{half_steps/2}."""
        if half_steps == 0:
            return self
        return TorusElement(self.torus, {k: v.shift_q(half_steps) for k, v in self.terms.items()})

    def translate(self, vector: Sequence[int]) -> "TorusElement":
        """Shift every exponent by ``vector``, leaving coefficients alone.

        This is *not* multiplication by a monomial unless the pairing of
        ``vector`` against every exponent in the support is constant; the
        callers that rely on that (twist shifts) check the constancy.
        """
        v = tuple(vector)
        if not any(v):
            return self
        return TorusElement(
            self.torus, {tuple(a + b for a, b in zip(k, v)): c for k, c in self.terms.items()}
        )

    def reflect(self) -> "TorusElement":
        """Coefficientwise reflection; fixes every normalized monomial."""
        return TorusElement(self.torus, {k: c.reflect() for k, c in self.terms.items()})

    def __repr__(self):
        return f"TorusElement({self.terms!r})"


def mono_mul(torus: QuantumTorus, a: Sequence[int], b: Sequence[int]) -> TorusElement:
    """Product of two normalized monomials.

    The result is the single normalized monomial at ``a + b`` scaled by
    the quantum parameter to the half-pairing of the exponents.
    """
    a = tuple(a)
    b = tuple(b)
    p = torus.matrix.pairing(a, b)
    exps = tuple(x + y for x, y in zip(a, b))
    return torus.monomial(exps, torus.ring.q_half(p))


def elem_mul(e1: TorusElement, e2: TorusElement) -> TorusElement:
    """Bilinear extension of the normalized-monomial product."""
    e1._check(e2)
    torus = e1.torus
    matrix = torus.matrix
    out: dict[tuple[int, ...], GroundElem] = {}
    for k, c in e1.terms.items():
        row = matrix.pairing_row(k)
        for l, d in e2.terms.items():
            p = sum(r * x for r, x in zip(row, l))
            key = tuple(x + y for x, y in zip(k, l))
            v = (c * d).shift_q(p)
            s = out.get(key)
            if s is None:
                out[key] = v
            else:
                s = s + v
                if s.is_zero():
                    del out[key]
                else:
                    out[key] = s
    return TorusElement(torus, out)


def weyl_normalize(torus: QuantumTorus, seq: Iterable[tuple[int, int]]) -> TorusElement:
    """Weyl normalization of an ordered product of generator powers.

    ``seq`` is a sequence of (generator index, exponent) pairs.  The
    ordered product is corrected by the half-power of the quantum
    parameter that makes the result permutation invariant; it equals the
    normalized monomial at the total exponent vector.
    """
    seq = list(seq)
    Q = torus.matrix.rows
    correction = 0
    for i in range(len(seq)):
        gi, ei = seq[i]
        for j in range(i + 1, len(seq)):
            gj, ej = seq[j]
            correction += Q[gi][gj] * ei * ej
    result = torus.one()
    for g, e in seq:
        exps = [0] * torus.rank
        exps[g] = e
        result = elem_mul(result, torus.monomial(exps))
    return result.shift_q(-correction)


def lead_term(
    e: TorusElement, degree: Callable[[tuple[int, ...]], tuple]
) -> list[tuple[tuple[int, ...], GroundElem]]:
    """All terms of maximal degree class, compared lexicographically.

    Returns the full maximal class; a singleton list means a unique lead
    monomial.  Ties are surfaced, never silently broken.
    """
    if not e.terms:
        raise ValueError("lead term of the zero element")
    best = None
    out: list[tuple[tuple[int, ...], GroundElem]] = []
    for k, c in e.terms.items():
        d = degree(k)
        if best is None or d > best:
            best = d
            out = [(k, c)]
        elif d == best:
            out.append((k, c))
    return out


def subalgebra_contains(pred: Callable[[tuple[int, ...]], bool], e: TorusElement) -> bool:
    """True iff every exponent with nonzero coefficient satisfies ``pred``."""
    return all(pred(k) for k in e.terms)


def reflection_normalize(e: TorusElement) -> TorusElement:
    """Rescale by the unique half-power of the quantum parameter making
    the element reflection invariant.

    Raises ValueError when no such power exists; for products of
    quantum-trace values of disjoint curves it always does.
    """
    if e.is_zero():
        return e
    shift = None
    for c in e.terms.values():
        groups: dict[tuple[int, ...], list[int]] = {}
        for key in c.terms:
            groups.setdefault(key[:-1], []).append(key[-1])
        for qs in groups.values():
            s = -(max(qs) + min(qs))
            if s % 2:
                raise ValueError("element is not reflection-normalizable (odd center)")
            if shift is None:
                shift = s // 2
            elif shift != s // 2:
                raise ValueError("element is not reflection-normalizable (mixed centers)")
    result = e.shift_q(shift) if shift else e
    if result.reflect() != result:
        raise ValueError("element is not reflection-normalizable")
    return result
