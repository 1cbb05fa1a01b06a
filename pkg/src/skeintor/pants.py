"""Modified Dehn-Thurston coordinates on the three basic pairs of pants.

A pants type is the number ``j`` of boundary circles (1, 2 or 3); the
remaining ``3 - j`` holes are interior punctures.  A coordinate is a
flat tuple ``(n_1..n_j, t_1..t_j)`` of j non-negative lengths followed
by j integer twists.  The admissible coordinates form the monoid
``Lambda_j``: the lengths satisfy a parity constraint and, at every
boundary the curve misses, the twist is bounded below by the Add
function.

The twist convention differs from the classical one: each standard
return arc based at boundary i contributes +1 to the twist at the
boundary it approaches (i+1 cyclically for the three-holed sphere, and
the shifted values below for the punctured types).  This is what makes
the coordinates additive under disjoint union and compatible with lead
terms of skein products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

PANTS_TYPES = (1, 2, 3)

Coord = tuple[int, ...]


def _validate_type(j: int):
    if j not in PANTS_TYPES:
        raise ValueError(f"pants type must be one of {PANTS_TYPES}, got {j}")


def split_nt(j: int, coord: Coord) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if len(coord) != 2 * j:
        raise ValueError(f"coordinate for type {j} must have length {2 * j}")
    return tuple(coord[:j]), tuple(coord[j:])


def interior_punctures(j: int) -> int:
    _validate_type(j)
    return 3 - j


def add2(j: int, i: int, n: tuple[int, ...]) -> int:
    """Twice the lower twist bound at boundary ``i``; always an integer."""
    if j == 1:
        return 0
    if j == 2:
        return -n[1] if i == 1 else n[0]
    return max(0, n[i - 2] - n[i - 1] - n[i % 3])


def add_fn(j: int, i: int, n: tuple[int, ...]) -> Fraction:
    """Lower twist bound at boundary ``i`` (1-based) for length vector ``n``.

    Equals the number of return arcs approaching boundary i in the
    canonical arc realization of ``n``; always a half-integer, and an
    integer whenever the parity constraint holds.
    """
    _validate_type(j)
    if not (1 <= i <= j):
        raise IndexError(f"boundary index {i} out of range for type {j}")
    if len(n) != j:
        raise ValueError("length vector size mismatch")
    return Fraction(add2(j, i, n), 2)


def parity_ok(j: int, n: tuple[int, ...]) -> bool:
    return sum(n) % 2 == 0


def lambda_contains(j: int, coord: Coord) -> bool:
    """Membership in the coordinate monoid ``Lambda_j``."""
    _validate_type(j)
    n, t = split_nt(j, coord)
    if any(x < 0 for x in n):
        return False
    if not parity_ok(j, n):
        return False
    for i in range(1, j + 1):
        if n[i - 1] == 0 and 2 * t[i - 1] < add2(j, i, n):
            return False
    return True


def twist_apply(j: int, i: int, coord: Coord) -> Coord:
    """The boundary twist at ``i``: bumps t_i when the curve meets b_i."""
    n, t = split_nt(j, coord)
    if not (1 <= i <= j):
        raise IndexError(f"boundary index {i} out of range for type {j}")
    if n[i - 1] == 0:
        return tuple(coord)
    t = list(t)
    t[i - 1] += 1
    return n + tuple(t)


# ---------------------------------------------------------------------------
# standard components and the canonical decomposition


@dataclass(frozen=True)
class ComponentSpec:
    """One standard curve, possibly twisted, with a multiplicity.

    kind "loop": the near-boundary loop at ``boundaries[0]``; no twists.
    kind "cross": the arc joining two distinct boundaries, with one
    twist exponent per endpoint boundary.
    kind "return": the return arc based at ``boundaries[0]``, with a
    single twist exponent.
    """

    kind: str
    boundaries: tuple[int, ...]
    twists: tuple[int, ...] = ()
    multiplicity: int = 1

    def __post_init__(self):
        if self.kind not in ("loop", "cross", "return"):
            raise ValueError(f"unknown component kind {self.kind!r}")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if self.kind == "loop" and (len(self.boundaries) != 1 or self.twists):
            raise ValueError("a loop meets one boundary and carries no twists")
        if self.kind == "cross" and (
            len(self.boundaries) != 2
            or self.boundaries[0] == self.boundaries[1]
            or len(self.twists) != 2
        ):
            raise ValueError("a cross arc joins two distinct boundaries with two twists")
        if self.kind == "return" and (len(self.boundaries) != 1 or len(self.twists) != 1):
            raise ValueError("a return arc has one base boundary and one twist")


def loop(i: int) -> ComponentSpec:
    return ComponentSpec("loop", (i,))

def cross(i: int, k: int, s: int = 0, t: int = 0) -> ComponentSpec:
    return ComponentSpec("cross", (i, k), (s, t))

def return_arc(i: int, m: int = 0) -> ComponentSpec:
    return ComponentSpec("return", (i,), (m,))


def _base_return_coord(j: int, i: int) -> Coord:
    """Coordinates of the untwisted return arc based at boundary i."""
    n = [0] * j
    t = [0] * j
    n[i - 1] = 2
    if j == 3:
        t[i % 3] = 1
    elif j == 2:
        if i == 1:
            t[1] = 1
        else:
            t[0], t[1] = -1, 1
    else:
        t[0] = 1
    return tuple(n) + tuple(t)


def _nu1(j: int, kind: str, boundaries: tuple[int, ...], twists: tuple[int, ...]) -> Coord:
    for b in boundaries:
        if not (1 <= b <= j):
            raise ValueError(f"component boundary {b} invalid for type {j}")
    n = [0] * j
    t = [0] * j
    if kind == "loop":
        t[boundaries[0] - 1] = 1
    elif kind == "cross":
        if j == 1:
            raise ValueError("no cross arcs on the one-holed type")
        (i, k), (s, m) = boundaries, twists
        n[i - 1] = n[k - 1] = 1
        t[i - 1] += s
        t[k - 1] += m
    else:
        base = _base_return_coord(j, boundaries[0])
        n = list(base[:j])
        t = list(base[j:])
        t[boundaries[0] - 1] += twists[0]
    return tuple(n) + tuple(t)


def nu_of_component(j: int, c: ComponentSpec) -> Coord:
    """Dehn-Thurston coordinates of a single (twisted) standard curve."""
    _validate_type(j)
    if c.multiplicity != 1:
        raise ValueError("nu_of_component expects multiplicity 1")
    return _nu1(j, c.kind, c.boundaries, c.twists)


@lru_cache(maxsize=65536)
def arc_counts(j: int, n: tuple[int, ...]) -> tuple[dict[tuple[int, int], int], dict[int, int]]:
    """Canonical arc multiset realizing the length vector ``n``.

    Returns (cross counts keyed by boundary pair, return counts keyed by
    base boundary); the dicts are cached, treat them as read-only.
    Follows the classical triangle resolution; verified against the
    coordinate round trip rather than any closed reference.
    """
    _validate_type(j)
    if len(n) != j or any(x < 0 for x in n):
        raise ValueError("invalid length vector")
    if not parity_ok(j, n):
        raise ValueError("length vector violates the parity constraint")
    crosses: dict[tuple[int, int], int] = {}
    returns: dict[int, int] = {}
    if j == 1:
        if n[0] // 2:
            returns[1] = n[0] // 2
    elif j == 2:
        if min(n):
            crosses[(1, 2)] = min(n)
        for i in (1, 2):
            r = (n[i - 1] - n[2 - i]) // 2
            if r > 0:
                returns[i] = r
    else:
        for a in range(1, 4):
            b = a % 3 + 1
            l = ({1, 2, 3} - {a, b}).pop()
            x = max(0, min(n[a - 1], n[b - 1], (n[a - 1] + n[b - 1] - n[l - 1]) // 2))
            if x:
                crosses[(min(a, b), max(a, b))] = x
        for i in range(1, 4):
            others = [n[k] for k in range(3) if k != i - 1]
            r = max(0, (n[i - 1] - sum(others)) // 2)
            if r:
                returns[i] = r
    return crosses, returns


@lru_cache(maxsize=65536)
def base_twists(j: int, n: tuple[int, ...]) -> tuple[int, ...]:
    """Twist vector of the canonical untwisted arc multiset for ``n``."""
    crosses, returns = arc_counts(j, n)
    t = [0] * j
    for i, cnt in returns.items():
        base = _base_return_coord(j, i)
        for s in range(j):
            t[s] += cnt * base[j + s]
    return tuple(t)


@dataclass(frozen=True)
class Decomposition:
    """Canonical component multiset plus a global twist per boundary.

    The residual twist vector represents one global boundary twist
    applied to the whole multi-curve, so the coordinate it realizes is
    the component sum plus ``(0, twists)``.
    """

    j: int
    components: tuple[ComponentSpec, ...]
    twists: tuple[int, ...]

    def nu(self) -> Coord:
        total = [0] * (2 * self.j)
        for c in self.components:
            v = _nu1(self.j, c.kind, c.boundaries, c.twists)
            for idx in range(2 * self.j):
                total[idx] += c.multiplicity * v[idx]
        for i in range(self.j):
            total[self.j + i] += self.twists[i]
        return tuple(total)


def decompose(j: int, coord: Coord) -> Decomposition:
    """Canonical decomposition of an admissible coordinate.

    Arcs appear untwisted with the triangle-resolution counts, loops
    appear at the boundaries the curve misses, and the leftover twisting
    is returned as the global twist vector (zero at missed boundaries).
    """
    if not lambda_contains(j, coord):
        raise ValueError(f"coordinate {coord} is not in Lambda_{j}")
    n, t = split_nt(j, coord)
    crosses, returns = arc_counts(j, n)
    base = base_twists(j, n)
    comps: list[ComponentSpec] = []
    for (a, b), cnt in sorted(crosses.items()):
        comps.append(ComponentSpec("cross", (a, b), (0, 0), cnt))
    for i, cnt in sorted(returns.items()):
        comps.append(ComponentSpec("return", (i,), (0,), cnt))
    residual = [0] * j
    for i in range(1, j + 1):
        extra = t[i - 1] - base[i - 1]
        if n[i - 1] == 0:
            if extra < 0:
                raise AssertionError("loop count went negative on an admissible coordinate")
            if extra:
                comps.append(ComponentSpec("loop", (i,), (), extra))
        else:
            residual[i - 1] = extra
    return Decomposition(j, tuple(comps), tuple(residual))
