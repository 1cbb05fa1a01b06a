"""Global pants-decomposition data and the degeneration into a quantum torus.

A surface is presented by its DT-datum: an embedded trivalent fatgraph
whose vertices are the faces of a pants decomposition (one per pair of
pants), whose internal edges are the decomposition curves, and whose
legs are the punctures.  Vertices carry the counterclockwise cyclic
order of their half-edges and a slot assignment identifying each face
with a standard pair of pants.

Global coordinates are flat tuples ``(n_1..n_r, t_1..t_r)`` indexed by
the curves in their fixed numbering.  The module computes the
commutation matrix of the associated quantum torus from corner counts
of the fatgraph, splits global coordinates into per-face ones, and
evaluates the gluing of the per-face quantum traces, whose unique top
term recovers the coordinate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from . import pants
from .pants import Coord, base_twists
from .qtorus import AntisymMatrix, QuantumTorus, TorusElement, lead_term
from .qtrace import trace_torus, utr_coord
from .ring import Cyclotomic, GroundElem, GroundRing, HalfLaurent


_EXCLUDED = {(1, 0), (1, 1)}


def surface_excluded(g: int, m: int) -> bool:
    return g < 0 or m < 0 or (g, m) in _EXCLUDED or (g == 0 and m <= 3)


# ---------------------------------------------------------------------------
# fatgraph and DT-datum


@dataclass(frozen=True)
class FatGraph:
    """Embedded trivalent graph: cyclic orders, edge pairing, legs.

    ``vertices[v]`` lists the half-edge ids at vertex ``v`` in
    counterclockwise order.  ``edges[c]`` is the pair of half-edges of
    curve ``c``; ``legs`` are the unpaired half-edges (punctures).
    """

    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        seen: dict[int, int] = {}
        for v, hes in enumerate(self.vertices):
            if len(hes) != 3:
                raise ValueError("every vertex must be trivalent")
            for h in hes:
                if h in seen:
                    raise ValueError(f"half-edge {h} appears twice")
                seen[h] = v
        paired = set()
        for h1, h2 in self.edges:
            if h1 == h2 or h1 not in seen or h2 not in seen:
                raise ValueError("edges must pair distinct existing half-edges")
            paired.update((h1, h2))
        if len(paired) != 2 * len(self.edges):
            raise ValueError("a half-edge may belong to only one edge")
        for h in self.legs:
            if h not in seen or h in paired:
                raise ValueError("legs must be existing unpaired half-edges")
        if paired | set(self.legs) != set(seen):
            raise ValueError("every half-edge must be an edge side or a leg")
        if self.genus < 0 or (2 + len(self.vertices) - len(self.legs)) % 2:
            raise ValueError("fatgraph does not close up to an orientable surface")
        if self.r < 1:
            raise ValueError("at least one decomposition curve is required")

    @property
    def r(self) -> int:
        return len(self.edges)

    @property
    def punctures(self) -> int:
        return len(self.legs)

    @property
    def genus(self) -> int:
        return (2 + len(self.vertices) - len(self.legs)) // 2

    def curve_of(self, h: int) -> int | None:
        for c, (h1, h2) in enumerate(self.edges):
            if h in (h1, h2):
                return c
        return None


@dataclass(frozen=True)
class DTDatum:
    """Fatgraph plus the slot assignment of every face.

    ``slots[v]`` orders the half-edges of vertex ``v`` by boundary slot:
    three internal half-edges for a three-holed face, two internal then
    the leg for a two-holed face, one internal then the two legs for a
    one-holed face.  Numbering condition: in every two-holed face the
    curve at the second slot strictly precedes the curve at the first.
    """

    graph: FatGraph
    slots: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = self.graph
        if len(self.slots) != len(g.vertices):
            raise ValueError("one slot tuple per vertex required")
        legset = set(g.legs)
        for v, sl in enumerate(self.slots):
            if sorted(sl) != sorted(g.vertices[v]):
                raise ValueError(f"slots of vertex {v} must permute its half-edges")
            nlegs = sum(1 for h in sl if h in legset)
            j = 3 - nlegs
            if j < 1:
                raise ValueError("a face needs at least one boundary curve")
            if any(h in legset for h in sl[:j]) or any(h not in legset for h in sl[j:]):
                raise ValueError(f"legs of vertex {v} must fill the trailing slots")
            if j == 2:
                c2 = g.curve_of(sl[1])
                c1 = g.curve_of(sl[0])
                if not c2 < c1:
                    raise ValueError(
                        f"two-holed face {v}: curve {c2} at the second slot must "
                        f"precede curve {c1} at the first"
                    )

    @property
    def r(self) -> int:
        return self.graph.r

    def face_type(self, v: int) -> int:
        legset = set(self.graph.legs)
        return 3 - sum(1 for h in self.slots[v] if h in legset)

    # -- derived incidence tables (cached on first use)

    @property
    def _tables(self):
        return _datum_tables(self)

    def to_dict(self) -> dict:
        return {
            "vertices": [list(v) for v in self.graph.vertices],
            "edges": [list(e) for e in self.graph.edges],
            "legs": list(self.graph.legs),
            "slots": [list(s) for s in self.slots],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_dict(d: dict) -> "DTDatum":
        graph = FatGraph(
            tuple(tuple(v) for v in d["vertices"]),
            tuple((e[0], e[1]) for e in d["edges"]),
            tuple(d["legs"]),
        )
        return DTDatum(graph, tuple(tuple(s) for s in d["slots"]))

    @staticmethod
    def from_json(text: str) -> "DTDatum":
        return DTDatum.from_dict(json.loads(text))


@dataclass(frozen=True)
class _Tables:
    face_types: tuple[int, ...]
    face_curves: tuple[tuple[int, ...], ...]       # per face: curve at each boundary slot
    sides: tuple[tuple[tuple[int, int], tuple[int, int]], ...]  # per curve: ((v,slot) primary, secondary)
    symbols: tuple[str, ...]                        # global puncture symbols, by sorted leg id
    leg_symbol_index: dict[int, int]


@lru_cache(maxsize=None)
def _datum_tables(datum: DTDatum) -> _Tables:
    g = datum.graph
    face_types = tuple(datum.face_type(v) for v in range(len(g.vertices)))
    he_curve = {}
    for c, (h1, h2) in enumerate(g.edges):
        he_curve[h1] = c
        he_curve[h2] = c
    face_curves = tuple(
        tuple(he_curve[h] for h in datum.slots[v][: face_types[v]])
        for v in range(len(g.vertices))
    )
    incidences: dict[int, list[tuple[int, int]]] = {c: [] for c in range(g.r)}
    for v in range(len(g.vertices)):
        for s in range(face_types[v]):
            incidences[face_curves[v][s]].append((v, s))
    sides = []
    for c in range(g.r):
        inc = incidences[c]
        if len(inc) != 2:
            raise ValueError(f"curve {c} must bound exactly two face slots")
        inc.sort(key=lambda vs: (vs[1], vs[0]))
        sides.append((inc[0], inc[1]))
    sorted_legs = tuple(sorted(g.legs))
    symbols = tuple(f"v{i + 1}" for i in range(len(sorted_legs)))
    leg_symbol_index = {h: i for i, h in enumerate(sorted_legs)}
    return _Tables(face_types, face_curves, tuple(sides), symbols, leg_symbol_index)


# ---------------------------------------------------------------------------
# the standard datum


def standard_datum(g: int, m: int) -> DTDatum:
    """The fixed chain-style datum for the surface of genus g with m punctures.

    Genus zero is a chain of two one-holed end faces with two-holed
    faces between them; genus one is a ring of two-holed faces; higher
    genus uses a necklace of three-holed faces (the theta graph for
    genus two) with the punctured faces spliced into the first curve.
    Deterministic, and satisfies the curve-numbering condition.
    """
    if surface_excluded(g, m):
        raise ValueError(f"excluded surface (g, m) = ({g}, {m})")

    # faces: list of (kind, curve indices by boundary slot)
    faces: list[tuple[int, tuple[int, ...]]] = []
    if g == 0:
        r = m - 3
        faces.append((1, (0,)))
        for i in range(m - 4):
            faces.append((2, (i + 1, i)))
        faces.append((1, (r - 1,)))
    elif g == 1:
        r = m
        for i in range(m):
            a, b = i, (i + 1) % m
            faces.append((2, (max(a, b), min(a, b))))
    else:
        nf = 2 * g - 2
        # chain curves first, then the remaining cycle curves, then the pair curves
        chain = list(range(m + 1)) if m else [0]
        cycle = {0: chain}
        nxt = (m + 1) if m else 1
        for i in range(1, nf):
            cycle[i] = [nxt]
            nxt += 1
        extra = {}
        for jj in range(g - 1):
            extra[jj] = nxt
            nxt += 1
        r = nxt
        core: list[list[int]] = [[] for _ in range(nf)]
        for i in range(nf):
            core[i].append(cycle[(i - 1) % nf][-1])   # edge arriving from the previous face
            core[i].append(cycle[i][0])               # edge leaving to the next face
        for jj in range(g - 1):
            core[2 * jj].append(extra[jj])
            core[2 * jj + 1].append(extra[jj])
        for i in range(nf):
            faces.append((3, tuple(sorted(core[i]))))
        for k in range(m):
            faces.append((2, (chain[k + 1], chain[k])))

    # materialize half-edges
    next_he = 0
    vertices: list[tuple[int, ...]] = []
    slots: list[tuple[int, ...]] = []
    edge_ends: dict[int, list[int]] = {c: [] for c in range(r)}
    legs: list[int] = []
    for kind, curves in faces:
        hes = []
        for c in curves:
            edge_ends[c].append(next_he)
            hes.append(next_he)
            next_he += 1
        for _ in range(3 - kind):
            legs.append(next_he)
            hes.append(next_he)
            next_he += 1
        slots.append(tuple(hes))
        if kind == 1:
            vertices.append((hes[0], hes[1], hes[2]))
        else:
            ccw = [hes[1], hes[0]] + hes[2:]
            vertices.append(tuple(ccw))

    edges = tuple((edge_ends[c][0], edge_ends[c][1]) for c in range(r))
    return DTDatum(FatGraph(tuple(vertices), edges, tuple(legs)), tuple(slots))


# ---------------------------------------------------------------------------
# the commutation matrices


def q_matrix(datum: DTDatum) -> AntisymMatrix:
    """Signed corner counts of the dual graph.

    At every vertex, each pair of cyclically consecutive half-edges
    (h, h') with h' following h counterclockwise adds +1 to the entry of
    (curve of h, curve of h') and -1 to the transpose.  Legs contribute
    nothing.  The counterclockwise convention is the frozen embedding
    convention of this package.
    """
    g = datum.graph
    he_curve: dict[int, int] = {}
    for c, (h1, h2) in enumerate(g.edges):
        he_curve[h1] = c
        he_curve[h2] = c
    rows = [[0] * g.r for _ in range(g.r)]
    for hes in g.vertices:
        for i in range(3):
            a = he_curve.get(hes[i])
            b = he_curve.get(hes[(i + 1) % 3])
            if a is not None and b is not None and a != b:
                rows[a][b] += 1
                rows[b][a] -= 1
    return AntisymMatrix(tuple(tuple(row) for row in rows))


def tilde_q(q: AntisymMatrix) -> AntisymMatrix:
    """The symplectic double: block matrix [[Q, 2I], [-2I, 0]]."""
    r = q.dim
    rows = []
    for i in range(r):
        rows.append(tuple(q.rows[i]) + tuple(2 if k == i else 0 for k in range(r)))
    for i in range(r):
        rows.append(tuple(-2 if k == i else 0 for k in range(r)) + (0,) * r)
    return AntisymMatrix(tuple(rows))


@lru_cache(maxsize=None)
def surface_torus(datum: DTDatum) -> QuantumTorus:
    """The quantum torus the graded skein algebra degenerates into."""
    return QuantumTorus(tilde_q(q_matrix(datum)), GroundRing(_datum_tables(datum).symbols))


# ---------------------------------------------------------------------------
# the global coordinate monoid and its order


def split_nt(datum: DTDatum, coord: Coord) -> tuple[tuple[int, ...], tuple[int, ...]]:
    r = datum.r
    if len(coord) != 2 * r:
        raise ValueError(f"coordinate must have length {2 * r}")
    return tuple(coord[:r]), tuple(coord[r:])


def _face_lengths(datum: DTDatum, n: tuple[int, ...]) -> list[tuple[int, ...]]:
    tb = _datum_tables(datum)
    return [tuple(n[c] for c in tb.face_curves[v]) for v in range(len(datum.graph.vertices))]


def lambda_membership(datum: DTDatum, coord: Coord) -> tuple[bool, str]:
    """Membership in the global coordinate monoid, with a witness reason."""
    n, t = split_nt(datum, coord)
    if any(x < 0 for x in n):
        return False, "negative length coordinate"
    tb = _datum_tables(datum)
    lengths = _face_lengths(datum, n)
    for v, face_n in enumerate(lengths):
        if sum(face_n) % 2:
            return False, f"odd boundary sum {face_n} at face {v}"
    for c in range(datum.r):
        if n[c] == 0:
            bound2 = 0
            for v, s in tb.sides[c]:
                bound2 += pants.add2(tb.face_types[v], s + 1, lengths[v])
            if 2 * t[c] < bound2:
                return False, f"twist {t[c]} at curve {c} below bound {bound2}/2"
    return True, ""


def lambda_global(datum: DTDatum, coord: Coord) -> bool:
    return lambda_membership(datum, coord)[0]


def d_embed(datum: DTDatum, coord: Coord) -> tuple[int, ...]:
    """The injective degree vector ordering global coordinates.

    Total length and twist first, then all but the last twist and all
    but the last length; compared lexicographically.
    """
    n, t = split_nt(datum, coord)
    return (sum(n), sum(t)) + t[:-1] + n[:-1]


# ---------------------------------------------------------------------------
# splitting a coordinate into faces


def face_split(datum: DTDatum, coord: Coord, secondary: bool = False) -> list[tuple[int, Coord]]:
    """Canonical per-face coordinates matching a global coordinate.

    Per-face lengths restrict the global ones; per-face twists are the
    canonical base twists of each face with the whole residual twist of
    each curve placed on its primary side (the side with the smaller
    slot index, ties to the smaller face index).  Any other placement
    differs by twist moves and produces the same glued trace;
    ``secondary`` selects the opposite placement, which the tests use to
    confirm that.
    """
    ok, why = lambda_membership(datum, coord)
    if not ok:
        raise ValueError(f"coordinate not in the monoid: {why}")
    n, t = split_nt(datum, coord)
    tb = _datum_tables(datum)
    lengths = _face_lengths(datum, n)
    bases = [base_twists(tb.face_types[v], lengths[v]) for v in range(len(lengths))]
    twists = [list(b) for b in bases]
    for c in range(datum.r):
        (v1, s1), (v2, s2) = tb.sides[c]
        residual = t[c] - bases[v1][s1] - bases[v2][s2]
        if secondary:
            twists[v2][s2] += residual
        else:
            twists[v1][s1] += residual
    out = []
    for v in range(len(lengths)):
        j = tb.face_types[v]
        face_coord = lengths[v] + tuple(twists[v])
        if not pants.lambda_contains(j, face_coord):
            raise AssertionError(f"face {v} coordinate {face_coord} left its monoid")
        out.append((j, face_coord))
    return out


# ---------------------------------------------------------------------------
# the glued trace and its top term


def _inject_coeff(ring: GroundRing, mapping: tuple[int, ...], coeff: GroundElem) -> GroundElem:
    """Reindex a face coefficient into the global ground ring.

    ``mapping[i]`` is the global symbol position of the face's i-th
    local symbol.
    """
    nsym = ring.nsym
    out = {}
    for key, c in coeff.terms.items():
        exps = [0] * nsym
        for i, e in enumerate(key[:-1]):
            if e:
                exps[mapping[i]] = e
        out[tuple(exps) + (key[-1],)] = c
    return GroundElem(ring, out)


def phi_value(datum: DTDatum, coord: Coord, secondary_split: bool = False) -> TorusElement:
    """Glue the per-face traces and project onto the surface torus.

    Per-face values are matched (their boundary degrees equal the global
    lengths), so every tensor monomial projects: the u-exponents of the
    two sides of each curve add up to the global twist exponent, and the
    paired x-degrees become the length exponent.
    """
    splits = face_split(datum, coord, secondary=secondary_split)
    n, _ = split_nt(datum, coord)
    tb = _datum_tables(datum)
    torus = surface_torus(datum)
    ring = torus.ring
    r = datum.r

    acc: dict[tuple[int, ...], GroundElem] = {(0,) * r: ring.one()}
    for v, (j, face_coord) in enumerate(splits):
        tt = trace_torus(j)
        value = utr_coord(tt, face_coord)
        curves = tb.face_curves[v]
        sym_map = tuple(tb.leg_symbol_index[leg] for leg in datum.slots[v][j:])
        face_terms = []
        for k, c in value.terms.items():
            contrib = [0] * r
            for s in range(j):
                contrib[curves[s]] += k[j + s]
            face_terms.append((tuple(contrib), _inject_coeff(ring, sym_map, c)))
        new: dict[tuple[int, ...], GroundElem] = {}
        for tacc, cacc in acc.items():
            for tface, cface in face_terms:
                key = tuple(a + b for a, b in zip(tacc, tface))
                val = cacc * cface
                s = new.get(key)
                if s is None:
                    new[key] = val
                else:
                    s = s + val
                    if s.is_zero():
                        del new[key]
                    else:
                        new[key] = s
        acc = new
    return torus.from_terms({n + tvec: c for tvec, c in acc.items()})


def phi_lead(datum: DTDatum, coord: Coord) -> tuple[Coord, TorusElement]:
    """The glued trace together with its unique top-degree exponent.

    Raises on a tie, which would contradict the top-term theorem.
    """
    value = phi_value(datum, coord)
    leads = lead_term(value, lambda k: d_embed(datum, k))
    if len(leads) != 1:
        raise ValueError(f"lead term tie at {coord}: {[k for k, _ in leads]}")
    return leads[0][0], value


@dataclass(frozen=True)
class GradedProduct:
    """Top-term product data: scalar exponent and the summed coordinate."""

    half_pairing: int
    coord: Coord
    scalar: HalfLaurent | Cyclotomic


def graded_mul(datum: DTDatum, k: Coord, l: Coord, xi_order: int | None = None) -> GradedProduct:
    """Product in the associated graded algebra.

    Returns the half-pairing exponent (must be an integer: the pairing
    of two monoid members is always even) and the coordinate sum.  With
    ``xi_order`` the scalar is evaluated at the root of unity, otherwise
    it stays a formal power of the quantum parameter.
    """
    for c in (k, l):
        ok, why = lambda_membership(datum, c)
        if not ok:
            raise ValueError(f"coordinate not in the monoid: {why}")
    p = surface_torus(datum).matrix.pairing(k, l)
    if p % 2:
        raise ValueError(f"odd pairing {p} of monoid members {k}, {l}")
    total = tuple(a + b for a, b in zip(k, l))
    if xi_order is None:
        scalar: HalfLaurent | Cyclotomic = HalfLaurent.q_half(p)
    else:
        scalar = Cyclotomic.root(2 * xi_order, p)
    return GradedProduct(p // 2, total, scalar)
