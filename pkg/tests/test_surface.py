import itertools
import json
import random

import pytest

from skeintor.qtorus import elem_mul, lead_term, subalgebra_contains
from skeintor.ring import Cyclotomic, HalfLaurent
from skeintor.surface import (
    DTDatum,
    FatGraph,
    d_embed,
    face_split,
    graded_mul,
    lambda_global,
    lambda_membership,
    phi_lead,
    phi_value,
    q_matrix,
    standard_datum,
    surface_torus,
    tilde_q,
)

d04 = standard_datum(0, 4)
d05 = standard_datum(0, 5)
d12 = standard_datum(1, 2)
d20 = standard_datum(2, 0)


def box(datum, nmax, tmax):
    for n in itertools.product(range(0, nmax + 1), repeat=datum.r):
        for t in itertools.product(range(-tmax, tmax + 1), repeat=datum.r):
            c = n + t
            if lambda_global(datum, c):
                yield c


def sample_member(rng, datum, nmax=5, tmax=5):
    while True:
        n = tuple(rng.randint(0, nmax) for _ in range(datum.r))
        t = tuple(rng.randint(-tmax, tmax) for _ in range(datum.r))
        if lambda_global(datum, n + t):
            return n + t


class TestStandardDatum:
    def test_small_sphere(self):
        assert d04.r == 1
        assert d04.graph.genus == 0 and d04.graph.punctures == 4
        assert [d04.face_type(v) for v in range(2)] == [1, 1]

    def test_theta(self):
        assert d20.r == 3
        assert d20.graph.genus == 2 and d20.graph.punctures == 0
        assert [d20.face_type(v) for v in range(2)] == [3, 3]

    def test_chains_and_rings(self):
        assert [d05.face_type(v) for v in range(3)] == [1, 2, 1]
        assert [d12.face_type(v) for v in range(2)] == [2, 2]
        d27 = standard_datum(2, 3)
        assert d27.r == 6 and d27.graph.genus == 2 and d27.graph.punctures == 3
        d30 = standard_datum(3, 0)
        assert d30.r == 6 and d30.graph.genus == 3
        d31 = standard_datum(3, 1)
        assert d31.r == 7 and d31.graph.genus == 3 and d31.graph.punctures == 1
        # higher-genus data still support the whole pipeline
        assert lambda_global(d31, (0,) * 14)
        coord = (2,) * 7 + (1, 0, -1, 0, 2, 0, 0)
        assert lambda_global(d31, coord)
        lead, _ = phi_lead(d31, coord)
        assert lead == coord

    def test_excluded(self):
        for g, m in [(1, 0), (1, 1), (0, 0), (0, 3), (-1, 5)]:
            with pytest.raises(ValueError):
                standard_datum(g, m)

    def test_json_round_trip(self):
        for datum in (d04, d05, d12, d20, standard_datum(1, 3), standard_datum(2, 2)):
            text = datum.to_json()
            again = DTDatum.from_json(text)
            assert again == datum
            assert again.to_json() == text

    def test_numbering_condition_enforced(self):
        # a two-holed face whose second slot carries the later curve is rejected
        graph = FatGraph(
            vertices=((1, 0, 2), (4, 3, 5)),
            edges=((0, 3), (2, 4)),
            legs=(1, 5),
        )
        with pytest.raises(ValueError):
            DTDatum(graph, ((0, 2, 1), (3, 4, 5)))

    def test_fatgraph_validation(self):
        with pytest.raises(ValueError):
            FatGraph(((0, 1),), ((0, 1),), ())  # not trivalent
        with pytest.raises(ValueError):
            FatGraph(((0, 1, 2),), ((0, 1),), ())  # half-edge 2 dangles


class TestQMatrix:
    def test_sphere_four(self):
        assert q_matrix(d04).rows == ((0,),)

    def test_theta_regression(self):
        # frozen value for the counterclockwise corner convention
        assert q_matrix(d20).rows == ((0, -2, 2), (2, 0, -2), (-2, 2, 0))

    def test_antisymmetry_all_standard(self):
        for datum in (d04, d05, d12, d20, standard_datum(1, 4), standard_datum(2, 1)):
            q = q_matrix(datum)
            for i in range(q.dim):
                for j in range(q.dim):
                    assert q.rows[i][j] == -q.rows[j][i]

    def test_rotation_invariance(self):
        # rotating a vertex's cyclic order leaves the corner counts alone
        g = d20.graph
        rotated = FatGraph(
            (g.vertices[0][1:] + g.vertices[0][:1],) + g.vertices[1:], g.edges, g.legs
        )
        assert q_matrix(DTDatum(rotated, d20.slots)).rows == q_matrix(d20).rows

    def test_tilde_blocks(self):
        assert tilde_q(q_matrix(d04)).rows == ((0, 2), (-2, 0))
        tq = tilde_q(q_matrix(d20))
        q = q_matrix(d20)
        for i in range(3):
            for j in range(3):
                assert tq.rows[i][j] == q.rows[i][j]
                assert tq.rows[i][3 + j] == (2 if i == j else 0)
                assert tq.rows[3 + i][j] == (-2 if i == j else 0)
                assert tq.rows[3 + i][3 + j] == 0

    def test_matches_face_torus_commutation(self):
        # the corner counts must reproduce the form the face tori realize:
        # summing the face-level x-commutation exponents over all slot
        # pairs of the two curves gives the same matrix
        from skeintor.qtrace import trace_torus

        for datum in (d04, d05, d12, d20, standard_datum(2, 1), standard_datum(1, 3)):
            tb = datum._tables
            r = datum.r
            realized = [[0] * r for _ in range(r)]
            for v, curves in enumerate(tb.face_curves):
                rows = trace_torus(tb.face_types[v]).torus.matrix.rows
                for s1, c1 in enumerate(curves):
                    for s2, c2 in enumerate(curves):
                        if c1 != c2:
                            realized[c1][c2] += rows[s1][s2]
            assert tuple(tuple(row) for row in realized) == q_matrix(datum).rows

    def test_even_pairing_on_span(self):
        # members of the span pair evenly under the doubled form, even far
        # outside the small acceptance boxes
        rng = random.Random(99)
        from skeintor.arith import lambda_hat

        for datum in (d05, d20, standard_datum(2, 1)):
            span = lambda_hat(datum)
            tq = tilde_q(q_matrix(datum))
            cols = [list(c) for c in span.columns]
            dim = 2 * datum.r
            for _ in range(300):
                x = [rng.randint(-20, 20) for _ in range(dim)]
                y = [rng.randint(-20, 20) for _ in range(dim)]
                k = [sum(c[i] * w for c, w in zip(cols, x)) for i in range(dim)]
                l = [sum(c[i] * w for c, w in zip(cols, y)) for i in range(dim)]
                assert tq.pairing(k, l) % 2 == 0

    def test_pairing_formula(self):
        # block pairing = <n,n'>_Q + 2 n.t' - 2 n'.t
        rng = random.Random(0)
        q = q_matrix(d05)
        tq = tilde_q(q)
        for _ in range(300):
            n, t, n2, t2 = (tuple(rng.randint(-5, 5) for _ in range(2)) for _ in range(4))
            lhs = tq.pairing(n + t, n2 + t2)
            rhs = (
                q.pairing(n, n2)
                + 2 * sum(a * b for a, b in zip(n, t2))
                - 2 * sum(a * b for a, b in zip(n2, t))
            )
            assert lhs == rhs


class TestLambdaGlobal:
    def test_examples(self):
        assert lambda_global(d04, (2, 2))
        assert not lambda_global(d04, (1, 0))
        assert not lambda_global(d04, (0, -1))
        assert lambda_global(d04, (0, 0))

    def test_witnesses(self):
        ok, why = lambda_membership(d04, (1, 0))
        assert not ok and "odd" in why
        ok, why = lambda_membership(d04, (0, -1))
        assert not ok and "twist" in why

    def test_monoid_closure(self):
        rng = random.Random(1)
        for datum in (d04, d05, d12, d20):
            for _ in range(1500):
                a = sample_member(rng, datum)
                b = sample_member(rng, datum)
                assert lambda_global(datum, tuple(x + y for x, y in zip(a, b)))


class TestDEmbed:
    def test_examples(self):
        assert d_embed(d04, (2, 2)) == (2, 2)
        assert d_embed(d05, (1, 3, 0, -1)) == (4, -1, 0, 1)

    def test_injective(self):
        rng = random.Random(2)
        for datum in (d05, d20):
            seen = {}
            for _ in range(2000):
                c = tuple(rng.randint(-6, 6) for _ in range(2 * datum.r))
                v = d_embed(datum, c)
                assert seen.setdefault(v, c) == c


class TestFaceSplit:
    def test_examples(self):
        assert [c for _, c in face_split(d04, (2, 2))] == [(2, 1), (2, 1)]
        assert [c for _, c in face_split(d04, (2, 4))] == [(2, 3), (2, 1)]

    def test_faces_admissible_and_matched(self):
        from skeintor.pants import lambda_contains

        rng = random.Random(3)
        for datum in (d04, d05, d12, d20):
            tb = datum._tables
            for _ in range(400):
                coord = sample_member(rng, datum)
                n = coord[: datum.r]
                splits = face_split(datum, coord)
                total_t = [0] * datum.r
                for v, (j, fc) in enumerate(splits):
                    assert lambda_contains(j, fc)
                    for s in range(j):
                        assert fc[s] == n[tb.face_curves[v][s]]
                        total_t[tb.face_curves[v][s]] += fc[j + s]
                assert tuple(total_t) == coord[datum.r :]

    def test_rejects_nonmember(self):
        with pytest.raises(ValueError):
            face_split(d04, (1, 0))


class TestPhi:
    def test_sphere_four_value(self):
        lead, val = phi_lead(d04, (2, 2))
        assert lead == (2, 2)
        torus = surface_torus(d04)
        ring = torus.ring
        v12 = ring.var("v1") * ring.var("v2")
        v34 = ring.var("v3") * ring.var("v4")
        want = (
            torus.monomial((2, 2))
            + torus.monomial((2, 1)).scale(v12 + v34)
            + torus.monomial((2, 0)).scale(v12 * v34)
        )
        assert val == want

    def test_loop_value(self):
        lead, val = phi_lead(d04, (0, 1))
        torus = surface_torus(d04)
        assert lead == (0, 1)
        assert val == torus.monomial((0, 1)) + torus.monomial((0, -1))

    def test_lead_box_small(self):
        for datum in (d05, d12):
            for coord in box(datum, 3, 2):
                lead, _ = phi_lead(datum, coord)
                assert lead == coord

    def test_lead_box_spliced_genus_two(self):
        # five faces, four curves: the necklace core with one punctured
        # face spliced in
        datum = standard_datum(2, 1)
        count = 0
        for coord in box(datum, 2, 1):
            lead, _ = phi_lead(datum, coord)
            assert lead == coord
            count += 1
        assert count > 500

    def test_twist_move_invariance(self):
        rng = random.Random(4)
        for datum in (d04, d05, d12, d20):
            for _ in range(40):
                coord = sample_member(rng, datum, nmax=3, tmax=3)
                assert phi_value(datum, coord) == phi_value(datum, coord, secondary_split=True)

    def test_exponents_stay_in_span(self):
        # end-to-end monomial subalgebra check: all exponents of a glued
        # trace satisfy the length parity conditions of the span
        tb = d20._tables
        def in_span(k):
            n = k[: d20.r]
            return all(sum(n[c] for c in curves) % 2 == 0 for curves in tb.face_curves)
        rng = random.Random(5)
        for _ in range(60):
            coord = sample_member(rng, d20, nmax=3, tmax=3)
            assert subalgebra_contains(in_span, phi_value(d20, coord))

    def test_lead_coefficient_is_one(self):
        rng = random.Random(6)
        for datum in (d05, d20):
            torus = surface_torus(datum)
            for _ in range(40):
                coord = sample_member(rng, datum, nmax=3, tmax=3)
                leads = lead_term(phi_value(datum, coord), lambda k: d_embed(datum, k))
                assert len(leads) == 1
                assert leads[0][1] == torus.ring.one()


class TestGradedMul:
    def test_examples(self):
        gp = graded_mul(d04, (2, 0), (0, 1))
        assert gp.half_pairing == 2 and gp.coord == (2, 1)
        assert gp.scalar == HalfLaurent.q(2)
        gp = graded_mul(d04, (2, 2), (0, 0))
        assert gp.half_pairing == 0 and gp.coord == (2, 2)
        gp = graded_mul(d04, (2, 1), (2, 1))
        assert gp.half_pairing == 0 and gp.coord == (4, 2)

    def test_root_of_unity_scalar(self):
        from skeintor.arith import RootOfUnity

        gp = graded_mul(d04, (2, 0), (0, 1), xi_order=5)
        assert gp.scalar == Cyclotomic.root(10, 4)
        assert gp.scalar == RootOfUnity(5).xi() ** 2

    def test_rejects_nonmembers(self):
        with pytest.raises(ValueError):
            graded_mul(d04, (1, 0), (0, 1))

    def test_consistent_with_lead_products(self):
        rng = random.Random(7)
        for datum in (d04, d12):
            torus = surface_torus(datum)
            for _ in range(30):
                k = sample_member(rng, datum, nmax=3, tmax=3)
                l = sample_member(rng, datum, nmax=3, tmax=3)
                gp = graded_mul(datum, k, l)
                prod = elem_mul(phi_value(datum, k), phi_value(datum, l))
                leads = lead_term(prod, lambda e: d_embed(datum, e))
                assert len(leads) == 1
                assert leads[0][0] == gp.coord
                assert leads[0][1] == torus.ring.q_half(2 * gp.half_pairing)


class TestAlternateDatum:
    """A user-supplied datum for the twice-punctured torus: one
    three-holed face self-glued along the first curve plus a one-holed
    face, exercising the file-input path and self-gluing."""

    def build(self):
        graph = FatGraph(
            vertices=((1, 0, 2), (3, 4, 5)),
            edges=((0, 1), (2, 3)),
            legs=(4, 5),
        )
        return DTDatum(graph, ((0, 1, 2), (3, 4, 5)))

    def test_valid_and_recognized(self):
        datum = self.build()
        assert datum.graph.genus == 1 and datum.graph.punctures == 2
        assert datum.r == 2
        assert [datum.face_type(v) for v in range(2)] == [3, 1]

    def test_round_trip_through_json(self):
        datum = self.build()
        assert DTDatum.from_json(datum.to_json()) == datum

    def test_lead_theorem_on_box(self):
        datum = self.build()
        for coord in box(datum, 3, 2):
            lead, _ = phi_lead(datum, coord)
            assert lead == coord

    def test_self_glued_parity(self):
        datum = self.build()
        # curve 0 meets the three-holed face twice: its length enters the
        # parity sum twice, so only the second curve's parity constrains
        assert lambda_global(datum, (1, 2, 0, 0))
        assert not lambda_global(datum, (1, 1, 0, 0))
