"""Verification suites behind the check command and the acceptance tests.

Each suite returns a :class:`CheckResult` with a pass verdict, counts,
and a witness for the first failure.  All randomized suites take an
explicit seed and are reproducible.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from . import pants
from .arith import (
    RootOfUnity,
    chebyshev,
    even_sublattice,
    kernel_lattice,
    lambda_hat,
    lattice_index,
    pi_degree,
    threading_coeffs,
)
from .pants import lambda_contains, nu_of_component, return_arc
from .qtorus import AntisymMatrix, QuantumTorus, elem_mul, lead_term, weyl_normalize
from .qtrace import pants_degree, trace_torus, utr_coord, utr_coord_straight, weyl_u_mul
from .ring import HalfLaurent
from .surface import (
    DTDatum,
    d_embed,
    lambda_global,
    phi_value,
    standard_datum,
    surface_torus,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    elapsed: float
    detail: dict = field(default_factory=dict)

    def summary(self, timings: bool = True) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        timing = f" in {self.elapsed:.2f}s" if timings else ""
        extra = f" {self.detail}" if (self.detail and not self.passed) else ""
        return f"[{verdict}] {self.name}: {self.checked} checks{timing}{extra}"


def grid_surfaces(rmax: int) -> list[tuple[int, int]]:
    """All (genus, punctures) with 1 <= r <= rmax, excluding the torus cases."""
    out = []
    for g in range(0, rmax + 1):
        for m in range(0, rmax + 7):
            r = 3 * g - 3 + m
            if 1 <= r <= rmax and not (g == 1 and m <= 1) and not (g == 0 and m <= 3):
                out.append((g, m))
    return sorted(out, key=lambda gm: (3 * gm[0] - 3 + gm[1], gm))


def _lambda_box(datum: DTDatum, nmax: int, tmax: int):
    r = datum.r
    for n in itertools.product(range(0, nmax + 1), repeat=r):
        for t in itertools.product(range(-tmax, tmax + 1), repeat=r):
            c = n + t
            if lambda_global(datum, c):
                yield c


def _pants_box(j: int, nmax: int, tmax: int):
    for n in itertools.product(range(0, nmax + 1), repeat=j):
        if sum(n) % 2:
            continue
        for t in itertools.product(range(-tmax, tmax + 1), repeat=j):
            c = n + t
            if lambda_contains(j, c):
                yield c


def _sample_pants(rng: random.Random, j: int, nmax: int, tmax: int):
    while True:
        n = tuple(rng.randint(0, nmax) for _ in range(j))
        if sum(n) % 2:
            continue
        t = tuple(rng.randint(-tmax, tmax) for _ in range(j))
        if lambda_contains(j, n + t):
            return n + t


def _sample_global(rng: random.Random, datum: DTDatum, nmax: int, tmax: int):
    while True:
        n = tuple(rng.randint(0, nmax) for _ in range(datum.r))
        t = tuple(rng.randint(-tmax, tmax) for _ in range(datum.r))
        if lambda_global(datum, n + t):
            return n + t


# ---------------------------------------------------------------------------
# criteria 1-3: the center lattice grid


def check_pi_degree_grid(rmax: int = 4, nmax: int = 12) -> CheckResult:
    t0 = time.time()
    checked = 0
    for g, m in grid_surfaces(rmax):
        datum = standard_datum(g, m)
        span = lambda_hat(datum)
        for n in range(1, nmax + 1):
            root = RootOfUnity(n)
            idx = lattice_index(kernel_lattice(datum, n), span)
            expected = pi_degree(g, m, root) ** 2
            checked += 1
            if idx != expected:
                return CheckResult(
                    "pi-degree grid", False, checked, time.time() - t0,
                    {"surface": (g, m), "order": n, "index": idx, "expected": expected},
                )
    return CheckResult("pi-degree grid", True, checked, time.time() - t0)


def check_kernel_form(rmax: int = 4, nmax: int = 12) -> CheckResult:
    t0 = time.time()
    checked = 0
    for g, m in grid_surfaces(rmax):
        datum = standard_datum(g, m)
        span = lambda_hat(datum)
        even = even_sublattice(datum)
        for n in range(1, nmax + 1):
            root = RootOfUnity(n)
            ker = kernel_lattice(datum, n)
            target = span.scaled(root.big_n) if root.n1 % 2 else even.scaled(root.big_n)
            checked += 1
            if ker != target:
                return CheckResult(
                    "kernel lattice form", False, checked, time.time() - t0,
                    {"surface": (g, m), "order": n},
                )
    return CheckResult("kernel lattice form", True, checked, time.time() - t0)


def check_even_index(rmax: int = 4) -> CheckResult:
    t0 = time.time()
    checked = 0
    for g, m in grid_surfaces(rmax):
        datum = standard_datum(g, m)
        idx = lattice_index(even_sublattice(datum), lambda_hat(datum))
        checked += 1
        if idx != 4 ** g:
            r = 3 * g - 3 + m
            return CheckResult(
                "even sublattice index", False, checked, time.time() - t0,
                {"surface": (g, m), "index": idx, "expected": 4 ** g,
                 "matches_2^(2r)": idx == 4 ** r},
            )
    return CheckResult("even sublattice index", True, checked, time.time() - t0)


# ---------------------------------------------------------------------------
# criterion 4: the lead-term theorem over coordinate boxes


LEAD_SURFACES = ((0, 4), (0, 5), (1, 2), (2, 0))


def check_lead_term(box: int = 4, surfaces=LEAD_SURFACES) -> CheckResult:
    t0 = time.time()
    checked = 0
    for g, m in surfaces:
        datum = standard_datum(g, m)
        order_key = lambda k: d_embed(datum, k)
        for coord in _lambda_box(datum, box, box):
            value = phi_value(datum, coord)
            leads = lead_term(value, order_key)
            checked += 1
            if len(leads) != 1 or leads[0][0] != coord:
                return CheckResult(
                    "lead-term theorem", False, checked, time.time() - t0,
                    {"surface": (g, m), "coord": coord,
                     "leads": [k for k, _ in leads]},
                )
    return CheckResult("lead-term theorem", True, checked, time.time() - t0)


# ---------------------------------------------------------------------------
# criterion 5: top term of products


def check_product_top(
    pairs: int = 10000,
    seed: int = 0,
    surfaces=LEAD_SURFACES,
    corrupt_qtilde: bool = False,
) -> CheckResult:
    t0 = time.time()
    rng = random.Random(seed)
    checked = 0
    for g, m in surfaces:
        datum = standard_datum(g, m)
        torus = surface_torus(datum)
        qt = torus.matrix
        if corrupt_qtilde:
            rows = [list(r) for r in qt.rows]
            rows[0][-1] += 1
            rows[-1][0] -= 1
            qt = AntisymMatrix(tuple(tuple(r) for r in rows))
        order_key = lambda k: d_embed(datum, k)
        cache: dict[tuple, object] = {}

        def phi_cached(c):
            if c not in cache:
                cache[c] = phi_value(datum, c)
            return cache[c]

        for _ in range(pairs):
            k = _sample_global(rng, datum, 3, 3)
            l = _sample_global(rng, datum, 3, 3)
            p = qt.pairing(k, l)
            checked += 1
            if p % 2:
                return CheckResult(
                    "top-term products", False, checked, time.time() - t0,
                    {"surface": (g, m), "pair": (k, l), "pairing": p,
                     "reason": "odd pairing"},
                )
            prod = elem_mul(phi_cached(k), phi_cached(l))
            leads = lead_term(prod, order_key)
            total = tuple(a + b for a, b in zip(k, l))
            want_coeff = torus.ring.q_half(p)
            if len(leads) != 1 or leads[0][0] != total:
                return CheckResult(
                    "top-term products", False, checked, time.time() - t0,
                    {"surface": (g, m), "pair": (k, l),
                     "lead": [k0 for k0, _ in leads], "expected": total},
                )
            if leads[0][1] != want_coeff:
                return CheckResult(
                    "top-term products", False, checked, time.time() - t0,
                    {"surface": (g, m), "pair": (k, l),
                     "reason": "lead coefficient is not the half-pairing power",
                     "half_pairing": p // 2},
                )
    return CheckResult("top-term products", True, checked, time.time() - t0)


# ---------------------------------------------------------------------------
# criterion 6: the trace property suite on pants boxes


def check_trace_properties(box: int = 6, seed: int = 0, twist_samples: int = 4000) -> CheckResult:
    """Boundary grading and top term on every box coordinate; the twist
    rule through the cache-free product path on every decomposition core
    and a seeded sample of box coordinates."""
    t0 = time.time()
    rng = random.Random(seed)
    checked = 0
    for j in (1, 2, 3):
        tt = trace_torus(j)
        coords = list(_pants_box(j, box, box))
        cores_seen: set[tuple] = set()
        sampled = set(rng.sample(range(len(coords)), min(twist_samples, len(coords))))
        degree = pants_degree
        for idx, coord in enumerate(coords):
            n = coord[:j]
            value = utr_coord(tt, coord)
            checked += 1
            best = None
            best_k = None
            tie = False
            for k in value.terms:
                if k[:j] != n:
                    return CheckResult(
                        "trace properties", False, checked, time.time() - t0,
                        {"j": j, "coord": coord, "monomial": k, "reason": "grading"},
                    )
                d = degree(j, k)
                if best is None or d > best:
                    best, best_k, tie = d, k, False
                elif d == best:
                    tie = True
            if tie or best_k != coord:
                return CheckResult(
                    "trace properties", False, checked, time.time() - t0,
                    {"j": j, "coord": coord, "reason": "lead", "tie": tie, "lead": best_k},
                )
            base = [coord[j + i] if n[i] == 0 else 0 for i in range(j)]
            core_key = (n, tuple(base))
            is_new_core = core_key not in cores_seen
            if is_new_core:
                cores_seen.add(core_key)
            if is_new_core or idx in sampled:
                for i in range(1, j + 1):
                    if n[i - 1] == 0:
                        continue
                    lhs = utr_coord_straight(tt, pants.twist_apply(j, i, coord))
                    rhs = weyl_u_mul(tt, i, utr_coord_straight(tt, coord), n[i - 1])
                    if lhs != rhs:
                        return CheckResult(
                            "trace properties", False, checked, time.time() - t0,
                            {"j": j, "coord": coord, "boundary": i, "reason": "twist"},
                        )
    return CheckResult("trace properties", True, checked, time.time() - t0)


# ---------------------------------------------------------------------------
# criterion 7: monoid closures


def check_monoid_closure(pairs: int = 10000, seed: int = 0, surfaces=LEAD_SURFACES) -> CheckResult:
    t0 = time.time()
    rng = random.Random(seed)
    checked = 0
    for j in (1, 2, 3):
        for _ in range(pairs):
            a = _sample_pants(rng, j, 10, 10)
            b = _sample_pants(rng, j, 10, 10)
            s = tuple(x + y for x, y in zip(a, b))
            checked += 1
            if not lambda_contains(j, s):
                return CheckResult(
                    "monoid closure", False, checked, time.time() - t0,
                    {"j": j, "pair": (a, b)},
                )
    for g, m in surfaces:
        datum = standard_datum(g, m)
        for _ in range(pairs):
            a = _sample_global(rng, datum, 8, 8)
            b = _sample_global(rng, datum, 8, 8)
            s = tuple(x + y for x, y in zip(a, b))
            checked += 1
            if not lambda_global(datum, s):
                return CheckResult(
                    "monoid closure", False, checked, time.time() - t0,
                    {"surface": (g, m), "pair": (a, b)},
                )
    return CheckResult("monoid closure", True, checked, time.time() - t0)


# ---------------------------------------------------------------------------
# criterion 8: the coordinate catalog


def check_dt_catalog() -> CheckResult:
    t0 = time.time()
    expected = {
        (3, 1): (2, 0, 0, 0, 1, 0),
        (3, 2): (0, 2, 0, 0, 0, 1),
        (3, 3): (0, 0, 2, 1, 0, 0),
        (2, 1): (2, 0, 0, 1),
        (2, 2): (0, 2, -1, 1),
        (1, 1): (2, 1),
    }
    checked = 0
    for (j, i), want in expected.items():
        got = nu_of_component(j, return_arc(i))
        checked += 1
        if got != want:
            return CheckResult(
                "coordinate catalog", False, checked, time.time() - t0,
                {"j": j, "arc": i, "got": got, "expected": want},
            )
    for j in (1, 2, 3):
        for i in range(1, j + 1):
            got = nu_of_component(j, pants.loop(i))
            want = tuple(0 if z != j + i - 1 else 1 for z in range(2 * j))
            checked += 1
            if got != want:
                return CheckResult(
                    "coordinate catalog", False, checked, time.time() - t0,
                    {"j": j, "loop": i, "got": got, "expected": want},
                )
    for j in (2, 3):
        for a in range(1, j + 1):
            for b in range(a + 1, j + 1):
                got = nu_of_component(j, pants.cross(a, b))
                checked += 1
                if any(got[j:]):
                    return CheckResult(
                        "coordinate catalog", False, checked, time.time() - t0,
                        {"j": j, "cross": (a, b), "got": got,
                         "expected": "zero twists"},
                    )
    return CheckResult("coordinate catalog", True, checked, time.time() - t0)


# ---------------------------------------------------------------------------
# criterion 9: Chebyshev oracle


def check_chebyshev(kmax: int = 64) -> CheckResult:
    t0 = time.time()
    x = HalfLaurent.q(1)
    z = x + x.reflect()
    checked = 0
    for k in range(kmax + 1):
        acc = HalfLaurent.zero()
        for i, c in enumerate(chebyshev(k)):
            if c:
                acc = acc + (z ** i) * HalfLaurent.from_int(c)
        checked += 1
        if acc != (x ** k) + (x ** k).reflect():
            return CheckResult("chebyshev oracle", False, checked, time.time() - t0, {"k": k})
        if k >= 1 and threading_coeffs(k) != chebyshev(k):
            return CheckResult(
                "chebyshev oracle", False, checked, time.time() - t0,
                {"k": k, "reason": "threading coefficients differ"},
            )
    return CheckResult("chebyshev oracle", True, checked, time.time() - t0)


# ---------------------------------------------------------------------------
# criterion 10: quantum torus algebra laws


def _random_antisym(rng: random.Random, n: int, bound: int = 3) -> AntisymMatrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-bound, bound)
            rows[i][j] = v
            rows[j][i] = -v
    return AntisymMatrix(tuple(tuple(r) for r in rows))


def check_qtorus_laws(mono_pairs: int = 100000, weyl_cases: int = 10000, seed: int = 0) -> CheckResult:
    t0 = time.time()
    rng = random.Random(seed)
    checked = 0
    for _ in range(mono_pairs):
        n = rng.randint(1, 5)
        M = _random_antisym(rng, n)
        T = QuantumTorus(M)
        a = tuple(rng.randint(-6, 6) for _ in range(n))
        b = tuple(rng.randint(-6, 6) for _ in range(n))
        prod = elem_mul(T.monomial(a), T.monomial(b))
        (k, c), = prod.terms.items()
        checked += 1
        if k != tuple(x + y for x, y in zip(a, b)) or c != T.ring.q_half(M.pairing(a, b)):
            return CheckResult(
                "quantum torus laws", False, checked, time.time() - t0,
                {"pair": (a, b), "reason": "monomial product"},
            )
    for _ in range(weyl_cases):
        n = rng.randint(1, 4)
        M = _random_antisym(rng, n)
        T = QuantumTorus(M)
        seq = [(rng.randrange(n), rng.randint(-3, 3)) for _ in range(rng.randint(0, 5))]
        perm = seq[:]
        rng.shuffle(perm)
        w1 = weyl_normalize(T, seq)
        checked += 1
        if w1 != weyl_normalize(T, perm):
            return CheckResult(
                "quantum torus laws", False, checked, time.time() - t0,
                {"seq": seq, "reason": "permutation variance"},
            )
        total = [0] * n
        for gidx, e in seq:
            total[gidx] += e
        mono = T.monomial(total)
        if w1 != mono or mono.reflect() != mono:
            return CheckResult(
                "quantum torus laws", False, checked, time.time() - t0,
                {"seq": seq, "reason": "normalization or reflection"},
            )
    return CheckResult("quantum torus laws", True, checked, time.time() - t0)


# ---------------------------------------------------------------------------
# the full battery


def run_all(
    rmax: int = 4,
    nmax: int = 12,
    seed: int = 0,
    lead_box: int = 4,
    trace_box: int = 6,
    pairs: int = 10000,
    mono_pairs: int = 100000,
    corrupt_qtilde: bool = False,
) -> list[CheckResult]:
    return [
        check_pi_degree_grid(rmax, nmax),
        check_kernel_form(rmax, nmax),
        check_even_index(rmax),
        check_lead_term(lead_box),
        check_product_top(pairs, seed, corrupt_qtilde=corrupt_qtilde),
        check_trace_properties(trace_box, seed),
        check_monoid_closure(pairs, seed),
        check_dt_catalog(),
        check_chebyshev(),
        check_qtorus_laws(mono_pairs, pairs, seed),
    ]
