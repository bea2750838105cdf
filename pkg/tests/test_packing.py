import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import envelope_min_bruteforce

from hypants.horoball import CuspLattice, Horocycle
from hypants.packing import (
    intersection_area_bound,
    intersection_number,
    parity_check,
    seen_area_difference,
    seen_area_inequality,
    seen_area_slack,
    shrink_expand,
    straddle_min_height,
    straddle_min_height_numeric,
    tangent_product,
)

positive = st.floats(min_value=0.01, max_value=100)


class TestTangentProduct:
    def test_cases(self):
        assert tangent_product(2, 2) == 4.0
        assert tangent_product(1, 4) == 4.0
        assert tangent_product(1, 1, math.log(2)) == pytest.approx(4)

    def test_nonpositive(self):
        with pytest.raises(ValueError):
            tangent_product(0, 1)

    @settings(max_examples=200)
    @given(positive, positive, st.floats(min_value=0, max_value=3),
           st.floats(min_value=-3, max_value=3))
    def test_flow_invariant(self, l1, l2, gap, d):
        base = tangent_product(l1, l2, gap)
        moved = tangent_product(*shrink_expand(l1, l2, d), gap)
        assert abs(moved - base) <= 1e-12 * base


class TestIntersection:
    def test_number(self):
        assert intersection_number((1, 0), (0, 1)) == 1
        assert intersection_number((0, 1), (1, 0)) == -1
        assert intersection_number((2, 3), (4, 6)) == 0

    def test_square(self):
        L = CuspLattice(1, 2j)
        r = intersection_area_bound(Horocycle(1, 0, L), Horocycle(0, 1, L))
        assert r.passed and r.computed["equality"]
        assert r.computed["lhs"] == pytest.approx(2)

    def test_diagonal(self):
        L = CuspLattice(1, 2j)
        r = intersection_area_bound(Horocycle(1, 0, L), Horocycle(1, 1, L))
        assert r.passed and not r.computed["equality"]
        assert r.computed["rhs"] == pytest.approx(math.sqrt(5))
        assert r.computed["lhs"] == pytest.approx(2)

    def test_random(self, rng):
        for _ in range(300):
            L = CuspLattice(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
            p1, q1, p2, q2 = (int(v) for v in rng.integers(-6, 7, size=4))
            if (p1, q1) == (0, 0) or (p2, q2) == (0, 0):
                continue
            h = rng.uniform(0.5, 2, size=2)
            r = intersection_area_bound(Horocycle(p1, q1, L, h[0]), Horocycle(p2, q2, L, h[1]))
            assert r.passed
            # |Delta| area = |v1 x v2| / (h1 h2) and l1 l2 = |v1||v2| / (h1 h2)
            v1, v2 = L.point(p1, q1), L.point(p2, q2)
            cross = abs((v1.conjugate() * v2).imag) / (h[0] * h[1])
            assert r.computed["lhs"] == pytest.approx(cross, rel=1e-9, abs=1e-12)


class TestStraddle:
    def test_examples(self):
        assert straddle_min_height(4) == pytest.approx(math.sqrt(3) / 2)
        assert straddle_min_height(2 * math.sqrt(2)) == pytest.approx(math.sqrt(2) / 2)
        assert straddle_min_height(2) == pytest.approx(math.sqrt(3) / 2)

    def test_domain(self):
        for a in (0, -1, 4.5):
            with pytest.raises(ValueError):
                straddle_min_height(a)

    def test_branches_meet(self):
        r = 2 * math.sqrt(2)
        assert math.sqrt(1 - 4 / r ** 2) == pytest.approx(math.sqrt(1 - (r / 4) ** 2), abs=1e-15)

    @pytest.mark.parametrize("a", np.linspace(1.5, 4, 26))
    def test_numeric(self, a):
        assert straddle_min_height_numeric(a) == pytest.approx(straddle_min_height(a), abs=1e-6)

    @pytest.mark.parametrize("a", [1.0, 2.5, 3.0, 3.7])
    def test_dense_oracle(self, a):
        assert envelope_min_bruteforce(a) == pytest.approx(straddle_min_height(a), abs=1e-4)


class TestSeenArea:
    def test_minimum(self):
        r = seen_area_inequality()
        closed = math.pi * (math.pi - 3) / (2 * (math.pi - 1))
        assert r.passed
        assert r.computed["minimum"] == pytest.approx(closed, abs=1e-12)
        assert r.computed["minimum"] == pytest.approx(0.103854, abs=1e-6)
        assert r.computed["discriminant"] < 0
        assert r.computed["argmin"] == pytest.approx(math.pi / (math.pi - 1))

    def test_slack_matches_difference(self):
        # the difference is (slack at t = sqrt(ab)) with the sign of seen - bound
        for ab in np.linspace(0.1, 20, 50):
            assert seen_area_difference(ab) == pytest.approx(seen_area_slack(math.sqrt(ab)), abs=1e-12)

    def test_steeper_linear_term_fails(self):
        assert seen_area_inequality(linear=8.0).failed


class TestParity:
    def test_basis(self):
        r = parity_check((1, 0), (0, 1), (-1, -1))
        assert r.passed and r.computed["obstruction"]
        assert r.computed["total"] == 1

    def test_identity(self, rng):
        for _ in range(200):
            c1, c2 = (tuple(int(v) for v in rng.integers(-5, 6, size=2)) for _ in range(2))
            c3 = (-c1[0] - c2[0], -c1[1] - c2[1])
            r = parity_check(c1, c2, c3)
            assert r.passed
            assert r.computed["total"] == intersection_number(c1, c2)

    def test_parallel_even(self):
        r = parity_check((1, 0), (1, 0), (-2, 0))
        assert r.computed["even"] and not r.computed["obstruction"]
