import cmath
import math

import numpy as np
import pytest
import sympy as sp
from conftest import annulus_points
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import lobachevsky_clausen, lobachevsky_quad, tet_volume_mp

from hypants.whitehead import (
    CAO_MEYERHOFF_BOUND,
    WHITEHEAD_VOLUME,
    TetShape,
    build_rho,
    index_volume_check,
    lobachevsky,
    nr_parameter,
    tet_volume,
    whitehead_volume,
)

# mpmath at 30 digits
LAMBDA_PI_4 = 0.457982797088609507
THREE_LAMBDA_PI_3 = 1.014941606409653625
FOUR_CATALAN = 3.663862376708876060
VOLUME_AT_05_08 = 3.339264796210074219


class TestSymbolic:
    def setup_method(self):
        a = sp.symbols("a", nonzero=True)
        self.a = a
        self.C1 = sp.Matrix([[1, 2], [0, 1]])
        self.C2 = sp.Matrix([[1, 0], [-2, 1]])
        self.Q = sp.Matrix([[1 / a - a, a], [-a, a]])

    def test_q_squared(self):
        a = self.a
        assert sp.simplify(self.Q * self.Q - sp.Matrix([[a ** -2 - 2, 1], [-1, 0]])) == sp.zeros(2)

    def test_relations(self):
        Q, C1, C2 = self.Q, self.C1, self.C2
        Q2 = Q * Q
        assert sp.simplify(C1 * Q2 - Q2 * C2) == sp.zeros(2)
        x = Q.inv() * C1 * Q
        y = C1 * C2
        assert sp.simplify(x * y * x.inv() * y.inv()) == sp.eye(2)

    def test_numeric_matches_symbolic(self):
        for val in (2j, 0.3 + 0.4j, -5):
            rho = build_rho(val)
            sym = self.Q.subs(self.a, val).evalf()
            num = np.array(sym, dtype=complex)
            assert rho.Q.isclose(rho.Q.from_entries(*num.ravel()), 1e-12)


class TestRelations:
    def test_two_i(self):
        r1, r2 = build_rho(2j).relation_residuals()
        assert r1 < 1e-12 and r2 < 1e-12

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            build_rho(0)

    @settings(max_examples=200, deadline=None)
    @given(annulus_points())
    def test_hold_on_annulus(self, a):
        rho = build_rho(a)
        assert rho.relations_hold(1e-9)
        assert rho.Q2.distance(rho.q_squared_formula()) < 1e-9 * max(1, abs(a) ** -2)


class TestLobachevsky:
    def test_values(self):
        assert lobachevsky(0) == 0
        assert abs(lobachevsky(math.pi)) < 1e-14
        assert lobachevsky(math.pi / 4) == pytest.approx(LAMBDA_PI_4, abs=1e-12)
        assert 3 * lobachevsky(math.pi / 3) == pytest.approx(THREE_LAMBDA_PI_3, abs=1e-12)

    @pytest.mark.parametrize("theta", np.linspace(0.01, 3.1, 17))
    def test_against_clausen(self, theta):
        assert lobachevsky(theta) == pytest.approx(lobachevsky_clausen(theta), abs=1e-10)

    @pytest.mark.parametrize("theta", [0.1, 0.7, 1.3, 2.2])
    def test_against_quadrature(self, theta):
        assert lobachevsky(theta) == pytest.approx(lobachevsky_quad(theta), abs=1e-10)

    @settings(max_examples=100)
    @given(st.floats(min_value=-10, max_value=10))
    def test_odd_periodic(self, t):
        assert lobachevsky(-t) == pytest.approx(-lobachevsky(t), abs=1e-12)
        assert lobachevsky(t + math.pi) == pytest.approx(lobachevsky(t), abs=1e-10)

    @settings(max_examples=100)
    @given(st.floats(min_value=0.01, max_value=3.0))
    def test_duplication(self, t):
        # Lambda(2t) = 2 (Lambda(t) + Lambda(t + pi/2))
        lhs = lobachevsky(2 * t)
        rhs = 2 * (lobachevsky(t) + lobachevsky(t + math.pi / 2))
        assert lhs == pytest.approx(rhs, abs=1e-9)


class TestVolumes:
    def test_regular(self):
        assert tet_volume(cmath.exp(1j * math.pi / 3)) == pytest.approx(THREE_LAMBDA_PI_3, abs=1e-12)

    def test_square(self):
        assert tet_volume(1j) == pytest.approx(2 * LAMBDA_PI_4, abs=1e-12)

    def test_flat(self):
        assert tet_volume(0.5) == 0.0
        assert TetShape(0.5).degenerate

    def test_bad_shape(self):
        for x in (0, 1, -1):
            with pytest.raises(ValueError):
                TetShape(x)

    def test_regular_is_max(self):
        xs = np.linspace(-2, 3, 41)[:, None] + 1j * np.linspace(0.05, 3, 41)[None, :]
        best = max(tet_volume(complex(x)) for x in xs.ravel() if complex(x) not in (0, 1, -1))
        assert best <= THREE_LAMBDA_PI_3 + 1e-12

    @pytest.mark.parametrize("x", [0.3 + 0.2j, 2 + 1j, -1 + 0.5j, 0.5 - 0.8j])
    def test_against_oracle(self, x):
        assert tet_volume(x) == pytest.approx(tet_volume_mp(x), abs=1e-10)

    def test_whitehead(self):
        assert whitehead_volume(1j) == pytest.approx(FOUR_CATALAN, abs=1e-12)
        assert WHITEHEAD_VOLUME == pytest.approx(FOUR_CATALAN, abs=1e-15)

    def test_whitehead_real_is_flat(self):
        assert whitehead_volume(2.0) == 0.0

    def test_whitehead_below_max(self):
        v = whitehead_volume(0.5 + 0.8j)
        assert v == pytest.approx(VOLUME_AT_05_08, abs=1e-9)
        assert v < FOUR_CATALAN

    @settings(max_examples=100)
    @given(annulus_points(0.2, 5.0))
    def test_symmetric_under_companion(self, x):
        assert whitehead_volume(x) == pytest.approx(whitehead_volume(-1 / x), abs=1e-12)


class TestNR:
    def test_parameter(self):
        p = nr_parameter(1j)
        assert p.z == pytest.approx(2j)
        assert p.consistent()
        assert nr_parameter(-1 / 1j).z == pytest.approx(p.z)

    def test_degenerate(self):
        assert nr_parameter(1).degenerate
        assert nr_parameter(1).z == 0
        with pytest.raises(ValueError):
            nr_parameter(0)


class TestIndexVolume:
    def test_default(self):
        r = index_volume_check()
        assert r.passed
        assert r.computed["quotient_volume"] == pytest.approx(1.831931188, abs=1e-9)
        assert r.computed["quotient_volume"] < 1.84 < CAO_MEYERHOFF_BOUND
        assert set(r.provenance) >= {"volume", "volume_bound", "printed_upper"}

    def test_large_volume_fails(self):
        r = index_volume_check(4.2, 2)
        assert r.failed and not r.computed["excluded"]

    def test_index_one(self):
        r = index_volume_check(index=1)
        assert r.passed and not r.computed["excluded"]
        with pytest.raises(ValueError):
            index_volume_check(index=0)
