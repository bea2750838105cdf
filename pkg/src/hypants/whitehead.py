"""The Whitehead link representation family and ideal tetrahedron volumes."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import zeta

from .moebius import IDENTITY, MoebiusTransform, _eps, compose, mat
from .pantsrep import RIGID_C1, RIGID_C2, build_q
from .report import ClaimReport

# 4 * Catalan's constant: volume of the complete Whitehead link complement
WHITEHEAD_VOLUME = 3.6638623767088760602
# minimal volume of a closed orientable hyperbolic 3-manifold with a cusp,
# cited from Cao-Meyerhoff; not recomputed here
CAO_MEYERHOFF_BOUND = 2.0298


def commutator(x: MoebiusTransform, y: MoebiusTransform) -> MoebiusTransform:
    return compose(compose(x, y), compose(x.inverse(), y.inverse()))


@dataclass(frozen=True)
class WhiteheadRep:
    a: complex
    C1: MoebiusTransform
    C2: MoebiusTransform
    Q: MoebiusTransform

    @property
    def Q2(self) -> MoebiusTransform:
        return compose(self.Q, self.Q)

    def q_squared_formula(self) -> MoebiusTransform:
        a = self.a
        return mat(a ** -2 - 2, 1, -1, 0)

    def relation_residuals(self) -> tuple[float, float]:
        """PSL distances of C1 Q^2 from Q^2 C2, and of [Q^-1 C1 Q, C1 C2] from 1."""
        q2 = self.Q2
        r1 = compose(self.C1, q2).distance(compose(q2, self.C2))
        conj = compose(compose(self.Q.inverse(), self.C1), self.Q)
        r2 = commutator(conj, compose(self.C1, self.C2)).distance(IDENTITY)
        return r1, r2

    def relations_hold(self, tol: float | None = None) -> bool:
        tol = _eps(tol)
        scale = max(1.0, self.Q.norm) ** 4
        return all(r <= tol * scale for r in self.relation_residuals())


def build_rho(a: complex, eps: float | None = None) -> WhiteheadRep:
    """rho_a: C1, C2 in rigid form and Q(a) = [[1/a - a, a], [-a, a]]."""
    a = complex(a)
    if abs(a) <= _eps(eps):
        raise ValueError("a must be nonzero")
    return WhiteheadRep(a, RIGID_C1, RIGID_C2, build_q(a))


# ---------------------------------------------------------------- Lobachevsky

_SERIES_TERMS = 60


@lru_cache(maxsize=1)
def _series_coefficients() -> np.ndarray:
    n = np.arange(1, _SERIES_TERMS + 1, dtype=float)
    return zeta(2 * n) / (n * (2 * n + 1) * np.pi ** (2 * n))


def lobachevsky(theta: float) -> float:
    """Lambda(theta) = -int_0^theta log|2 sin t| dt.

    Reduced to [0, pi/2] using oddness and period pi, then summed as
    theta - theta log(2 theta) + sum zeta(2n) theta^(2n+1) / (n (2n+1) pi^(2n)).
    """
    theta = math.fmod(float(theta), math.pi)
    if theta > math.pi / 2:
        theta -= math.pi
    elif theta <= -math.pi / 2:
        theta += math.pi
    sign = 1.0
    if theta < 0:
        sign, theta = -1.0, -theta
    if theta == 0.0:
        return 0.0
    powers = theta ** (2 * np.arange(1, _SERIES_TERMS + 1) + 1)
    total = theta - theta * math.log(2 * theta) + float(np.dot(_series_coefficients(), powers))
    return sign * total


@dataclass(frozen=True)
class TetShape:
    x: complex

    def __post_init__(self):
        x = complex(self.x)
        if x in (0, 1, -1):
            raise ValueError(f"degenerate tetrahedron shape {x}")
        object.__setattr__(self, "x", x)

    @property
    def degenerate(self) -> bool:
        """Real shapes span flat tetrahedra."""
        return self.x.imag == 0

    @property
    def companion(self) -> "TetShape":
        return TetShape(-1 / self.x)


def tet_volume(x) -> float:
    """Volume of the ideal tetrahedron with shape x; zero for real x."""
    shape = x if isinstance(x, TetShape) else TetShape(x)
    if shape.degenerate:
        return 0.0
    z = shape.x
    return (lobachevsky(cmath.phase(z))
            + lobachevsky(cmath.phase(1 / (1 - z)))
            + lobachevsky(cmath.phase(1 - 1 / z)))


def _pair_representative(x: complex) -> complex:
    # x and -1/x pick the same representative, so the sum does not depend on the order
    y = -1 / x
    if (abs(x), x.real, x.imag) >= (abs(y), y.real, y.imag):
        return x
    return y


def whitehead_volume(x) -> float:
    """2 vol(x) + 2 vol(-1/x): two pairs of tetrahedra with shapes x, -1/x."""
    x = x.x if isinstance(x, TetShape) else complex(x)
    rep = _pair_representative(TetShape(x).x)
    companion = TetShape(rep).companion
    return 2 * tet_volume(rep) + 2 * tet_volume(companion)


@dataclass(frozen=True)
class NRParameter:
    x: complex
    z: complex

    @property
    def degenerate(self) -> bool:
        return self.x in (1, -1)

    def consistent(self, eps: float | None = None) -> bool:
        eps = _eps(eps)
        return abs(self.x - 1 / self.x - self.z) <= eps * max(1.0, abs(self.z))


def nr_parameter(x: complex) -> NRParameter:
    """z = x - 1/x; the companion shape -1/x gives the same z."""
    x = complex(x)
    if x == 0:
        raise ValueError("x must be nonzero")
    return NRParameter(x, x - 1 / x)


def index_volume_check(volume: float | None = None, index: int = 2,
                       bound: float = CAO_MEYERHOFF_BOUND) -> ClaimReport:
    """Would a quotient of index ``index`` fall under the minimal-volume bound?

    For index >= 2 the verdict is pass when volume / index < bound, i.e. the
    index is excluded.  Index 1 constrains nothing and always passes.
    """
    if index < 1:
        raise ValueError("index must be a positive integer")
    if volume is None:
        volume = whitehead_volume(1j)
    quotient = volume / index
    excluded = index > 1 and quotient < bound
    passed = index == 1 or excluded
    return ClaimReport(
        "index-volume",
        computed={"volume": volume, "index": float(index),
                  "quotient_volume": quotient, "volume_bound": bound,
                  "printed_upper": 1.84, "excluded": excluded},
        tolerance=0.0,
        verdict="pass" if passed else "fail",
        provenance={"volume": "computed: 2 vol(i) + 2 vol(i) from the Lobachevsky series",
                    "volume_bound": "literature constant (Cao-Meyerhoff), assumed",
                    "printed_upper": "printed bound on the quotient volume"})
