"""Horocycle packing lemmas and the Euclidean estimates on the cusp torus."""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import minimize_scalar

from .horoball import CuspLattice, Horocycle
from .moebius import _eps
from .report import ClaimReport

# lower bound on the area of a maximal cusp torus (Cao-Meyerhoff), cited
CUSP_AREA_LOWER_BOUND = 3.35
# lower bound on the length of a horocycle in a maximal cusp (Adams), cited
HOROCYCLE_LENGTH_LOWER_BOUND = 1.0


def tangent_product(l1: float, l2: float, gap: float = 0.0) -> float:
    """Product of the two lengths once both horocycles are expanded to tangency.

    Expanding a horocycle by distance d multiplies its length by e^d, so a
    total expansion ``gap`` shared in any way gives l1 l2 e^(2 gap).
    """
    if not (l1 > 0 and l2 > 0):
        raise ValueError("lengths must be positive")
    return l1 * l2 * math.exp(2 * gap)


def shrink_expand(l1: float, l2: float, d: float) -> tuple[float, float]:
    """Shrink the first horocycle by distance d and expand the second by d."""
    return l1 * math.exp(-d), l2 * math.exp(d)


def intersection_number(s1, s2) -> int:
    """Algebraic intersection p1 q2 - p2 q1 of two slopes."""
    p1, q1 = (s1.p, s1.q) if isinstance(s1, Horocycle) else s1
    p2, q2 = (s2.p, s2.q) if isinstance(s2, Horocycle) else s2
    return int(p1) * int(q2) - int(p2) * int(q1)


def intersection_area_bound(s1: Horocycle, s2: Horocycle, lattice: CuspLattice | None = None,
                            eps: float | None = None) -> ClaimReport:
    """Check |Delta(s1, s2)| area <= l(s1) l(s2) on the flat cusp torus.

    Both sides agree up to the factor |sin| of the angle between the two
    geodesics, so equality means the slopes are orthogonal.
    """
    eps = _eps(eps)
    lattice = lattice or s1.lattice
    s1 = Horocycle(s1.p, s1.q, lattice, s1.height)
    s2 = Horocycle(s2.p, s2.q, lattice, s2.height)
    delta = intersection_number(s1, s2)
    area = lattice.area / (s1.height * s2.height)
    lhs = abs(delta) * area
    rhs = s1.length * s2.length
    v1, v2 = s1.translation, s2.translation
    cos = 0.0 if rhs == 0 else (v1.conjugate() * v2).real / (abs(v1) * abs(v2))
    tol = eps * max(1.0, rhs)
    return ClaimReport(
        "delta-area-bound",
        computed={"delta": float(delta), "area": area, "lhs": lhs, "rhs": rhs,
                  "slack": rhs - lhs, "cos_angle": cos,
                  "equality": abs(rhs - lhs) <= tol},
        tolerance=eps,
        verdict="pass" if lhs <= rhs + tol else "fail")


# ------------------------------------------------------- straddle geometry


def straddle_min_height(a: float) -> float:
    """Least |Im w| for w outside every disk |w - k a/2| < 1 and
    |w - (k a/2 + a/4)| < a/4.

    sqrt(1 - 4/a^2) for a >= 2 sqrt 2 (where a unit disk meets a small one),
    sqrt(1 - (a/4)^2) for a <= 2 sqrt 2 (midway between two unit disks).
    """
    if not 0 < a <= 4:
        raise ValueError("a must lie in (0, 4]")
    if a >= 2 * math.sqrt(2):
        return math.sqrt(1 - 4 / a ** 2)
    return math.sqrt(1 - (a / 4) ** 2)


def _straddle_disks(a: float) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(-3, 4)
    centers = np.concatenate([k * a / 2, k * a / 2 + a / 4])
    radii = np.concatenate([np.ones(k.size), np.full(k.size, a / 4)])
    return centers, radii


def straddle_envelope(x, a: float):
    """Height of the union of the disks above the real point x."""
    centers, radii = _straddle_disks(a)
    x = np.asarray(x, dtype=float)[..., None]
    h2 = radii ** 2 - (x - centers) ** 2
    return np.sqrt(np.clip(h2, 0, None)).max(axis=-1)


def straddle_min_height_numeric(a: float, samples: int = 4001) -> float:
    """Minimize the disk envelope over one period [0, a/2] numerically."""
    if not 0 < a <= 4:
        raise ValueError("a must lie in (0, 4]")
    xs = np.linspace(0.0, a / 2, samples)
    ys = straddle_envelope(xs, a)
    i = int(np.argmin(ys))
    step = xs[1] - xs[0]
    lo, hi = max(0.0, xs[i] - step), min(a / 2, xs[i] + step)
    res = minimize_scalar(lambda x: float(straddle_envelope(x, a)),
                          bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-13})
    return min(float(res.fun), float(ys[i]))


# ------------------------------------------------------------ seen area


def seen_area_slack(t: float, linear: float = 2 * math.pi) -> float:
    """(pi - 1) t^2 - linear t + 3 pi / 2, with t = sqrt(ab)."""
    return (math.pi - 1) * t * t - linear * t + 1.5 * math.pi


def seen_area_difference(ab: float) -> float:
    """Seen area pi/2 + 4 pi (sqrt(ab)/2 - 1/2)^2 minus the area bound ab."""
    return math.pi / 2 + 4 * math.pi * (math.sqrt(ab) / 2 - 0.5) ** 2 - ab


def seen_area_inequality(linear: float = 2 * math.pi, grid_max: float = 10.0,
                         samples: int = 100001) -> ClaimReport:
    """Show the seen-area quadratic has no positive root by completing the square.

    Passes when the minimum over t > 0 is strictly positive; the closed form
    is compared against a grid minimum on (0, grid_max].
    """
    quad, const = math.pi - 1, 1.5 * math.pi
    t_star = linear / (2 * quad)
    if t_star > 0:
        minimum = const - linear ** 2 / (4 * quad)
    else:
        t_star, minimum = 0.0, const
    ts = np.linspace(grid_max / samples, grid_max, samples)
    values = quad * ts ** 2 - linear * ts + const
    j = int(np.argmin(values))
    return ClaimReport(
        "seen-area-quadratic",
        computed={"minimum": minimum, "argmin": t_star,
                  "discriminant": linear ** 2 - 4 * quad * const,
                  "grid_minimum": float(values[j]), "grid_argmin": float(ts[j]),
                  "slack_at_2": seen_area_slack(2.0, linear)},
        tolerance=1e-9,
        verdict="pass" if minimum > 0 and values[j] > 0 else "fail")


# ---------------------------------------------------------------- parity


def parity_check(c1, c2, c3) -> ClaimReport:
    """Pairwise intersections of three boundary slopes and their parity.

    When c1 + c2 + c3 = 0 in homology, bilinearity makes the sum of the three
    intersection numbers equal Delta(c1, c2).  An odd total is reported as an
    obstruction, since the endpoints of double-point arcs come in pairs.
    """
    d12 = intersection_number(c1, c2)
    d13 = intersection_number(c1, c3)
    d23 = intersection_number(c2, c3)
    total = d12 + d13 + d23
    vecs = [(s.p, s.q) if isinstance(s, Horocycle) else tuple(s) for s in (c1, c2, c3)]
    trivial = all(sum(v[i] for v in vecs) == 0 for i in (0, 1))
    identity = total == d12 if trivial else True
    return ClaimReport(
        "parity-obstruction",
        computed={"delta_12": d12, "delta_13": d13, "delta_23": d23, "total": total,
                  "even": total % 2 == 0, "boundary_trivial": trivial,
                  "identity_holds": identity, "obstruction": total % 2 == 1},
        tolerance=0.0,
        verdict="pass" if identity else "fail")
