"""Independent reference computations used by the tests.

Nothing here calls into the code paths it is used to check.
"""

import itertools
import math

import mpmath
import numpy as np


def lobachevsky_clausen(theta):
    """Lambda(theta) = Cl_2(2 theta) / 2 via mpmath's Clausen function."""
    return float(mpmath.clsin(2, 2 * mpmath.mpf(theta)) / 2)


def lobachevsky_quad(theta):
    """-int_0^theta log|2 sin t| dt by mpmath quadrature."""
    theta = mpmath.mpf(theta)
    return float(-mpmath.quad(lambda t: mpmath.log(abs(2 * mpmath.sin(t))), [0, theta]))


def tet_volume_mp(x):
    x = mpmath.mpc(x)
    args = [mpmath.arg(x), mpmath.arg(1 / (1 - x)), mpmath.arg(1 - 1 / x)]
    return float(sum(mpmath.clsin(2, 2 * t) / 2 for t in args))


def act_on_point(m, z, t):
    """Moebius action on the upper half-space point (z, t), m a 2x2 complex array."""
    (a, b), (c, d) = m
    den = abs(c * z + d) ** 2 + abs(c) ** 2 * t * t
    w = ((a * z + b) * np.conj(c * z + d) + a * np.conj(c) * t * t) / den
    return w, t / den


def horosphere_points(center, size, n=8):
    """Points on the boundary of a horoball (center None for infinity)."""
    out = []
    for k in range(n):
        ang = 2 * math.pi * k / n
        if center is None:
            out.append((complex(math.cos(ang), math.sin(ang)) * (k + 1), size))
        else:
            # sphere of diameter ``size`` resting on the boundary at ``center``
            r = size / 2
            phi = math.pi * (k + 0.5) / n
            out.append((center + r * math.sin(phi) * complex(math.cos(3 * ang), math.sin(3 * ang)),
                        r - r * math.cos(phi)))
    return out


def fit_horosphere(points):
    """Recover (center, diameter) of a horosphere through points, or (None, height)."""
    ts = [t for _, t in points]
    if max(ts) - min(ts) < 1e-9 * max(ts):
        return None, ts[0]
    # |w - c|^2 + t^2 - D t = 0 is linear in (Re c, Im c, |c|^2, D)
    A, rhs = [], []
    for w, t in points:
        A.append([-2 * w.real, -2 * w.imag, 1.0, -t])
        rhs.append(-(abs(w) ** 2 + t * t))
    sol, *_ = np.linalg.lstsq(np.array(A), np.array(rhs), rcond=None)
    return complex(sol[0], sol[1]), sol[3]


def brute_force_orbit(generators, t1, t2, cutoff, max_len):
    """Every word of length <= max_len in the generators and their inverses,
    unreduced; images of the height-1 ball at infinity with diameter >= cutoff,
    centers reduced mod the lattice, deduplicated by tolerance."""
    letters = []
    for m in generators:
        m = np.array(m, dtype=complex)
        inv = np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])
        letters += [m, inv]
    found = []
    level = [np.eye(2, dtype=complex)]
    for _ in range(max_len):
        nxt = []
        for w in level:
            for m in letters:
                nxt.append(w @ m)
        level = nxt
        for w in level:
            c = w[1, 0]
            if abs(c) < 1e-9:
                continue
            diameter = 1 / abs(c) ** 2
            if diameter < cutoff * (1 - 1e-9):
                continue
            z = w[0, 0] / c
            det = (np.conj(t1) * t2).imag
            s = (np.conj(z) * t2).imag / det
            t = (np.conj(t1) * z).imag / det
            s, t = s % 1.0, t % 1.0
            s = 0.0 if s > 1 - 1e-9 else s
            t = 0.0 if t > 1 - 1e-9 else t
            found.append((s * t1 + t * t2, diameter))
    unique = []
    for z, d in found:
        if not any(abs(z - u) < 1e-7 and abs(d - e) < 1e-7 for u, e in unique):
            unique.append((z, d))
    return sorted(unique, key=lambda p: (-p[1], p[0].real, p[0].imag))


def brute_force_min_c(generators, max_len):
    """min |c| over all unreduced words of length 1..max_len with c != 0."""
    letters = []
    for m in generators:
        m = np.array(m, dtype=complex)
        letters += [m, np.linalg.inv(m)]
    best = math.inf
    for n in range(1, max_len + 1):
        for word in itertools.product(letters, repeat=n):
            w = np.linalg.multi_dot(word) if n > 1 else word[0]
            c = abs(w[1, 0])
            if c > 1e-9:
                best = min(best, c)
    return best


def envelope_min_bruteforce(a, samples=200001):
    """Least height of the union of the straddle disks, by dense sampling."""
    xs = np.linspace(0, a / 2, samples)
    best = np.zeros_like(xs)
    for k in range(-3, 4):
        for c, r in ((k * a / 2, 1.0), (k * a / 2 + a / 4, a / 4)):
            best = np.maximum(best, np.sqrt(np.clip(r * r - (xs - c) ** 2, 0, None)))
    return float(best.min())
