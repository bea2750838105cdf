"""Boundary points of H^3 and Moebius transformations in PSL(2, C).

Transforms are stored as determinant-1 matrices with a canonical sign, so
PSL(2, C) equality reduces to comparing entries.  The point at infinity is a
value of its own (``INF``) and is never encoded as a large float.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from typing import Iterable, Union

DEFAULT_EPS = 1e-9


def default_eps() -> float:
    """The working tolerance; ``HYPANTS_EPS`` overrides the built-in 1e-9."""
    value = os.environ.get("HYPANTS_EPS")
    if value is None:
        return DEFAULT_EPS
    eps = float(value)
    if not eps > 0:
        raise ValueError(f"HYPANTS_EPS must be positive, got {value!r}")
    return eps


def _eps(eps: float | None) -> float:
    return default_eps() if eps is None else eps


def close(z: complex, w: complex, eps: float | None = None) -> bool:
    """Relative closeness of two complex numbers, scaled by max(1, |z|, |w|)."""
    eps = _eps(eps)
    return abs(z - w) <= eps * max(1.0, abs(z), abs(w))


@dataclass(frozen=True)
class ComplexValue:
    """A point of C u {inf}."""

    re: float = 0.0
    im: float = 0.0
    infinite: bool = False

    def __post_init__(self):
        if self.infinite:
            if self.re != 0.0 or self.im != 0.0:
                raise ValueError("infinity carries no coordinates")
        elif not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError("finite boundary point needs finite coordinates")

    @classmethod
    def finite(cls, z: complex) -> "ComplexValue":
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        if self.infinite:
            raise ValueError("the point at infinity has no complex coordinate")
        return complex(self.re, self.im)

    def isclose(self, other: "PointLike", eps: float | None = None) -> bool:
        other = as_point(other)
        if self.infinite or other.infinite:
            return self.infinite and other.infinite
        return close(self.z, other.z, eps)

    def to_json(self):
        if self.infinite:
            return {"inf": True}
        return [self.re, self.im]

    @classmethod
    def from_json(cls, data) -> "ComplexValue":
        if isinstance(data, dict):
            if data.get("inf"):
                return INF
            raise ValueError(f"bad boundary point {data!r}")
        re, im = data
        return cls(float(re), float(im))

    def __repr__(self):
        if self.infinite:
            return "ComplexValue(inf)"
        return f"ComplexValue({self.z!r})"


INF = ComplexValue(infinite=True)

PointLike = Union[ComplexValue, complex, float, int]


def as_point(z: PointLike) -> ComplexValue:
    if isinstance(z, ComplexValue):
        return z
    return ComplexValue.finite(z)


def _canonical_sign(entries: tuple[complex, ...], tiny: float) -> tuple[complex, ...]:
    # first entry (row-major) that is not negligible gets arg in (-pi/2, pi/2]
    for x in entries:
        if abs(x) > tiny:
            if x.real < 0 or (x.real == 0 and x.imag < 0):
                return tuple(-y for y in entries)
            return entries
    return entries


@dataclass(frozen=True, eq=False)
class MoebiusTransform:
    """z -> (a z + b) / (c z + d), normalized to det 1 with canonical sign.

    Build instances with :meth:`from_entries` (or :func:`mat`), which does the
    normalization; the raw constructor trusts its input.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    @classmethod
    def from_entries(cls, a, b, c, d) -> "MoebiusTransform":
        a, b, c, d = complex(a), complex(b), complex(c), complex(d)
        det = a * d - b * c
        scale = max(abs(a), abs(b), abs(c), abs(d))
        if scale == 0 or abs(det) <= 1e-14 * scale * scale:
            raise ValueError("singular matrix is not a Moebius transformation")
        r = cmath.sqrt(det)
        entries = (a / r, b / r, c / r, d / r)
        tiny = 1e-14 * max(abs(x) for x in entries)
        return cls(*_canonical_sign(entries, tiny))

    @classmethod
    def identity(cls) -> "MoebiusTransform":
        return cls(1 + 0j, 0j, 0j, 1 + 0j)

    @property
    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> complex:
        return self.a + self.d

    @property
    def norm(self) -> float:
        return max(abs(x) for x in self.entries)

    def __matmul__(self, other: "MoebiusTransform") -> "MoebiusTransform":
        return compose(self, other)

    def inverse(self) -> "MoebiusTransform":
        return MoebiusTransform.from_entries(self.d, -self.b, -self.c, self.a)

    def __call__(self, z: PointLike, eps: float | None = None) -> ComplexValue:
        return apply_boundary(self, z, eps)

    def distance(self, other: "MoebiusTransform") -> float:
        """Max-entry distance in PSL(2, C): the smaller of the two sign lifts."""
        plus = max(abs(x - y) for x, y in zip(self.entries, other.entries))
        minus = max(abs(x + y) for x, y in zip(self.entries, other.entries))
        return min(plus, minus)

    def isclose(self, other: "MoebiusTransform", eps: float | None = None) -> bool:
        eps = _eps(eps)
        scale = max(1.0, self.norm, other.norm)
        return self.distance(other) <= eps * scale

    def is_identity(self, eps: float | None = None) -> bool:
        return self.isclose(IDENTITY, eps)

    def to_json(self) -> dict:
        a, b, c, d = self.entries
        return {"m": [[[a.real, a.imag], [b.real, b.imag]],
                      [[c.real, c.imag], [d.real, d.imag]]]}

    @classmethod
    def from_json(cls, data) -> "MoebiusTransform":
        rows = data["m"] if isinstance(data, dict) else data
        (a, b), (c, d) = rows
        return cls.from_entries(*(_parse_complex(x) for x in (a, b, c, d)))

    def __repr__(self):
        return "Moebius[[{}, {}], [{}, {}]]".format(*(_fmt(x) for x in self.entries))


def _fmt(x: complex) -> str:
    if x.imag == 0:
        return f"{x.real:.6g}"
    return f"{x.real:.6g}{x.imag:+.6g}j"


def _parse_complex(x) -> complex:
    if isinstance(x, (list, tuple)):
        re, im = x
        return complex(float(re), float(im))
    return complex(x)


def mat(a, b, c, d) -> MoebiusTransform:
    """Shorthand for ``MoebiusTransform.from_entries``."""
    return MoebiusTransform.from_entries(a, b, c, d)


IDENTITY = MoebiusTransform.identity()


def compose(f: MoebiusTransform, g: MoebiusTransform) -> MoebiusTransform:
    """f o g as a renormalized matrix product."""
    a1, b1, c1, d1 = f.entries
    a2, b2, c2, d2 = g.entries
    return MoebiusTransform.from_entries(
        a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2, c1 * b2 + d1 * d2)


def product(transforms: Iterable[MoebiusTransform]) -> MoebiusTransform:
    result = IDENTITY
    for t in transforms:
        result = compose(result, t)
    return result


def conjugate(g: MoebiusTransform, f: MoebiusTransform) -> MoebiusTransform:
    """g f g^-1."""
    return compose(compose(g, f), g.inverse())


@dataclass(frozen=True)
class IsometryClass:
    tag: str  # identity | parabolic | elliptic | loxodromic
    trace: complex


def classify(f: MoebiusTransform, eps: float | None = None) -> IsometryClass:
    """Type of the isometry f by its trace; identity is tested first."""
    eps = _eps(eps)
    tr = f.trace
    if f.is_identity(eps):
        return IsometryClass("identity", tr)
    tol = eps * max(1.0, f.norm)
    if abs(tr - 2) <= tol or abs(tr + 2) <= tol:
        return IsometryClass("parabolic", tr)
    if abs(tr.imag) <= tol and abs(tr.real) < 2:
        return IsometryClass("elliptic", tr)
    return IsometryClass("loxodromic", tr)


def is_parabolic(f: MoebiusTransform, eps: float | None = None) -> bool:
    return classify(f, eps).tag == "parabolic"


def fixed_points(f: MoebiusTransform, eps: float | None = None) -> list[ComplexValue]:
    """Roots of c z^2 + (d - a) z - b = 0 on C u {inf}.

    Parabolic transforms return their single fixed point.
    """
    eps = _eps(eps)
    kind = classify(f, eps).tag
    if kind == "identity":
        raise ValueError("the identity fixes every point")
    a, b, c, d = f.entries
    tol = eps * max(1.0, f.norm)
    if abs(c) <= tol:
        if kind == "parabolic":
            return [INF]
        return [INF, ComplexValue.finite(b / (d - a))]
    if kind == "parabolic":
        return [ComplexValue.finite((a - d) / (2 * c))]
    root = cmath.sqrt(f.trace * f.trace - 4)
    return [ComplexValue.finite((a - d + root) / (2 * c)),
            ComplexValue.finite((a - d - root) / (2 * c))]


def apply_boundary(f: MoebiusTransform, z: PointLike, eps: float | None = None) -> ComplexValue:
    """Action of f on the sphere at infinity, with projective handling of inf."""
    eps = _eps(eps)
    z = as_point(z)
    a, b, c, d = f.entries
    if z.infinite:
        if abs(c) <= eps * max(1.0, f.norm):
            return INF
        return ComplexValue.finite(a / c)
    w = z.z
    num = a * w + b
    den = c * w + d
    if abs(den) <= eps * max(1.0, abs(num)):
        return INF
    return ComplexValue.finite(num / den)


def sending_to(p: PointLike, q: PointLike, r: PointLike) -> MoebiusTransform:
    """The Moebius map taking (p, q, r) to (inf, 0, 1)."""
    p, q, r = as_point(p), as_point(q), as_point(r)
    if p.infinite:
        # z -> (z - q) / (r - q)
        return mat(1, -q.z, 0, r.z - q.z)
    if q.infinite:
        # z -> (r - p) / (z - p)
        return mat(0, r.z - p.z, 1, -p.z)
    if r.infinite:
        # z -> (z - q) / (z - p)
        return mat(1, -q.z, 1, -p.z)
    k = (r.z - p.z) / (r.z - q.z)
    return mat(k, -k * q.z, 1, -p.z)
