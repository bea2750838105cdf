"""Normal forms for representations of the pants group with parabolic boundary.

The pants group is free on c1, c2, with third boundary element c1 c2.  When
the images of all three are parabolic, the representation is either reducible
(both generators are translations after conjugation) or conjugate to the rigid
pair

    C1 = [[1, 2], [0, 1]],   C2 = [[1, 0], [-2, 1]].
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

from .moebius import (
    IDENTITY,
    MoebiusTransform,
    _eps,
    apply_boundary,
    classify,
    compose,
    conjugate,
    fixed_points,
    mat,
    sending_to,
)

RIGID_C1 = mat(1, 2, 0, 1)
RIGID_C2 = mat(1, 0, -2, 1)


@dataclass(frozen=True)
class PantsRepresentation:
    C1: MoebiusTransform
    C2: MoebiusTransform

    @property
    def C3(self) -> MoebiusTransform:
        return compose(self.C1, self.C2)

    def conjugated(self, g: MoebiusTransform) -> "PantsRepresentation":
        return PantsRepresentation(conjugate(g, self.C1), conjugate(g, self.C2))

    def to_json(self) -> dict:
        return {"C1": self.C1.to_json(), "C2": self.C2.to_json()}

    @classmethod
    def from_json(cls, data) -> "PantsRepresentation":
        return cls(MoebiusTransform.from_json(data["C1"]),
                   MoebiusTransform.from_json(data["C2"]))


def reducible_rep(z1: complex, z2: complex) -> PantsRepresentation:
    return PantsRepresentation(mat(1, z1, 0, 1), mat(1, z2, 0, 1))


def rigid_rep() -> PantsRepresentation:
    return PantsRepresentation(RIGID_C1, RIGID_C2)


@dataclass(frozen=True)
class PantsNormalForm:
    """Result of :func:`classify_pants_rep`.

    ``conjugator @ rep @ conjugator.inverse()`` is the normal form: translations
    by ``params`` when reducible, the rigid pair otherwise.  ``residual`` is the
    PSL distance between the conjugated input and that normal form.
    """

    kind: str  # reducible | rigid
    conjugator: MoebiusTransform
    params: tuple[complex, complex] | None = None
    degenerate: bool = False
    residual: float = 0.0
    normal_form: PantsRepresentation = field(default=None, repr=False)

    def to_json(self) -> dict:
        params = None
        if self.params is not None:
            params = [[z.real, z.imag] for z in self.params]
        return {"kind": self.kind, "conjugator": self.conjugator.to_json(),
                "params": params, "degenerate": self.degenerate,
                "residual": self.residual}


def _translation_length(t: MoebiusTransform) -> complex:
    # t fixes inf and is +-[[1, x], [0, 1]]; read x with the sign that makes the diagonal +1
    a, b, _, d = t.entries
    return b if (a + d).real >= 0 else -b


def _reducible(rep, fixed, eps, degenerate):
    if fixed.infinite:
        g = IDENTITY
    else:
        g = mat(0, -1, 1, -fixed.z)  # z -> -1/(z - p)
    normal = rep.conjugated(g)
    z1 = _translation_length(normal.C1)
    z2 = _translation_length(normal.C2)
    target = reducible_rep(z1, z2)
    residual = max(normal.C1.distance(target.C1), normal.C2.distance(target.C2))
    return PantsNormalForm("reducible", g, (z1, z2), degenerate, residual, target)


def classify_pants_rep(rep: PantsRepresentation, eps: float | None = None) -> PantsNormalForm:
    """Reduce a peripheral-parabolic pants representation to normal form.

    Raises ``ValueError`` when one of C1, C2, C1 C2 is elliptic or loxodromic.
    A trivial generator gives a degenerate reducible result instead of an error.
    """
    eps = _eps(eps)
    tags = {name: classify(m, eps).tag
            for name, m in (("C1", rep.C1), ("C2", rep.C2), ("C1*C2", rep.C3))}
    bad = [name for name, tag in tags.items() if tag not in ("parabolic", "identity")]
    if bad:
        raise ValueError(f"peripheral images not parabolic: {', '.join(bad)}")

    if tags["C1"] == "identity" and tags["C2"] == "identity":
        return PantsNormalForm("reducible", IDENTITY, (0j, 0j), True, 0.0,
                               reducible_rep(0, 0))
    if tags["C1"] == "identity" or tags["C2"] == "identity":
        moving = rep.C2 if tags["C1"] == "identity" else rep.C1
        return _reducible(rep, fixed_points(moving, eps)[0], eps, True)

    (p1,) = fixed_points(rep.C1, eps)
    (p2,) = fixed_points(rep.C2, eps)
    if p1.isclose(p2, eps):
        return _reducible(rep, p1, eps, tags["C1*C2"] == "identity")

    # send p1 -> inf and p2 -> 0, then rescale so that C1 translates by 2
    unit = apply_boundary(rep.C1, p2, eps)
    if unit.isclose(p1, eps) or unit.isclose(p2, eps):
        raise ValueError("degenerate fixed-point configuration")
    h = sending_to(p1, p2, unit)
    t = _translation_length(conjugate(h, rep.C1))
    s = cmath.sqrt(2 / t)
    g = compose(mat(s, 0, 0, 1 / s), h)
    normal = rep.conjugated(g)
    residual = max(normal.C1.distance(RIGID_C1), normal.C2.distance(RIGID_C2))
    scale = max(1.0, g.norm) ** 2 * max(1.0, rep.C1.norm, rep.C2.norm)
    if residual > 1e3 * eps * scale:
        raise ValueError(f"conjugated pair misses the rigid form by {residual:.3g}")
    return PantsNormalForm("rigid", g, None, False, residual, rigid_rep())


def trace_law(z: complex) -> complex:
    """tr(C1 [[1, 0], [z, 1]]) from the unnormalized SL(2) product."""
    (a1, b1), (c1, d1) = (1, 2), (0, 1)
    (a2, b2), (c2, d2) = (1, 0), (z, 1)
    return (a1 * a2 + b1 * c2) + (c1 * b2 + d1 * d2)


def parabolic_product_roots() -> tuple[complex, complex]:
    """The z for which C1 [[1, 0], [z, 1]] has trace +2 or -2 (trace is 2 + 2z)."""
    return tuple(complex((s - 2) / 2) for s in (2, -2))


def build_q(a: complex) -> MoebiusTransform:
    """[[1/a - a, a], [-a, a]], the element taking 0 -> 1 -> inf."""
    a = complex(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    return mat(1 / a - a, a, -a, a)


def extract_q_param(M: MoebiusTransform, eps: float | None = None) -> complex:
    """Recover a with M = Q(a), from M(0) = 1 and M(1) = inf.

    Q(a) and Q(-a) are the same element of PSL(2, C); the returned a is the
    representative with argument in (-pi/2, pi/2].
    """
    eps = _eps(eps)
    if not apply_boundary(M, 0, eps).isclose(1, eps) or not apply_boundary(M, 1, eps).infinite:
        raise ValueError("boundary condition failed: need M(0) = 1 and M(1) = inf")
    a = M.b
    if a.real < 0 or (a.real == 0 and a.imag < 0):
        a = -a
    return a
