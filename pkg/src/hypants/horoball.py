"""Horoballs in the upper half-space model and their orbits under a group.

A horoball centered at a finite point is stored with its Euclidean diameter;
the horoball at infinity is stored with the height of its boundary plane.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .moebius import (
    INF,
    ComplexValue,
    MoebiusTransform,
    PointLike,
    _eps,
    as_point,
    classify,
    compose,
    conjugate,
    fixed_points,
    mat,
)


@dataclass(frozen=True)
class Horoball:
    center: ComplexValue
    size: float

    def __post_init__(self):
        if not self.size > 0:
            raise ValueError("horoball size must be positive")

    @classmethod
    def at(cls, z: PointLike, diameter: float) -> "Horoball":
        return cls(as_point(z), float(diameter))

    @classmethod
    def at_infinity(cls, height: float = 1.0) -> "Horoball":
        return cls(INF, float(height))

    @property
    def infinite(self) -> bool:
        return self.center.infinite

    def gap(self, other: "Horoball") -> float:
        """Signed separation: positive when disjoint, zero when tangent.

        Two finite balls compare |c - c'| with sqrt(d d'); a finite ball and
        the ball at infinity compare the height with the diameter.
        """
        if self.infinite and other.infinite:
            return -math.inf
        if self.infinite or other.infinite:
            fin, top = (other, self) if self.infinite else (self, other)
            return top.size - fin.size
        return abs(self.center.z - other.center.z) - math.sqrt(self.size * other.size)

    def disjoint(self, other: "Horoball", eps: float | None = None) -> bool:
        """Disjoint or tangent."""
        return self.gap(other) >= -_eps(eps) * max(1.0, self.scale, other.scale)

    def tangent(self, other: "Horoball", eps: float | None = None) -> bool:
        return abs(self.gap(other)) <= _eps(eps) * max(1.0, self.scale, other.scale)

    @property
    def scale(self) -> float:
        if self.infinite:
            return self.size
        return max(self.size, abs(self.center.z))

    def isclose(self, other: "Horoball", eps: float | None = None) -> bool:
        eps = _eps(eps)
        return (self.center.isclose(other.center, eps)
                and abs(self.size - other.size) <= eps * max(1.0, self.size, other.size))

    def to_json(self) -> dict:
        return {"center": self.center.to_json(), "size": self.size}


def apply_to_horoball(f: MoebiusTransform, B: Horoball, eps: float | None = None) -> Horoball:
    """Image of a horoball under f = [[a, b], [c, d]].

    A finite ball at p with diameter D goes to a ball at f(p) with diameter
    D / |c p + d|^2, or to the ball at infinity of height 1 / (D |c|^2) when
    f(p) = inf.  The ball at infinity of height h goes to the ball at a / c
    with diameter 1 / (|c|^2 h), or stays at infinity with height h |a|^2.
    """
    eps = _eps(eps)
    a, b, c, d = f.entries
    tol = eps * max(1.0, f.norm)
    if B.infinite:
        if abs(c) <= tol:
            return Horoball(INF, B.size * abs(a) ** 2)
        return Horoball(ComplexValue.finite(a / c), 1.0 / (abs(c) ** 2 * B.size))
    p = B.center.z
    den = c * p + d
    if abs(den) <= tol * max(1.0, abs(p)):
        return Horoball(INF, 1.0 / (B.size * abs(c) ** 2))
    return Horoball(ComplexValue.finite((a * p + b) / den), B.size / abs(den) ** 2)


@dataclass(frozen=True)
class CuspLattice:
    """Translation lattice of the parabolic stabilizer of infinity."""

    t1: complex
    t2: complex

    def __post_init__(self):
        object.__setattr__(self, "t1", complex(self.t1))
        object.__setattr__(self, "t2", complex(self.t2))
        if self.area <= 1e-14 * max(1.0, abs(self.t1), abs(self.t2)) ** 2:
            raise ValueError("lattice vectors are linearly dependent")

    @property
    def area(self) -> float:
        return abs((self.t1.conjugate() * self.t2).imag)

    @property
    def diameter(self) -> float:
        return max(abs(self.t1 + self.t2), abs(self.t1 - self.t2))

    def coords(self, z: complex) -> tuple[float, float]:
        """Real coordinates (s, t) with z = s t1 + t t2."""
        det = (self.t1.conjugate() * self.t2).imag
        s = (z.conjugate() * self.t2).imag / det
        t = (self.t1.conjugate() * z).imag / det
        return s, t

    def point(self, s: float, t: float) -> complex:
        return s * self.t1 + t * self.t2

    def reduce_coords(self, z: complex, eps: float | None = None) -> tuple[float, float]:
        """Coordinates of z mod the lattice, in [0, 1) x [0, 1)."""
        eps = _eps(eps)
        out = []
        for x in self.coords(z):
            x -= math.floor(x)
            if x >= 1 - eps * max(1.0, self.diameter):
                x = 0.0
            out.append(x)
        return out[0], out[1]

    def reduce(self, z: complex, eps: float | None = None) -> complex:
        return self.point(*self.reduce_coords(z, eps))

    def to_json(self) -> dict:
        return {"t1": [self.t1.real, self.t1.imag], "t2": [self.t2.real, self.t2.imag]}

    @classmethod
    def from_json(cls, data) -> "CuspLattice":
        return cls(complex(*data["t1"]), complex(*data["t2"]))


@dataclass(frozen=True)
class Horocycle:
    """Closed horocycle on the cusp torus with slope p t1 + q t2, at cusp height h."""

    p: int
    q: int
    lattice: CuspLattice
    height: float = 1.0

    @property
    def translation(self) -> complex:
        return self.lattice.point(self.p, self.q)

    @property
    def length(self) -> float:
        return horocycle_length(self.translation, self.height)

    @property
    def primitive(self) -> bool:
        return math.gcd(self.p, self.q) == 1


def horocycle_length(translation: complex, h: float) -> float:
    """Length |translation| / h of a horocycle at height h; 0 for a trivial translation."""
    if not h > 0:
        raise ValueError("height must be positive")
    return abs(translation) / h


def horocycle_length_at(parabolic: MoebiusTransform, ball: Horoball,
                        eps: float | None = None) -> float:
    """Length of the horocycle on ``ball`` closed up by ``parabolic``.

    Conjugates the fixed point of ``parabolic`` to infinity and reads off the
    translation length over the height of the image ball.
    """
    (p,) = fixed_points(parabolic, eps)
    if not p.isclose(ball.center, eps):
        raise ValueError("the parabolic does not fix the center of the ball")
    g = MoebiusTransform.identity() if p.infinite else mat(0, -1, 1, -p.z)
    top = apply_to_horoball(g, ball, eps)
    t = conjugate(g, parabolic)
    return horocycle_length(t.b, top.size)


# ----------------------------------------------------------------- orbits


@dataclass(frozen=True)
class GroupGenerators:
    """Named generators, a lattice for the cusp at infinity, and the names of
    generators that stabilize infinity.  Discreteness is assumed."""

    generators: tuple[tuple[str, MoebiusTransform], ...]
    lattice: CuspLattice
    stabilizer: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        names = [n for n, _ in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        for name in self.stabilizer:
            m = dict(self.generators)[name]
            if _moves_infinity(m, _eps(None)) or classify(m).tag != "parabolic":
                raise ValueError(f"{name} does not stabilize infinity as a parabolic")

    def letters(self) -> list[tuple[str, MoebiusTransform, str]]:
        """(name, matrix, inverse name) for each generator and inverse."""
        out = []
        for name, m in self.generators:
            inv = m.inverse()
            if inv.isclose(m):
                out.append((name, m, name))
            else:
                out.append((name, m, name + "^-1"))
                out.append((name + "^-1", inv, name))
        return out

    def to_json(self) -> dict:
        return {"generators": [{"name": n, **m.to_json()} for n, m in self.generators],
                "lattice": self.lattice.to_json(),
                "stabilizer": list(self.stabilizer)}

    @classmethod
    def from_json(cls, data) -> "GroupGenerators":
        gens = tuple((g["name"], MoebiusTransform.from_json(g)) for g in data["generators"])
        stab = data.get("stabilizer")
        if stab is None:
            stab = [n for n, m in gens if abs(m.c) <= 1e-12 * max(1.0, m.norm)
                    and not m.is_identity()]
        return cls(gens, CuspLattice.from_json(data["lattice"]), tuple(stab))


def rigid_group() -> GroupGenerators:
    """The rigid pants group <C1, C2> with lattice 2, 2i.

    Its stabilizer of infinity has rank one; the second vector only fixes a
    fundamental parallelogram for reducing centers.
    """
    from .pantsrep import RIGID_C1, RIGID_C2

    return GroupGenerators((("C1", RIGID_C1), ("C2", RIGID_C2)), CuspLattice(2, 2j), ("C1",))


def _element_key(m: MoebiusTransform) -> tuple:
    keys = []
    for sign in (1, -1):
        keys.append(tuple((round(sign * x.real, 7), round(sign * x.imag, 7)) for x in m.entries))
    return min(keys)


def _moves_infinity(m: MoebiusTransform, eps: float) -> bool:
    return abs(m.c) > eps * max(1.0, m.norm)


def _image_diameter(m: MoebiusTransform, height: float, eps: float) -> float:
    # diameter of m(H_inf); infinite for the stabilizer
    if not _moves_infinity(m, eps):
        return math.inf
    return 1.0 / (abs(m.c) ** 2 * height)


@dataclass(frozen=True)
class _Node:
    word: tuple[str, ...]
    element: MoebiusTransform
    last_inverse: str | None


def _children(node: _Node, letters) -> list[_Node]:
    out = []
    for name, m, inv_name in letters:
        if node.word and name == node.last_inverse:
            continue
        out.append(_Node(node.word + (name,), compose(node.element, m), inv_name))
    return out


def _bfs(G: GroupGenerators, max_word_len: int, keep, workers: int = 1):
    """Breadth-first search over reduced words.

    ``keep(node, children)`` decides whether ``node`` gets expanded.  Yields
    each new group element once, in a deterministic order.
    """
    letters = G.letters()
    root = _Node((), MoebiusTransform.identity(), None)
    seen = {_element_key(root.element)}
    frontier = [root]
    yield root
    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    try:
        for _ in range(max_word_len):
            if not frontier:
                break
            expand = (lambda n: _children(n, letters))
            batches = list(pool.map(expand, frontier)) if pool else [expand(n) for n in frontier]
            next_frontier = []
            for node, kids in zip(frontier, batches):
                if not keep(node, kids):
                    continue
                for kid in kids:
                    key = _element_key(kid.element)
                    if key in seen:
                        continue
                    seen.add(key)
                    next_frontier.append(kid)
                    yield kid
            frontier = next_frontier
    finally:
        if pool:
            pool.shutdown()


def ball_sort_key(B: Horoball):
    if B.infinite:
        return (0, -B.size, 0.0, 0.0)
    return (1, -B.size, B.center.re, B.center.im)


def _dedup(balls: list[Horoball], tol: float) -> list[Horoball]:
    buckets: dict[tuple[int, int, int], list[Horoball]] = {}
    out = []
    for B in balls:
        z = B.center.z
        key = (round(z.real / tol), round(z.imag / tol), round(B.size / tol))
        duplicate = False
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for dd in (-1, 0, 1):
                    for other in buckets.get((key[0] + dx, key[1] + dy, key[2] + dd), ()):
                        if (abs(other.center.z - z) <= tol and abs(other.size - B.size) <= tol):
                            duplicate = True
        if not duplicate:
            buckets.setdefault(key, []).append(B)
            out.append(B)
    return out


def orbit_enumerate(G: GroupGenerators, cutoff: float, max_word_len: int = 16,
                    eps: float | None = None, workers: int = 1,
                    height: float = 1.0) -> list[Horoball]:
    """Images of the ball at infinity (boundary height ``height``) with
    diameter >= ``cutoff``, centers reduced into the fundamental parallelogram.

    Words are explored breadth first.  A word is not extended once its own ball
    and all of its one-letter extensions are below the cutoff; the search
    stops at ``max_word_len`` letters regardless.  Output is sorted by
    (diameter descending, real part, imaginary part) with the ball at
    infinity first.
    """
    if not cutoff > 0:
        raise ValueError("cutoff must be positive")
    eps = _eps(eps)
    threshold = cutoff * (1 - eps)

    def big(node):
        return _image_diameter(node.element, height, eps) >= threshold

    def keep(node, kids):
        return big(node) or any(big(k) for k in kids)

    balls = [Horoball.at_infinity(height)]
    for node in _bfs(G, max_word_len, keep, workers):
        m = node.element
        diameter = _image_diameter(m, height, eps)
        if math.isinf(diameter) or diameter < threshold:
            continue
        center = G.lattice.reduce(m.a / m.c, eps)
        balls.append(Horoball(ComplexValue.finite(center), diameter))
    tol = eps * max(1.0, G.lattice.diameter)
    unique = [balls[0]] + _dedup(sorted(balls[1:], key=ball_sort_key), tol)
    return sorted(unique, key=ball_sort_key)


@dataclass(frozen=True)
class CuspHeight:
    height: float
    word: tuple[str, ...]
    element: MoebiusTransform = field(repr=False)


def maximal_cusp_height(G: GroupGenerators, max_word_len: int = 6,
                        eps: float | None = None) -> CuspHeight:
    """Height 1 / min|c| at which the ball at infinity first touches an image.

    At boundary height h the largest image has diameter 1 / (|c|^2 h), which
    equals h exactly when h = 1 / |c|.  The minimum runs over elements given
    by reduced words of at most ``max_word_len`` letters.
    """
    eps = _eps(eps)
    if not any(_moves_infinity(m, eps) for _, m in G.generators):
        raise ValueError("every generator fixes infinity")
    best = None
    for node in _bfs(G, max_word_len, lambda node, kids: True):
        m = node.element
        if not _moves_infinity(m, eps):
            continue
        c = abs(m.c)
        if best is None or c < best[0] * (1 - eps):
            best = (c, node)
    c, node = best
    return CuspHeight(1.0 / c, node.word, node.element)


def word_element(G: GroupGenerators, word: Sequence[str]) -> MoebiusTransform:
    table = {name: m for name, m, _ in G.letters()}
    out = MoebiusTransform.identity()
    for letter in word:
        out = compose(out, table[letter])
    return out
