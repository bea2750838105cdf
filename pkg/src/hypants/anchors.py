"""Short statement of the quantitative step each claim checks."""

ANCHORS = {
    "trace-2-plus-2z": "tr(C1 C2) = 2 + 2z = ±2 forces z in {0, -2}",
    "rigid-normal-form": "irreducible peripheral-parabolic pair is conjugate to "
                         "C1 = [[1,2],[0,1]], C2 = [[1,0],[-2,1]]",
    "q-relations": "C1 Q^2 = Q^2 C2 and [Q^-1 C1 Q, C1 C2] = 1",
    "q-boundary-values": "Q(0) = 1 and Q(1) = inf give Q = [[1/a - a, a], [-a, a]]",
    "volume-whitehead": "Vol(Whitehead link complement) = 3.66...",
    "index-volume": "a proper-index quotient has volume < 1.84 < 2.0298",
    "cusp-area-constant": "maximal cusp torus area >= 3.35",
    "horocycle-length-bound": "horocycle length in a maximal cusp >= 1",
    "tangent-product-4": "equal tangent horocycles have length 2, product 4",
    "length-product-bound": "l(h_i) l(h_j) <= 4",
    "delta-area-bound": "|Delta(h_i, h_j)| Area(cusp torus) <= l(h_i) l(h_j)",
    "parity-obstruction": "sum of the three pairwise intersection numbers is even",
    "b-range": "1 <= b <= 2 and a <= 4",
    "straddle-branches": "min height sqrt(1 - 4/a^2) for a >= 2 sqrt 2, "
                         "sqrt(1 - (a/4)^2) for a <= 2 sqrt 2",
    "special-config-2sqrt2": "a = 2 sqrt 2, b = sqrt 2, w = sqrt2/2 + sqrt2/2 i",
    "figure-eight-case": "a = 4, b = 1: figure-eight knot complement",
    "b2-case": "b = 2 forces a = 2",
    "seen-area-quadratic": "pi/2 + 4 pi (sqrt(ab)/2 - 1/2)^2 <= ab has no positive solution",
}
