"""Golden vertex lists for the five canonical solids, entered by hand.

These are independent of the orbit generator: tests compare the generated
orbits against them as sets.
"""

from math import sqrt

import numpy as np

S2, S3, S6 = sqrt(2), sqrt(3), sqrt(6)

TETRAHEDRON = np.array(
    [
        (1, 0, 0),
        (-1 / 3, -S2 / 3, sqrt(2 / 3)),
        (-1 / 3, 2 * S2 / 3, 0),
        (-1 / 3, -S2 / 3, -sqrt(2 / 3)),
    ]
)

OCTAHEDRON = np.array(
    [
        (-1 / S3, 1 / S6, 1 / S2),
        (1 / S3, -1 / S6, -1 / S2),
        (1 / S3, sqrt(2 / 3), 0),
        (-1 / S3, -sqrt(2 / 3), 0),
        (-1 / S3, 1 / S6, -1 / S2),
        (1 / S3, -1 / S6, 1 / S2),
    ]
)

CUBE = np.vstack([TETRAHEDRON, -TETRAHEDRON])

CUBOCTAHEDRON = np.array(
    [
        (-sqrt(2 / 3), 1 / S3, 0),
        (0, S3 / 2, 1 / 2),
        (0, 0, 1),
        (-sqrt(2 / 3), -1 / (2 * S3), 1 / 2),
        (sqrt(2 / 3), -1 / S3, 0),
        (0, -S3 / 2, -1 / 2),
        (0, 0, -1),
        (sqrt(2 / 3), 1 / (2 * S3), -1 / 2),
        (0, -S3 / 2, 1 / 2),
        (0, S3 / 2, -1 / 2),
        (sqrt(2 / 3), 1 / (2 * S3), 1 / 2),
        (-sqrt(2 / 3), -1 / (2 * S3), -1 / 2),
    ]
)

_A, _B, _C = sqrt(3 / 5), sqrt(3 / 10), 1 / sqrt(10)
_D, _E = sqrt(2 / 5), 1 / sqrt(15)
_F, _G = 2 * sqrt(2 / 15), sqrt(5 / 6)
_H, _K = 1 / sqrt(30), 3 / sqrt(10)

TRUNCATED_OCTAHEDRON = np.array(
    [
        (_A, 0, _D), (_A, _B, _C), (_A, 0, -_D), (_A, _B, -_C),
        (_A, -_B, _C), (_A, -_B, -_C),
        (-_A, 0, _D), (-_A, _B, _C), (-_A, 0, -_D), (-_A, _B, -_C),
        (-_A, -_B, _C), (-_A, -_B, -_C),
        (-_E, _F, -_D), (_E, _G, -_C), (-_E, _F, _D), (_E, _G, _C),
        (_E, -_F, _D), (-_E, -_G, _C), (_E, -_F, -_D), (-_E, -_G, -_C),
        (-_E, _H, _K), (_E, -_H, _K), (_E, -_H, -_K), (-_E, _H, -_K),
    ]
)

GOLDEN = {
    "tetrahedron": TETRAHEDRON,
    "octahedron": OCTAHEDRON,
    "cube": CUBE,
    "cuboctahedron": CUBOCTAHEDRON,
    "truncated_octahedron": TRUNCATED_OCTAHEDRON,
}

# Worked saturating classical vectors for tetrahedron (Alice) vs
# octahedron (Bob); their inner product equals the classical bound.
ALICE_V = np.array([2 / 3, -4 * S2 / 3, 0.0])
BOB_W = np.array([2 / S3, -4 * sqrt(2 / 3), 0.0])
