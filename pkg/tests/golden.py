"""Worked-example values, transcribed from the printed tables.

Matrices are stored as (scale, integer rows) exactly as printed, so a
transcription slip is easy to spot against the source.
"""

from fractions import Fraction as F

from foresthit.numerics import RationalMatrix


def scaled(scale, rows):
    return RationalMatrix(rows) * F(scale)


# Example 1: four-state chain
EX1_T = [
    [0, 1, 0, 0],
    [0, F(4, 5), F(1, 5), 0],
    [F(2, 5), 0, F(1, 5), F(2, 5)],
    [0, 0, F(1, 4), F(3, 4)],
]
EX1_L = [
    [1, -1, 0, 0],
    [0, F(1, 5), F(-1, 5), 0],
    [F(-2, 5), 0, F(4, 5), F(-2, 5)],
    [0, 0, F(-1, 4), F(1, 4)],
]
EX1_SIGMA = (F(1), F(9, 4), F(39, 25), F(1, 4))
EX1_Q1 = scaled(F(1, 20), [[25, 20, 0, 0], [0, 41, 4, 0], [8, 0, 29, 8], [0, 0, 5, 40]])
EX1_Q2 = scaled(F(1, 100), [[31, 105, 20, 0], [8, 115, 25, 8], [18, 40, 50, 48], [10, 0, 30, 116]])
EX1_Q3 = scaled(F(1, 100), [[2, 10, 5, 8]] * 4)
EX1_q = tuple(F(x, 100) for x in (2, 10, 5, 8))
EX1_PI = tuple(F(x, 25) for x in (2, 10, 5, 8))
EX1_F = scaled(F(1, 100), [[0, 10, 30, 116], [23, 0, 25, 108], [13, 75, 0, 68], [21, 115, 20, 0]])
EX1_M_CLASSIC = scaled(
    F(1, 2), [[25, 2, 12, 29], [23, 5, 10, 27], [13, 15, 10, 17], [21, 23, 8, F(25, 4)]]
)
EX1_M = scaled(F(1, 2), [[0, 2, 12, 29], [23, 0, 10, 27], [13, 15, 0, 17], [21, 23, 8, 0]])
EX1_LSHARP = scaled(
    F(1, 625),
    [
        [463, 1065, -280, -1248],
        [-112, 1315, -155, -1048],
        [138, -560, 470, -48],
        [-62, -1560, -30, 1652],
    ],
)
# As printed. Entries (1,4), (2,4) and their mirrors read 49 although the
# printed M gives 29/2 + 21/2 = 25 = 50/2 there.
EX1_C_PRINTED = scaled(F(1, 2), [[0, 25, 25, 49], [25, 0, 25, 49], [25, 25, 0, 25], [49, 49, 25, 0]])
EX1_C_FROM_M = scaled(F(1, 2), [[0, 25, 25, 50], [25, 0, 25, 50], [25, 25, 0, 25], [50, 50, 25, 0]])
EX1_KEMENY = F(181, 25)

# Example 2: simple random walk on a 6-vertex graph
EX2_EDGES = [(1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)]
EX2_T = [
    [0, 1, 0, 0, 0, 0],
    [F(1, 2), 0, F(1, 2), 0, 0, 0],
    [0, F(1, 3), 0, F(1, 3), F(1, 3), 0],
    [0, 0, F(1, 2), 0, F(1, 2), 0],
    [0, 0, F(1, 3), F(1, 3), 0, F(1, 3)],
    [0, 0, 0, 0, 1, 0],
]
EX2_q = tuple(F(x, 12) for x in (1, 2, 3, 2, 3, 1))
EX2_F = scaled(
    F(1, 36),
    [
        [0, 6, 36, 56, 78, 59],
        [33, 0, 27, 50, 69, 56],
        [60, 54, 0, 32, 42, 47],
        [68, 70, 24, 0, 30, 43],
        [70, 74, 30, 28, 0, 33],
        [73, 80, 39, 34, 9, 0],
    ],
)
EX2_SIGMA4 = F(235, 36)
EX2_KEMENY = F(271, 36)
EX2_M_CLASSIC = scaled(
    F(1, 3),
    [
        [36, 3, 12, 28, 26, 59],
        [33, 18, 9, 25, 23, 56],
        [60, 27, 12, 16, 14, 47],
        [68, 35, 8, 18, 10, 43],
        [70, 37, 10, 14, 12, 33],
        [73, 40, 13, 17, 3, 36],
    ],
)
EX2_M = scaled(
    F(1, 3),
    [
        [0, 3, 12, 28, 26, 59],
        [33, 0, 9, 25, 23, 56],
        [60, 27, 0, 16, 14, 47],
        [68, 35, 8, 0, 10, 43],
        [70, 37, 10, 14, 0, 33],
        [73, 40, 13, 17, 3, 0],
    ],
)
EX2_U = tuple(F(x, 3) for x in (48, 18, 0, 8, 4, 34))
EX2_C = RationalMatrix(
    [
        [0, 12, 24, 32, 32, 44],
        [12, 0, 12, 20, 20, 32],
        [24, 12, 0, 8, 8, 20],
        [32, 20, 8, 0, 8, 20],
        [32, 20, 8, 8, 0, 12],
        [44, 32, 20, 20, 12, 0],
    ]
)
EX2_OMEGA = EX2_C * F(1, 12)
EX2_P = scaled(
    F(1, 3),
    [
        [48, 51, 60, 76, 74, 107],
        [51, 18, 27, 43, 41, 74],
        [60, 27, 0, 16, 14, 47],
        [76, 43, 16, 8, 18, 51],
        [74, 41, 14, 18, 4, 37],
        [107, 74, 47, 51, 37, 34],
    ],
)
EX2_U_STRONG = tuple(F(x, 3) for x in (73, 43, 25, 33, 29, 59))
EX2_CPRIME = scaled(
    F(1, 3),
    [
        [0, 73, 43, 25, 33, 29, 59],
        [73, 0, 36, 72, 96, 96, 132],
        [43, 36, 0, 36, 60, 60, 96],
        [25, 72, 36, 0, 24, 24, 60],
        [33, 96, 60, 24, 0, 24, 60],
        [29, 96, 60, 24, 24, 0, 36],
        [59, 132, 96, 60, 60, 36, 0],
    ],
)
