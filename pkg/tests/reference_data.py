"""Frozen reference values.

Printed friezes: ``ROWS[r][t]`` is the entry ``m(1 + t, 1 + t + r)``; row 0 is the
quiddity row. Each block was checked cell by cell against its printed source
before being frozen here.
"""


# constant rows j - i + 2
BASIC_QUIDDITY = (2,)
BASIC_ROWS = {
    0: [2, 2, 2, 2, 2],
    1: [3, 3, 3, 3, 3],
    2: [4, 4, 4, 4, 4],
    3: [5, 5, 5, 5, 5],
    4: [6, 6, 6, 6, 6],
}

# a period-5 frieze not coming from any punctured-disc triangulation
PERIOD5_QUIDDITY = (1, 5, 4, 1, 3)
PERIOD5_ROWS = {
    0: [1, 5, 4, 1, 3, 1, 5, 4],
    1: [4, 19, 3, 2, 2, 4, 19, 3],
    2: [15, 14, 5, 1, 7, 15, 14, 5],
    3: [11, 23, 2, 3, 26, 11, 23, 2],
    4: [18, 9, 5, 11, 19, 18, 9, 5],
    5: [7, 22, 18, 8, 31, 7, 22, 18],
    6: [17, 79, 13, 13, 12, 17, 79, 13],
    7: [61, 57, 21, 5, 29, 61, 57, 21],
    8: [44, 92, 8, 12, 104, 44, 92, 8],
    9: [71, 35, 19, 43, 75, 71, 35, 19],
    10: [27, 83, 68, 31, 121, 27, 83, 68],
    11: [64, 297, 49, 50, 46, 64, 297, 49],
    12: [229, 214, 79, 19, 109, 229, 214, 79],
    13: [165, 345, 30, 45, 390, 165, 345, 30],
}

# the 5-arithmetic frieze of EXAMPLE_ARCS
ARITHMETIC5_QUIDDITY = (1, 4, 1, 2, 6)
ARITHMETIC5_ROWS = {
    0: [1, 4, 1, 2, 6, 1, 4, 1, 2, 6, 1],
    1: [3, 3, 1, 11, 5, 3, 3, 1, 11, 5, 3],
    2: [2, 2, 5, 9, 14, 2, 2, 5, 9, 14, 2],
    3: [1, 9, 4, 25, 9, 1, 9, 4, 25, 9, 1],
    4: [4, 7, 11, 16, 4, 4, 7, 11, 16, 4, 4],
    5: [3, 19, 7, 7, 15, 3, 19, 7, 7, 15, 3],
    6: [8, 12, 3, 26, 11, 8, 12, 3, 26, 11, 8],
    7: [5, 5, 11, 19, 29, 5, 5, 11, 19, 29, 5],
    8: [2, 18, 8, 50, 18, 2, 18, 8, 50, 18, 2],
    9: [7, 13, 21, 31, 7, 7, 13, 21, 31, 7, 7],
    10: [5, 34, 13, 12, 24, 5, 34, 13, 12, 24, 5],
    11: [13, 21, 5, 41, 17, 13, 21, 5, 41, 17, 13],
    12: [8, 8, 17, 29, 44, 8, 8, 17, 29, 44, 8],
    13: [3, 27, 12, 75, 27, 3, 27, 12, 75, 27, 3],
}

# basic frieze of period 3 glued above (a_2, a_3)
GLUED_BASIC_QUIDDITY = (2, 3, 1, 3)
GLUED_BASIC_ROWS = {
    0: [2, 3, 1, 3, 2, 3, 1, 3],
    1: [5, 2, 2, 5, 5, 2, 2, 5],
    2: [3, 3, 3, 12, 3, 3, 3, 12],
    3: [4, 4, 7, 7, 4, 4, 7, 7],
    4: [5, 9, 4, 9, 5, 9, 4, 9],
    5: [11, 5, 5, 11, 11, 5, 5, 11],
    6: [6, 6, 6, 24, 6, 6, 6, 24],
}

# matching numbers |M(i^(0) .. (i+s-1)^(0))| for the strip of SECOND_ARCS, keyed by i, s = 1..7
MATCHING_TABLE = {
    1: (4, 11, 29, 18, 7, 10, 23),
    2: (3, 8, 5, 2, 3, 7, 18),
    3: (3, 2, 1, 2, 5, 13, 8),
    4: (1, 1, 3, 8, 21, 13, 5),
    5: (2, 7, 19, 50, 31, 12, 17),
}

# triangulation of the 5-point disc with quiddity (1, 4, 1, 2, 6)
EXAMPLE_ARCS = (("bridging", 5), ("peripheral", 5, 2), ("peripheral", 2, 5), ("peripheral", 2, 4), ("peripheral", 5, 5))
EXAMPLE_QUIDDITY = (1, 4, 1, 2, 6)
# its lift, one period, written as (i, k) pairs; (0, k) is an upper vertex
EXAMPLE_STRIP_ARCS = (
    ((0, 0), (5, 0)),
    ((5, -1), (2, 0)),
    ((2, 0), (5, 0)),
    ((2, 0), (4, 0)),
    ((5, -1), (5, 0)),
)
# labels from 2^(0) on the lift of EXAMPLE_ARCS
EXAMPLE_LABELS_RIGHT = (0, 1, 1, 1, 5, 4, 11, 7, 3)
EXAMPLE_LABELS_LEFT = (0, 1, 1, 5, 9, 4, 7, 3)
EXAMPLE_UPPER_LABEL = 2
# two SE-diagonal progressions of ARITHMETIC5 sampled every 5 rows: (i, first j, values)
EXAMPLE_PROGRESSIONS = ((2, 2, (4, 19, 34), 15), (5, 3, (0, 9, 18, 27), 9))

# triangulation of the 5-point disc with quiddity (4, 3, 3, 1, 2)
SECOND_ARCS = (("bridging", 1), ("bridging", 2), ("peripheral", 2, 1), ("peripheral", 3, 5), ("peripheral", 3, 1))
SECOND_QUIDDITY = (4, 3, 3, 1, 2)
