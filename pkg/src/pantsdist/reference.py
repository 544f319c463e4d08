"""Published low-complexity values used as regression targets.

``DMAX_TABLE[(g, n)]`` is the published maximal distance to the separating
locus; ``SIMPLE_CUBIC_GIRTH_COUNTS[v]`` lists connected simple cubic graph
counts on ``v`` vertices with girth >= 3, 4, 5, 6.
"""

_ROWS = {
    # n: values for g = 0 .. 8 (None where the surface has no separating curves)
    8: (0, 2, 2, 3, 4, 4, 4, 5, 5),
    7: (0, 2, 2, 3, 4, 4, 4, 5, 6),
    6: (1, 2, 3, 4, 4, 4, 5, 5, 6),
    5: (None, 2, 2, 4, 4, 4, 5, 5, 6),
    4: (None, 2, 2, 4, 4, 4, 5, 5, 6),
    3: (None, 2, 2, 3, 4, 4, 4, 5, 5),
    2: (None, None, 1, 3, 3, 3, 4, 5, 5),
    1: (None, None, 1, 2, 3, 3, 4, 4, 5),
    0: (None, None, 1, 2, 3, 3, 4, 4, 5),
}

DMAX_TABLE = {(g, n): v for n, row in _ROWS.items() for g, v in enumerate(row) if v is not None}

SIMPLE_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}

SIMPLE_CUBIC_GIRTH_COUNTS = {
    4: (1, 0, 0, 0),
    6: (2, 1, 0, 0),
    8: (5, 2, 0, 0),
    10: (19, 6, 1, 0),
    12: (85, 22, 2, 0),
    14: (509, 110, 9, 1),
}
