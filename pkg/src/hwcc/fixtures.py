"""Published E6/E7 data, transcribed verbatim.

Row layout for the data tables is ``(i, tau, dim, av, possible)`` where
``tau`` and ``possible`` are index sets, ``dim`` is the dimension of the
Schubert variety (the length of ``w_i``) and ``av`` is ``j`` for an
associated variety equal to the closure of ``O_j``.

Words are the suffixes that follow the long element of ``W_c``.  The
``T``-tables map ``(alpha, beta)`` index pairs to ``{w: T(w)}``.

Each structure records the source table in ``PROVENANCE``.
"""

from __future__ import annotations

FIXTURE_VERSION = 1

PROVENANCE = {
    "SCRIPT_W_WORDS[E6]": "E6 parameter words, rows 1-27 as printed",
    "SCRIPT_W_WORDS[E7]": "E7 parameter words, rows 1-56 as printed",
    "DATA[E6]": "E6 data rows: tau, dim, AV, possible CC, rows 1-27 as printed",
    "DATA[E7]": "E7 data rows: tau, dim, AV, possible CC, rows 1-56 as printed",
    "T_TABLES[E6]": "E6 T_ab images, 5 columns x 6 rows as printed",
    "T_TABLES[E7]": "E7 T_ab images, 6 columns x 12 rows as printed",
}

_E6_PREFIX = [1, 3, 4, 5, 6, 2, 4, 5, 3, 4]
_E7_PREFIX = [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3]

SCRIPT_W_WORDS: dict[str, list[tuple[int, ...]]] = {
    "E6": [
        tuple(w)
        for w in [
            [],
            [1],
            [1, 3],
            [1, 3, 4],
            [1, 3, 4, 2],
            [1, 3, 4, 5],
            [1, 3, 4, 5, 2],
            [1, 3, 4, 5, 6],
            [1, 3, 4, 5, 2, 4],
            [1, 3, 4, 5, 6, 2],
            [1, 3, 4, 5, 2, 4, 3],
            [1, 3, 4, 5, 6, 2, 4],
            [1, 3, 4, 5, 2, 4, 3, 1],
            [1, 3, 4, 5, 6, 2, 4, 3],
            [1, 3, 4, 5, 6, 2, 4, 5],
            [1, 3, 4, 5, 6, 2, 4, 3, 1],
            [1, 3, 4, 5, 6, 2, 4, 5, 3],
            [1, 3, 4, 5, 6, 2, 4, 5, 3, 1],
            _E6_PREFIX,
            _E6_PREFIX + [1],
            _E6_PREFIX + [2],
            _E6_PREFIX + [2, 1],
            _E6_PREFIX + [1, 3],
            _E6_PREFIX + [2, 1, 3],
            _E6_PREFIX + [2, 1, 3, 4],
            _E6_PREFIX + [2, 1, 3, 4, 5],
            _E6_PREFIX + [2, 1, 3, 4, 5, 6],
        ]
    ],
    "E7": [
        tuple(w)
        for w in [
            [],
            [7],
            [7, 6],
            [7, 6, 5],
            [7, 6, 5, 4],
            [7, 6, 5, 4, 2],
            [7, 6, 5, 4, 3],
            [7, 6, 5, 4, 2, 3],
            [7, 6, 5, 4, 3, 1],
            [7, 6, 5, 4, 2, 3, 1],
            [7, 6, 5, 4, 2, 3, 4],
            [7, 6, 5, 4, 2, 3, 1, 4],
            [7, 6, 5, 4, 2, 3, 4, 5],
            [7, 6, 5, 4, 2, 3, 1, 4, 3],
            [7, 6, 5, 4, 2, 3, 1, 4, 5],
            [7, 6, 5, 4, 2, 3, 4, 5, 6],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5],
            [7, 6, 5, 4, 2, 3, 1, 4, 5, 6],
            [7, 6, 5, 4, 2, 3, 4, 5, 6, 7],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 6],
            [7, 6, 5, 4, 2, 3, 1, 4, 5, 6, 7],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 6, 7],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 5],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 7],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 7],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 5, 7],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 7],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 5, 7, 6],
            _E7_PREFIX,
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 7],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 7, 6],
            _E7_PREFIX + [1],
            _E7_PREFIX + [7],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 7, 6],
            _E7_PREFIX + [1, 7],
            _E7_PREFIX + [7, 6],
            [7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 7, 6, 5],
            _E7_PREFIX + [1, 7, 6],
            _E7_PREFIX + [7, 6, 5],
            _E7_PREFIX + [1, 7, 6, 5],
            _E7_PREFIX + [7, 6, 5, 4],
            _E7_PREFIX + [1, 7, 6, 5, 4],
            _E7_PREFIX + [7, 6, 5, 4, 2],
            _E7_PREFIX + [1, 7, 6, 5, 4, 2],
            _E7_PREFIX + [1, 7, 6, 5, 4, 3],
            _E7_PREFIX + [1, 7, 6, 5, 4, 2, 3],
            _E7_PREFIX + [1, 7, 6, 5, 4, 2, 3, 4],
            _E7_PREFIX + [1, 7, 6, 5, 4, 2, 3, 4, 5],
            _E7_PREFIX + [1, 7, 6, 5, 4, 2, 3, 4, 5, 6],
            _E7_PREFIX + [1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7],
        ]
    ],
}


def _rows(raw):
    return [(i, frozenset(t), d, av, frozenset(p)) for i, t, d, av, p in raw]


DATA = {
    "E6": _rows(
        [
            (1, {2, 3, 4, 5, 6}, 20, 2, {1}),
            (2, {1, 2, 4, 5, 6}, 21, 2, {2}),
            (3, {1, 2, 3, 5, 6}, 22, 2, {3}),
            (4, {1, 3, 4, 6}, 23, 2, {4}),
            (5, {1, 2, 3, 4, 6}, 24, 2, {5}),
            (6, {1, 3, 4, 5}, 24, 2, {6}),
            (7, {1, 2, 3, 5}, 25, 2, {3, 7}),
            (8, {1, 3, 4, 5, 6}, 25, 2, {8}),
            (9, {1, 2, 4, 5}, 26, 2, {2, 9}),
            (10, {1, 2, 3, 5, 6}, 26, 2, {3, 10}),
            (11, {2, 3, 4, 5}, 27, 2, {1, 11}),
            (12, {1, 2, 4, 6}, 27, 2, {2, 5, 12}),
            (13, {1, 2, 3, 4, 5}, 28, 2, {13}),
            (14, {2, 3, 4, 6}, 28, 2, {1, 5, 14}),
            (15, {1, 2, 4, 5, 6}, 28, 2, {2, 15}),
            (16, {1, 2, 3, 4, 6}, 29, 2, {5, 16}),
            (17, {2, 3, 5, 6}, 29, 2, {1, 3, 10, 17}),
            (18, {1, 2, 3, 5, 6}, 30, 2, {3, 10, 18}),
            (19, {3, 4, 5, 6}, 30, 2, {1, 8, 19}),
            (20, {1, 4, 5, 6}, 31, 2, {2, 8, 15, 20}),
            (21, {2, 3, 4, 5, 6}, 31, 1, {1, 21}),
            (22, {1, 2, 4, 5, 6}, 32, 1, {22}),
            (23, {1, 3, 4, 5, 6}, 32, 1, {23}),
            (24, {1, 2, 3, 5, 6}, 33, 1, {24}),
            (25, {1, 2, 3, 4, 6}, 34, 1, {25}),
            (26, {1, 2, 3, 4, 5}, 35, 1, {26}),
            (27, {1, 2, 3, 4, 5, 6}, 36, 0, {27}),
        ]
    ),
    "E7": _rows(
        [
            (1, {1, 2, 3, 4, 5, 6}, 36, 3, {1}),
            (2, {1, 2, 3, 4, 5, 7}, 37, 3, {2}),
            (3, {1, 2, 3, 4, 6, 7}, 38, 3, {3}),
            (4, {1, 2, 3, 5, 6, 7}, 39, 3, {4}),
            (5, {1, 4, 5, 6, 7}, 40, 3, {5}),
            (6, {1, 2, 4, 5, 6, 7}, 41, 3, {6}),
            (7, {3, 4, 5, 6, 7}, 41, 3, {7}),
            (8, {2, 3, 5, 6, 7}, 42, 3, {4, 8}),
            (9, {1, 3, 4, 5, 6, 7}, 42, 3, {9}),
            (10, {1, 2, 3, 5, 6, 7}, 43, 3, {4, 10}),
            (11, {2, 3, 4, 6, 7}, 43, 3, {3, 11}),
            (12, {1, 2, 4, 6, 7}, 44, 3, {3, 6, 12}),
            (13, {2, 3, 4, 5, 7}, 44, 3, {2, 13}),
            (14, {1, 2, 3, 4, 6, 7}, 45, 3, {3, 14}),
            (15, {1, 2, 4, 5, 7}, 45, 3, {2, 6, 15}),
            (16, {2, 3, 4, 5, 6}, 45, 3, {1, 16}),
            (17, {1, 2, 3, 5, 7}, 46, 3, {2, 4, 10, 17}),
            (18, {1, 2, 4, 5, 6}, 46, 3, {1, 6, 18}),
            (19, {2, 3, 4, 5, 6, 7}, 46, 2, {19}),
            (20, {1, 3, 4, 5, 7}, 47, 3, {2, 9, 20}),
            (21, {1, 2, 3, 5, 6}, 47, 3, {1, 4, 10, 21}),
            (22, {1, 2, 4, 5, 6, 7}, 47, 2, {22}),
            (23, {1, 2, 3, 4, 5, 7}, 48, 2, {23}),
            (24, {1, 3, 4, 6}, 48, 3, {1, 3, 9, 14, 24}),
            (25, {1, 2, 3, 5, 6, 7}, 48, 2, {25}),
            (26, {1, 2, 3, 4, 6}, 49, 2, {26}),
            (27, {1, 3, 4, 5, 6}, 49, 2, {27}),
            (28, {1, 3, 4, 6, 7}, 49, 2, {28}),
            (29, {1, 2, 3, 5, 6}, 50, 2, {25, 29}),
            (30, {1, 2, 3, 4, 6, 7}, 50, 2, {30}),
            (31, {1, 3, 4, 5, 7}, 50, 2, {23, 31}),
            (32, {1, 2, 4, 5, 6}, 51, 2, {22, 32}),
            (33, {1, 2, 3, 5, 7}, 51, 2, {23, 25, 33}),
            (34, {1, 3, 4, 5, 6, 7}, 51, 2, {34}),
            (35, {2, 3, 4, 5, 6}, 52, 2, {19, 35}),
            (36, {1, 2, 4, 5, 7}, 52, 2, {22, 23, 36}),
            (37, {1, 2, 3, 5, 6, 7}, 52, 2, {25, 37}),
            (38, {1, 2, 3, 4, 5, 6}, 53, 2, {38}),
            (39, {2, 3, 4, 5, 7}, 53, 2, {19, 23, 39}),
            (40, {1, 2, 4, 6, 7}, 53, 2, {22, 30, 40}),
            (41, {1, 2, 3, 4, 5, 7}, 54, 2, {23, 41}),
            (42, {2, 3, 4, 6, 7}, 54, 2, {19, 30, 42}),
            (43, {1, 2, 4, 5, 6, 7}, 54, 2, {22, 43}),
            (44, {1, 2, 3, 4, 6, 7}, 55, 2, {30, 44}),
            (45, {2, 3, 5, 6, 7}, 55, 2, {19, 25, 37, 45}),
            (46, {1, 2, 3, 5, 6, 7}, 56, 2, {25, 37, 46}),
            (47, {3, 4, 5, 6, 7}, 56, 2, {19, 34, 47}),
            (48, {1, 4, 5, 6, 7}, 57, 2, {22, 34, 43, 48}),
            (49, {2, 3, 4, 5, 6, 7}, 57, 1, {49}),
            (50, {1, 2, 4, 5, 6, 7}, 58, 1, {50}),
            (51, {1, 3, 4, 5, 6, 7}, 58, 1, {51}),
            (52, {1, 2, 3, 5, 6, 7}, 59, 1, {52}),
            (53, {1, 2, 3, 4, 6, 7}, 60, 1, {53}),
            (54, {1, 2, 3, 4, 5, 7}, 61, 1, {54}),
            (55, {1, 2, 3, 4, 5, 6}, 62, 1, {55}),
            (56, {1, 2, 3, 4, 5, 6, 7}, 63, 0, {56}),
        ]
    ),
}

# printed column order; dict order inside a column follows the printed rows
T_TABLES: dict[str, dict[tuple[int, int], dict[int, int]]] = {
    "E6": {
        (1, 3): {1: 2, 11: 9, 14: 12, 17: 15, 19: 20, 21: 22},
        (3, 4): {2: 3, 9: 7, 12: 10, 15: 17, 20: 18, 22: 24},
        (2, 4): {4: 3, 6: 7, 8: 10, 19: 17, 20: 18, 23: 24},
        (4, 5): {3: 4, 7: 5, 10: 12, 17: 14, 18: 16, 24: 25},
        (5, 6): {4: 6, 5: 7, 12: 9, 14: 11, 16: 13, 25: 26},
    },
    "E7": {
        (1, 3): {7: 4, 8: 8, 11: 10, 13: 17, 16: 21, 19: 25,
                 35: 29, 39: 33, 42: 37, 45: 45, 47: 46, 49: 52},
        (3, 4): {5: 4, 6: 8, 12: 10, 15: 17, 18: 21, 22: 25,
                 32: 29, 36: 33, 40: 37, 43: 45, 48: 46, 50: 52},
        (2, 4): {5: 4, 7: 8, 9: 10, 20: 17, 24: 21, 27: 29,
                 28: 25, 31: 33, 34: 37, 47: 45, 48: 46, 51: 52},
        (4, 5): {4: 3, 8: 11, 10: 12, 17: 14, 21: 24, 25: 28,
                 29: 26, 33: 30, 37: 40, 45: 42, 46: 44, 52: 53},
        (5, 6): {3: 2, 11: 13, 12: 15, 14: 17, 24: 20, 26: 23,
                 28: 31, 30: 33, 40: 36, 42: 39, 44: 41, 53: 54},
        (6, 7): {2: 1, 13: 16, 15: 18, 17: 21, 20: 24, 23: 26,
                 31: 27, 33: 29, 36: 32, 39: 35, 41: 38, 54: 55},
    },
}
