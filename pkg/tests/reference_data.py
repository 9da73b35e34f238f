"""Golden reference values for the bundled bus dataset.

Every number below was transcribed or hand-computed once and frozen.
Tests compare live pipeline output against these constants; nothing in
this module is derived at runtime.

Score tables use the rounded evaluation mode: the 2-decimal (WM, WSD)
pairs are fed to the aggregations and results are rounded to 3 decimals
(half away from zero) before dense ranking.

Known defects in the transcribed tables, kept here on purpose so tests
can pin them down:
  - the column labelled eps=0.4 was actually produced at eps=3/7
    (theta=0.3); the eps=2.3 columns were produced at eps=7/3
    (theta=0.7); see R_EPS_LABEL notes below,
  - the R table's b07 cell under eps=7/3 reads 0.932, which matches a
    run at eps=13/7 (theta=0.65), not 7/3; the corrected value and the
    corrected position column are frozen separately.
"""

IDS = ("b03", "b07", "b14", "b15", "b16", "b18", "b22", "b24", "b25", "b26")

CRITERIA = (
    ("Speed", "gain", 60.0, 90.0),
    ("Pressure", "gain", 1.0, 2.0),
    ("Blacking", "cost", 26.0, 95.0),
    ("Torque", "gain", 400.0, 486.0),
    ("Summer", "cost", 20.0, 27.0),
    ("Winter", "cost", 23.0, 33.0),
    ("Oil", "cost", 0.0, 4.0),
    ("Horsepower", "gain", 96.0, 148.0),
)

RAW = {
    "b03": (72, 2, 73, 425, 23, 27, 2, 112),
    "b07": (90, 2, 26, 482, 22, 24, 0, 148),
    "b14": (75, 2, 64, 432, 22, 25, 1, 114),
    "b15": (68, 2, 70, 400, 22, 26, 2, 100),
    "b16": (88, 2, 44, 478, 21, 25, 0, 138),
    "b18": (90, 2, 40, 480, 22, 25, 0, 139),
    "b22": (68, 2, 88, 422, 22, 25, 3, 108),
    "b24": (90, 2, 38, 482, 20, 24, 0, 146),
    "b25": (90, 2, 45, 479, 21, 25, 1, 145),
    "b26": (90, 2, 34, 486, 21, 25, 0, 148),
}

# Utilities printed at 2 decimals.  The b07 row is internally
# inconsistent with the printed WSD: recomputing WSD from this row gives
# 0.0951 which rounds to 0.10, while the printed WSD column says 0.09
# (the WMSD columns were produced from full-precision utilities).
UTILITY_2DP = {
    "b03": (0.40, 1.00, 0.32, 0.29, 0.57, 0.60, 0.50, 0.31),
    "b07": (1.00, 1.00, 1.00, 0.95, 0.71, 0.90, 1.00, 1.00),
    "b14": (0.50, 1.00, 0.45, 0.37, 0.71, 0.80, 0.75, 0.35),
    "b15": (0.27, 1.00, 0.36, 0.00, 0.71, 0.70, 0.50, 0.08),
    "b16": (0.93, 1.00, 0.74, 0.91, 0.86, 0.80, 1.00, 0.81),
    "b18": (1.00, 1.00, 0.80, 0.93, 0.71, 0.80, 1.00, 0.83),
    "b22": (0.27, 1.00, 0.10, 0.26, 0.71, 0.80, 0.25, 0.23),
    "b24": (1.00, 1.00, 0.83, 0.95, 1.00, 0.90, 1.00, 0.96),
    "b25": (1.00, 1.00, 0.72, 0.92, 0.86, 0.80, 0.75, 0.94),
    "b26": (1.00, 1.00, 0.88, 1.00, 0.86, 0.80, 1.00, 1.00),
}

WMSD_2DP = {
    "b03": (0.50, 0.22),
    "b07": (0.95, 0.09),
    "b14": (0.62, 0.22),
    "b15": (0.45, 0.32),
    "b16": (0.88, 0.09),
    "b18": (0.88, 0.11),
    "b22": (0.45, 0.31),
    "b24": (0.96, 0.06),
    "b25": (0.87, 0.10),
    "b26": (0.94, 0.08),
}

# Score tables: id -> (3-decimal value, dense position), one dict per
# column.  Column keys name the epsilon actually used for that column,
# not the label it was printed under.

R_TABLE = {
    "eps1": {
        "b03": (0.500, 8), "b07": (0.903, 3), "b14": (0.600, 7),
        "b15": (0.465, 9), "b16": (0.855, 4), "b18": (0.845, 5),
        "b22": (0.464, 10), "b24": (0.930, 1), "b25": (0.842, 6),
        "b26": (0.904, 2),
    },
    "eps08": {
        "b03": (0.500, 7), "b07": (0.886, 3), "b14": (0.591, 6),
        "b15": (0.470, 8), "b16": (0.844, 4), "b18": (0.830, 5),
        "b22": (0.469, 9), "b24": (0.919, 1), "b25": (0.830, 5),
        "b26": (0.890, 2),
    },
    # printed under the label 0.4; reproduces only at eps = 3/7
    "eps3_7": {
        "b03": (0.500, 8), "b07": (0.818, 3), "b14": (0.558, 7),
        "b15": (0.485, 9), "b16": (0.789, 4), "b18": (0.764, 6),
        "b22": (0.484, 10), "b24": (0.870, 1), "b25": (0.771, 5),
        "b26": (0.830, 2),
    },
    # printed under the label 2.3; reproduces at eps = 7/3 except the
    # b07 cell (see R_EPS7_3_B07 below)
    "eps7_3": {
        "b03": (0.500, 7), "b07": (0.932, 2), "b14": (0.616, 6),
        "b15": (0.454, 8), "b16": (0.875, 3), "b18": (0.872, 4),
        "b22": (0.453, 9), "b24": (0.953, 1), "b25": (0.864, 5),
        "b26": (0.932, 2),
    },
    "M": {
        "b03": (0.500, 7), "b07": (0.950, 2), "b14": (0.620, 6),
        "b15": (0.450, 8), "b16": (0.880, 4), "b18": (0.880, 4),
        "b22": (0.450, 8), "b24": (0.960, 1), "b25": (0.870, 5),
        "b26": (0.940, 3),
    },
}

# The b07 cell of the eps=7/3 column: printed 0.932 matches a run at
# eps = 13/7 (theta = 0.65) to within 2.5e-4; the true eps=7/3 value is
# 0.9377, which breaks the printed b07/b26 tie and shifts every dense
# position below it.
R_EPS7_3_B07_PRINTED = 0.932
R_EPS7_3_B07_CORRECT = 0.937719
R_EPS7_3_B07_PASTE_EPSILON = 13.0 / 7.0
R_EPS7_3_CORRECTED_POSITIONS = {
    "b03": 8, "b07": 2, "b14": 7, "b15": 9, "b16": 4,
    "b18": 5, "b22": 10, "b24": 1, "b25": 6, "b26": 3,
}

I_TABLE = {
    "eps1": {
        "b03": (0.454, 8), "b07": (0.897, 3), "b14": (0.561, 7),
        "b15": (0.364, 10), "b16": (0.850, 4), "b18": (0.837, 5),
        "b22": (0.369, 9), "b24": (0.928, 1), "b25": (0.836, 6),
        "b26": (0.900, 2),
    },
    "eps08": {
        "b03": (0.429, 8), "b07": (0.877, 3), "b14": (0.531, 7),
        "b15": (0.320, 10), "b16": (0.836, 4), "b18": (0.818, 6),
        "b22": (0.327, 9), "b24": (0.915, 1), "b25": (0.820, 5),
        "b26": (0.883, 2),
    },
    "eps3_7": {
        "b03": (0.283, 8), "b07": (0.784, 3), "b14": (0.361, 7),
        "b15": (0.073, 10), "b16": (0.758, 4), "b18": (0.717, 6),
        "b22": (0.091, 9), "b24": (0.854, 1), "b25": (0.733, 5),
        "b26": (0.804, 2),
    },
    "eps7_3": {
        "b03": (0.491, 8), "b07": (0.937, 2), "b14": (0.608, 7),
        "b15": (0.433, 10), "b16": (0.874, 4), "b18": (0.871, 5),
        "b22": (0.434, 9), "b24": (0.952, 1), "b25": (0.863, 6),
        "b26": (0.931, 3),
    },
    "M": {
        "b03": (0.500, 7), "b07": (0.950, 2), "b14": (0.620, 6),
        "b15": (0.450, 8), "b16": (0.880, 4), "b18": (0.880, 4),
        "b22": (0.450, 8), "b24": (0.960, 1), "b25": (0.870, 5),
        "b26": (0.940, 3),
    },
}

A_TABLE = {
    "eps1": {
        "b03": (0.546, 9), "b07": (0.954, 2), "b14": (0.658, 7),
        "b15": (0.552, 8), "b16": (0.885, 5), "b18": (0.887, 4),
        "b22": (0.546, 9), "b24": (0.962, 1), "b25": (0.876, 6),
        "b26": (0.943, 3),
    },
    "eps08": {
        "b03": (0.571, 10), "b07": (0.957, 2), "b14": (0.678, 7),
        "b15": (0.602, 8), "b16": (0.887, 5), "b18": (0.891, 4),
        "b22": (0.594, 9), "b24": (0.963, 1), "b25": (0.879, 6),
        "b26": (0.945, 3),
    },
    "eps3_7": {
        "b03": (0.717, 10), "b07": (0.973, 1), "b14": (0.805, 9),
        "b15": (0.872, 7), "b16": (0.905, 5), "b18": (0.917, 4),
        "b22": (0.852, 8), "b24": (0.970, 2), "b25": (0.901, 6),
        "b26": (0.958, 3),
    },
    "eps7_3": {
        "b03": (0.509, 7), "b07": (0.951, 2), "b14": (0.627, 6),
        "b15": (0.470, 8), "b16": (0.881, 4), "b18": (0.881, 4),
        "b22": (0.469, 9), "b24": (0.960, 1), "b25": (0.871, 5),
        "b26": (0.941, 3),
    },
    "M": {
        "b03": (0.500, 7), "b07": (0.950, 2), "b14": (0.620, 6),
        "b15": (0.450, 8), "b16": (0.880, 4), "b18": (0.880, 4),
        "b22": (0.450, 8), "b24": (0.960, 1), "b25": (0.870, 5),
        "b26": (0.940, 3),
    },
}

# Lexicographic variants on the 2-decimal (WM, WSD) pairs:
# id -> ((first, second), dense position).
LEX_TABLE = {
    "IL": {
        "b03": ((0.50, -0.22), 8), "b07": ((0.95, -0.09), 2),
        "b14": ((0.62, -0.22), 7), "b15": ((0.45, -0.32), 10),
        "b16": ((0.88, -0.09), 4), "b18": ((0.88, -0.11), 5),
        "b22": ((0.45, -0.31), 9), "b24": ((0.96, -0.06), 1),
        "b25": ((0.87, -0.10), 6), "b26": ((0.94, -0.08), 3),
    },
    "AL": {
        "b03": ((0.50, 0.22), 8), "b07": ((0.95, 0.09), 2),
        "b14": ((0.62, 0.22), 7), "b15": ((0.45, 0.32), 9),
        "b16": ((0.88, 0.09), 5), "b18": ((0.88, 0.11), 4),
        "b22": ((0.45, 0.31), 10), "b24": ((0.96, 0.06), 1),
        "b25": ((0.87, 0.10), 6), "b26": ((0.94, 0.08), 3),
    },
    # b03 sits exactly on WM = mean(w)/2, so its second component is 0
    "RL": {
        "b03": ((0.50, 0.00), 8), "b07": ((0.95, -0.09), 2),
        "b14": ((0.62, -0.22), 7), "b15": ((0.45, 0.32), 9),
        "b16": ((0.88, -0.09), 4), "b18": ((0.88, -0.11), 5),
        "b22": ((0.45, 0.31), 10), "b24": ((0.96, -0.06), 1),
        "b25": ((0.87, -0.10), 6), "b26": ((0.94, -0.08), 3),
    },
}

# Lower operational epsilon limit E for I/A over selected weight
# vectors, printed at 3-4 significant decimals.
EPSILON_LIMITS = (
    ((1.0, 0.5), 0.6667),
    ((1.0,) * 8, 0.683),
    ((1.0, 0.6, 0.5), 0.6767),
)

# Extremes reported by the min/max property check at eps = 0.3333 over
# weights [1.0, 0.6, 0.5] (a violating setting): the I field bottoms out
# at the left apex vertex, the A field peaks at the right apex vertex.
PROPERTY_CASE = {
    "weights": (1.0, 0.6, 0.5),
    "epsilon": 0.3333,
    "i_min": -0.58,
    "i_min_at": (0.27, 0.35),
    "a_max": 1.58,
    "a_max_at": (0.43, 0.35),
    "value_tol": 0.02,
    "location_tol": 0.03,
    "satisfied_epsilon": 0.70,
}

# Vertices of the attainable (WM, WSD) region for weights [1.0, 0.5],
# exact rationals: (0, 0), (0.15, 0.3), (0.6, 0.3), (0.75, 0).
VERTEX_CASE = {
    "weights": (1.0, 0.5),
    "vertices": ((0.0, 0.0), (0.15, 0.3), (0.6, 0.3), (0.75, 0.0)),
}
