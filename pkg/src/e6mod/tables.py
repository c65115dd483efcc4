"""Printed formulas of the 16-variable realization, entered verbatim as data.

Every entry here is an input to be cross-checked, never trusted: the operators
derived from the structure constants in `e6rep` are the reference."""
from __future__ import annotations

from fractions import Fraction

# Raising operators: o(10) element X_{a,b} -> list of (coeff, i, j) meaning coeff * x_i d/dx_j.
POSITIVE_OPERATORS = {
    (1, 2): [(1, 4, 7), (1, 6, 8), (1, 9, 10), (1, 11, 13)],
    (2, 3): [(1, 3, 4), (1, 5, 6), (1, 10, 12), (1, 13, 14)],
    (3, 4): [(-1, 2, 3), (-1, 6, 9), (-1, 8, 10), (1, 14, 15)],
    (4, 5): [(-1, 1, 2), (1, 9, 11), (1, 10, 13), (1, 12, 14)],
    (4, 10): [(-1, 3, 5), (-1, 4, 6), (-1, 7, 8), (1, 15, 16)],
    (1, 3): [(-1, 3, 7), (-1, 5, 8), (1, 9, 12), (1, 11, 14)],
    (2, 4): [(1, 2, 4), (-1, 5, 9), (1, 8, 12), (1, 13, 15)],
    (3, 5): [(-1, 1, 3), (-1, 6, 11), (-1, 8, 13), (-1, 12, 15)],
    (3, 10): [(1, 2, 5), (-1, 4, 9), (-1, 7, 10), (1, 14, 16)],
    (1, 4): [(-1, 2, 7), (1, 5, 10), (1, 6, 12), (1, 11, 15)],
    (2, 5): [(1, 1, 4), (-1, 5, 11), (1, 8, 14), (-1, 10, 15)],
    (2, 10): [(-1, 2, 6), (-1, 3, 9), (1, 7, 12), (1, 13, 16)],
    (3, 9): [(-1, 1, 5), (1, 4, 11), (1, 7, 13), (1, 12, 16)],
    (1, 5): [(-1, 1, 7), (1, 5, 13), (1, 6, 14), (-1, 9, 15)],
    (1, 10): [(1, 2, 8), (1, 3, 10), (1, 4, 12), (1, 11, 16)],
    (2, 9): [(1, 1, 6), (1, 3, 11), (-1, 7, 14), (1, 10, 16)],
    (1, 9): [(-1, 1, 8), (-1, 4, 14), (-1, 3, 13), (1, 9, 16)],
    (2, 8): [(1, 1, 9), (-1, 2, 11), (1, 7, 15), (-1, 8, 16)],
    (1, 8): [(-1, 1, 10), (1, 2, 13), (1, 4, 15), (-1, 6, 16)],
    (1, 7): [(1, 1, 12), (-1, 2, 14), (1, 3, 15), (-1, 5, 16)],
}

# Lowering operators printed explicitly for the simple roots (same encoding).
SIMPLE_LOWERING_OPERATORS = {
    (2, 1): [(1, 7, 4), (1, 8, 6), (1, 10, 9), (1, 13, 11)],
    (3, 2): [(1, 4, 3), (1, 6, 5), (1, 12, 10), (1, 14, 13)],
    (4, 3): [(-1, 3, 2), (-1, 9, 6), (-1, 10, 8), (1, 15, 14)],
    (5, 4): [(-1, 2, 1), (1, 11, 9), (1, 13, 10), (1, 14, 12)],
    (10, 4): [(-1, 5, 3), (-1, 6, 4), (-1, 8, 7), (1, 16, 15)],
}

# Diagonal shifts a_{r,i}: (E_rr - E_{5+r,5+r}) acts as sum_i (1/2 + a_{r,i}) x_i d/dx_i.
CARTAN_SHIFTS = (
    (0, 0, 0, 0, 0, 0, -1, -1, 0, -1, 0, -1, -1, -1, -1, -1),
    (0, 0, 0, -1, 0, -1, 0, 0, -1, 0, -1, -1, 0, -1, -1, -1),
    (0, 0, -1, 0, -1, 0, 0, 0, -1, -1, -1, 0, -1, 0, -1, -1),
    (0, -1, 0, 0, -1, -1, 0, -1, 0, 0, -1, 0, -1, -1, 0, -1),
    (-1, 0, 0, 0, -1, -1, 0, -1, -1, -1, 0, -1, 0, 0, 0, -1),
)

# Simple coroots alpha_r (r = 1..5) act as sum_i b_{r,i} x_i d/dx_i.
SIMPLE_COROOT_DIAGONALS = (
    (0, 0, 0, 1, 0, 1, -1, -1, 1, -1, 1, 0, -1, 0, 0, 0),
    (0, 0, 1, 1, -1, -1, 1, -1, 0, 0, 0, 0, 0, 0, 1, -1),
    (0, 0, 1, -1, 1, -1, 0, 0, 0, 1, 0, -1, 1, -1, 0, 0),
    (0, 1, -1, 0, 0, 1, 0, 1, -1, -1, 0, 0, 0, 1, -1, 0),
    (1, -1, 0, 0, 0, 0, 0, 0, 1, 1, -1, 1, -1, -1, 0, 0),
)

# alpha_6 acts diagonally with these eigenvalues on x_1..x_16.
ALPHA6_DIAGONAL = (-2, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, -1, 0, 0, 0, 0)

# The printed claim about the central element: it acts as this multiple of the degree operator.
ALPHA_HAT_DEGREE_MULTIPLE = 1

# Quadratics zeta_1..zeta_10: list of (coeff, i, j) meaning coeff * x_i x_j.
ZETAS = {
    1: [(1, 1, 11), (1, 2, 9), (-1, 3, 6), (1, 4, 5)],
    2: [(1, 1, 13), (1, 2, 10), (-1, 3, 8), (1, 5, 7)],
    3: [(1, 1, 14), (1, 2, 12), (-1, 4, 8), (1, 6, 7)],
    4: [(1, 1, 15), (-1, 3, 12), (1, 4, 10), (-1, 7, 9)],
    5: [(-1, 2, 15), (-1, 3, 14), (1, 4, 13), (-1, 7, 11)],
    10: [(1, 1, 16), (1, 5, 12), (-1, 6, 10), (1, 8, 9)],
    9: [(1, 2, 16), (-1, 5, 14), (1, 6, 13), (-1, 8, 11)],
    8: [(1, 3, 16), (1, 5, 15), (1, 9, 13), (-1, 10, 11)],
    7: [(-1, 4, 16), (-1, 6, 15), (-1, 9, 14), (1, 11, 12)],
    6: [(1, 7, 16), (1, 8, 15), (1, 10, 14), (-1, 12, 13)],
}

# Generation chain of the zetas: target <- sign * X_{a,b} applied to source.
# The pair (a, b) is the printed matrix name; some printed names are negatives of basis keys.
ZETA_CHAIN = (
    (2, (2, 1), 1),
    (3, (3, 2), 2),
    (4, (4, 3), 3),
    (5, (5, 4), 4),
    (10, (10, 4), 4),
    (9, (9, 5), 5),
    (8, (8, 9), 9),
    (7, (7, 8), 8),
    (6, (6, 7), 7),
)

# Negative operators P_i = x_i D + sum coeff * zeta_k d/dx_m, entries (coeff, k, m).
P_OPERATORS = {
    1: [(-1, 1, 11), (-1, 2, 13), (-1, 3, 14), (-1, 4, 15), (-1, 10, 16)],
    2: [(-1, 1, 9), (-1, 2, 10), (-1, 3, 12), (1, 5, 15), (-1, 9, 16)],
    3: [(1, 1, 6), (1, 2, 8), (1, 4, 12), (1, 5, 14), (-1, 8, 16)],
    4: [(-1, 1, 5), (1, 3, 8), (-1, 4, 10), (-1, 5, 13), (1, 7, 16)],
    5: [(-1, 1, 4), (-1, 2, 7), (-1, 10, 12), (1, 9, 14), (-1, 8, 15)],
    6: [(1, 1, 3), (-1, 3, 7), (1, 10, 10), (-1, 9, 13), (1, 7, 15)],
    7: [(-1, 2, 5), (-1, 3, 6), (1, 4, 9), (1, 5, 11), (-1, 6, 16)],
    8: [(1, 2, 3), (1, 3, 4), (-1, 10, 9), (1, 9, 11), (-1, 6, 15)],
    9: [(-1, 1, 2), (1, 4, 7), (-1, 10, 8), (-1, 8, 13), (1, 7, 14)],
    10: [(-1, 2, 2), (-1, 4, 4), (1, 10, 6), (1, 8, 11), (-1, 6, 14)],
    11: [(-1, 1, 1), (1, 5, 7), (1, 9, 8), (1, 8, 10), (-1, 7, 12)],
    12: [(-1, 3, 2), (1, 4, 3), (-1, 10, 5), (-1, 7, 11), (1, 6, 13)],
    13: [(-1, 2, 1), (-1, 5, 4), (-1, 9, 6), (-1, 8, 9), (1, 6, 12)],
    14: [(-1, 3, 1), (1, 5, 3), (1, 9, 5), (1, 7, 9), (-1, 6, 10)],
    15: [(-1, 4, 1), (1, 5, 2), (-1, 8, 5), (1, 7, 6), (-1, 6, 8)],
    16: [(-1, 10, 1), (-1, 9, 2), (-1, 8, 3), (1, 7, 4), (-1, 6, 7)],
}

# Bracket recipe for the P's: P_target = sign * [lowering operator X_{a,b}, P_source].
P_CHAIN = (
    (2, -1, (5, 4), 1),
    (3, -1, (4, 3), 2),
    (4, 1, (3, 2), 3),
    (5, -1, (10, 4), 3),
    (6, -1, (10, 4), 4),
    (7, 1, (2, 1), 4),
    (8, -1, (10, 4), 7),
    (9, -1, (4, 3), 6),
    (10, -1, (4, 3), 8),
    (11, 1, (5, 4), 9),
    (12, 1, (3, 2), 10),
    (13, 1, (2, 1), 11),
    (14, 1, (3, 2), 13),
    (15, 1, (4, 3), 14),
    (16, 1, (10, 4), 15),
)

# The recipe for P_5 names P_2 as the source although the displayed bracket acts on eta_3.
P5_PRINTED_SOURCE = 2

# o(10) elements attached to sums of two simple roots in the extension of nu:
# key -> (sign, root coefficients) meaning nu(X_key) = sign * E_root.
NU_EXTENSION = {
    (3, 5): (1, (0, 0, 0, 1, 1, 0)),
    (2, 5): (-1, (0, 0, 1, 1, 1, 0)),
    (1, 9): (1, (1, 1, 1, 1, 1, 0)),
    (3, 9): (1, (0, 1, 0, 1, 1, 0)),
    (2, 9): (-1, (0, 1, 1, 1, 1, 0)),
    (1, 5): (1, (1, 0, 1, 1, 1, 0)),
    (2, 8): (-1, (0, 1, 1, 2, 1, 0)),
    (1, 8): (1, (1, 1, 1, 2, 1, 0)),
    (1, 7): (-1, (1, 1, 2, 2, 1, 0)),
}

# Eight cubic identities used for the operator identity with zeta_1 (D - 6):
# sum of sign * x_a * zeta_b  ==  rhs_sign * zeta_1 * x_t, entries ([(sign, a, b), ...], rhs_sign, t).
CUBIC_IDENTITIES = {
    "x7": ([(1, 1, 5), (1, 2, 4), (1, 3, 3), (-1, 4, 2)], -1, 7),
    "x8": ([(1, 1, 9), (-1, 2, 10), (-1, 6, 2), (1, 5, 3)], -1, 8),
    "x10": ([(1, 1, 8), (-1, 9, 2), (-1, 3, 10), (1, 5, 4)], -1, 10),
    "x12": ([(1, 1, 7), (1, 9, 3), (1, 6, 4), (1, 4, 10)], 1, 12),
    "x13": ([(1, 11, 2), (1, 2, 8), (-1, 3, 9), (1, 5, 5)], 1, 13),
    "x14": ([(1, 11, 3), (-1, 2, 7), (1, 6, 5), (-1, 4, 9)], 1, 14),
    "x15": ([(1, 11, 4), (-1, 9, 5), (1, 3, 7), (1, 4, 8)], 1, 15),
    "x16": ([(1, 11, 10), (1, 9, 9), (-1, 6, 8), (-1, 5, 7)], 1, 16),
}
# The x10 identity appears twice with opposite signs on the x5 zeta_4 term.
CUBIC_X10_ALTERNATE = ([(1, 1, 8), (-1, 9, 2), (-1, 3, 10), (-1, 5, 4)], -1, 10)
# Operator list used when expanding the identity: P_5 with the d/dx14 term sign as listed there.
P5_EXPANSION_LISTING = [(-1, 1, 4), (-1, 2, 7), (-1, 10, 12), (-1, 9, 14), (-1, 8, 15)]

# Left side of the operator identity: sum of sign * P_i composed with multiplication by x_j.
QUADRATIC_COMBINATION = ((1, 11, 1), (1, 1, 11), (1, 9, 2), (1, 2, 9), (-1, 6, 3), (-1, 3, 6), (1, 5, 4), (1, 4, 5))

# Induced operators iota(eta_i) on A (x) M, as printed:
#   P_i + (x_i/2)[sum_j s_j (E_jj - E_{5+j,5+j}) - kappa] + sum sign * x_r X_{a,b},
# where X_{a,b} = E_{a,b} - E_{sigma b, sigma a}.  Entries: (diagonal signs, [(sign, r, (a, b))]).
IOTA_ETA_PRINTED = {
    1: ((1, 1, 1, 1, -1), [(-1, 2, (4, 5)), (-1, 3, (3, 5)), (1, 4, (2, 5)), (-1, 5, (3, 9)), (1, 6, (2, 9)),
                           (-1, 7, (1, 5)), (-1, 8, (1, 9)), (1, 9, (2, 8)), (-1, 10, (1, 8)), (1, 12, (1, 7))]),
    2: ((1, 1, 1, -1, 1), [(-1, 1, (5, 4)), (-1, 3, (3, 4)), (1, 4, (2, 4)), (1, 5, (3, 10)), (-1, 6, (2, 10)),
                           (-1, 7, (1, 4)), (1, 8, (1, 10)), (-1, 11, (2, 8)), (1, 13, (1, 8)), (-1, 14, (1, 7))]),
    3: ((1, 1, -1, 1, 1), [(-1, 1, (5, 3)), (-1, 2, (4, 3)), (1, 4, (2, 3)), (-1, 5, (4, 10)), (-1, 7, (1, 3)),
                           (-1, 9, (2, 10)), (1, 10, (1, 10)), (1, 11, (2, 9)), (-1, 13, (1, 9)), (1, 15, (1, 7))]),
    4: ((1, -1, 1, 1, 1), [(1, 1, (5, 2)), (1, 2, (4, 2)), (1, 3, (3, 2)), (-1, 6, (4, 10)), (1, 7, (1, 2)),
                           (-1, 9, (3, 10)), (1, 11, (3, 9)), (1, 12, (1, 10)), (-1, 14, (1, 9)), (1, 15, (1, 8))]),
    5: ((1, 1, -1, -1, -1), [(-1, 1, (9, 3)), (1, 2, (10, 3)), (-1, 3, (10, 4)), (1, 6, (2, 3)), (-1, 8, (1, 3)),
                             (-1, 9, (2, 4)), (1, 10, (1, 4)), (-1, 11, (2, 5)), (1, 13, (1, 5)), (-1, 16, (1, 7))]),
    6: ((1, -1, 1, -1, -1), [(1, 1, (9, 2)), (-1, 2, (10, 2)), (-1, 4, (10, 4)), (1, 5, (3, 2)), (1, 8, (1, 2)),
                             (-1, 9, (3, 4)), (-1, 11, (3, 5)), (1, 12, (1, 4)), (1, 14, (1, 5)), (-1, 16, (1, 8))]),
    7: ((-1, 1, 1, 1, 1), [(-1, 1, (5, 1)), (-1, 2, (4, 1)), (-1, 3, (3, 1)), (1, 4, (2, 1)), (-1, 8, (4, 10)),
                           (-1, 10, (3, 10)), (1, 12, (2, 10)), (1, 13, (3, 9)), (-1, 14, (2, 9)), (1, 15, (2, 8))]),
    8: ((-1, 1, 1, -1, -1), [(-1, 1, (9, 1)), (1, 2, (10, 1)), (-1, 5, (3, 1)), (1, 6, (2, 1)), (-1, 7, (10, 4)),
                             (-1, 10, (3, 4)), (1, 12, (2, 4)), (-1, 13, (3, 5)), (1, 14, (2, 5)), (-1, 16, (2, 8))]),
    9: ((1, -1, -1, 1, -1), [(1, 1, (8, 2)), (-1, 3, (10, 2)), (-1, 4, (10, 3)), (-1, 5, (4, 2)), (-1, 6, (4, 3)),
                             (1, 10, (1, 2)), (1, 11, (4, 5)), (1, 12, (1, 3)), (-1, 15, (1, 5)), (1, 16, (1, 9))]),
    10: ((-1, 1, -1, 1, -1), [(-1, 1, (8, 1)), (1, 3, (10, 1)), (1, 5, (4, 1)), (-1, 7, (10, 3)), (-1, 8, (4, 3)),
                              (1, 9, (2, 1)), (1, 12, (2, 3)), (1, 13, (4, 5)), (-1, 15, (2, 5)), (1, 16, (2, 9))]),
    11: ((1, -1, -1, -1, 1), [(-1, 2, (8, 2)), (1, 3, (9, 2)), (1, 4, (9, 3)), (-1, 5, (5, 2)), (-1, 6, (5, 3)),
                              (1, 9, (5, 4)), (1, 13, (1, 2)), (1, 14, (1, 3)), (1, 15, (1, 4)), (1, 16, (1, 10))]),
    12: ((-1, -1, 1, 1, -1), [(1, 1, (7, 1)), (1, 4, (10, 1)), (1, 6, (4, 1)), (1, 7, (10, 2)), (1, 8, (4, 2)),
                              (1, 9, (3, 1)), (1, 10, (3, 2)), (1, 14, (4, 5)), (-1, 15, (3, 5)), (1, 16, (3, 9))]),
    13: ((-1, 1, -1, -1, 1), [(1, 2, (8, 1)), (-1, 3, (9, 1)), (1, 5, (5, 1)), (1, 7, (9, 3)), (-1, 8, (5, 3)),
                              (1, 10, (5, 4)), (1, 11, (2, 1)), (1, 14, (2, 3)), (1, 15, (2, 4)), (1, 16, (2, 10))]),
    14: ((-1, -1, 1, -1, 1), [(-1, 2, (7, 1)), (-1, 4, (9, 1)), (1, 6, (5, 1)), (-1, 7, (9, 2)), (1, 8, (5, 2)),
                              (1, 11, (3, 1)), (1, 12, (5, 4)), (1, 13, (3, 2)), (1, 15, (3, 4)), (1, 16, (3, 10))]),
    15: ((-1, -1, -1, 1, 1), [(1, 3, (7, 1)), (1, 4, (8, 1)), (1, 7, (8, 2)), (-1, 9, (5, 1)), (-1, 10, (5, 2)),
                              (1, 11, (4, 1)), (-1, 12, (5, 3)), (1, 13, (4, 2)), (1, 14, (4, 3)), (1, 16, (4, 10))]),
    16: ((-1, -1, -1, -1, -1), [(-1, 5, (7, 1)), (-1, 6, (8, 1)), (-1, 8, (8, 2)), (1, 9, (9, 1)), (1, 10, (9, 2)),
                                (1, 11, (10, 1)), (1, 12, (9, 3)), (1, 13, (10, 2)), (1, 14, (10, 3)), (1, 15, (10, 4))]),
}

# Generation chain of the induced operators T_i by bracketing with images of lowering elements:
# (target, sign, (a, b), source) meaning T_target = sign * [iota(X_{a,b}), T_source].
T_CHAIN = (
    (2, 1, (2, 1), 1),
    (3, 1, (3, 2), 2),
    (4, 1, (4, 3), 3),
    (5, 1, (5, 4), 4),
    (10, 1, (10, 4), 4),
    (9, -1, (10, 4), 5),  # printed with sign +1; the bracket gives -T_9
    (8, 1, (8, 9), 9),
    (7, 1, (7, 8), 8),
    (6, 1, (6, 7), 7),
)

# Singular vectors of U (x) V(lambda) and proportionality constants as printed, per family.
# key: (family, highest weight of the component) -> printed constant
PRINTED_FLATS = {
    "natural": {"(k+1)e1": "k", "k e1 + e2": "-1", "(k-1) e1": "-8-k"},
    "lambda2": {"e1 + lambda2": "1", "lambda3": "-2", "e1": "-9"},
    "lambda3": {"e1 + lambda3": "1", "e1+e2+e3+e4": "-3", "lambda2": "-8"},
    "spin4": {"k lambda4 + e1": "k/2", "k lambda4 + e5": "-(k/2+4)"},
}

# Printed exclusion sets of the irreducibility criteria as (offset(k), step) progressions plus points.
# offsets are given as functions of k through (constant, coefficient of k).
PRINTED_EXCLUSIONS = {
    "trivial": {"progressions": [((-6, 0), 1)], "points": []},
    "natural": {"progressions": [((-14, -1), 1)], "points": []},
    "lambda2": {"progressions": [((-16, 0), 1)], "points": []},
    "lambda3": {"progressions": [((-15, 0), 1)], "points": [-17, -19, -21]},
    "spin4": {"progressions": [((-10, Fraction(-1, 2)), 1), ((-12, 1), 2)], "points": []},
    "spin5": {"progressions": [((-10, Fraction(-1, 2)), 1), ((-20, -1), 2)], "points": []},
}

# Printed values of the minimal split-Casimir eigenvalue, as (constant, coefficient of k).
PRINTED_ELL = {
    "trivial": (0, 0),
    "natural": (-4, Fraction(-1, 2)),
    "lambda2": (-8, 0),
    "lambda3": (Fraction(-21, 2), 0),
    "spin4": (-6, Fraction(1, 2)),
    "spin5": (-10, Fraction(-1, 2)),
}

# Printed thresholds from the singular-vector computation, as (constant, coefficient of k).
PRINTED_FLAT = {
    "trivial": (0, 0),
    "natural": (-8, -1),
    "lambda2": (-9, 0),
    "lambda3": (-8, 0),
    "spin4": (-4, Fraction(-1, 2)),
    "spin5": (-4, Fraction(-1, 2)),
}
