"""Rational one-parameter groups on R^16 integrating the quadratic vector fields P_i.

For index i and parameter b, every coordinate is either rescaled, x_j -> x_j / (1 - b x_i),
or shifted, x_j -> x_j + s * b * Q_j(x) / (1 - b x_i) with a quadratic Q_j free of x_i."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

POLE_TOLERANCE = 1e-9
NVARS = 16

# Shifted coordinates as printed: index -> {coordinate: (sign, ((coeff, a, b), ...), denominator index)}.
Quadratic = Tuple[Tuple[int, int, int], ...]
PRINTED_SHIFTS: Dict[int, Dict[int, Tuple[int, Quadratic, int]]] = {
    1: {11: (-1, ((1, 2, 9), (-1, 3, 6), (1, 4, 5)), 1),
        13: (-1, ((1, 2, 10), (-1, 3, 8), (1, 5, 7)), 1),
        14: (-1, ((1, 2, 12), (-1, 4, 8), (1, 6, 7)), 1),
        15: (1, ((1, 3, 12), (-1, 4, 10), (1, 7, 9)), 1),
        16: (-1, ((1, 5, 12), (-1, 6, 10), (1, 8, 9)), 1)},
    2: {9: (-1, ((1, 1, 11), (-1, 3, 6), (1, 4, 5)), 2),
        10: (-1, ((1, 1, 13), (-1, 3, 8), (1, 5, 7)), 2),
        12: (-1, ((1, 1, 14), (-1, 4, 8), (1, 6, 7)), 2),
        15: (-1, ((1, 3, 14), (-1, 4, 13), (1, 7, 11)), 2),
        16: (1, ((1, 5, 14), (-1, 6, 13), (1, 8, 11)), 2)},
    3: {6: (1, ((1, 1, 11), (1, 2, 9), (1, 4, 5)), 3),
        8: (1, ((1, 1, 13), (1, 2, 10), (1, 5, 7)), 3),
        12: (1, ((1, 1, 15), (1, 4, 10), (-1, 7, 9)), 3),
        14: (-1, ((1, 2, 15), (-1, 4, 13), (1, 7, 11)), 3),
        16: (-1, ((1, 5, 15), (1, 9, 13), (-1, 10, 11)), 3)},
    4: {5: (-1, ((1, 1, 11), (1, 2, 9), (-1, 3, 6)), 4),
        8: (1, ((1, 1, 14), (1, 2, 12), (1, 6, 7)), 4),
        10: (-1, ((1, 1, 15), (-1, 3, 12), (-1, 7, 9)), 4),
        13: (1, ((1, 2, 15), (1, 3, 14), (1, 7, 11)), 4),
        16: (-1, ((1, 6, 15), (1, 9, 14), (-1, 11, 12)), 4)},
    5: {4: (-1, ((1, 1, 11), (1, 2, 9), (-1, 3, 6)), 5),
        7: (-1, ((1, 1, 13), (1, 2, 10), (-1, 3, 8)), 5),
        12: (-1, ((1, 1, 16), (-1, 6, 10), (1, 8, 9)), 5),
        14: (1, ((1, 2, 16), (1, 6, 13), (-1, 8, 11)), 5),
        15: (-1, ((1, 3, 16), (1, 9, 13), (-1, 10, 11)), 5)},
    6: {3: (1, ((1, 1, 11), (1, 2, 9), (1, 4, 5)), 6),
        7: (-1, ((1, 1, 14), (1, 2, 12), (-1, 4, 8)), 6),
        10: (1, ((1, 1, 16), (1, 5, 12), (1, 8, 9)), 6),
        13: (-1, ((1, 2, 16), (-1, 5, 14), (-1, 8, 11)), 6),
        15: (-1, ((1, 4, 16), (1, 9, 14), (-1, 11, 12)), 6)},
    7: {5: (-1, ((1, 1, 13), (1, 2, 10), (-1, 3, 8)), 7),
        6: (-1, ((1, 1, 14), (1, 2, 12), (-1, 4, 8)), 7),
        9: (1, ((1, 1, 15), (-1, 3, 12), (1, 4, 10)), 7),
        11: (-1, ((1, 2, 15), (1, 3, 14), (-1, 4, 13)), 7),
        16: (-1, ((1, 8, 15), (1, 10, 14), (-1, 12, 13)), 7)},
    8: {3: (1, ((1, 1, 13), (-1, 3, 8), (1, 5, 7)), 8),
        4: (1, ((1, 1, 14), (1, 2, 12), (1, 6, 7)), 8),
        9: (-1, ((1, 1, 16), (1, 5, 12), (-1, 6, 10)), 8),
        11: (1, ((1, 2, 16), (-1, 5, 14), (1, 6, 13)), 8),
        15: (-1, ((1, 7, 16), (1, 10, 14), (-1, 12, 13)), 8)},
    9: {2: (-1, ((1, 1, 11), (-1, 3, 6), (1, 4, 5)), 9),
        7: (1, ((1, 1, 15), (-1, 3, 12), (1, 4, 10)), 9),
        8: (-1, ((1, 1, 16), (1, 5, 12), (-1, 6, 10)), 9),
        13: (-1, ((1, 3, 16), (1, 5, 15), (-1, 10, 11)), 9),
        14: (-1, ((1, 4, 16), (1, 6, 15), (-1, 11, 12)), 9)},
    10: {2: (-1, ((1, 1, 13), (-1, 3, 8), (1, 5, 7)), 10),
         4: (-1, ((1, 1, 15), (-1, 3, 12), (-1, 7, 9)), 10),
         6: (1, ((1, 1, 16), (1, 5, 12), (1, 8, 9)), 10),
         11: (1, ((1, 3, 16), (1, 5, 15), (1, 9, 13)), 11),
         14: (-1, ((1, 7, 16), (1, 8, 15), (-1, 12, 13)), 10)},
    11: {1: (-1, ((1, 2, 9), (-1, 3, 6), (1, 4, 5)), 11),
         7: (-1, ((1, 2, 15), (1, 3, 14), (-1, 4, 13)), 11),
         8: (1, ((1, 2, 16), (-1, 5, 14), (1, 6, 13)), 11),
         10: (1, ((1, 3, 16), (1, 5, 15), (1, 9, 13)), 11),
         12: (1, ((1, 4, 16), (1, 6, 15), (1, 9, 14)), 11)},
    12: {2: (-1, ((1, 1, 14), (1, 6, 7), (-1, 4, 8)), 12),
         3: (1, ((1, 1, 15), (-1, 7, 9), (1, 4, 10)), 12),
         5: (-1, ((1, 1, 16), (1, 8, 9), (-1, 6, 10)), 12),
         11: (1, ((1, 4, 16), (1, 6, 15), (1, 9, 14)), 12),
         13: (1, ((1, 7, 16), (1, 8, 15), (1, 10, 14)), 12)},
    13: {1: (-1, ((1, 1, 13), (-1, 3, 8), (1, 5, 7)), 13),
         4: (1, ((1, 2, 15), (1, 3, 14), (1, 7, 11)), 13),
         6: (-1, ((1, 2, 16), (-1, 5, 14), (-1, 8, 11)), 13),
         9: (-1, ((1, 3, 16), (1, 5, 15), (-1, 10, 11)), 13),
         12: (1, ((1, 7, 16), (1, 8, 15), (1, 10, 14)), 13)},
    14: {1: (-1, ((1, 2, 12), (-1, 4, 8), (1, 6, 7)), 14),
         3: (-1, ((1, 2, 15), (-1, 4, 13), (1, 7, 11)), 14),
         5: (1, ((1, 2, 16), (1, 6, 13), (-1, 8, 11)), 14),
         9: (-1, ((1, 4, 16), (1, 6, 15), (-1, 11, 12)), 14),
         10: (-1, ((1, 7, 16), (1, 8, 15), (-1, 12, 13)), 14)},
    15: {1: (1, ((1, 3, 12), (-1, 4, 10), (1, 7, 9)), 15),
         2: (-1, ((1, 3, 14), (-1, 4, 13), (1, 7, 11)), 15),
         5: (-1, ((1, 3, 16), (1, 9, 13), (-1, 10, 11)), 15),
         6: (-1, ((1, 4, 16), (1, 9, 14), (-1, 11, 12)), 15),
         8: (-1, ((1, 7, 16), (1, 10, 14), (-1, 12, 13)), 15)},
    16: {1: (-1, ((1, 5, 12), (-1, 6, 10), (1, 8, 9)), 16),
         2: (1, ((1, 5, 14), (-1, 6, 13), (1, 8, 11)), 16),
         3: (-1, ((1, 5, 15), (1, 9, 13), (-1, 10, 11)), 16),
         4: (-1, ((1, 6, 15), (1, 9, 14), (-1, 11, 12)), 16),
         7: (-1, ((1, 8, 15), (1, 10, 14), (-1, 12, 13)), 16)},
}

# Entries whose printed form fails the checks, with the replacement that passes them.
CORRECTIONS: Dict[Tuple[int, int], Tuple[Tuple[int, Quadratic, int], str]] = {
    (8, 3): ((1, ((1, 1, 13), (1, 2, 10), (1, 5, 7)), 8), "numerator term -x3*x8 replaced by +x2*x10"),
    (10, 11): ((1, ((1, 3, 16), (1, 5, 15), (1, 9, 13)), 10), "denominator 1 - b*x11 replaced by 1 - b*x10"),
    (13, 1): ((-1, ((1, 2, 10), (-1, 3, 8), (1, 5, 7)), 13), "numerator term x1*x13 replaced by x2*x10"),
}


class PoleProximity(ValueError):
    """Raised when 1 - b x_i is within the pole tolerance of zero."""


@dataclass(frozen=True)
class FlowSpec:
    index: int
    b: float


def shift_table(corrected: bool = True) -> Dict[int, Dict[int, Tuple[int, Quadratic, int]]]:
    table = {i: dict(v) for i, v in PRINTED_SHIFTS.items()}
    if corrected:
        for (i, j), (entry, _) in CORRECTIONS.items():
            table[i][j] = entry
    return table


def _quadratic(q: Quadratic, p: np.ndarray) -> float:
    return float(sum(c * p[a - 1] * p[b - 1] for c, a, b in q))


def flow(spec: FlowSpec, p: Sequence[float], corrected: bool = True,
         tolerance: float = POLE_TOLERANCE) -> np.ndarray:
    """Apply the transformation with index spec.index and parameter spec.b to the point p."""
    i, b = spec.index, float(spec.b)
    if not 1 <= i <= NVARS:
        raise ValueError(f"flow index must lie in 1..{NVARS}")
    p = np.asarray(p, dtype=float)
    if p.shape != (NVARS,) or not np.all(np.isfinite(p)):
        raise ValueError("point must be 16 finite reals")
    shifts = shift_table(corrected)[i]
    dens = {i} | {d for _, _, d in shifts.values()}
    for d in dens:
        if abs(1.0 - b * p[d - 1]) <= tolerance:
            raise PoleProximity(f"|1 - b*x{d}| <= {tolerance} at b={b}")
    out = p / (1.0 - b * p[i - 1])
    for j, (sign, q, d) in shifts.items():
        out[j - 1] = p[j - 1] + sign * b * _quadratic(q, p) / (1.0 - b * p[d - 1])
    return out


@lru_cache(maxsize=None)
def _vector_field_terms(i: int) -> Tuple[Tuple[Tuple[int, Tuple[Tuple[int, ...], float]], ...], ...]:
    from .e6rep import derived_p_operators

    op = derived_p_operators()[i]
    out = []
    for j in range(1, NVARS + 1):
        f = op.coefficient(j)
        out.append(tuple((0, (m, float(c))) for m, c in f.terms.items()))
    return tuple(out)


def vector_field(i: int, p: Sequence[float]) -> np.ndarray:
    """Coefficients of the exact vector field P_i evaluated at p."""
    p = np.asarray(p, dtype=float)
    out = np.zeros(NVARS)
    for j, terms in enumerate(_vector_field_terms(i)):
        s = 0.0
        for _, (m, c) in terms:
            s += c * float(np.prod(p ** np.array(m)))
        out[j] = s
    return out


def central_difference(i: int, p: np.ndarray, h: float = 1e-5, corrected: bool = True) -> np.ndarray:
    return (flow(FlowSpec(i, h), p, corrected) - flow(FlowSpec(i, -h), p, corrected)) / (2 * h)


def _relative(a: np.ndarray, b: np.ndarray) -> float:
    scale = max(float(np.max(np.abs(b))), 1e-300)
    return float(np.max(np.abs(a - b))) / scale


def generator_check(i: int, samples: int = 100, seed: int = 0, corrected: bool = True,
                    h: float = 1e-5) -> dict:
    """Compare d/db at b = 0 of the flow with the vector field over random points of [-0.5, 0.5]^16.

    The global sign sigma_i is fixed from the first sample and must then fit every sample."""
    rng = np.random.default_rng(seed)
    sigma = None
    worst = 0.0
    sign_consistent = True
    for _ in range(samples):
        p = rng.uniform(-0.5, 0.5, NVARS)
        fd = central_difference(i, p, h, corrected)
        vf = vector_field(i, p)
        if sigma is None:
            sigma = 1 if float(np.dot(fd, vf)) >= 0 else -1
        err = _relative(fd, sigma * vf)
        if _relative(fd, -sigma * vf) < err:
            sign_consistent = False
        worst = max(worst, err)
    return {"index": i, "samples": samples, "seed": seed, "sigma": sigma, "max_relative_error": worst,
            "sign_consistent": sign_consistent}


def flow_property_check(i: int, samples: int = 100, seed: int = 0, corrected: bool = True,
                        bmax: float = 0.1) -> dict:
    """max relative deviation of flow(b) o flow(b') from flow(b + b')."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        p = rng.uniform(-0.5, 0.5, NVARS)
        b1, b2 = rng.uniform(-bmax, bmax, 2)
        lhs = flow(FlowSpec(i, b1), flow(FlowSpec(i, b2), p, corrected), corrected)
        rhs = flow(FlowSpec(i, b1 + b2), p, corrected)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))) / max(1.0, float(np.max(np.abs(rhs)))))
    return {"index": i, "samples": samples, "seed": seed, "max_relative_error": worst}


def identity_check(i: int, samples: int = 10, seed: int = 0) -> bool:
    rng = np.random.default_rng(seed)
    return all(np.array_equal(flow(FlowSpec(i, 0.0), p), p)
               for p in (rng.uniform(-0.5, 0.5, NVARS) for _ in range(samples)))


GENERATOR_TOLERANCE = 1e-6
COMPOSITION_TOLERANCE = 1e-9


def flows_report(samples: int = 100, seed: int = 0) -> dict:
    """Per-index errors with the corrected table, and whether the printed entries pass."""
    rows = []
    for i in range(1, NVARS + 1):
        gen = generator_check(i, samples, seed)
        comp = flow_property_check(i, samples, seed)
        fixes = [(j, note) for (k, j), (_, note) in CORRECTIONS.items() if k == i]
        printed_gen = generator_check(i, samples, seed, corrected=False) if fixes else gen
        printed_comp = flow_property_check(i, samples, seed, corrected=False) if fixes else comp
        ok = (gen["max_relative_error"] < GENERATOR_TOLERANCE and gen["sign_consistent"]
              and comp["max_relative_error"] < COMPOSITION_TOLERANCE and identity_check(i))
        printed_ok = (printed_gen["max_relative_error"] < GENERATOR_TOLERANCE
                      and printed_comp["max_relative_error"] < COMPOSITION_TOLERANCE)
        status = "fail" if not ok else ("pass" if printed_ok else "corrected")
        rows.append({"index": i, "sigma": gen["sigma"], "generator_error": gen["max_relative_error"],
                     "composition_error": comp["max_relative_error"],
                     "printed_generator_error": printed_gen["max_relative_error"],
                     "printed_composition_error": printed_comp["max_relative_error"],
                     "corrections": [f"coordinate x{j}: {note}" for j, note in fixes], "status": status})
    return {"samples": samples, "seed": seed, "rows": rows,
            "ok": all(r["status"] != "fail" for r in rows)}
