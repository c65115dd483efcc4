"""The E6 root lattice: Gram matrix, sign cocycle and root enumeration."""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Sequence

RANK = 6

# Dynkin edges in the labeling used throughout (2 hangs off 4, 6 terminates the long arm).
DYNKIN_EDGES = ((1, 3), (3, 4), (4, 2), (4, 5), (5, 6))

GRAM = tuple(
    tuple(
        2 if i == j else (-1 if (i + 1, j + 1) in DYNKIN_EDGES or (j + 1, i + 1) in DYNKIN_EDGES else 0)
        for j in range(RANK)
    )
    for i in range(RANK)
)

# Off-diagonal index pairs (k_a * l_b) entering the cocycle exponent, 1-based.
_COCYCLE_CROSS = ((1, 3), (4, 2), (3, 4), (5, 4), (6, 5))

# Generous coefficient bound for brute-force lattice scans; E6 roots have |coeff| <= 3.
SCAN_BOUND = 6


def vec(*coeffs: int) -> tuple:
    if len(coeffs) == 1 and not isinstance(coeffs[0], int):
        coeffs = tuple(coeffs[0])
    if len(coeffs) != RANK:
        raise ValueError("root lattice vectors have 6 coordinates")
    return tuple(coeffs)


def simple_root(i: int) -> tuple:
    return tuple(1 if j == i - 1 else 0 for j in range(RANK))


def add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def neg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def scale(s, a: Sequence) -> tuple:
    return tuple(s * x for x in a)


def pair(a: Sequence, b: Sequence):
    """Symmetric bilinear form a^T G b. Works for rational coordinates too."""
    total = 0
    for i in range(RANK):
        ai = a[i]
        if not ai:
            continue
        row = GRAM[i]
        for j in range(RANK):
            if row[j] and b[j]:
                total += ai * row[j] * b[j]
    return total


def cocycle(a: Sequence[int], b: Sequence[int]) -> int:
    """The sign F(a, b) in {+1, -1}; bimultiplicative in both arguments."""
    e = sum(x * y for x, y in zip(a, b))
    for i, j in _COCYCLE_CROSS:
        e += a[i - 1] * b[j - 1]
    return -1 if e % 2 else 1


def height(a: Sequence[int]) -> int:
    return sum(a)


def is_root(a: Sequence[int]) -> bool:
    return pair(a, a) == 2


@lru_cache(maxsize=None)
def enumerate_roots() -> tuple:
    """All 72 roots: positives by (height, lex), then negatives in the same order."""
    simples = [simple_root(i) for i in range(1, RANK + 1)]
    seen = set(simples) | {neg(s) for s in simples}
    queue = deque(seen)
    while queue:
        r = queue.popleft()
        for s in simples:
            for t in (s, neg(s)):
                cand = add(r, t)
                if cand not in seen and any(cand) and is_root(cand):
                    seen.add(cand)
                    queue.append(cand)
    positive = sorted((r for r in seen if height(r) > 0), key=lambda r: (height(r), r))
    return tuple(positive) + tuple(neg(r) for r in positive)


def positive_roots() -> tuple:
    return enumerate_roots()[: len(enumerate_roots()) // 2]


@lru_cache(maxsize=None)
def root_set() -> frozenset:
    return frozenset(enumerate_roots())


# Labels of xi_1..xi_16: the roots with coefficient 1 on alpha_6, in the fixed order used by
# the 16-variable realization.  Each entry lists (a1, a2, a3, a4, a5, a6).
XI_LABELS = (
    (0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 1, 1),
    (0, 0, 0, 1, 1, 1),
    (0, 0, 1, 1, 1, 1),
    (0, 1, 0, 1, 1, 1),
    (0, 1, 1, 1, 1, 1),
    (1, 0, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1),
    (0, 1, 1, 2, 1, 1),
    (1, 1, 1, 2, 1, 1),
    (0, 1, 1, 2, 2, 1),
    (1, 1, 2, 2, 1, 1),
    (1, 1, 1, 2, 2, 1),
    (1, 1, 2, 2, 2, 1),
    (1, 1, 2, 3, 2, 1),
    (1, 2, 2, 3, 2, 1),
)


def xi_eta_labels() -> tuple:
    xis = [tuple(v) for v in XI_LABELS]
    etas = [neg(v) for v in xis]
    return xis, etas


# The central element orthogonal to alpha_1..alpha_5.
ALPHA_HAT = (2, 3, 4, 6, 5, 4)


def lattice_ball(bound: int = SCAN_BOUND) -> Iterable[tuple]:
    from itertools import product

    return product(range(-bound, bound + 1), repeat=RANK)
