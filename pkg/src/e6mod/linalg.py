"""Exact linear algebra over Q (sparse row reduction) and over a prime field."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np

PRIME = 2147483647  # 2^31 - 1; products of two residues fit in int64

SparseRow = Dict[int, Fraction]


class RowEchelon:
    """Incremental reduced row echelon form of sparse rational rows.

    Pivot rows are kept fully reduced, so `reduce` returns a canonical remainder."""

    def __init__(self):
        self.pivots: Dict[int, SparseRow] = {}

    def reduce(self, row: Mapping[int, object]) -> SparseRow:
        r = {k: Fraction(v) for k, v in row.items() if v}
        for col in [c for c in r if c in self.pivots]:
            c = r.get(col)
            if c:
                for k, v in self.pivots[col].items():
                    nv = r.get(k, 0) - c * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        return r

    def add(self, row: Mapping[int, object]) -> int | None:
        """Insert row; returns the new pivot column or None if dependent."""
        r = self.reduce(row)
        if not r:
            return None
        col = min(r)
        inv = 1 / r[col]
        r = {k: v * inv for k, v in r.items()}
        for other in self.pivots.values():
            c = other.get(col)
            if c:
                for k, v in r.items():
                    nv = other.get(k, 0) - c * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self.pivots[col] = r
        return col

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(rows: Iterable[Mapping[int, object]]) -> int:
    ech = RowEchelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows: Iterable[Mapping[int, object]], ncols: int) -> List[SparseRow]:
    """Basis of {v : row . v = 0 for all rows}, each vector normalized so that its
    leading free coordinate is 1."""
    ech = RowEchelon()
    for r in rows:
        ech.add(r)
    free = [c for c in range(ncols) if c not in ech.pivots]
    basis = []
    for f in free:
        v = {f: Fraction(1)}
        for p, prow in ech.pivots.items():
            c = prow.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def echelon_basis(vectors: Iterable[Mapping[int, object]]) -> List[SparseRow]:
    """Reduced echelon basis of the span, ordered by pivot."""
    ech = RowEchelon()
    for v in vectors:
        ech.add(v)
    return [ech.pivots[p] for p in sorted(ech.pivots)]


def solve_square(mat: Sequence[Sequence[object]]) -> List[List[Fraction]]:
    """Inverse of a nonsingular square rational matrix by Gauss-Jordan."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def solve(rows: Sequence[Mapping[int, object]], rhs: Sequence[object], ncols: int) -> SparseRow | None:
    """One solution of rows . v = rhs, or None if inconsistent."""
    aug = []
    for r, b in zip(rows, rhs):
        row = {k: Fraction(v) for k, v in r.items() if v}
        if b:
            row[ncols] = Fraction(b)
        aug.append(row)
    ech = RowEchelon()
    for r in aug:
        ech.add(r)
    if ncols in ech.pivots:
        return None
    return {p: prow.get(ncols, Fraction(0)) for p, prow in ech.pivots.items() if prow.get(ncols)}


# ------------------------------------------------------------------ modular

def to_residue(x, p: int = PRIME) -> int:
    x = Fraction(x)
    return (x.numerator % p) * pow(x.denominator % p, -1, p) % p


def rank_mod_p(mat: np.ndarray, p: int = PRIME) -> int:
    """Rank of an integer matrix over F_p via dense elimination in int64."""
    return _echelon_mod_p(mat, p)[1]


def row_basis_mod_p(mat: np.ndarray, p: int = PRIME) -> np.ndarray:
    """Echelon rows spanning the F_p row space of an integer matrix."""
    a, r = _echelon_mod_p(mat, p)
    return a[:r]


def _echelon_mod_p(mat: np.ndarray, p: int = PRIME):
    a = np.array(mat, dtype=np.int64) % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        below = np.nonzero(a[r + 1:, c])[0] + r + 1
        if below.size:
            factors = a[below, c].reshape(-1, 1)
            a[below] = (a[below] - (factors * a[r]) % p) % p
        r += 1
    return a, r


def sparse_rows_to_dense_mod_p(rows: Sequence[Mapping[int, object]], ncols: int, p: int = PRIME) -> np.ndarray:
    out = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, r in enumerate(rows):
        for k, v in r.items():
            out[i, k] = to_residue(v, p)
    return out


def sparse_rank_mod_p(rows: Iterable[Mapping[int, int]], p: int = PRIME) -> int:
    """Rank over F_p of sparse rows with integer (residue) entries."""
    pivots: Dict[int, Dict[int, int]] = {}
    for row in rows:
        r = {k: v % p for k, v in row.items() if v % p}
        while r:
            col = min(r)
            prow = pivots.get(col)
            if prow is None:
                inv = pow(r[col], -1, p)
                pivots[col] = {k: v * inv % p for k, v in r.items()}
                break
            c = r[col]
            for k, v in prow.items():
                nv = (r.get(k, 0) - c * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)
