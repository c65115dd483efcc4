"""Induced modules M -> A (x) M over E6 and their irreducibility thresholds.

Operators on A (x) M live in the Lie algebra K^ = W_16 + o(10, A) + A kappa and are
stored as `ModuleOp`: a first-order differential operator on A (with scalar part),
polynomial coefficients of the 45 o(10) basis matrices acting on M, and a polynomial
multiple of the central symbol kappa (acting as the number c)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from . import chevalley as C
from . import d5modules as D
from . import lattice as L
from . import tables as T
from .e6rep import (T_zeta, build_realization, derived_d5_operators, derived_p_operators, variable_weights, x)
from .linalg import PRIME, RowEchelon, nullspace, rank
from .polydiff import DiffOp, Poly, commutator, monomials

X = "x"
NVARS = 16


@lru_cache(maxsize=None)
def key_bracket(a: tuple, b: tuple) -> Tuple[Tuple[tuple, Fraction], ...]:
    """[X_a, X_b] in the canonical o(10) basis."""
    return tuple(sorted(C.o10_decompose(C.mat_commutator(C.o10_matrix(a), C.o10_matrix(b))).items()))


def _poly(f) -> Poly:
    return f if isinstance(f, Poly) else Poly.const(f, X)


class ModuleOp:
    """d + sum_B h_B X_B + k kappa acting on f (x) v as d(f) v + sum h_B f X_B(v) + c k f v."""

    __slots__ = ("diff", "mat", "kappa")

    def __init__(self, diff: DiffOp | None = None, mat: Mapping[tuple, object] | None = None, kappa=None):
        self.diff = diff if diff is not None else DiffOp.zero(X)
        m: Dict[tuple, Poly] = {}
        for k, f in (mat or {}).items():
            sign, ck = C.o10_symbol(*k)
            if not sign:
                continue
            f = _poly(f).scale(sign)
            m[ck] = m[ck] + f if ck in m else f
        self.mat = {k: f for k, f in m.items() if f}
        self.kappa = _poly(kappa if kappa is not None else 0)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "ModuleOp") -> "ModuleOp":
        mat = dict(self.mat)
        for k, f in other.mat.items():
            mat[k] = mat[k] + f if k in mat else f
        return ModuleOp(self.diff + other.diff, mat, self.kappa + other.kappa)

    def scale(self, s) -> "ModuleOp":
        return ModuleOp(self.diff.scale(s), {k: f.scale(s) for k, f in self.mat.items()}, self.kappa.scale(s))

    def __neg__(self) -> "ModuleOp":
        return self.scale(-1)

    def __sub__(self, other: "ModuleOp") -> "ModuleOp":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleOp):
            return NotImplemented
        return self.diff == other.diff and self.mat == other.mat and self.kappa == other.kappa

    def __hash__(self):
        return hash((self.diff, frozenset(self.mat.items()), self.kappa))

    def is_zero(self) -> bool:
        return self.diff.is_zero() and not self.mat and not self.kappa

    def left_mul(self, f: Poly) -> "ModuleOp":
        return ModuleOp(self.diff.left_mul(f), {k: f * g for k, g in self.mat.items()}, f * self.kappa)

    def compose_mult(self, f: Poly) -> "ModuleOp":
        """self composed with multiplication by f."""
        return ModuleOp(self.diff.compose_mult(f), {k: f * g for k, g in self.mat.items()}, f * self.kappa)

    def bracket(self, other: "ModuleOp") -> "ModuleOp":
        d1, d2 = self.diff, other.diff
        mat: Dict[tuple, Poly] = {}

        def acc(k, f):
            if f:
                mat[k] = mat[k] + f if k in mat else f

        for k, h in other.mat.items():
            acc(k, d1.derive(h))
        for k, h in self.mat.items():
            acc(k, -d2.derive(h))
        for a, h1 in self.mat.items():
            for b, h2 in other.mat.items():
                prod = None
                for k, c in key_bracket(a, b):
                    prod = prod if prod is not None else h1 * h2
                    acc(k, prod.scale(c))
        kappa = d1.derive(other.kappa) - d2.derive(self.kappa)
        return ModuleOp(commutator(d1, d2), mat, kappa)

    def matrix_part(self) -> "ModuleOp":
        return ModuleOp(None, self.mat, None)

    def render(self) -> str:
        parts = []
        if not self.diff.is_zero():
            parts.append(self.diff.render())
        for k in sorted(self.mat):
            parts.append(f"({self.mat[k].render()})*X{k}")
        if self.kappa:
            parts.append(f"({self.kappa.render()})*kappa")
        return " + ".join(parts) if parts else "0"

    __repr__ = render


def bracket(a: ModuleOp, b: ModuleOp) -> ModuleOp:
    return a.bracket(b)


# ------------------------------------------------------------------ the map iota

def rho_degree_zero(u: C.LieElement) -> ModuleOp:
    """Constant o(10) (x) kappa part of a degree-zero element: nu^{-1} on the D5 part,
    alpha_hat -> 2 kappa."""
    t = Fraction(u.cartan[5]) / L.ALPHA_HAT[5]
    rest = u - C.ALPHA_HAT.scaled(t) if t else u
    coeffs = C.nu_inverse_coeffs(rest) if not rest.is_zero() else {}
    return ModuleOp(None, {k: Poly.const(c, X) for k, c in coeffs.items()}, Poly.const(2 * t, X))


@lru_cache(maxsize=None)
def iota_eta(i: int) -> ModuleOp:
    """P_i + sum_r x_r rho([xi_r, eta_i])."""
    out = ModuleOp(derived_p_operators()[i])
    for r in range(1, NVARS + 1):
        b = C.bracket(C.xi(r), C.eta(i))
        if not b.is_zero():
            out = out + rho_degree_zero(b).left_mul(x(r))
    return out


def iota(u: C.LieElement) -> ModuleOp:
    table = build_realization()
    xi_index = {lab: i for i, lab in enumerate(L.XI_LABELS, start=1)}
    eta_index = {L.neg(lab): i for i, lab in enumerate(L.XI_LABELS, start=1)}
    out = ModuleOp()
    rest = {}
    for r, c in u.roots.items():
        if r in xi_index:
            out = out + ModuleOp(DiffOp.partial(xi_index[r], X).scale(c))
        elif r in eta_index:
            out = out + iota_eta(eta_index[r]).scale(c)
        else:
            rest[r] = c
    zero = C.LieElement(u.cartan, rest)
    if not zero.is_zero():
        out = out + ModuleOp(table.theta_zero(zero)) + rho_degree_zero(zero)
    return out


@lru_cache(maxsize=None)
def iota_basis() -> Tuple[ModuleOp, ...]:
    return tuple(iota(u) for u in C.basis())


@lru_cache(maxsize=None)
def iota_o10(key: tuple) -> ModuleOp:
    """Image of nu(X_key): the o(10) operator on A plus X_key on M."""
    sign, ck = C.o10_symbol(*key)
    if not sign:
        return ModuleOp()
    return iota(C.nu(ck)).scale(sign)


def printed_iota_eta(i: int) -> ModuleOp:
    table = build_realization()
    diag, entries = T.IOTA_ETA_PRINTED[i]
    half = x(i).scale(Fraction(1, 2))
    mat: Dict[tuple, Poly] = {}
    for j, s in enumerate(diag, start=1):
        mat[(j, j)] = half.scale(s)
    out = ModuleOp(table.printed_pis[i], mat, half.scale(-1))
    for sign, r, key in entries:
        out = out + ModuleOp(None, {key: x(r).scale(sign)})
    return out


def iota_chain() -> Dict[int, ModuleOp]:
    """iota(eta_i) generated from iota(eta_1) by the bracket recursion with lowering images."""
    out = {1: iota_eta(1)}
    for target, sign, (a, b), source in T.P_CHAIN:
        out[target] = iota_o10((a, b)).bracket(out[source]).scale(sign)
    return out


def verify_iota_tables() -> dict:
    checks = []
    chain = iota_chain()
    for i in range(1, 17):
        direct = iota_eta(i)
        checks.append({"name": f"iota(eta_{i}) bracket recursion", "status": "pass" if chain[i] == direct else "fail"})
        printed = printed_iota_eta(i)
        if printed == direct:
            checks.append({"name": f"iota(eta_{i}) printed form", "status": "pass"})
        else:
            diff = direct - printed
            checks.append({"name": f"iota(eta_{i}) printed form", "status": "corrected",
                           "detail": "printed matrix part disagrees", "before": printed.render(),
                           "after": direct.render(), "difference": diff.render()})
    return {"ok": all(c["status"] != "fail" for c in checks), "checks": checks}


def symbolic_functor_check(pairs: Iterable[Tuple[int, int]] | None = None) -> dict:
    """[iota(u), iota(v)] = iota([u, v]) in K^ for ordered basis pairs (all 6084 by default)."""
    basis = C.basis()
    imgs = iota_basis()
    n = len(basis)
    pairs = list(pairs) if pairs is not None else [(a, b) for a in range(n) for b in range(n)]
    failures = []
    cache: Dict[Tuple[int, int], ModuleOp] = {}
    for a, b in pairs:
        if (b, a) in cache:
            lhs = -cache[(b, a)]
        else:
            lhs = imgs[a].bracket(imgs[b])
            cache[(a, b)] = lhs
        rhs = _iota_from_coords(C.sparse_coordinates(C.bracket(basis[a], basis[b])))
        if lhs != rhs:
            failures.append((a, b))
    injective = _images_independent(imgs)
    return {"checked": len(pairs), "failures": failures, "injective": injective}


def _iota_from_coords(coords: Mapping[int, Fraction]) -> ModuleOp:
    imgs = iota_basis()
    out = ModuleOp()
    for k, c in coords.items():
        out = out + imgs[k].scale(c)
    return out


def _images_independent(imgs: Sequence[ModuleOp]) -> bool:
    index: Dict[tuple, int] = {}
    rows = []
    for op in imgs:
        row = {}
        items = [(("d", j), f) for j, f in op.diff.vec.items()] + [(("s",), op.diff.scalar)]
        items += [(("m", k), f) for k, f in op.mat.items()] + [(("k",), op.kappa)]
        for tag, f in items:
            for m, c in f.terms.items():
                key = (tag, m)
                if key not in index:
                    index[key] = len(index)
                row[index[key]] = c
        rows.append(row)
    return rank(rows) == len(imgs)


# ------------------------------------------------------------------ slice engine

_BASE = 8
_POW = np.array([_BASE ** i for i in range(NVARS)], dtype=np.int64)


@lru_cache(maxsize=None)
def slice_monomials(k: int) -> Tuple[np.ndarray, np.ndarray]:
    """(sorted codes, exponent rows) of the degree-k monomials in x_1..x_16."""
    if k < 0:
        return np.zeros(0, dtype=np.int64), np.zeros((0, NVARS), dtype=np.int64)
    if k >= _BASE:
        raise ValueError("slice degree too large for the monomial encoding")
    exps = np.array(list(monomials(NVARS, k)), dtype=np.int64).reshape(-1, NVARS)
    codes = exps @ _POW
    order = np.argsort(codes)
    return codes[order], exps[order]


def slice_dimension(k: int, dim_m: int) -> int:
    return comb(k + 15, 15) * dim_m


class GradedModule:
    """A (x) M graded by polynomial degree, with exact operator evaluation on slices."""

    def __init__(self, base: D.MatrixRep, c):
        self.base = base
        self.cparam = Fraction(c)
        self.dim_m = base.dimension

    # element level: dict (monomial, basis index) -> Fraction
    def slice_basis(self, k: int) -> List[Tuple[tuple, int]]:
        return [(m, j) for m in monomials(NVARS, k) for j in range(self.dim_m)]

    def apply(self, op: ModuleOp, vec: Mapping[Tuple[tuple, int], Fraction]) -> Dict[Tuple[tuple, int], Fraction]:
        out: Dict[Tuple[tuple, int], Fraction] = {}

        def acc(m, j, v):
            key = (m, j)
            nv = out.get(key, 0) + v
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)

        for (m, j), v in vec.items():
            f = Poly.monomial(m, 1, X)
            g = op.diff.derive(f) + op.diff.scalar * f + (op.kappa * f).scale(self.cparam)
            for mm, cc in g.terms.items():
                acc(mm, j, cc * v)
            for key, h in op.mat.items():
                img = self.base.act(key, {j: Fraction(1)})
                if not img:
                    continue
                hf = h * f
                for mm, cc in hf.terms.items():
                    for i, a in img.items():
                        acc(mm, i, cc * a * v)
        return out

    # matrix level ----------------------------------------------------------
    def _groups(self, op: ModuleOp) -> Dict[Tuple[tuple, int], Dict[Tuple[int, int], Fraction]]:
        """Group terms by (coefficient monomial, derivative index or 0) -> matrix on M."""
        groups: Dict[Tuple[tuple, int], Dict] = {}

        def add_id(m, j, c):
            g = groups.setdefault((m, j), {})
            for r in range(self.dim_m):
                g[(r, r)] = g.get((r, r), 0) + c

        for j, f in op.diff.vec.items():
            for m, c in f.terms.items():
                add_id(m, j, c)
        for m, c in op.diff.scalar.terms.items():
            add_id(m, 0, c)
        if self.cparam:
            for m, c in op.kappa.terms.items():
                add_id(m, 0, c * self.cparam)
        for key, f in op.mat.items():
            mat = self.base.action[key]
            for m, c in f.terms.items():
                g = groups.setdefault((m, 0), {})
                for s, col in mat.items():
                    for r, a in col.items():
                        g[(r, s)] = g.get((r, s), 0) + c * a
        return {k: {rs: v for rs, v in g.items() if v} for k, g in groups.items()}

    def scale_for(self, ops: Iterable[ModuleOp]) -> int:
        s = 1
        for op in ops:
            for g in self._groups(op).values():
                for v in g.values():
                    s = lcm(s, Fraction(v).denominator)
        return s

    def offsets(self, maxdeg: int) -> List[int]:
        off = [0]
        for k in range(maxdeg + 1):
            off.append(off[-1] + slice_dimension(k, self.dim_m))
        return off

    def operator_matrix(self, op: ModuleOp, domain_degrees: Sequence[int], maxdeg: int, scale: int = 1,
                        modulus: int | None = None) -> sp.csr_matrix:
        """Integer matrix of scale * op on the direct sum of slices 0..maxdeg (columns outside
        domain_degrees are zero).  Entries are exact (or reduced mod `modulus`)."""
        off = self.offsets(maxdeg)
        n = off[-1]
        rows, cols, vals = [], [], []
        groups = self._groups(op)
        for (mu, j), g in groups.items():
            if not g:
                continue
            dmu = sum(mu)
            mucode = int(np.dot(np.array(mu, dtype=np.int64), _POW))
            rs = np.array([rs for rs in g], dtype=np.int64).reshape(-1, 2)
            gv = [Fraction(v) * scale for v in g.values()]
            if any(v.denominator != 1 for v in gv):
                raise ValueError("scale does not clear denominators")
            gv = [int(v) % modulus if modulus else int(v) for v in gv]
            gvals = np.array(gv, dtype=np.int64)
            for k in domain_degrees:
                kt = k - (1 if j else 0) + dmu
                if kt < 0 or kt > maxdeg:
                    if kt > maxdeg:
                        raise ValueError(f"operator leaves the slices 0..{maxdeg}")
                    continue
                codes, exps = slice_monomials(k)
                if j:
                    src = np.nonzero(exps[:, j - 1] > 0)[0]
                    fac = exps[src, j - 1]
                    tcode = codes[src] - _POW[j - 1] + mucode
                else:
                    src = np.arange(len(codes))
                    fac = np.ones(len(codes), dtype=np.int64)
                    tcode = codes + mucode
                if len(src) == 0:
                    continue
                tcodes, _ = slice_monomials(kt)
                tidx = np.searchsorted(tcodes, tcode)
                r = (off[kt] + tidx[:, None] * self.dim_m + rs[None, :, 0]).ravel()
                cidx = (off[k] + src[:, None] * self.dim_m + rs[None, :, 1]).ravel()
                v = (fac[:, None] * gvals[None, :]).ravel()
                if modulus:
                    v = v % modulus
                rows.append(r)
                cols.append(cidx)
                vals.append(v)
        if rows:
            mat = sp.coo_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
                                shape=(n, n)).tocsr()
        else:
            mat = sp.csr_matrix((n, n), dtype=np.int64)
        mat.sum_duplicates()
        if modulus:
            mat.data %= modulus
        mat.eliminate_zeros()
        return mat

    def exact_slice_matrix(self, op: ModuleOp, k: int, kt: int) -> Dict[int, Dict[int, Fraction]]:
        """op restricted to slice k -> slice kt, exact, as column -> {row: value} in slice-local indices."""
        s = self.scale_for([op])
        mat = self.operator_matrix(op, [k], max(k, kt) + 1 if max(k, kt) + 1 < _BASE else max(k, kt), s).tocsc()
        off = self.offsets(max(k, kt) + 1 if max(k, kt) + 1 < _BASE else max(k, kt))
        out: Dict[int, Dict[int, Fraction]] = {}
        for col in range(off[k], off[k + 1]):
            lo, hi = mat.indptr[col], mat.indptr[col + 1]
            entries = {}
            for r, v in zip(mat.indices[lo:hi], mat.data[lo:hi]):
                if off[kt] <= r < off[kt + 1]:
                    entries[int(r - off[kt])] = Fraction(int(v), s)
                elif v:
                    raise ValueError("operator does not map slice k into slice kt")
            if entries:
                out[col - off[k]] = entries
        return out


def build_iota(base: D.MatrixRep, c) -> GradedModule:
    """The induced module A (x) M with parameter c; operators come from `iota`."""
    return GradedModule(base, c)


# ------------------------------------------------------------------ functor verification

def _grades() -> List[int]:
    return [C.grade(u) for u in C.basis()]


def verify_functor(base: D.MatrixRep, c, maxdeg: int = 3, corrupt: Tuple[int, tuple] | None = None,
                   symbolic: bool = False) -> dict:
    """Evaluate [iota(u), iota(v)] - iota([u, v]) on every slice of degree <= maxdeg for all
    ordered pairs of the 78-element basis.  `corrupt=(index, key)` flips the sign of one matrix
    coefficient of one image (negative control)."""
    if maxdeg < 0:
        raise ValueError("maxdeg must be nonnegative")
    gm = GradedModule(base, c)
    basis = C.basis()
    n = len(basis)
    imgs = list(iota_basis())
    if corrupt is not None:
        idx, key = corrupt
        op = imgs[idx]
        mat = dict(op.mat)
        mat[key] = -mat[key]
        imgs[idx] = ModuleOp(op.diff, mat, op.kappa)
    grades = _grades()
    top = maxdeg + 2
    scale = gm.scale_for(imgs)
    domain_all = list(range(0, maxdeg + 2))
    full = [gm.operator_matrix(op, domain_all, top, scale) for op in imgs]
    ncols = gm.offsets(top)[maxdeg + 1]
    restricted = [m[:, :ncols].tocsr() for m in full]
    structure = []
    for a in range(n):
        row = []
        for b in range(n):
            coords = C.sparse_coordinates(C.bracket(basis[a], basis[b]))
            if any(Fraction(v).denominator != 1 for v in coords.values()):
                raise AssertionError("structure constants are not integral")
            row.append({k: int(v) for k, v in coords.items()})
        structure.append(row)
    failures = []
    checked = 0
    for a in range(n):
        for b in range(a, n):
            pab = full[a] @ restricted[b]
            pba = full[b] @ restricted[a]
            ordered = ((a, b, pab - pba),) if a == b else ((a, b, pab - pba), (b, a, pba - pab))
            for (p, q, lhs) in ordered:
                rhs = sp.csr_matrix(lhs.shape, dtype=np.int64)
                for k, s in structure[p][q].items():
                    rhs = rhs + restricted[k] * (s * scale)
                diff = (lhs - rhs).tocsr()
                diff.eliminate_zeros()
                checked += 1
                if diff.nnz:
                    failures.append({"basis_pair": [p, q], "witness_nonzeros": int(diff.nnz)})
    report = {"identity": "[iota(u), iota(v)] = iota([u, v])", "base": base.name, "c": str(gm.cparam),
              "slice_degree": maxdeg, "checked": checked, "failures": failures,
              "status": "pass" if not failures else "fail"}
    if symbolic:
        sym = symbolic_functor_check()
        report["symbolic"] = {"checked": sym["checked"], "failures": len(sym["failures"]),
                              "injective": sym["injective"]}
        if sym["failures"] or not sym["injective"]:
            report["status"] = "fail"
    return report


def basis_label(k: int) -> str:
    from .e6rep import basis_label as bl

    return bl(k)


# ------------------------------------------------------------------ sparse dict matrices

Columns = Dict[int, Dict[int, Fraction]]


def _matmul(a: Columns, b: Columns) -> Columns:
    """(a b) for column-sparse matrices."""
    out: Columns = {}
    for j, col in b.items():
        acc: Dict[int, Fraction] = {}
        for k, v in col.items():
            for i, w in a.get(k, {}).items():
                acc[i] = acc.get(i, 0) + w * v
        acc = {i: v for i, v in acc.items() if v}
        if acc:
            out[j] = acc
    return out


def _matsub(a: Columns, b: Columns) -> Columns:
    out: Columns = {}
    for j in set(a) | set(b):
        col = dict(a.get(j, {}))
        for i, v in b.get(j, {}).items():
            col[i] = col.get(i, 0) - v
        col = {i: v for i, v in col.items() if v}
        if col:
            out[j] = col
    return out


def _shift(a: Columns, s, n: int) -> Columns:
    """a + s * identity on n coordinates."""
    return _matsub(a, {j: {j: -Fraction(s)} for j in range(n)}) if s else a


# ------------------------------------------------------------------ degree-one slice: split Casimir and phi

@lru_cache(maxsize=None)
def spin_slice_matrix(key: tuple) -> Dict[int, Dict[int, Fraction]]:
    """X_key acting on A_1 = span(x_1..x_16), 0-based column -> {row: value}."""
    sign, ck = C.o10_symbol(*key)
    out: Dict[int, Dict[int, Fraction]] = {}
    if not sign:
        return out
    op = derived_d5_operators()[ck]
    for j in range(1, NVARS + 1):
        col = {m.index(1): sign * v for m, v in op.derive(x(j)).terms.items()}
        if col:
            out[j - 1] = col
    return out


def slice_one_weights(base: D.MatrixRep) -> List[D.Weight]:
    """Weights of the basis x_i (x) e_s of A_1 (x) M, indexed (i - 1) * dim M + s."""
    sw = D.spin_variable_weights()
    return [D.wadd(sw[i], w) for i in range(NVARS) for w in base.weights]


def tilde_omega_columns(base: D.MatrixRep, columns: Iterable[int] | None = None) -> Columns:
    """Split Casimir sum_p A_p (x) B_p on A_1 (x) M (selected columns, default all)."""
    n = base.dimension
    pairs = D.casimir_pairs()
    cols = range(NVARS * n) if columns is None else columns
    b_cache: Dict[Tuple[tuple, int], Dict[int, Fraction]] = {}
    out: Columns = {}
    for idx in cols:
        i, s = divmod(idx, n)
        acc: Dict[int, Fraction] = {}
        for a, b in pairs:
            acol = spin_slice_matrix(a).get(i)
            if not acol:
                continue
            bimg = b_cache.get((b, s))
            if bimg is None:
                bimg = b_cache[(b, s)] = base.act(b, {s: Fraction(1)})
            for r, av in acol.items():
                for t, bv in bimg.items():
                    k = r * n + t
                    acc[k] = acc.get(k, 0) + av * bv
        acc = {k: v for k, v in acc.items() if v}
        if acc:
            out[idx] = acc
    return out


def tilde_omega_action(base: D.MatrixRep) -> Columns:
    return tilde_omega_columns(base)


def phi_action(base: D.MatrixRep, c) -> Columns:
    """phi(x_i (x) v) = iota(eta_i)(1 (x) v), as a map of the degree-one slice."""
    gm = GradedModule(base, c)
    n = base.dimension
    out: Columns = {}
    for i in range(1, NVARS + 1):
        for s, col in gm.exact_slice_matrix(iota_eta(i), 0, 1).items():
            out[(i - 1) * n + s] = col
    return out


def verify_degree_one_phi(base: D.MatrixRep, c) -> dict:
    """phi = tilde_omega - c/2 on the degree-one slice."""
    c = Fraction(c)
    n = NVARS * base.dimension
    diff = _matsub(phi_action(base, c), _shift(tilde_omega_action(base), -c / 2, n))
    return {"identity": "phi = tilde_omega - c/2 on the degree-one slice", "base": base.name, "c": str(c),
            "dimension": n, "mismatched_columns": sorted(diff)[:10],
            "status": "pass" if not diff else "fail"}


def verify_degree_zero_equivariance(base: D.MatrixRep, c) -> dict:
    """tilde_omega and phi commute with the image of every degree-zero basis element on the slice."""
    gm = GradedModule(base, c)
    omega = tilde_omega_action(base)
    phi = phi_action(base, c)
    bad_omega, bad_phi, checked = [], [], 0
    for idx, u in enumerate(C.basis()):
        if C.grade(u) != 0:
            continue
        m = gm.exact_slice_matrix(iota(u), 1, 1)
        checked += 1
        if _matsub(_matmul(m, omega), _matmul(omega, m)):
            bad_omega.append(idx)
        if _matsub(_matmul(m, phi), _matmul(phi, m)):
            bad_phi.append(idx)
    ok = not bad_omega and not bad_phi
    return {"base": base.name, "checked": checked, "omega_failures": bad_omega, "phi_failures": bad_phi,
            "status": "pass" if ok else "fail"}


# ------------------------------------------------------------------ spectrum of the split Casimir

def weyl_orbit_size(mu: Sequence) -> int:
    seen = {D.weight(*mu)}
    todo = list(seen)
    roots = D.simple_roots()
    while todo:
        w = todo.pop()
        for a in roots:
            r = D.wsub(w, D.wscale(D.inner(w, a), a))
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return len(seen)


def omega_spectrum(base: D.MatrixRep) -> dict:
    """Exact eigenvalue multiplicities of tilde_omega on A_1 (x) M.

    The operator commutes with o(10), so each eigenspace is Weyl-stable; the nullity of
    (tilde_omega - e) is computed on dominant weight spaces only and weighted by orbit sizes."""
    lmd = base.highest_weight
    predicted = D.omega_eigenvalues(lmd)
    candidates = sorted(set(predicted.values()))
    weights = slice_one_weights(base)
    blocks: Dict[D.Weight, List[int]] = {}
    for idx, w in enumerate(weights):
        if D.is_dominant(w):
            blocks.setdefault(w, []).append(idx)
    found: Dict[Fraction, int] = {e: 0 for e in candidates}
    unexplained = 0
    for mu, idxs in blocks.items():
        cols = tilde_omega_columns(base, idxs)
        local = {g: i for i, g in enumerate(idxs)}
        block: Columns = {}
        for j, col in cols.items():
            if any(r not in local for r in col):
                raise AssertionError("split Casimir does not preserve weights")
            block[local[j]] = {local[r]: v for r, v in col.items()}
        orbit = weyl_orbit_size(mu)
        total = 0
        for e in candidates:
            shifted = _shift(block, -e, len(idxs))
            null = len(idxs) - rank(shifted.values())
            found[e] += orbit * null
            total += null
        unexplained += orbit * (len(idxs) - total)
    expected: Dict[Fraction, int] = {}
    for lp, e in predicted.items():
        expected[e] = expected.get(e, 0) + D.weyl_dim(lp)
    present = [e for e in candidates if found[e]]
    ok = unexplained == 0 and found == expected and sum(found.values()) == len(weights)
    return {"base": base.name, "highest_weight": D.fmt_weight(lmd), "dimension": len(weights),
            "components": {D.fmt_weight(lp): str(e) for lp, e in predicted.items()},
            "multiplicities": {str(e): m for e, m in found.items()},
            "expected_multiplicities": {str(e): m for e, m in expected.items()},
            "unexplained": unexplained, "ell": min(present) if present else None,
            "status": "pass" if ok else "fail"}


# ------------------------------------------------------------------ the operators T_i

def _sigma(k: int) -> int:
    return k + 5 if k <= 5 else k - 5


def natural_action(key: tuple, j: int) -> Dict[int, int]:
    """X_{a,b} e_j on the 10-dimensional module (1-based indices)."""
    a, b = key
    out: Dict[int, int] = {}
    if b == j:
        out[a] = out.get(a, 0) + 1
    if _sigma(a) == j:
        out[_sigma(b)] = out.get(_sigma(b), 0) - 1
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def quadratic_combination_operator() -> ModuleOp:
    """sum sign * iota(eta_p) x_j over the fixed eight-term combination."""
    out = ModuleOp()
    for sign, p, j in T.QUADRATIC_COMBINATION:
        out = out + iota_eta(p).compose_mult(x(j)).scale(sign)
    return out


def expected_T(a: int, shift: int = 6) -> ModuleOp:
    """zeta_a (D - c - shift) + sum_b zeta_b X_{a,b}."""
    za = T_zeta(a)
    diff = DiffOp.euler(X).left_mul(za) + DiffOp.mult(za.scale(-shift))
    return ModuleOp(diff, {(a, b): T_zeta(b) for b in range(1, 11)}, za.scale(-1))


@lru_cache(maxsize=None)
def build_T_ops() -> Dict[int, ModuleOp]:
    """T_1 from the eight-term combination, the rest by the bracket chain."""
    out = {1: quadratic_combination_operator()}
    for target, sign, key, source in T.T_CHAIN:
        out[target] = iota_o10(key).bracket(out[source]).scale(sign)
    return out


def verify_T_ops() -> dict:
    ops = build_T_ops()
    checks = []
    for a in range(1, 11):
        checks.append({"name": f"T_{a} = zeta_{a}(D - c - 6) + sum_b zeta_b X_({a},b)",
                       "status": "pass" if ops[a] == expected_T(a) else "fail"})
    bad = []
    for key in C.O10_KEYS:
        x_op = iota_o10(key)
        for j in range(1, 11):
            got = x_op.bracket(ops[j])
            want = ModuleOp()
            for r, v in natural_action(key, j).items():
                want = want + ops[r].scale(v)
            if got != want:
                bad.append((key, j))
    checks.append({"name": "span of T_1..T_10 is the natural module", "status": "pass" if not bad else "fail",
                   "detail": f"{450 - len(bad)}/450 brackets agree"})
    singular = all(iota_o10(k).bracket(ops[1]).is_zero() for k in C.positive_keys())
    weight_ok = all(iota_o10((r, r)).bracket(ops[1]) == ops[1].scale(int(r == 1)) for r in range(1, 6))
    checks.append({"name": "T_1 is singular of weight eps_1", "status": "pass" if singular and weight_ok else "fail"})
    return {"ok": all(ch["status"] == "pass" for ch in checks), "checks": checks}


def _zeta_coordinates(f: Poly) -> Dict[int, Fraction]:
    """Write a quadratic polynomial in the (monomial-disjoint) basis zeta_1..zeta_10."""
    coords: Dict[int, Fraction] = {}
    rest = f
    for b in range(1, 11):
        z = T_zeta(b)
        lead, lc = next(iter(sorted(z.terms.items())))
        c = rest.coeff(lead) / lc
        if c:
            coords[b] = c
            rest = rest - z.scale(c)
    if rest:
        raise ValueError("polynomial is not in the span of the zetas")
    return coords


@lru_cache(maxsize=None)
def t_prime_table() -> Dict[int, Dict[int, Dict[tuple, Fraction]]]:
    """T'_a = sum_b zeta_b (x) Y_{a,b}; returns a -> b -> {o(10) key: coefficient}."""
    out: Dict[int, Dict[int, Dict[tuple, Fraction]]] = {}
    for a, op in build_T_ops().items():
        rows: Dict[int, Dict[tuple, Fraction]] = {}
        for key, f in op.mat.items():
            for b, c in _zeta_coordinates(f).items():
                rows.setdefault(b, {})[key] = c
        out[a] = rows
    return out


def singular_vectors_in_natural_product(base: D.MatrixRep, lmd_prime) -> Tuple[List[Tuple[int, int]], List[Dict[int, Fraction]]]:
    """Vectors sum zeta_a (x) u_a of weight lmd_prime killed by the simple raising operators.
    Returns (basis pairs (a, s), nullspace vectors indexed into that list)."""
    lmd_prime = D.weight(*lmd_prime)
    by_weight: Dict[D.Weight, List[int]] = {}
    for s, w in enumerate(base.weights):
        by_weight.setdefault(w, []).append(s)
    basis = [(a, s) for a in range(1, 11)
             for s in by_weight.get(D.wsub(lmd_prime, D.y_weight(a)), [])]
    rows: Dict[Tuple[tuple, int, int], Dict[int, Fraction]] = {}
    for col, (a, s) in enumerate(basis):
        for key in C.SIMPLE_RAISING:
            for r, v in natural_action(key, a).items():
                e = rows.setdefault((key, r, s), {})
                e[col] = e.get(col, 0) + v
            for t, v in base.act(key, {s: Fraction(1)}).items():
                e = rows.setdefault((key, a, t), {})
                e[col] = e.get(col, 0) + v
    return basis, nullspace(rows.values(), len(basis))


def flat_component(base: D.MatrixRep, lmd_prime) -> Fraction:
    """The constant f with sum_a T'_a(u_a) = f u for the singular vector u of weight lmd_prime."""
    basis, vecs = singular_vectors_in_natural_product(base, lmd_prime)
    if not vecs:
        raise LookupError(f"no singular vector of weight {D.fmt_weight(lmd_prime)} in {base.name}")
    if len(vecs) > 1:
        raise LookupError(f"singular vectors of weight {D.fmt_weight(lmd_prime)} are not unique")
    u = {basis[i]: v for i, v in vecs[0].items()}
    tp = t_prime_table()
    w: Dict[Tuple[int, int], Fraction] = {}
    for (a, s), coeff in u.items():
        for b, elt in tp[a].items():
            for t, v in base.act_element(elt, {s: coeff}).items():
                w[(b, t)] = w.get((b, t), 0) + v
    w = {k: v for k, v in w.items() if v}
    lead = min(u)
    ratio = w.get(lead, Fraction(0)) / u[lead]
    if any(w.get(k, 0) != ratio * u.get(k, 0) for k in set(u) | set(w)):
        raise ArithmeticError(f"T' image is not proportional to the singular vector of weight "
                              f"{D.fmt_weight(lmd_prime)}")
    return ratio


def flat(family: str, k: int = 1, base: D.MatrixRep | None = None) -> dict:
    """Per-component constants over Upsilon'(lambda) and their minimum."""
    base = base or D.realize(family, k)
    table = {lp: flat_component(base, lp) for lp in D.upsilon_prime(base.highest_weight)}
    return {"family": family, "k": k, "highest_weight": base.highest_weight, "components": table,
            "flat": min(table.values())}


# ------------------------------------------------------------------ exclusion sets

def _progression_points(offset, step, lo, hi) -> set:
    offset, step = Fraction(offset), Fraction(step)
    out = set()
    v = offset
    while v <= hi:
        if v >= lo:
            out.add(v)
        v += step
    return out


def describe_progression(offset, step) -> str:
    offset = Fraction(offset)
    head = "N" if step == 1 else f"{step}N"
    if offset == 0:
        return head
    return f"{head}{'+' if offset > 0 else '-'}{abs(offset)}"


def printed_exclusions(family: str, k: int = 1) -> dict:
    entry = T.PRINTED_EXCLUSIONS[family]
    progs = [(Fraction(c0) + Fraction(c1) * k, step) for (c0, c1), step in entry["progressions"]]
    return {"progressions": progs, "points": [Fraction(p) for p in entry["points"]]}


def exclusion_set(progressions, points=(), lo=-100, hi=100) -> set:
    out = {Fraction(p) for p in points if lo <= p <= hi}
    for off, step in progressions:
        out |= _progression_points(off, step, lo, hi)
    return out


def is_excluded(c, progressions, points=()) -> bool:
    c = Fraction(c)
    if c in {Fraction(p) for p in points}:
        return True
    for off, step in progressions:
        n = (c - Fraction(off)) / Fraction(step)
        if n.denominator == 1 and n >= 0:
            return True
    return False


def irreducibility_exclusions(family: str, k: int = 1, window: Tuple[int, int] = (-100, 100),
                              base: D.MatrixRep | None = None) -> dict:
    """The two progressions {flat - 6 + N} and {2 ell + 2N}, compared with the printed sets."""
    lmd = D.family_weight(family, k)
    fl = flat(family, k, base)["flat"]
    ell = D.ell_omega(lmd)
    progs = [(fl - 6, 1), (2 * ell, 2)]
    printed = printed_exclusions(family, k)
    lo, hi = window
    ours = exclusion_set(progs, (), lo, hi)
    theirs = exclusion_set(printed["progressions"], printed["points"], lo, hi)
    redundant = _progression_points(2 * ell, 2, lo, hi) <= _progression_points(fl - 6, 1, lo, hi)
    notes = []
    if redundant and len(printed["progressions"]) == 1 and not printed["points"]:
        notes.append(f"printed set lists only {describe_progression(fl - 6, 1)}; the second progression "
                     f"{describe_progression(2 * ell, 2)} is contained in it")
    return {"family": family, "k": k, "flat": fl, "ell": ell,
            "progressions": [{"offset": off, "step": step, "text": describe_progression(off, step)}
                             for off, step in progs],
            "printed": [describe_progression(o, s) for o, s in printed["progressions"]]
                       + [str(p) for p in printed["points"]],
            "window": list(window), "matches_printed": ours == theirs,
            "only_computed": sorted(ours - theirs)[:8], "only_printed": sorted(theirs - ours)[:8],
            "second_progression_redundant": redundant, "notes": notes}


# ------------------------------------------------------------------ quadratic identity on induced modules

def verify_quadratic_identity_module(base: D.MatrixRep, c=Fraction(1, 3), maxdeg: int = 3) -> dict:
    """sum sign * iota(eta_p) x_j = T_1 symbolically and as composed slice matrices."""
    lhs, rhs = quadratic_combination_operator(), expected_T(1)
    gm = GradedModule(base, c)
    top = maxdeg + 2
    etas = {p: iota_eta(p) for _, p, _ in T.QUADRATIC_COMBINATION}
    s_eta = gm.scale_for(etas.values())
    s_rhs = gm.scale_for([rhs])
    acc = None
    for sign, p, j in T.QUADRATIC_COMBINATION:
        mx = gm.operator_matrix(ModuleOp(DiffOp.mult(x(j))), range(maxdeg + 1), top)
        me = gm.operator_matrix(etas[p], range(1, maxdeg + 2), top, s_eta)
        term = (me @ mx) * sign
        acc = term if acc is None else acc + term
    want = gm.operator_matrix(rhs, range(maxdeg + 1), top, s_rhs)
    diff = (acc * s_rhs - want * s_eta).tocsr()
    diff.eliminate_zeros()
    ok = lhs == rhs and diff.nnz == 0
    return {"identity": "sum sign iota(eta_p) x_j = zeta_1 (D - c - 6) + sum_b zeta_b X_(1,b)",
            "base": base.name, "c": str(Fraction(c)), "slice_degree": maxdeg, "symbolic": lhs == rhs,
            "witness_nonzeros": int(diff.nnz), "status": "pass" if ok else "fail"}


# ------------------------------------------------------------------ rank probe

PROBE_PRIME = 67108859  # below 2**26, so products of residues summed over a row fit in int64


def degree_one_rank(base: D.MatrixRep, c) -> int:
    """Exact rank of span{iota(eta_i)(1 (x) v)} in the degree-one slice."""
    return rank(phi_action(base, c).values())


def rank_probe(base: D.MatrixRep, c, maxdeg: int = 3, p: int = PROBE_PRIME) -> dict:
    """Dimensions of the spans S_d = sum_i iota(eta_i) S_{d-1}, S_0 = 1 (x) M, over F_p.

    Full rank mod p certifies full rank over the rationals; a deficiency at degree one is
    confirmed by an exact computation."""
    from .linalg import row_basis_mod_p

    gm = GradedModule(base, c)
    ops = [iota_eta(i) for i in range(1, NVARS + 1)]
    s = gm.scale_for(ops)
    mats = [gm.operator_matrix(op, range(maxdeg), maxdeg, s, modulus=p) for op in ops]
    off = gm.offsets(maxdeg)
    n = off[-1]
    current = np.zeros((gm.dim_m, n), dtype=np.int64)
    current[:, :gm.dim_m] = np.eye(gm.dim_m, dtype=np.int64)
    degrees = []
    for d in range(1, maxdeg + 1):
        images = np.vstack([(m @ current.T).T % p for m in mats])
        local = row_basis_mod_p(images[:, off[d]:off[d + 1]], p)
        full = off[d + 1] - off[d]
        entry = {"degree": d, "rank_mod_p": int(local.shape[0]), "slice_dimension": full}
        if d == 1:
            entry["exact_rank"] = degree_one_rank(base, c)
        entry["full"] = entry.get("exact_rank", entry["rank_mod_p"]) == full
        degrees.append(entry)
        current = np.zeros((local.shape[0], n), dtype=np.int64)
        current[:, off[d]:off[d + 1]] = local
    return {"base": base.name, "c": str(Fraction(c)), "prime": p, "degrees": degrees,
            "first_deficient_degree": next((e["degree"] for e in degrees if not e["full"]), None)}
