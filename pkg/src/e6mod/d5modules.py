"""Weights of o(10) (type D5), the Weyl dimension formula, Casimir values, and
explicit finite-dimensional modules given by sparse rational matrices."""
from __future__ import annotations

import heapq
import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from . import chevalley as C
from .linalg import RowEchelon, nullspace

RANK = 5
DIMENSION_GUARD = 20000
HALF = Fraction(1, 2)

Weight = Tuple[Fraction, ...]


def weight(*coords) -> Weight:
    if len(coords) == 1 and not isinstance(coords[0], (int, Fraction)):
        coords = tuple(coords[0])
    if len(coords) != RANK:
        raise ValueError("D5 weights have 5 epsilon coordinates")
    return tuple(Fraction(c) for c in coords)


def wadd(a: Sequence, b: Sequence) -> Weight:
    return tuple(Fraction(x) + y for x, y in zip(a, b))


def wsub(a: Sequence, b: Sequence) -> Weight:
    return tuple(Fraction(x) - y for x, y in zip(a, b))


def wscale(s, a: Sequence) -> Weight:
    return tuple(Fraction(s) * x for x in a)


def inner(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


def eps(i: int) -> Weight:
    return tuple(Fraction(int(j == i - 1)) for j in range(RANK))


ZERO = weight(0, 0, 0, 0, 0)
LAMBDA1 = eps(1)
LAMBDA2 = wadd(eps(1), eps(2))
LAMBDA3 = wadd(LAMBDA2, eps(3))
LAMBDA4 = weight(HALF, HALF, HALF, HALF, -HALF)
LAMBDA5 = weight(HALF, HALF, HALF, HALF, HALF)


def rho() -> Weight:
    return weight(4, 3, 2, 1, 0)


def positive_roots() -> List[Weight]:
    out = []
    for i in range(1, RANK + 1):
        for j in range(i + 1, RANK + 1):
            out.append(wsub(eps(i), eps(j)))
            out.append(wadd(eps(i), eps(j)))
    return out


def simple_roots() -> List[Weight]:
    return [wsub(eps(i), eps(i + 1)) for i in range(1, RANK)] + [wadd(eps(4), eps(5))]


def is_dominant(mu: Sequence) -> bool:
    mu = weight(mu)
    if any((2 * m).denominator != 1 for m in mu):
        return False
    diffs = [mu[i] - mu[i + 1] for i in range(RANK - 1)] + [mu[3] + mu[4]]
    return all(d.denominator == 1 and d >= 0 for d in diffs)


def _require_dominant(mu) -> Weight:
    mu = weight(mu)
    if not is_dominant(mu):
        raise ValueError(f"{fmt_weight(mu)} is not dominant integral")
    return mu


def weyl_dim(mu: Sequence) -> int:
    mu = _require_dominant(mu)
    r = rho()
    num = Fraction(1)
    for a in positive_roots():
        num *= inner(wadd(mu, r), a) / inner(r, a)
    if num.denominator != 1:
        raise AssertionError("Weyl dimension is not an integer")
    return int(num)


def casimir_eig(mu: Sequence) -> Fraction:
    mu = _require_dominant(mu)
    return inner(wadd(mu, wscale(2, rho())), mu)


def spin_weights() -> List[Weight]:
    """Weights of the 16-dimensional module: half-signs with an odd number of minus signs."""
    out = []
    for signs in itertools.product((1, -1), repeat=RANK):
        if signs.count(-1) % 2 == 1:
            out.append(weight(*[HALF * s for s in signs]))
    return out


def natural_weights() -> List[Weight]:
    return [eps(i) for i in range(1, RANK + 1)] + [wscale(-1, eps(i)) for i in range(1, RANK + 1)]


def _shifted_dominant(lmd, shifts) -> List[Weight]:
    lmd = _require_dominant(lmd)
    out = {wadd(lmd, m) for m in shifts}
    return sorted((w for w in out if is_dominant(w)), key=lambda w: tuple(-x for x in w))


def upsilon(lmd) -> List[Weight]:
    return _shifted_dominant(lmd, spin_weights())


def upsilon_prime(lmd) -> List[Weight]:
    return _shifted_dominant(lmd, natural_weights())


def omega_split_eigenvalue(lmd, lmd_prime) -> Fraction:
    """Eigenvalue of the split Casimir on the V(lmd') component of (spin) x V(lmd)."""
    return (casimir_eig(lmd_prime) - casimir_eig(lmd) - casimir_eig(LAMBDA4)) / 2


def omega_eigenvalues(lmd) -> Dict[Weight, Fraction]:
    return {lp: omega_split_eigenvalue(lmd, lp) for lp in upsilon(lmd)}


def ell_omega(lmd) -> Fraction:
    return min(omega_eigenvalues(lmd).values())


def fmt_weight(mu: Sequence) -> str:
    return "(" + ", ".join(str(Fraction(m)) for m in mu) + ")"


def harmonic_dimension(k: int) -> int:
    return comb(k + 9, 9) - (comb(k + 7, 9) if k >= 2 else 0)


# ------------------------------------------------------------------ matrix modules

SparseVec = Dict[int, Fraction]
SparseMat = Dict[int, SparseVec]  # column -> {row: value}


class MatrixRep:
    """A finite-dimensional o(10)-module: 45 sparse rational matrices on a weight basis."""

    def __init__(self, name: str, highest_weight: Weight, weights: List[Weight],
                 action: Dict[tuple, SparseMat], labels: List[str] | None = None):
        self.name = name
        self.highest_weight = weight(highest_weight)
        self.weights = [weight(w) for w in weights]
        self.dimension = len(self.weights)
        self.action = action
        self.labels = labels or [f"v{i}" for i in range(self.dimension)]
        self._int_cache: Dict[tuple, sp.csc_matrix] = {}

    def __repr__(self) -> str:
        return f"MatrixRep({self.name}, dim={self.dimension}, hw={fmt_weight(self.highest_weight)})"

    def act(self, key, vec: Mapping[int, Fraction]) -> SparseVec:
        """Apply X_key (any index pair, canonical or not) to a sparse vector."""
        sign, ckey = C.o10_symbol(*key)
        out: SparseVec = {}
        if not sign:
            return out
        mat = self.action[ckey]
        for j, v in vec.items():
            col = mat.get(j)
            if col:
                for i, a in col.items():
                    out[i] = out.get(i, 0) + sign * a * v
        return {i: v for i, v in out.items() if v}

    def act_element(self, coeffs: Mapping[tuple, Fraction], vec: Mapping[int, Fraction]) -> SparseVec:
        out: SparseVec = {}
        for k, c in coeffs.items():
            for i, v in self.act(k, vec).items():
                out[i] = out.get(i, 0) + c * v
        return {i: v for i, v in out.items() if v}

    def column(self, key, j: int) -> SparseVec:
        return self.act(key, {j: Fraction(1)})

    def denominator(self) -> int:
        from math import lcm

        d = 1
        for mat in self.action.values():
            for col in mat.values():
                for v in col.values():
                    d = lcm(d, v.denominator)
        return d

    def int_matrix(self, key, scale: int) -> sp.csc_matrix:
        ck = (key, scale)
        if ck not in self._int_cache:
            rows, cols, vals = [], [], []
            for j, col in self.action[key].items():
                for i, v in col.items():
                    w = v * scale
                    if w.denominator != 1:
                        raise ValueError("scale does not clear denominators")
                    rows.append(i)
                    cols.append(j)
                    vals.append(int(w))
            self._int_cache[ck] = sp.csc_matrix(
                (np.array(vals, dtype=np.int64), (rows, cols)), shape=(self.dimension, self.dimension))
        return self._int_cache[ck]

    def check_commutation(self) -> List[tuple]:
        """All ordered pairs of basis keys whose matrices violate [X_a, X_b] = X_[a,b]."""
        s = self.denominator()
        mats = {k: self.int_matrix(k, s) for k in C.O10_KEYS}
        bad = []
        for a in C.O10_KEYS:
            for b in C.O10_KEYS:
                lhs = mats[a] @ mats[b] - mats[b] @ mats[a]
                rhs = sp.csc_matrix((self.dimension, self.dimension), dtype=np.int64)
                for k, c in C.o10_decompose(C.mat_commutator(C.o10_matrix(a), C.o10_matrix(b))).items():
                    rhs = rhs + mats[k] * (int(c) * s)
                diff = lhs - rhs
                if diff.count_nonzero():
                    bad.append((a, b))
        return bad

    def check_weights(self) -> bool:
        for r, key in enumerate(C.CARTAN_KEYS):
            mat = self.action[key]
            for j, w in enumerate(self.weights):
                col = mat.get(j, {})
                expect = {j: w[r]} if w[r] else {}
                if col != expect:
                    return False
        return True

    def casimir(self, vec: Mapping[int, Fraction]) -> SparseVec:
        return apply_casimir(lambda key, v: self.act(key, v), vec)

    def highest_weight_index(self) -> int:
        return self.weights.index(self.highest_weight)

    def weight_indices(self, mu) -> List[int]:
        mu = weight(mu)
        return [i for i, w in enumerate(self.weights) if w == mu]


def casimir_pairs() -> List[Tuple[tuple, tuple]]:
    """Ordered pairs (A, B) with omega = sum A B, as index pairs of X's."""
    pairs = []
    for i in range(1, 6):
        for j in range(i + 1, 6):
            pairs.append(((i, 5 + j), (5 + j, i)))
            pairs.append(((5 + j, i), (i, 5 + j)))
    for i in range(1, 6):
        for j in range(1, 6):
            pairs.append(((i, j), (j, i)))
    return pairs


def apply_casimir(act, vec):
    out: SparseVec = {}
    for a, b in casimir_pairs():
        for i, v in act(a, act(b, vec)).items():
            out[i] = out.get(i, 0) + v
    return {i: v for i, v in out.items() if v}


# ------------------------------------------------------------------ polynomial realizations

def y_operator_terms(key) -> List[tuple]:
    """X_{a,b} on C[y_1..y_10] as (coeff, i, j) for y_i d/dy_j."""
    a, b = key
    s = lambda k: k + 5 if k <= 5 else k - 5
    terms = [(1, a, b)]
    terms.append((-1, s(b), s(a)))
    out: Dict[tuple, int] = {}
    for c, i, j in terms:
        out[(i, j)] = out.get((i, j), 0) + c
    return [(c, i, j) for (i, j), c in out.items() if c]


def y_weight(i: int) -> Weight:
    return eps(i) if i <= 5 else wscale(-1, eps(i - 5))


@lru_cache(maxsize=None)
def spin_operator_terms() -> Dict[tuple, List[tuple]]:
    """The o(10) action on the 16 spin variables, as (coeff, i, j) term lists."""
    from .e6rep import derived_d5_operators

    out = {}
    for k, op in derived_d5_operators().items():
        terms = []
        for j, f in op.vec.items():
            for m, c in f.terms.items():
                terms.append((c, m.index(1) + 1, j))
        out[k] = terms
    return out


@lru_cache(maxsize=None)
def spin_variable_weights() -> Tuple[Weight, ...]:
    terms = spin_operator_terms()
    ws = []
    for i in range(1, 17):
        ws.append(tuple(Fraction(sum(c for c, a, b in terms[(r, r)] if a == i and b == i)) for r in range(1, 6)))
    return tuple(ws)


def apply_terms(terms, poly: Mapping[tuple, Fraction]) -> Dict[tuple, Fraction]:
    """Apply sum c * v_i d/dv_j to a raw polynomial {exponent: coeff}."""
    out: Dict[tuple, Fraction] = {}
    for m, v in poly.items():
        for c, i, j in terms:
            e = m[j - 1]
            if e:
                mm = list(m)
                mm[j - 1] -= 1
                mm[i - 1] += 1
                mm = tuple(mm)
                out[mm] = out.get(mm, 0) + c * e * v
    return {m: v for m, v in out.items() if v}


def monomial_weight(m, var_weights) -> Weight:
    w = [Fraction(0)] * RANK
    for i, e in enumerate(m):
        if e:
            for r in range(RANK):
                w[r] += e * var_weights[i][r]
    return tuple(w)


class _WeightSpaces:
    """Per-weight echelon bases of polynomial (or other sparse) vectors with a
    shared monomial index."""

    def __init__(self):
        self.index: Dict[tuple, int] = {}
        self.monos: List[tuple] = []
        self.spaces: Dict[Weight, RowEchelon] = {}

    def encode(self, poly: Mapping[tuple, Fraction]) -> Dict[int, Fraction]:
        out = {}
        for m, v in poly.items():
            k = self.index.get(m)
            if k is None:
                k = self.index[m] = len(self.monos)
                self.monos.append(m)
            out[k] = v
        return out

    def add(self, w: Weight, poly) -> bool:
        ech = self.spaces.setdefault(w, RowEchelon())
        return ech.add(self.encode(poly)) is not None

    def finalize(self) -> Tuple[List[Weight], List[Dict[int, Fraction]], List[int]]:
        weights, vectors, pivots = [], [], []
        for w in sorted(self.spaces, key=lambda w: (-inner(w, rho()), tuple(-x for x in w))):
            ech = self.spaces[w]
            for p in sorted(ech.pivots):
                weights.append(w)
                vectors.append(ech.pivots[p])
                pivots.append(p)
        return weights, vectors, pivots


def _action_from_vectors(ws: _WeightSpaces, weights, vectors, pivots, op_terms, var_weights) -> Dict[tuple, SparseMat]:
    """Matrices of the 45 operators in the echelon basis; membership is verified."""
    pivot_to_basis = {p: n for n, p in enumerate(pivots)}
    action: Dict[tuple, SparseMat] = {}
    for key in C.O10_KEYS:
        terms = op_terms(key)
        mat: SparseMat = {}
        for n, vec in enumerate(vectors):
            poly = {ws.monos[k]: v for k, v in vec.items()}
            img = apply_terms(terms, poly)
            if not img:
                continue
            enc = ws.encode(img)
            col = {}
            for p, v in enc.items():
                if p in pivot_to_basis:
                    col[pivot_to_basis[p]] = v
            # residual must vanish
            resid = dict(enc)
            for b, cf in col.items():
                for k, v in vectors[b].items():
                    nv = resid.get(k, 0) - cf * v
                    if nv:
                        resid[k] = nv
                    else:
                        resid.pop(k, None)
            if resid:
                raise AssertionError(f"span not closed under X{key}")
            mat[n] = col
        action[key] = mat
    return action


def _lowering_closure(seed_poly, seed_weight, lowering_terms, guard: int) -> _WeightSpaces:
    ws = _WeightSpaces()
    ws.add(seed_weight, seed_poly)
    heap = [(-inner(seed_weight, rho()), seed_weight)]
    queued = {seed_weight}
    total = 1
    while heap:
        _, w = heapq.heappop(heap)
        ech = ws.spaces[w]
        basis = [dict(v) for v in ech.pivots.values()]
        for key, terms, shift in lowering_terms:
            target = wadd(w, shift)
            for vec in basis:
                img = apply_terms(terms, {ws.monos[k]: v for k, v in vec.items()})
                if img:
                    if ws.add(target, img):
                        total += 1
                        if total > guard:
                            raise ValueError(f"module dimension exceeds the guard {guard}")
                    if target not in queued:
                        queued.add(target)
                        heapq.heappush(heap, (-inner(target, rho()), target))
    return ws


def _poly_rep(name, hw, ws: _WeightSpaces, op_terms, var_weights) -> MatrixRep:
    weights, vectors, pivots = ws.finalize()
    action = _action_from_vectors(ws, weights, vectors, pivots, op_terms, var_weights)
    labels = [_render_raw({ws.monos[k]: v for k, v in vec.items()}, name[0]) for vec in vectors]
    rep = MatrixRep(name, hw, weights, action, labels)
    rep.basis_polys = [{ws.monos[k]: v for k, v in vec.items()} for vec in vectors]
    return rep


def _render_raw(poly, var) -> str:
    from .polydiff import Poly

    n = len(next(iter(poly)))
    vs = {10: "y", 16: "z"}.get(n, "x")
    return Poly(poly, vs).render()


def trivial() -> MatrixRep:
    return MatrixRep("trivial", ZERO, [ZERO], {k: {} for k in C.O10_KEYS}, ["1"])


@lru_cache(maxsize=None)
def harmonic(k: int, guard: int = DIMENSION_GUARD) -> MatrixRep:
    """Harmonic polynomials of degree k in y_1..y_10: kernel of sum d_{y_i} d_{y_{5+i}}."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if harmonic_dimension(k) > guard:
        raise ValueError(f"module dimension exceeds the guard {guard}")
    from .polydiff import monomials

    var_w = [y_weight(i) for i in range(1, 11)]
    by_weight: Dict[Weight, List[tuple]] = {}
    for m in monomials(10, k):
        by_weight.setdefault(monomial_weight(m, var_w), []).append(m)
    ws = _WeightSpaces()
    for w, monos in by_weight.items():
        rows: Dict[tuple, Dict[int, Fraction]] = {}
        for col, m in enumerate(monos):
            for i in range(5):
                a, b = m[i], m[5 + i]
                if a and b:
                    mm = list(m)
                    mm[i] -= 1
                    mm[5 + i] -= 1
                    rows.setdefault(tuple(mm), {})[col] = Fraction(a * b)
        for vec in nullspace(list(rows.values()), len(monos)):
            ws.add(w, {monos[c]: v for c, v in vec.items()})
    return _poly_rep(f"harmonic({k})", wscale(k, eps(1)), ws, y_operator_terms, var_w)


def natural() -> MatrixRep:
    return harmonic(1)


@lru_cache(maxsize=None)
def exterior(r: int) -> MatrixRep:
    """The r-th exterior power of the natural module, basis theta_I with I increasing."""
    from .polydiff import ExteriorElt, exterior_act

    subsets = list(itertools.combinations(range(1, 11), r))
    wt = lambda I: tuple(sum((y_weight(i)[q] for i in I), Fraction(0)) for q in range(RANK))
    order = sorted(range(len(subsets)), key=lambda n: (-inner(wt(subsets[n]), rho()), tuple(-x for x in wt(subsets[n])), subsets[n]))
    subsets = [subsets[n] for n in order]
    index = {I: n for n, I in enumerate(subsets)}
    s = lambda k: k + 5 if k <= 5 else k - 5
    action: Dict[tuple, SparseMat] = {}
    for key in C.O10_KEYS:
        a, b = key
        mat: SparseMat = {}
        for n, I in enumerate(subsets):
            w = ExteriorElt.basis(*I)
            img = exterior_act(a, b, w) + exterior_act(s(b), s(a), w).scale(-1)
            if img.terms:
                mat[n] = {index[J]: v for J, v in img.terms.items()}
        action[key] = mat
    hw = wt(tuple(range(1, r + 1))) if r <= 5 else None
    labels = ["th" + "".join(f"_{i}" for i in I) for I in subsets]
    return MatrixRep(f"exterior({r})", hw, [wt(I) for I in subsets], action, labels)


def _lowering_y(key):
    return y_operator_terms(key)


@lru_cache(maxsize=None)
def spin_power(k: int, guard: int = DIMENSION_GUARD) -> MatrixRep:
    """Submodule of C[z_1..z_16] generated by z_1^k (the spin action on z's)."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    hw = wscale(k, LAMBDA4)
    if weyl_dim(hw) > guard:
        raise ValueError(f"module dimension exceeds the guard {guard}")
    terms = spin_operator_terms()
    var_w = spin_variable_weights()
    lowering = [(key, terms[C.o10_symbol(*key)[1]] if C.o10_symbol(*key)[0] == 1 else
                 [(-c, i, j) for c, i, j in terms[C.o10_symbol(*key)[1]]], C.o10_weight(C.o10_symbol(*key)[1]) if C.o10_symbol(*key)[0] == 1 else C.o10_weight(C.o10_symbol(*key)[1]))
                for key in C.SIMPLE_LOWERING]
    lowering = [(key, t, tuple(Fraction(x) for x in w)) for key, t, w in lowering]
    seed = {tuple(k if i == 0 else 0 for i in range(16)): Fraction(1)}
    ws = _lowering_closure(seed, hw, lowering, guard)
    return _poly_rep(f"spin_power({k})", hw, ws, lambda key: terms[key], var_w)


SWAP_5_10 = {5: 10, 10: 5}


def conjugate(rep: MatrixRep, name: str | None = None) -> MatrixRep:
    """Twist by the outer automorphism induced by swapping indices 5 and 10
    (negates the fifth weight coordinate)."""
    sw = lambda k: SWAP_5_10.get(k, k)
    action: Dict[tuple, SparseMat] = {}
    for key in C.O10_KEYS:
        sign, src = C.o10_symbol(sw(key[0]), sw(key[1]))
        action[key] = {j: {i: sign * v for i, v in col.items()} for j, col in rep.action[src].items()} if sign else {}
    flip = lambda w: w[:4] + (-w[4],)
    return MatrixRep(name or f"conjugate({rep.name})", flip(rep.highest_weight), [flip(w) for w in rep.weights],
                     action, rep.labels)


@lru_cache(maxsize=None)
def conjugate_spin_power(k: int, guard: int = DIMENSION_GUARD) -> MatrixRep:
    return conjugate(spin_power(k, guard), f"conjugate_spin_power({k})")


FAMILIES = ("trivial", "natural", "lambda2", "lambda3", "spin4", "spin5")


def family_weight(family: str, k: int = 1) -> Weight:
    if family == "trivial":
        return ZERO
    if family == "natural":
        return wscale(k, eps(1))
    if family == "lambda2":
        return LAMBDA2
    if family == "lambda3":
        return LAMBDA3
    if family == "spin4":
        return wscale(k, LAMBDA4)
    if family == "spin5":
        return wscale(k, LAMBDA5)
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def realize(family: str, k: int = 1, guard: int = DIMENSION_GUARD) -> MatrixRep:
    """Concrete module for a family name (aliases: natural-power, exterior r, spin-power)."""
    if family == "trivial":
        return trivial()
    if family in ("natural", "natural-power", "harmonic"):
        return harmonic(k, guard)
    if family == "lambda2":
        return exterior(2)
    if family == "lambda3":
        return exterior(3)
    if family == "exterior":
        if k not in (2, 3):
            raise ValueError("exterior realizations are provided for r = 2, 3")
        return exterior(k)
    if family in ("spin4", "spin-power"):
        return spin_power(k, guard)
    if family == "spin5":
        return conjugate_spin_power(k, guard)
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
