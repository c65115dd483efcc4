"""The Lie algebra of type E6 in a Chevalley-type basis, its invariant form,
the 3-term grading by the alpha_6 coefficient, and the embedding of o(10)."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple

from . import lattice as L

Root = Tuple[int, ...]
ZERO6 = (Fraction(0),) * L.RANK


def _frac_vec(v: Iterable) -> tuple:
    return tuple(Fraction(x) for x in v)


class LieElement:
    """h + sum c_a E_a with h a rational combination of simple roots."""

    __slots__ = ("cartan", "roots")

    def __init__(self, cartan: Iterable = ZERO6, roots: Mapping[Root, object] | None = None):
        self.cartan = _frac_vec(cartan)
        clean: Dict[Root, Fraction] = {}
        if roots:
            rs = L.root_set()
            for k, v in roots.items():
                k = tuple(k)
                if k not in rs:
                    raise ValueError(f"{k} is not a root")
                v = Fraction(v)
                if v:
                    clean[k] = v
        self.roots = clean

    # constructors
    @classmethod
    def root_vector(cls, r: Root, coeff=1) -> "LieElement":
        return cls(ZERO6, {tuple(r): coeff})

    @classmethod
    def cartan_element(cls, h: Iterable) -> "LieElement":
        return cls(h, None)

    # arithmetic
    def __add__(self, other: "LieElement") -> "LieElement":
        roots = dict(self.roots)
        for k, v in other.roots.items():
            roots[k] = roots.get(k, 0) + v
        return LieElement(tuple(a + b for a, b in zip(self.cartan, other.cartan)), roots)

    def __neg__(self) -> "LieElement":
        return self.scaled(-1)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def scaled(self, s) -> "LieElement":
        s = Fraction(s)
        return LieElement(tuple(s * a for a in self.cartan), {k: s * v for k, v in self.roots.items()})

    __rmul__ = lambda self, s: self.scaled(s)

    def is_zero(self) -> bool:
        return not any(self.cartan) and not self.roots

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.cartan == other.cartan and self.roots == other.roots

    def __hash__(self):
        return hash((self.cartan, frozenset(self.roots.items())))

    def __repr__(self) -> str:
        parts = []
        if any(self.cartan):
            parts.append("H" + str(tuple(str(c) for c in self.cartan)))
        for k in sorted(self.roots, key=lambda r: (L.height(r), r)):
            parts.append(f"{self.roots[k]}*E{k}")
        return " + ".join(parts) if parts else "0"


def bracket(u: LieElement, v: LieElement) -> LieElement:
    cartan = [Fraction(0)] * L.RANK
    roots: Dict[Root, Fraction] = {}

    def acc(r, c):
        roots[r] = roots.get(r, 0) + c

    for b, cb in v.roots.items():
        p = L.pair(u.cartan, b)
        if p:
            acc(b, p * cb)
    for a, ca in u.roots.items():
        p = L.pair(v.cartan, a)
        if p:
            acc(a, -p * ca)
    rs = L.root_set()
    for a, ca in u.roots.items():
        for b, cb in v.roots.items():
            s = L.add(a, b)
            if not any(s):
                # [E_a, E_{-a}] = -a
                for i in range(L.RANK):
                    cartan[i] -= ca * cb * a[i]
            elif s in rs:
                acc(s, L.cocycle(a, b) * ca * cb)
    return LieElement(cartan, roots)


def invariant_form(u: LieElement, v: LieElement) -> Fraction:
    total = Fraction(L.pair(u.cartan, v.cartan))
    for a, ca in u.roots.items():
        cb = v.roots.get(L.neg(a))
        if cb:
            total -= ca * cb
    return total


@lru_cache(maxsize=None)
def basis() -> tuple:
    """Simple coroots alpha_1..alpha_6 followed by E_a over enumerate_roots()."""
    out = [LieElement.cartan_element(L.simple_root(i)) for i in range(1, L.RANK + 1)]
    out += [LieElement.root_vector(r) for r in L.enumerate_roots()]
    return tuple(out)


@lru_cache(maxsize=None)
def _root_index() -> dict:
    return {r: 6 + n for n, r in enumerate(L.enumerate_roots())}


def coordinates(u: LieElement) -> tuple:
    """Coordinates of u in basis()."""
    out = list(u.cartan) + [Fraction(0)] * len(L.enumerate_roots())
    idx = _root_index()
    for r, c in u.roots.items():
        out[idx[r]] = c
    return tuple(out)


def sparse_coordinates(u: LieElement) -> Dict[int, Fraction]:
    out = {i: c for i, c in enumerate(u.cartan) if c}
    idx = _root_index()
    for r, c in u.roots.items():
        out[idx[r]] = c
    return out


def from_coordinates(coords: Mapping[int, object]) -> LieElement:
    cartan = [Fraction(0)] * L.RANK
    roots = {}
    allr = L.enumerate_roots()
    for i, c in coords.items():
        if i < L.RANK:
            cartan[i] += Fraction(c)
        else:
            roots[allr[i - L.RANK]] = c
    return LieElement(cartan, roots)


# ---------------------------------------------------------------- grading

def xi(i: int) -> LieElement:
    return LieElement.root_vector(L.XI_LABELS[i - 1])


def eta(i: int) -> LieElement:
    return LieElement.root_vector(L.neg(L.XI_LABELS[i - 1]))


ALPHA6 = LieElement.cartan_element(L.simple_root(6))
ALPHA_HAT = LieElement.cartan_element(L.ALPHA_HAT)


def grade(u: LieElement) -> int | None:
    """alpha_6 coefficient of the roots in u (0 for Cartan); None if mixed."""
    degrees = {r[5] for r in u.roots}
    if any(u.cartan):
        degrees.add(0)
    if len(degrees) > 1:
        return None
    return degrees.pop() if degrees else 0


# ---------------------------------------------------------------- o(10)
# Matrices are sparse dicts {(row, col): Fraction} with 1-based indices in 1..10.
# The basis element attached to (a, b) is X_{a,b} = E_{a,b} - E_{s(b),s(a)}, s(k) = k +- 5.

def _sigma(k: int) -> int:
    return k + 5 if k <= 5 else k - 5


def _canonical_keys() -> tuple:
    keys = [(i, j) for i in range(1, 6) for j in range(1, 6)]
    keys += [(p, 5 + q) for p in range(1, 6) for q in range(p + 1, 6)]
    keys += [(5 + p, q) for p in range(1, 6) for q in range(p + 1, 6)]
    return tuple(keys)


O10_KEYS = _canonical_keys()
_O10_KEYSET = frozenset(O10_KEYS)


def o10_symbol(a: int, b: int) -> tuple:
    """Express X_{a,b} as sign * X_key; returns (0, None) when X_{a,b} = 0."""
    if not (1 <= a <= 10 and 1 <= b <= 10):
        raise ValueError("o(10) indices lie in 1..10")
    if (a, b) in _O10_KEYSET:
        return 1, (a, b)
    alt = (_sigma(b), _sigma(a))
    if alt == (a, b):
        return 0, None
    if alt in _O10_KEYSET:
        return -1, alt
    raise AssertionError((a, b))


def o10_matrix(key) -> Dict[tuple, Fraction]:
    a, b = key
    m = {(a, b): Fraction(1)}
    other = (_sigma(b), _sigma(a))
    m[other] = m.get(other, 0) - 1
    return {k: v for k, v in m.items() if v}


def mat_add(*ms, coeffs=None) -> Dict[tuple, Fraction]:
    out: Dict[tuple, Fraction] = {}
    coeffs = coeffs or [1] * len(ms)
    for m, c in zip(ms, coeffs):
        for k, v in m.items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def mat_mul(a: Mapping, b: Mapping) -> Dict[tuple, Fraction]:
    out: Dict[tuple, Fraction] = {}
    rows_b: Dict[int, list] = {}
    for (i, j), v in b.items():
        rows_b.setdefault(i, []).append((j, v))
    for (i, k), v in a.items():
        for j, w in rows_b.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + v * w
    return {k: v for k, v in out.items() if v}


def mat_commutator(a: Mapping, b: Mapping) -> Dict[tuple, Fraction]:
    return mat_add(mat_mul(a, b), mat_mul(b, a), coeffs=[1, -1])


def is_o10(m: Mapping) -> bool:
    """A + J A^T J = 0 with J swapping the two blocks."""
    for (i, j), v in m.items():
        if m.get((_sigma(j), _sigma(i)), 0) != -v:
            return False
    return True


def o10_decompose(m: Mapping) -> Dict[tuple, Fraction]:
    if not is_o10(m):
        raise ValueError("matrix is not in o(10)")
    out = {k: Fraction(m[k]) for k in O10_KEYS if m.get(k)}
    return out


def o10_compose(coeffs: Mapping) -> Dict[tuple, Fraction]:
    return mat_add(*[o10_matrix(k) for k in coeffs], coeffs=list(coeffs.values()))


def o10_weight(key) -> tuple:
    """Weight of X_key in epsilon coordinates."""
    w = [0] * 5
    a, b = key
    if a <= 5:
        w[a - 1] += 1
    else:
        w[a - 6] -= 1
    if b <= 5:
        w[b - 1] -= 1
    else:
        w[b - 6] += 1
    return tuple(w)


SIMPLE_RAISING = ((1, 2), (2, 3), (3, 4), (4, 5), (4, 10))
SIMPLE_LOWERING = ((2, 1), (3, 2), (4, 3), (5, 4), (10, 4))
CARTAN_KEYS = ((1, 1), (2, 2), (3, 3), (4, 4), (5, 5))


def positive_keys() -> tuple:
    return tuple(k for k in O10_KEYS if _is_positive_weight(o10_weight(k)))


def negative_keys() -> tuple:
    return tuple(k for k in O10_KEYS if _is_positive_weight(tuple(-x for x in o10_weight(k))))


def _is_positive_weight(w) -> bool:
    for x in w:
        if x:
            return x > 0
    return False


_H = Fraction(1, 2)
_NU_GENERATORS = {
    (1, 2): LieElement.root_vector(L.simple_root(1)),
    (2, 3): LieElement.root_vector(L.simple_root(3)),
    (3, 4): LieElement.root_vector(L.simple_root(4)),
    (4, 5): LieElement.root_vector(L.simple_root(5)),
    (4, 10): LieElement.root_vector(L.simple_root(2)),
    (2, 1): LieElement.root_vector(L.neg(L.simple_root(1)), -1),
    (3, 2): LieElement.root_vector(L.neg(L.simple_root(3)), -1),
    (4, 3): LieElement.root_vector(L.neg(L.simple_root(4)), -1),
    (5, 4): LieElement.root_vector(L.neg(L.simple_root(5)), -1),
    (10, 4): LieElement.root_vector(L.neg(L.simple_root(2)), -1),
    (1, 1): LieElement.cartan_element((1, _H, 1, 1, _H, 0)),
    (2, 2): LieElement.cartan_element((0, _H, 1, 1, _H, 0)),
    (3, 3): LieElement.cartan_element((0, _H, 0, 1, _H, 0)),
    (4, 4): LieElement.cartan_element((0, _H, 0, 0, _H, 0)),
    (5, 5): LieElement.cartan_element((0, _H, 0, 0, -_H, 0)),
}


@lru_cache(maxsize=None)
def _nu_table() -> dict:
    """Extend the generator assignment to all 45 basis elements by bracketing with
    simple raising/lowering generators (breadth first, deterministic)."""
    table = {}
    for k, v in _NU_GENERATORS.items():
        sign, key = o10_symbol(*k)
        table[key] = v.scaled(sign)
    frontier = list(table)
    steps = SIMPLE_RAISING + SIMPLE_LOWERING
    while frontier:
        nxt = []
        for k in frontier:
            for s in steps:
                _, skey = o10_symbol(*s)
                m = mat_commutator(o10_matrix(skey), o10_matrix(k))
                if not m:
                    continue
                dec = o10_decompose(m)
                if len(dec) != 1:
                    continue
                (k2, c), = dec.items()
                if k2 in table:
                    continue
                table[k2] = bracket(table[skey], table[k]).scaled(1 / Fraction(c))
                nxt.append(k2)
        frontier = nxt
    if len(table) != 45:
        raise AssertionError(f"o(10) generation did not close: {sorted(set(O10_KEYS) - set(table))}")
    return table


def nu(generator) -> LieElement:
    """Image in E6 of an o(10) element given as a basis key, an index pair (a, b)
    denoting X_{a,b}, or a sparse 10x10 matrix."""
    table = _nu_table()
    if isinstance(generator, tuple) and len(generator) == 2 and all(isinstance(x, int) for x in generator):
        sign, key = o10_symbol(*generator)
        if sign == 0:
            return LieElement()
        return table[key].scaled(sign)
    coeffs = o10_decompose(generator)
    out = LieElement()
    for k, c in coeffs.items():
        out = out + table[k].scaled(c)
    return out


def _d5_coords(u: LieElement) -> Dict[str, Fraction]:
    if u.cartan[5]:
        raise ValueError("element has an alpha_6 component outside the D5 subalgebra")
    out = {("h", i): c for i, c in enumerate(u.cartan[:5]) if c}
    for r, c in u.roots.items():
        if r[5]:
            raise ValueError("root vector outside the D5 subalgebra")
        out[("e", r)] = c
    return out


@lru_cache(maxsize=None)
def _nu_inverse_table() -> dict:
    """Solve the 45x45 linear system once: image coordinate -> o(10) coefficients."""
    from .linalg import solve_square

    table = _nu_table()
    coords = sorted({c for k in O10_KEYS for c in _d5_coords(table[k])}, key=repr)
    index = {c: n for n, c in enumerate(coords)}
    if len(coords) != 45:
        raise AssertionError("D5 image is not 45 dimensional")
    # columns: o(10) keys; rows: image coordinates
    mat = [[Fraction(0)] * 45 for _ in range(45)]
    for j, k in enumerate(O10_KEYS):
        for c, v in _d5_coords(table[k]).items():
            mat[index[c]][j] = v
    inv = solve_square(mat)
    return {c: {O10_KEYS[j]: inv[j][index[c]] for j in range(45) if inv[j][index[c]]} for c in coords}


def nu_inverse(u: LieElement) -> Dict[tuple, Fraction]:
    inv = _nu_inverse_table()
    coeffs: Dict[tuple, Fraction] = {}
    for c, v in _d5_coords(u).items():
        for k, w in inv[c].items():
            coeffs[k] = coeffs.get(k, 0) + v * w
    return o10_compose({k: v for k, v in coeffs.items() if v})


def nu_inverse_coeffs(u: LieElement) -> Dict[tuple, Fraction]:
    return o10_decompose(nu_inverse(u))


def g0_basis() -> tuple:
    """nu of the 45 o(10) keys, then alpha_6."""
    return tuple(nu(k) for k in O10_KEYS) + (ALPHA6,)


def structure_matrix(u: LieElement) -> Dict[int, Dict[int, Fraction]]:
    """phi_{ij}(u) with [u, eta_i] = sum_j phi_ij eta_j, for u in the degree-0 part."""
    index = {L.neg(v): j for j, v in enumerate(L.XI_LABELS, start=1)}
    out: Dict[int, Dict[int, Fraction]] = {}
    for i in range(1, 17):
        b = bracket(u, eta(i))
        if any(b.cartan):
            raise ValueError("argument does not preserve the negative part")
        row = {}
        for r, c in b.roots.items():
            if r not in index:
                raise ValueError("argument does not preserve the negative part")
            row[index[r]] = c
        if row:
            out[i] = row
    return out
