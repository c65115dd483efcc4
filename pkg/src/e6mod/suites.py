"""Check suites shared by the command line and the acceptance tests.

Every check is a dict {name, status, detail} with status in {pass, fail, corrected}."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List

import numpy as np

from . import chevalley as C
from . import lattice as L


def check(name: str, ok: bool, detail: str = "") -> Dict[str, str]:
    return {"name": name, "status": "pass" if ok else "fail", "detail": detail}


# ------------------------------------------------------------------ lattice

def _cocycle_matrix() -> np.ndarray:
    m = np.eye(L.RANK, dtype=np.int64)
    for i, j in L._COCYCLE_CROSS:
        m[i - 1, j - 1] += 1
    return m


def lattice_sample(size: int = 100, seed: int = 0, bound: int = 3) -> List[tuple]:
    rng = random.Random(seed)
    return [tuple(rng.randint(-bound, bound) for _ in range(L.RANK)) for _ in range(size)]


def cocycle_suite(size: int = 100, seed: int = 0) -> List[dict]:
    """Bimultiplicativity, the skew relation and anti-symmetry on root pairs."""
    out = []
    sample = lattice_sample(size, seed)
    arr = np.array(sample, dtype=np.int64)
    m = _cocycle_matrix()
    expo = arr @ m @ arr.T
    direct = all(L.cocycle(a, b) == (-1 if expo[i, j] % 2 else 1)
                 for i, a in enumerate(sample) for j, b in enumerate(sample))
    out.append(check("cocycle agrees with its exponent matrix on the sample", direct))
    # F(a+b, c) = F(a, c) F(b, c) and F(a, b+c) = F(a, b) F(a, c) over all triples of the sample
    sums = (arr[:, None, :] + arr[None, :, :]).reshape(-1, L.RANK)
    left = (sums @ m @ arr.T).reshape(size, size, size) % 2
    right = (expo[:, None, :] + expo[None, :, :]) % 2
    first = bool(np.array_equal(left, right))
    left2 = (arr @ m @ sums.T).reshape(size, size, size) % 2
    right2 = (expo[:, :, None] + expo[:, None, :]) % 2
    second = bool(np.array_equal(left2, right2))
    out.append(check("bimultiplicative in both arguments", first and second, f"{2 * size ** 3} triples"))
    skew = all(L.cocycle(a, b) * L.cocycle(b, a) == (-1) ** (L.pair(a, b) % 2) for a in sample for b in sample)
    out.append(check("F(a,b) F(b,a) = (-1)^(a,b)", skew, f"{size * size} pairs"))
    diag = all(L.cocycle(a, a) == (-1) ** ((L.pair(a, a) // 2) % 2) for a in sample)
    out.append(check("F(a,a) = (-1)^((a,a)/2)", diag, f"{size} vectors"))
    roots = L.enumerate_roots()
    rs = L.root_set()
    count = 0
    bad = 0
    for a in roots:
        for b in roots:
            if L.add(a, b) in rs:
                count += 1
                if L.cocycle(a, b) != -L.cocycle(b, a):
                    bad += 1
    out.append(check("F(a,b) = -F(b,a) whenever a, b, a+b are roots", bad == 0, f"{count} root pairs"))
    return out


def brute_force_roots(bound: int = L.SCAN_BOUND) -> set:
    """Nonzero norm-2 vectors of the coefficient box, by a vectorized scan."""
    axis = np.arange(-bound, bound + 1, dtype=np.int16)
    grid = np.stack(np.meshgrid(*([axis] * L.RANK), indexing="ij"), axis=-1).reshape(-1, L.RANK)
    g = np.array(L.GRAM, dtype=np.int16)
    norms = np.einsum("ij,jk,ik->i", grid.astype(np.int32), g.astype(np.int32), grid.astype(np.int32))
    return {tuple(int(x) for x in v) for v in grid[norms == 2]}


def lattice_suite() -> List[dict]:
    out = []
    g = np.array(L.GRAM)
    out.append(check("Gram matrix symmetric with diagonal 2", bool((g == g.T).all() and (np.diag(g) == 2).all())))
    roots = L.enumerate_roots()
    out.append(check("72 roots", len(roots) == 72, str(len(roots))))
    brute = brute_force_roots()
    out.append(check("closure agrees with a brute-force scan of the lattice ball", brute == set(roots),
                     f"coefficients in -{L.SCAN_BOUND}..{L.SCAN_BOUND}"))
    out.append(check("40 roots with zero alpha_6 coefficient", sum(1 for r in roots if r[5] == 0) == 40))
    xi = {r for r in roots if r[5] == 1}
    out.append(check("xi labels are the roots with alpha_6 coefficient 1", xi == set(L.XI_LABELS)))
    ah = L.ALPHA_HAT
    orth = all(L.pair(ah, L.simple_root(r)) == 0 for r in range(1, 6))
    out.append(check("alpha_hat orthogonal to alpha_1..alpha_5", orth,
                     f"(alpha_hat, alpha_6) = {L.pair(ah, L.simple_root(6))}, "
                     f"(alpha_hat, alpha_hat) = {L.pair(ah, ah)}"))
    out.append(check("F(alpha_1, alpha_3) = -1 and F(alpha_3, alpha_1) = +1",
                     L.cocycle(L.simple_root(1), L.simple_root(3)) == -1
                     and L.cocycle(L.simple_root(3), L.simple_root(1)) == 1))
    return out + cocycle_suite()


# ------------------------------------------------------------------ chevalley

def chevalley_suite(triples: int = 200, seed: int = 0) -> List[dict]:
    out = []
    basis = C.basis()
    rng = random.Random(seed)
    picks = [tuple(rng.randrange(len(basis)) for _ in range(3)) for _ in range(triples)]
    jac = 0
    inv = 0
    for i, j, k in picks:
        u, v, w = basis[i], basis[j], basis[k]
        s = C.bracket(u, C.bracket(v, w)) + C.bracket(v, C.bracket(w, u)) + C.bracket(w, C.bracket(u, v))
        jac += not s.is_zero()
        inv += C.invariant_form(C.bracket(u, v), w) != C.invariant_form(u, C.bracket(v, w))
    out.append(check("Jacobi identity", jac == 0, f"{triples} random basis triples"))
    out.append(check("invariance of the bilinear form", inv == 0, f"{triples} random basis triples"))
    pairing = all(C.invariant_form(C.xi(i), C.eta(j)) == -int(i == j) for i in range(1, 17) for j in range(1, 17))
    out.append(check("(xi_i | eta_j) = -delta_ij", pairing, "256 pairs"))
    abelian = all(C.bracket(C.xi(i), C.xi(j)).is_zero() and C.bracket(C.eta(i), C.eta(j)).is_zero()
                  for i in range(1, 17) for j in range(1, 17))
    out.append(check("positive and negative parts abelian", abelian))
    closure = True
    for u in C.g0_basis():
        try:
            m = C.structure_matrix(u)
        except ValueError:
            closure = False
            continue
        if any(Fraction(v).denominator not in (1, 2) for row in m.values() for v in row.values()):
            closure = False
    out.append(check("degree-zero part preserves span(eta), denominators divide 2", closure))
    bad = 0
    for a in C.O10_KEYS:
        for b in C.O10_KEYS:
            comm = C.mat_commutator(C.o10_matrix(a), C.o10_matrix(b))
            lhs = C.nu(comm) if comm else C.LieElement()
            if not (lhs - C.bracket(C.nu(a), C.nu(b))).is_zero():
                bad += 1
    out.append(check("nu preserves brackets", bad == 0, "2025 ordered pairs"))
    hat_ok = all(C.bracket(C.ALPHA_HAT, C.nu(k)).is_zero() for k in C.O10_KEYS)
    out.append(check("alpha_hat centralizes the D5 subalgebra", hat_ok))
    return out


# ------------------------------------------------------------------ realization

def realization_suite() -> List[dict]:
    from . import e6rep

    table = e6rep.build_realization()
    out = [f.as_dict() for f in table.findings]
    hom = e6rep.verify_theta_homomorphism(table)
    out.append(check("[theta(u), theta(v)] = theta([u, v])", not hom["failures"],
                     f"{hom['checked'] - len(hom['failures'])}/{hom['checked']} ordered pairs"))
    out.append(check("theta injective", hom["injective"]))
    zeta = e6rep.verify_zeta_module(table)
    out.extend({"name": c["name"], "status": c["status"], "detail": c.get("detail", "")} for c in zeta["checks"])
    return out
