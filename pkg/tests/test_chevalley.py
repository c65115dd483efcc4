from __future__ import annotations

from fractions import Fraction

from e6mod import chevalley as C
from e6mod import lattice as L
from e6mod import suites


def e(r, c=1):
    return C.LieElement.root_vector(r, c)


def test_bracket_of_opposite_root_vectors():
    a6 = L.simple_root(6)
    assert C.bracket(e(a6), e(L.neg(a6))) == C.LieElement.cartan_element(a6).scaled(-1)


def test_alpha_hat_centralizes_d5():
    assert all(C.bracket(C.ALPHA_HAT, C.nu(k)).is_zero() for k in C.O10_KEYS)


def test_invariant_form_on_cartan():
    h = C.LieElement.cartan_element(L.simple_root(1))
    assert C.invariant_form(h, h) == 2


def test_xi_eta_pairing():
    assert C.invariant_form(C.xi(3), C.eta(3)) == -1
    assert C.invariant_form(C.xi(3), C.eta(4)) == 0


def test_nu_examples():
    assert C.nu((4, 10)) == e(L.simple_root(2))
    half = Fraction(1, 2)
    expected = C.LieElement.cartan_element((1, half, 1, 1, half, 0))
    assert C.nu((1, 1)) == expected


def test_nu_inverse_roundtrip():
    for k in C.O10_KEYS:
        assert C.nu_inverse(C.nu(k)) == C.o10_matrix(k)


def test_basis_and_coordinates():
    basis = C.basis()
    assert len(basis) == 78
    u = basis[3].scaled(2) + basis[40]
    assert C.from_coordinates(C.sparse_coordinates(u)) == u


def test_grades():
    assert C.grade(C.xi(1)) == 1
    assert C.grade(C.eta(16)) == -1
    assert C.grade(C.nu((1, 2))) == 0


def test_chevalley_suite_all_pass():
    rows = suites.chevalley_suite(triples=60, seed=3)
    assert all(r["status"] == "pass" for r in rows), rows
