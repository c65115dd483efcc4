from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e6mod import d5modules as D

h = Fraction(1, 2)
e1 = D.eps(1)


def test_rho_and_small_dimensions():
    assert D.rho() == (4, 3, 2, 1, 0)
    assert D.weyl_dim(D.ZERO) == 1
    assert D.weyl_dim(e1) == 10
    assert D.weyl_dim(D.LAMBDA4) == 16
    assert D.weyl_dim(D.LAMBDA2) == 45
    assert D.weyl_dim(D.LAMBDA3) == 120
    assert D.weyl_dim(D.wscale(2, D.LAMBDA4)) == 126


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(ValueError):
        D.weyl_dim(D.weight(0, 1, 0, 0, 0))


def test_casimir_values():
    assert D.casimir_eig(D.ZERO) == 0
    assert D.casimir_eig(e1) == 9
    assert D.casimir_eig(D.LAMBDA4) == Fraction(45, 4)


def test_upsilon_examples():
    for k in range(1, 4):
        lmd = D.wscale(k, e1)
        assert set(D.upsilon(lmd)) == {D.wadd(D.LAMBDA4, lmd),
                                       D.wadd(D.wadd(D.LAMBDA4, D.wscale(k - 1, e1)), D.eps(5))}
        assert set(D.upsilon_prime(lmd)) == {D.wscale(k + 1, e1), D.wscale(k - 1, e1),
                                             D.wadd(lmd, D.eps(2))}
    l4 = D.LAMBDA4
    assert set(D.upsilon(D.LAMBDA3)) == {D.wadd(l4, D.LAMBDA3), D.wadd(D.wadd(l4, D.LAMBDA2), D.eps(5)),
                                         D.wadd(l4, e1), D.wadd(l4, D.eps(5))}


def test_ell_omega_values():
    for k in range(1, 5):
        assert D.ell_omega(D.wscale(k, e1)) == -4 - Fraction(k, 2)
    assert D.ell_omega(D.LAMBDA2) == -8
    assert D.ell_omega(D.LAMBDA3) == Fraction(-21, 2)
    assert D.ell_omega(D.ZERO) == 0


@pytest.mark.parametrize("family,k,dim", [("trivial", 1, 1), ("natural", 1, 10), ("natural", 2, 54),
                                          ("lambda2", 1, 45), ("lambda3", 1, 120), ("spin4", 1, 16),
                                          ("spin4", 2, 126), ("spin5", 1, 16)])
def test_realizations(family, k, dim):
    rep = D.realize(family, k)
    assert rep.dimension == dim
    assert D.weyl_dim(rep.highest_weight) == dim
    assert rep.highest_weight == D.family_weight(family, k)
    assert rep.check_commutation() == []
    assert rep.check_weights()


@pytest.mark.parametrize("family,k", [("natural", 1), ("natural", 2), ("lambda2", 1), ("spin4", 1),
                                      ("spin4", 2), ("spin5", 1)])
def test_casimir_on_highest_weight_vector(family, k):
    rep = D.realize(family, k)
    i = rep.highest_weight_index()
    assert rep.casimir({i: Fraction(1)}) == {i: D.casimir_eig(rep.highest_weight)}


def test_dimension_guard():
    with pytest.raises(ValueError):
        D.realize("spin4", 4, guard=100)


def test_unknown_family():
    with pytest.raises(ValueError):
        D.realize("adjoint")


@given(st.integers(0, 12))
def test_harmonic_count_matches_weyl(k):
    expected = comb(k + 9, 9) - comb(k + 7, 9)
    assert D.harmonic_dimension(k) == expected == D.weyl_dim(D.wscale(k, e1))


dominant = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
                     st.integers(-3, 3), st.booleans()).map(
    lambda t: D.weight(*[Fraction(a + b + c + dd) + (h if t[5] else 0)
                         for a, b, c, dd in [(t[0], t[1], t[2], t[3]), (0, t[1], t[2], t[3]),
                                              (0, 0, t[2], t[3]), (0, 0, 0, t[3])]],
                       Fraction(t[4]) + (h if t[5] else 0))).filter(D.is_dominant)


@settings(max_examples=80, deadline=None)
@given(dominant)
def test_weyl_dimension_is_positive_integer(mu):
    n = D.weyl_dim(mu)
    assert isinstance(n, int) and n >= 1


@settings(max_examples=80, deadline=None)
@given(dominant)
def test_split_casimir_values_are_half_differences(mu):
    for lp, val in D.omega_eigenvalues(mu).items():
        assert val == (D.casimir_eig(lp) - D.casimir_eig(mu) - D.casimir_eig(D.LAMBDA4)) / 2
    assert D.ell_omega(mu) == min(D.omega_eigenvalues(mu).values())
