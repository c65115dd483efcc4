from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e6mod import d5modules as D
from e6mod import functor as F

THIRD = Fraction(1, 3)


@pytest.fixture(scope="module")
def natural():
    return D.realize("natural", 1)


def test_iota_tables():
    rep = F.verify_iota_tables()
    assert rep["ok"], [c for c in rep["checks"] if c["status"] == "fail"]


def test_T_operators():
    rep = F.verify_T_ops()
    assert rep["ok"], [c for c in rep["checks"] if c["status"] == "fail"]


def test_symbolic_functor_bracket():
    rep = F.symbolic_functor_check()
    assert rep["checked"] == 78 * 78
    assert rep["failures"] == []
    assert rep["injective"]


def test_functor_on_slices_natural(natural):
    rep = F.verify_functor(natural, THIRD, 1)
    assert rep["status"] == "pass" and rep["checked"] == 78 * 78


def test_functor_negative_control(natural):
    rep = F.verify_functor(natural, THIRD, 1, corrupt=(77, (1, 1)))
    assert rep["status"] == "fail" and rep["failures"]


def test_phi_and_equivariance(natural):
    assert F.verify_degree_one_phi(natural, THIRD)["status"] == "pass"
    assert F.verify_degree_zero_equivariance(natural, THIRD)["status"] == "pass"


def test_weyl_orbit_sizes():
    assert F.weyl_orbit_size(D.ZERO) == 1
    assert F.weyl_orbit_size(D.eps(1)) == 10
    assert F.weyl_orbit_size(D.LAMBDA4) == 16
    assert F.weyl_orbit_size(D.LAMBDA2) == 40


def test_omega_spectrum_natural(natural):
    rep = F.omega_spectrum(natural)
    assert rep["status"] == "pass"
    assert rep["ell"] == Fraction(-9, 2)
    assert rep["multiplicities"] == {"-9/2": 16, "1/2": 144}


def test_flat_components_natural(natural):
    comps = F.flat("natural", 1, natural)["components"]
    assert comps == {D.wscale(2, D.eps(1)): 1, D.LAMBDA2: -1, D.ZERO: -9}


def test_flat_matches_split_casimir_of_the_natural_product(natural):
    comps = F.flat("natural", 1, natural)["components"]
    c_nat = D.casimir_eig(D.eps(1))
    for lp, val in comps.items():
        assert val == (D.casimir_eig(lp) - D.casimir_eig(natural.highest_weight) - c_nat) / 2


def test_describe_progression():
    assert F.describe_progression(-6, 1) == "N-6"
    assert F.describe_progression(0, 2) == "2N"
    assert F.describe_progression(Fraction(-21, 2), 2) == "2N-21/2"


def test_natural_k2_at_zero_is_excluded():
    # 0 = -16 + 16 lies in N - 16
    ex = F.irreducibility_exclusions("natural", 2)
    progs = [(p["offset"], p["step"]) for p in ex["progressions"]]
    assert F.is_excluded(0, progs)
    assert not F.is_excluded(Fraction(1, 3), progs)
    assert ex["matches_printed"]


def test_trivial_second_progression_is_redundant():
    ex = F.irreducibility_exclusions("trivial")
    assert ex["matches_printed"] and ex["second_progression_redundant"] and ex["notes"]


@settings(max_examples=200, deadline=None)
@given(st.integers(-40, 10), st.integers(1, 3), st.integers(-60, 60), st.integers(1, 4))
def test_exclusion_membership(offset, step, num, den):
    c = Fraction(num, den)
    n = (c - offset) / step
    assert F.is_excluded(c, [(offset, step)]) == (n.denominator == 1 and n >= 0)
    if -100 <= c <= 100:
        assert F.is_excluded(c, [(offset, step)]) == (c in F.exclusion_set([(offset, step)]))


def test_rank_probe_trivial():
    zero = F.rank_probe(D.trivial(), 0, 1)
    assert zero["degrees"][0]["exact_rank"] == 0 and zero["first_deficient_degree"] == 1
    good = F.rank_probe(D.trivial(), THIRD, 2)
    assert good["first_deficient_degree"] is None
    assert [d["slice_dimension"] for d in good["degrees"]] == [16, 136]


def test_rank_probe_natural_degree_one():
    base = D.realize("natural", 1)
    assert F.degree_one_rank(base, THIRD) == 160
    assert F.degree_one_rank(base, 1) == 16
    assert F.degree_one_rank(base, -9) == 144
