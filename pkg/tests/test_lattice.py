from __future__ import annotations

import pytest

from e6mod import lattice as L
from e6mod import suites


def a(i):
    return L.simple_root(i)


def test_pairing_on_simple_roots():
    assert L.pair(a(1), a(1)) == 2
    assert L.pair(a(1), a(6)) == 0
    assert L.pair(a(1), a(3)) == -1


def test_alpha_hat_is_orthogonal_to_first_five_simple_roots():
    assert L.ALPHA_HAT == (2, 3, 4, 6, 5, 4)
    assert all(L.pair(L.ALPHA_HAT, a(r)) == 0 for r in range(1, 6))


def test_cocycle_values():
    assert L.cocycle(a(1), a(1)) == -1
    assert L.cocycle(a(1), a(3)) == -1
    assert L.cocycle(a(3), a(1)) == 1


def test_root_count_and_heights():
    roots = L.enumerate_roots()
    assert len(roots) == 72
    assert len(L.positive_roots()) == 36
    assert max(L.height(r) for r in roots) == 11
    assert all(L.pair(r, r) == 2 for r in roots)


def test_roots_agree_with_brute_force_scan():
    assert suites.brute_force_roots() == set(L.enumerate_roots())


def test_xi_labels():
    labels = L.XI_LABELS
    assert len(labels) == 16
    assert labels[0] == (0, 0, 0, 0, 0, 1)
    assert labels[15] == (1, 2, 2, 3, 2, 1)
    assert len(set(labels)) == 16
    xi, eta = L.xi_eta_labels()
    assert all(L.add(p, q) == (0,) * 6 for p, q in zip(xi, eta))


def test_vec_rejects_wrong_length():
    with pytest.raises(ValueError):
        L.vec(1, 2, 3)


def test_lattice_suite_all_pass():
    rows = suites.lattice_suite()
    failed = [r["name"] for r in rows if r["status"] != "pass"]
    assert not failed
