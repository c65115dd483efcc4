from __future__ import annotations

from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from e6mod import linalg as LA

small = st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=6)


def sparse(rows):
    return [{j: Fraction(v) for j, v in enumerate(r) if v} for r in rows]


@settings(max_examples=80, deadline=None)
@given(small)
def test_rank_agrees_with_numpy(rows):
    assert LA.rank(sparse(rows)) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@settings(max_examples=80, deadline=None)
@given(small)
def test_nullspace_vectors_are_annihilated(rows):
    ker = LA.nullspace(sparse(rows), 5)
    assert len(ker) == 5 - LA.rank(sparse(rows))
    for v in ker:
        for r in rows:
            assert sum(Fraction(r[j]) * c for j, c in v.items()) == 0


@settings(max_examples=80, deadline=None)
@given(small)
def test_rank_mod_p_agrees(rows):
    assert LA.rank_mod_p(np.array(rows, dtype=np.int64)) == LA.rank(sparse(rows))
    basis = LA.row_basis_mod_p(np.array(rows, dtype=np.int64))
    assert basis.shape[0] == LA.rank(sparse(rows))


def test_solve_square_inverse():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert LA.solve_square(m) == [[1, -1], [-1, 2]]


def test_solve_returns_none_when_inconsistent():
    rows = [{0: Fraction(1)}, {0: Fraction(2)}]
    assert LA.solve(rows, [1, 3], 1) is None
    assert LA.solve(rows, [1, 2], 1) == {0: 1}
