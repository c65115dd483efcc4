from __future__ import annotations

from fractions import Fraction

import pytest

from e6mod import chevalley as C
from e6mod import e6rep as E
from e6mod import lattice as L
from e6mod.polydiff import DiffOp, apply, commutator

x = E.x


@pytest.fixture(scope="module")
def table():
    return E.build_realization()


def test_printed_operator_examples(table):
    assert table.d5ops[(1, 7)] == DiffOp({12: x(1), 14: -x(2), 15: x(3), 16: -x(5)})
    assert table.d5ops[(1, 2)] == DiffOp({7: x(4), 8: x(6), 10: x(9), 13: x(11)})
    assert table.zetas[1] == x(1) * x(11) + x(2) * x(9) - x(3) * x(6) + x(4) * x(5)
    z = table.zetas
    p1 = DiffOp.euler().left_mul(x(1)) - DiffOp({11: z[1], 13: z[2], 14: z[3], 15: z[4], 16: z[10]})
    assert table.pis[1] == p1


def test_operators_are_quadratic_at_most(table):
    for op in list(table.d5ops.values()) + list(table.pis.values()):
        assert op.max_degree() <= 2 and op.scalar.is_zero()


def test_cartan_operators_are_diagonal(table):
    for r in range(1, 6):
        op = table.d5ops[(r, r)]
        assert all(f.degree() == 1 and f == x(i).scale(f.coeff(x(i).sorted_terms()[0][0]))
                   for i, f in op.vec.items())


def test_homomorphism_on_all_pairs(table):
    rep = E.verify_theta_homomorphism(table)
    assert rep["checked"] == 78 * 78
    assert rep["failures"] == []
    assert rep["injective"]


def test_specific_brackets(table):
    th = table.theta
    assert commutator(th(C.xi(1)), th(C.eta(1))) == th(C.ALPHA6.scaled(-1))
    assert all(commutator(table.pis[i], table.pis[j]).is_zero() for i in range(1, 17) for j in range(i, 17))
    lowering = E.o10_operator(5, 4, table.d5ops)
    assert commutator(lowering, table.pis[1]).scale(-1) == table.pis[2]
    for s in range(1, 17):
        assert commutator(DiffOp.partial(s), table.pis[1]) == th(C.bracket(C.xi(s), C.eta(1)))


def test_alpha_hat_is_a_multiple_of_degree(table):
    assert table.alpha_hat == table.degree.scale(-3)


def test_findings_are_recorded(table):
    status = {f.name: f.status for f in table.findings}
    assert status["central element as a multiple of the degree operator"] == "corrected"
    assert status["P_5 recipe source index"] == "corrected"
    assert all(s in ("pass", "corrected") for s in status.values())


def test_zeta_module(table):
    rep = E.verify_zeta_module(table)
    assert rep["ok"], rep["checks"]
    assert apply(E.o10_operator(2, 1, table.d5ops), table.zetas[1]) == table.zetas[2]
    assert apply(E.o10_operator(6, 7, table.d5ops), table.zetas[7]) == table.zetas[6]


def test_zeta1_weight(table):
    z1 = table.zetas[1]
    assert apply(table.d5ops[(1, 1)], z1) == z1
    assert all(apply(table.d5ops[(r, r)], z1).is_zero() for r in range(2, 6))


@pytest.mark.parametrize("degree,expected", [(0, 1), (1, 1), (2, 2), (3, 2)])
def test_singular_vectors_small_degree(degree, expected):
    found = E.singular_vectors_of_degree(degree)
    assert len(found) == expected
    assert E.same_span(found, E.expected_singular_span(degree))


def test_singular_vectors_up_to_degree_two():
    found = E.find_singular_vectors(2)
    assert E.same_span(found, [E.x(1).scale(0) + 1, x(1), x(1) * x(1), E.T_zeta(1)])


def test_dominant_only_solver_agrees():
    assert E.same_span(E.singular_vectors_of_degree(3, dominant_only=True), E.singular_vectors_of_degree(3))


def test_singular_degree_bound():
    with pytest.raises(ValueError):
        E.find_singular_vectors(7)


def test_dimension_identity_small():
    rows = E.check_dimension_identity(3)["rows"]
    assert [r["sum"] for r in rows] == [1, 16, 136, 816]
    assert rows[2]["terms"] == [126, 10]
    with pytest.raises(ValueError):
        E.check_dimension_identity(13)


def test_quadratic_identity_symbolic():
    assert E.quadratic_combination() == E.zeta1_degree_shift()


def test_quadratic_identity_shift_is_sharp():
    assert E.quadratic_combination() != E.zeta1_degree_shift(shift=5)
