from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e6mod import e6rep as E
from e6mod.polydiff import (DiffOp, ExteriorElt, OutOfFragment, Poly, VarsetMismatch, apply, commutator,
                            exterior_act, monomials, normalize_wedge, tau)

from strategies import diffops, polys

x = E.x
d = lambda i: DiffOp.partial(i)


def test_apply_simple_vector_field():
    op = DiffOp({1: x(2)})
    assert apply(op, x(1) * x(3)) == x(2) * x(3)


def test_degree_operator_counts_degree():
    D = DiffOp.euler()
    for m in [(0,) * 16, (2, 1) + (0,) * 14, (1,) * 16]:
        f = Poly.monomial(m, 3)
        assert apply(D, f) == f.scale(sum(m))


def test_raising_operator_kills_zeta1():
    assert apply(E.build_realization().d5ops[(1, 2)], E.T_zeta(1)).is_zero()


def test_commutator_product_rule():
    D = DiffOp.euler()
    lhs = commutator(d(1), D.left_mul(x(1)))
    assert lhs == D + DiffOp({1: x(1)})


def test_commutator_with_P1():
    p1 = E.build_realization().pis[1]
    vec = {1: x(1).scale(2)}
    vec.update({i: x(i) for i in range(2, 11)})
    vec[12] = x(12)
    assert commutator(d(1), p1) == DiffOp(vec)


def test_varset_mismatch():
    with pytest.raises(VarsetMismatch):
        apply(d(1), Poly.var(1, "y"))
    with pytest.raises(VarsetMismatch):
        Poly.var(1, "x") + Poly.var(1, "z")


def test_poly_invariants():
    p = Poly({(1,) + (0,) * 15: 0, (0, 1) + (0,) * 14: 2})
    assert list(p.terms.values()) == [2]
    with pytest.raises(ValueError):
        Poly({(1, 0): 1})


def test_render_is_canonical():
    p = x(3) - x(1) * x(2) + Fraction(1, 2)
    assert p.render() == (x(1).scale(-1) * x(2) + Fraction(1, 2) + x(3)).render()
    assert "x1*x2" in p.render()


def test_tau_examples():
    assert tau(DiffOp({7: x(4)})) == DiffOp({4: x(7)})
    d5 = E.build_realization().d5ops
    assert tau(d5[(1, 2)]) == d5[(2, 1)]


def test_tau_rejects_out_of_fragment():
    with pytest.raises(OutOfFragment):
        tau(DiffOp({1: x(1) * x(2)}))


def test_exterior_examples():
    assert exterior_act(1, 2, ExteriorElt.basis(2, 3)) == ExteriorElt.basis(1, 3)
    assert exterior_act(3, 3, ExteriorElt.basis(1, 2)) == ExteriorElt()
    assert normalize_wedge((3, 1, 2)) == (1, (1, 2, 3))
    assert normalize_wedge((2, 1)) == (-1, (1, 2))
    assert normalize_wedge((1, 1)) == (0, ())


def test_monomial_count():
    assert sum(1 for _ in monomials(16, 2)) == 136


@settings(max_examples=60, deadline=None)
@given(diffops(), polys(), polys())
def test_leibniz(op, f, g):
    assert apply(op, f * g) == apply(op, f) * g + f * apply(op, g)


@settings(max_examples=60, deadline=None)
@given(diffops(scalar=True), diffops(scalar=True), polys())
def test_symbolic_bracket_matches_action(a, b, f):
    assert apply(commutator(a, b), f) == apply(a, apply(b, f)) - apply(b, apply(a, f))


@settings(max_examples=40, deadline=None)
@given(diffops(), diffops(), diffops())
def test_jacobi(a, b, c):
    s = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))
    assert s.is_zero()


@settings(max_examples=40, deadline=None)
@given(diffops(scalar=True))
def test_self_commutator_vanishes(a):
    assert commutator(a, a).is_zero()


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f - f == Poly.zero()


linear = st.dictionaries(st.tuples(st.integers(1, 16), st.integers(1, 16)), st.integers(-3, 3), max_size=5)


@settings(max_examples=60, deadline=None)
@given(linear)
def test_tau_is_involutive(entries):
    op = DiffOp.zero()
    for (i, j), c in entries.items():
        op = op + DiffOp({j: x(i).scale(c)})
    assert tau(tau(op)) == op


@settings(max_examples=60, deadline=None)
@given(linear, linear)
def test_tau_reverses_brackets(e1, e2):
    def build(entries):
        op = DiffOp.zero()
        for (i, j), c in entries.items():
            op = op + DiffOp({j: x(i).scale(c)})
        return op
    a, b = build(e1), build(e2)
    assert tau(commutator(a, b)) == commutator(tau(b), tau(a))


subsets = st.lists(st.integers(1, 10), unique=True, max_size=5)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 10), st.integers(1, 10), subsets, st.integers(-4, 4))
def test_contraction_rule(i, j, idx, c):
    w = ExteriorElt({tuple(idx): c})
    lhs = w.wedge_left(j).contract(i)
    rhs = (w if i == j else ExteriorElt()) + w.contract(i).wedge_left(j).scale(-1)
    assert lhs == rhs
