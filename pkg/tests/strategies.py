"""Hypothesis strategies for sparse polynomials and first-order operators."""
from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from e6mod.polydiff import DiffOp, Poly

NV = 16
ACTIVE = 5  # restrict to a few variables so that random terms interact


def rationals(max_num=6, max_den=3):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def _exponents(indices):
    e = [0] * NV
    for i in indices:
        e[i] += 1
    return tuple(e)


def monomial(max_deg):
    return st.lists(st.integers(0, ACTIVE - 1), max_size=max_deg).map(_exponents)


def polys(max_deg=2, max_terms=4):
    return st.dictionaries(monomial(max_deg), rationals(), max_size=max_terms).map(lambda t: Poly(t, "x"))


def diffops(max_deg=2, scalar=False):
    vec = st.dictionaries(st.integers(1, ACTIVE), polys(max_deg, 3), max_size=3)
    sc = polys(0, 1) if scalar else st.just(Poly.zero("x"))
    return st.builds(lambda v, s: DiffOp(v, s, "x"), vec, sc)
