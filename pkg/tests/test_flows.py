from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e6mod import flows as W


def test_identity_at_zero():
    assert all(W.identity_check(i) for i in range(1, 17))


@pytest.mark.parametrize("i", [1, 8, 10, 13, 16])
def test_generator_matches_vector_field(i):
    rep = W.generator_check(i, samples=20, seed=1)
    assert rep["sigma"] == 1 and rep["sign_consistent"]
    assert rep["max_relative_error"] < W.GENERATOR_TOLERANCE


@pytest.mark.parametrize("i,j", sorted(W.CORRECTIONS))
def test_printed_entries_fail_where_corrected(i, j):
    gen = W.generator_check(i, samples=20, seed=1, corrected=False)
    comp = W.flow_property_check(i, samples=20, seed=1, corrected=False)
    assert gen["max_relative_error"] > W.GENERATOR_TOLERANCE or comp["max_relative_error"] > W.COMPOSITION_TOLERANCE


def test_pole_detection():
    p = np.zeros(16)
    p[0] = 2.0
    with pytest.raises(W.PoleProximity):
        W.flow(W.FlowSpec(1, 0.5), p)


def test_bad_inputs():
    with pytest.raises(ValueError):
        W.flow(W.FlowSpec(17, 0.1), np.zeros(16))
    with pytest.raises(ValueError):
        W.flow(W.FlowSpec(1, 0.1), np.zeros(15))
    with pytest.raises(ValueError):
        W.flow(W.FlowSpec(1, 0.1), np.full(16, np.nan))


points = st.lists(st.floats(-0.5, 0.5), min_size=16, max_size=16).map(np.array)
params = st.floats(-0.1, 0.1)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 16), points, params, params)
def test_flow_composition(i, p, b1, b2):
    lhs = W.flow(W.FlowSpec(i, b1), W.flow(W.FlowSpec(i, b2), p))
    rhs = W.flow(W.FlowSpec(i, b1 + b2), p)
    assert np.max(np.abs(lhs - rhs)) / max(1.0, np.max(np.abs(rhs))) < W.COMPOSITION_TOLERANCE


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 16), points, params)
def test_flow_inverse(i, p, b):
    back = W.flow(W.FlowSpec(i, -b), W.flow(W.FlowSpec(i, b), p))
    assert np.allclose(back, p, atol=1e-12)
