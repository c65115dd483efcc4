"""Exact computations for E6 realized by differential operators on 16 variables,
together with the induction functor from o(10)-modules to E6-modules."""

__version__ = "0.1.0"
