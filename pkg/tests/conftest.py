from __future__ import annotations

from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def elements(ring):
    """Strategy for classes of ``ring`` with small rational coefficients."""
    return st.lists(small_fractions, min_size=ring.dim, max_size=ring.dim).map(ring.element)


def frac_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]
