from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import elements, frac_rows
from hhpairing.characteristic import vee
from hhpairing.graded_ring import DistinctSpaceError
from hhpairing.hochschild import (
    HHClass,
    hh_degree_split,
    kunneth,
    kunneth_components,
    kunneth_inverse,
    mukai_gram,
    mukai_pairing,
    shklyarov_gram,
    shklyarov_pairing,
)
from hhpairing.linalg import det
from hhpairing.spaces import corpus, curve, product, projective_space

SPACES = list(corpus().values())


def test_frozen_gram_matrices():
    p1, e = projective_space(1), curve(1)
    assert [list(r) for r in shklyarov_gram(p1)] == frac_rows([[1, 1], [1, 0]])
    assert [list(r) for r in mukai_gram(p1)] == frac_rows([[1, 1], [-1, 0]])
    assert [list(r) for r in mukai_gram(e)] == frac_rows(
        [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]]
    )


@given(r=st.integers(-5, 5), d=st.integers(-5, 5), r2=st.integers(-5, 5), d2=st.integers(-5, 5))
def test_mukai_on_degree_zero_of_elliptic_curve(r, d, r2, d2):
    """On E the HH_0 pairing is r d' - d r'."""
    e = curve(1)
    x, y = HHClass.of(e, {"1": r, "w": d}), HHClass.of(e, {"1": r2, "w": d2})
    assert mukai_pairing(x, y) == r * d2 - d * r2


@pytest.mark.parametrize("space", SPACES, ids=repr)
def test_grams_match_pointwise_pairings(space):
    basis = HHClass.basis(space)
    s, m = shklyarov_gram(space), mukai_gram(space)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            assert s[i][j] == shklyarov_pairing(a, b)
            assert m[i][j] == mukai_pairing(a, b)


@pytest.mark.parametrize("space", [projective_space(2), curve(2), product(projective_space(1), curve(1))], ids=repr)
@given(data=st.data())
def test_shklyarov_is_mukai_after_vee(space, data):
    a = HHClass(space, data.draw(elements(space.ring)))
    b = HHClass(space, data.draw(elements(space.ring)))
    assert shklyarov_pairing(a, b) == mukai_pairing(HHClass(space, vee(b.value)), a)


@pytest.mark.parametrize("space", SPACES, ids=repr)
def test_non_degenerate(space):
    assert det(mukai_gram(space)) != 0
    assert det(shklyarov_gram(space)) != 0


def test_pairing_rejects_mixed_spaces():
    with pytest.raises(DistinctSpaceError):
        mukai_pairing(HHClass.basis(projective_space(1))[0], HHClass.basis(curve(0))[0])


def test_degree_split():
    e = curve(1)
    x = HHClass.of(e, [1, 2, 3, 4])
    parts = hh_degree_split(x)
    assert sorted(parts) == [-1, 0, 1]
    assert str(parts[-1]) == "2*a1" and str(parts[1]) == "3*b1"
    assert x.degrees() == {-1, 0, 1}


def test_kunneth_roundtrip():
    p1, e = projective_space(1), curve(1)
    a, b = HHClass.of(p1, [1, 2]), HHClass.of(e, [0, 1, Fraction(1, 2), 3])
    z = kunneth(a, b)
    assert z.space is product(p1, e)
    m = kunneth_inverse(z)
    assert [list(r) for r in m] == [[x * y for y in b.value.coeffs] for x in a.value.coeffs]
    rebuilt = None
    for _, alpha, beta in kunneth_components(z):
        term = kunneth(alpha, beta)
        rebuilt = term if rebuilt is None else rebuilt + term
    assert rebuilt == z
