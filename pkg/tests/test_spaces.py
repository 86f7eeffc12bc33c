from __future__ import annotations

from fractions import Fraction

import pytest

from hhpairing.characteristic import chern_classes, exp_class
from hhpairing.graded_ring import tensor_classes
from hhpairing.spaces import (
    SpaceError,
    corpus,
    curve,
    line_bundle_class,
    point,
    product,
    projective_space,
    pullback_proj,
    pushforward_proj,
)


def test_builders_are_cached():
    assert projective_space(2) is projective_space(2)
    p = product(projective_space(1), curve(1))
    assert p is product(projective_space(1), curve(1))


@pytest.mark.parametrize(
    "space, dim, n",
    [(point(), 1, 0), (projective_space(3), 4, 3), (curve(0), 2, 1), (curve(3), 8, 1),
     (product(curve(1), curve(1)), 16, 2), (product(projective_space(1), projective_space(1)), 4, 2)],
    ids=repr,
)
def test_dimensions(space, dim, n):
    assert space.dim == dim and space.n == n


def test_curve_bidegrees():
    ring = curve(2).ring
    assert list(ring.names) == ["1", "a1", "a2", "b1", "b2", "w"]
    assert list(ring.bidegrees) == [(0, 0), (0, 1), (0, 1), (1, 0), (1, 0), (1, 1)]


@pytest.mark.parametrize("g", range(4))
def test_hodge_euler_characteristic_of_curves(g):
    c = curve(g)
    assert c.todd.integrate() == 1 - g
    assert c.tangent_ch.integrate() == 2 - 2 * g


@pytest.mark.parametrize("n", range(1, 5))
def test_projective_decorations(n):
    p = projective_space(n)
    h = p.ring.basis_element("h")
    assert p.canonical_ch == exp_class(-(n + 1) * h)
    assert p.todd.integrate() == 1
    assert chern_classes(p.tangent_ch).integrate() == n + 1  # topological Euler number
    sign = -1 if n % 2 else 1
    assert p.serre_ch == sign * p.canonical_ch


def test_product_decorations_are_external():
    p1, e = projective_space(1), curve(1)
    s = product(p1, e)
    assert s.todd == pullback_proj(p1.todd, 0, s) * pullback_proj(e.todd, 1, s)
    assert chern_classes(s.tangent_ch).integrate() == 0
    assert chern_classes(product(projective_space(1), projective_space(1)).tangent_ch).integrate() == 4
    assert s.label == "P1xC1"
    assert product(s, p1).label == "(P1xC1)xP1"


def test_projection_formula():
    p1, e = projective_space(1), curve(1)
    s = product(p1, e)
    for x in p1.basis():
        for y in e.basis():
            z = tensor_classes(x, y)
            assert pushforward_proj(z, 1) == x.integrate() * y
            assert pushforward_proj(z, 0) == y.integrate() * x
    b = e.ring.element([1, 2, 3, 4])
    z = s.ring.element([Fraction(k, 5) for k in range(s.dim)])
    assert pushforward_proj(pullback_proj(b, 1, s) * z, 1) == b * pushforward_proj(z, 1)
    assert pushforward_proj(z, 1).integrate() == z.integrate() == pushforward_proj(z, 0).integrate()


def test_line_bundle_classes():
    p = product(projective_space(1), projective_space(1))
    c1 = line_bundle_class(p, (2, -1))
    assert (c1 * c1).integrate() == -4
    with pytest.raises(SpaceError):
        line_bundle_class(p, 3)
    assert line_bundle_class(curve(2), 3) == 3 * curve(2).ring.basis_element("w")


def test_builder_ranges():
    with pytest.raises(SpaceError):
        projective_space(5)
    with pytest.raises(SpaceError):
        curve(4)


def test_corpus_contents():
    assert sorted(corpus()) == sorted(
        ["P1", "P2", "P3", "P4", "C0", "C1", "C2", "C3", "P1xP1", "C1xC1", "P1xC1"]
    )


def test_records_roundtrip():
    from hhpairing.records import parse_space

    for s in corpus().values():
        assert parse_space(s.to_record()) is s
