from __future__ import annotations

from fractions import Fraction

import pytest

from hhpairing.quiver import (
    PathAlgebra,
    QuiverError,
    beilinson_algebra,
    commutator_span,
    euler_matrix,
    geometric_cross_check,
    geometric_hom_matrix,
    hattori_stallings,
    hh0_classes,
    kronecker_algebra,
    trivial_algebra,
)
from hhpairing.spaces import projective_space


def test_kronecker_paths():
    k = kronecker_algebra()
    assert k.dim == 4
    assert [k.path_name(i) for i in range(k.dim)] == ["e0", "e1", "x", "y"]


def test_path_multiplication_left_to_right():
    k = kronecker_algebra()
    e0, e1, x = k.index("e0"), k.index("e1"), k.index("x")
    assert k.mul_paths(e0, x) == x
    assert k.mul_paths(x, e1) == x
    assert k.mul_paths(x, e0) is None
    assert k.mul_paths(e1, x) is None


def test_longer_paths_compose():
    a = PathAlgebra(("0", "1", "2"), (("u", 0, 1), ("v", 1, 2), ("w", 0, 2)))
    assert a.dim == 3 + 3 + 1
    assert a.mul_paths(a.index("u"), a.index("v")) == a.index("uv")
    assert euler_matrix(a) == [[1, 1, 2], [0, 1, 1], [0, 0, 1]]


def test_cycles_rejected():
    with pytest.raises(QuiverError):
        PathAlgebra(("0", "1"), (("a", 0, 1), ("b", 1, 0)))


def test_hh0_of_kronecker():
    k = kronecker_algebra()
    assert hh0_classes(k) == ["e0", "e1"]
    assert len(commutator_span(k)) == 2
    assert hattori_stallings(k, 1) == (Fraction(0), Fraction(1))
    assert hh0_classes(trivial_algebra()) == ["e0"]


def test_euler_matrix_and_geometry_agree():
    assert euler_matrix(kronecker_algebra()) == [[1, 2], [0, 1]]
    assert geometric_hom_matrix() == [[1, 2], [0, 1]]
    assert geometric_cross_check().ok


def test_negative_control():
    td = projective_space(1).todd
    broken = td - td.component(1, 1)
    report = geometric_cross_check(todd=broken)
    assert not report.ok
    assert report.geometry_side == [["0", "1"], ["-1", "0"]]


def test_beilinson_catalog():
    assert beilinson_algebra(1).dim == 4
    with pytest.raises(QuiverError):
        beilinson_algebra(2)
