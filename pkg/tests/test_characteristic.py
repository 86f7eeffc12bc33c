from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import elements
from hhpairing.characteristic import (
    BundleData,
    BundleError,
    bernoulli_plus,
    chern_character,
    chern_classes,
    direct_sum,
    dual_bundle,
    exp_class,
    log_todd_series,
    star,
    tensor_product,
    todd_class,
    todd_series,
    vee,
    w_involution,
)
from hhpairing.spaces import curve, product, projective_space


def series_inverse(c, m):
    """Power-series reciprocal by long division."""
    out = [Fraction(1) / c[0]]
    for k in range(1, m + 1):
        out.append(-sum(c[j] * out[k - j] for j in range(1, k + 1)) / c[0])
    return out


def series_mul(a, b, m):
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(m + 1)]


def series_log(a, m):
    """log(a) for a[0] == 1 via log(1+u) = sum (-1)^{k+1} u^k / k."""
    u = [Fraction(0)] + list(a[1:m + 1])
    out = [Fraction(0)] * (m + 1)
    power = [Fraction(1)] + [Fraction(0)] * m
    for k in range(1, m + 1):
        power = series_mul(power, u, m)
        out = [o + Fraction((-1) ** (k + 1), k) * p for o, p in zip(out, power)]
    return out


M = 10
ONE_MINUS_EXP_OVER_X = [Fraction((-1) ** k, factorial(k + 1)) for k in range(M + 1)]


def test_todd_series_is_reciprocal_of_one_minus_exp():
    assert list(todd_series(M)) == series_inverse(ONE_MINUS_EXP_OVER_X, M)


def test_log_todd_series_matches_formal_log():
    assert list(log_todd_series(M)) == series_log(list(todd_series(M)), M)


def test_bernoulli_values():
    b = bernoulli_plus(8)
    assert b[:5] == (1, Fraction(1, 2), Fraction(1, 6), 0, Fraction(-1, 30))
    assert b[8] == Fraction(-1, 30)


def todd_power_oracle(n):
    """Coefficients of (h/(1-e^-h))^{n+1} mod h^{n+1}."""
    base = series_inverse(ONE_MINUS_EXP_OVER_X, n)
    out = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(n + 1):
        out = series_mul(out, base, n)
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_todd_of_projective_space(n):
    assert list(projective_space(n).todd.coeffs) == todd_power_oracle(n)


def test_frozen_todd_values():
    assert str(projective_space(1).todd) == "1 + h"
    assert str(projective_space(2).todd) == "1 + 3/2*h + h^2"
    assert str(projective_space(3).todd) == "1 + 2*h + 11/6*h^2 + h^3"
    assert str(projective_space(4).todd) == "1 + 5/2*h + 35/12*h^2 + 25/12*h^3 + h^4"
    assert str(curve(0).todd) == "1 + w"
    assert str(curve(1).todd) == "1"
    assert str(curve(3).todd) == "1 - 2*w"


def test_chern_classes_of_tangent_bundles():
    assert str(chern_classes(projective_space(2).tangent_ch)) == "1 + 3*h + 3*h^2"
    assert str(chern_classes(projective_space(3).tangent_ch)) == "1 + 4*h + 6*h^2 + 4*h^3"


@given(roots=st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_root_and_character_routes_agree(roots):
    p = projective_space(3)
    h = p.ring.basis_element("h")
    bundle = BundleData.from_roots([r * h for r in roots])
    ch = chern_character(bundle, p)
    assert todd_class(BundleData.from_ch(ch), p) == todd_class(bundle, p)


def test_character_of_line_bundles():
    p = projective_space(2)
    h = p.ring.basis_element("h")
    assert chern_character(BundleData.line(2 * h), p) == exp_class(2 * h)
    assert str(exp_class(2 * h)) == "1 + 2*h + 2*h^2"


def test_bundle_operations():
    p = projective_space(3)
    h = p.ring.basis_element("h")
    a, b = BundleData.line(h), BundleData.line(-2 * h)
    assert chern_character(tensor_product(a, b), p) == exp_class(-h)
    assert chern_character(direct_sum(a, b), p) == exp_class(h) + exp_class(-2 * h)
    assert chern_character(dual_bundle(a), p) == exp_class(-h)
    assert todd_class(direct_sum(a, b), p) == todd_class(a, p) * todd_class(b, p)


def test_rank_must_match_character():
    ring = projective_space(1).ring
    with pytest.raises(BundleError):
        BundleData(2, ch=ring.one())


def test_involutions_on_curve_basis():
    ring = curve(1).ring
    x = ring.element([1, 1, 1, 1])
    assert star(x) == ring.element([1, -1, 1, -1])
    assert vee(x) == ring.element([1, 1, -1, -1])
    assert w_involution(x) == star(x)


@pytest.mark.parametrize("space", [curve(2), product(projective_space(1), curve(1))], ids=repr)
@given(data=st.data())
def test_involutions_are_multiplicative(space, data):
    x, y = data.draw(elements(space.ring)), data.draw(elements(space.ring))
    for f in (star, vee):
        assert f(x * y) == f(x) * f(y)
        assert f(f(x)) == x
