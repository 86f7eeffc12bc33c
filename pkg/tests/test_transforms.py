from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hhpairing.graded_ring import tensor_classes
from hhpairing.hochschild import HHClass, kunneth, mukai_pairing
from hhpairing.spaces import curve, point, product, projective_space
from hhpairing.transforms import (
    CatalogError,
    Kernel,
    KernelError,
    adjoint,
    compose,
    compose_by_pushforward,
    convolve,
    dual_basis_kernel,
    euler_characteristic,
    external_product,
    factor_through_diagonal,
    grr_projection_check,
    identity_kernel,
    kernel_catalog,
    line_bundle_kernel,
    mukai_convolve,
    random_kernel,
    rank_one_kernel,
    tensor_maps,
    transform_matrix,
)

P1, P2, E = projective_space(1), projective_space(2), curve(1)
seeds = st.integers(0, 10_000)


def convolve_by_components(phi, x):
    """x -> sum (integral x * alpha * td_X) beta, evaluated term by term."""
    out = phi.target.ring.zero()
    for alpha, beta in _pure_terms(phi):
        out = out + (x.value * alpha * phi.source.todd).integrate() * beta
    return out


def _pure_terms(phi):
    xs, ys = phi.source.ring, phi.target.ring
    c = phi.ch.value.coeffs
    for k in range(xs.dim):
        for l in range(ys.dim):
            if c[k * ys.dim + l]:
                yield xs.basis_element(k), c[k * ys.dim + l] * ys.basis_element(l)


def test_identity_kernel_on_p1():
    one, h = P1.ring.one(), P1.ring.basis_element("h")
    expected = tensor_classes(one, h) + tensor_classes(h, one) - tensor_classes(h, h)
    assert identity_kernel(P1).ch.value == expected


def test_identity_kernel_on_elliptic_curve():
    assert str(identity_kernel(E).ch) == "1⊗w - a1⊗b1 + b1⊗a1 + w⊗1"


@pytest.mark.parametrize("space", [P1, P2, E, curve(2), product(P1, E)], ids=repr)
def test_identity_kernel_matches_dual_basis(space):
    assert identity_kernel(space) == dual_basis_kernel(space)
    for x in HHClass.basis(space):
        assert convolve(identity_kernel(space), x) == x


def test_frozen_adjoint():
    one = HHClass.of(P1, [1, 0])
    adj = adjoint(rank_one_kernel(one, one))
    assert str(adj.ch) == "-1⊗1 + 2*1⊗h"


@pytest.mark.parametrize("pair", [(P1, E), (E, P1), (P2, P1), (E, E)], ids=lambda p: f"{p[0].label}-{p[1].label}")
@given(seed=seeds)
def test_convolve_matches_component_sum(pair, seed):
    x, y = pair
    phi = random_kernel(x, y, seed)
    for v in HHClass.basis(x):
        assert convolve(phi, v).value == convolve_by_components(phi, v)
        assert mukai_convolve(phi, v) == convolve(phi, v)


@given(s1=seeds, s2=seeds)
def test_functoriality_random(s1, s2):
    phi, psi = random_kernel(P1, E, s1), random_kernel(E, P2, s2)
    c = compose(phi, psi)
    for v in HHClass.basis(P1):
        assert convolve(c, v) == convolve(psi, convolve(phi, v))
    assert compose_by_pushforward(phi, psi) == c


@given(seed=seeds)
def test_adjoint_random(seed):
    phi = random_kernel(E, P1, seed)
    adj = adjoint(phi)
    for u in HHClass.basis(E):
        for v in HHClass.basis(P1):
            assert mukai_pairing(convolve(phi, u), v) == mukai_pairing(u, convolve(adj, v))


def test_external_product_factorises():
    phi, phi2 = random_kernel(P1, E, 3), line_bundle_kernel(E, P1, 1, 2)
    lhs = transform_matrix(external_product(phi, phi2))
    assert lhs == tensor_maps(transform_matrix(phi), transform_matrix(phi2))


def test_factor_through_diagonal():
    phi = random_kernel(E, P1, 7)
    assert factor_through_diagonal(phi) == phi


def test_kernels_must_have_degree_zero():
    a1 = HHClass(E, E.ring.basis_element("a1"))
    with pytest.raises(KernelError):
        rank_one_kernel(a1, HHClass.of(P1, [1, 0]))


def test_catalog_shape():
    cat = kernel_catalog(P1, P1)
    assert cat[0].label == "id"
    assert len(cat) == 1 + 4 + 3 + 5
    assert kernel_catalog(P1, P1, seed=4)[-1] == kernel_catalog(P1, P1, seed=4)[-1]
    assert kernel_catalog(P1, P1, seed=4)[-1] != kernel_catalog(P1, P1, seed=5)[-1]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_euler_characteristic_catalog(n):
    for d in range(0, 6):
        assert euler_characteristic(projective_space(n), d) == comb(n + d, n)
    for d in range(-n, 0):
        assert euler_characteristic(projective_space(n), d) == 0


@pytest.mark.parametrize("x", [P1, P2, projective_space(3), curve(0), curve(2), product(P1, P1), product(P1, E)], ids=repr)
def test_hirzebruch_riemann_roch(x):
    twists = [(a, b) for a in (-2, 1) for b in (0, 2)] if x.kind == "product" else [-3, 0, 2]
    for t in twists:
        report = grr_projection_check(x, t)
        assert report.ok, report.label
        assert report.lhs.constant_term == euler_characteristic(x, t)


def test_grr_over_a_base():
    assert grr_projection_check(P1, 2, P1, -1).ok
    assert grr_projection_check(E, 1, P2, 1).ok


def test_catalog_rejects_point_twists():
    with pytest.raises(CatalogError):
        euler_characteristic(point(), 1)


def test_kernel_from_matrix_roundtrip():
    m = ((Fraction(1), Fraction(2)), (Fraction(0), Fraction(-1, 3)))
    k = Kernel.from_matrix(P1, P1, m)
    assert k.matrix == m
    assert kunneth(HHClass.of(P1, [1, 0]), HHClass.of(P1, [0, 1])).space is product(P1, P1)
