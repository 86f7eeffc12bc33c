"""Integral transforms on Hochschild homology as convolution with kernels.

A kernel from ``X`` to ``Y`` is its Chern character, a class of Hochschild
degree 0 on ``X x Y``. Its coefficient matrix ``C`` over
``basis(X) x basis(Y)`` is the Kunneth decomposition ``sum alpha (x) beta``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial

from .characteristic import BundleData, chern_character, exp_class, star, w_involution
from .graded_ring import (
    HodgeClass,
    diagonal_pushforward,
    from_coefficient_matrix,
    tensor,
)
from .hochschild import HHClass, hh_degree, kunneth, kunneth_components, mukai_pairing, shklyarov_gram
from .linalg import Matrix, inverse, matmul, vecmat
from .spaces import (
    SpaceError,
    SpaceModel,
    line_bundle_class,
    point,
    product,
    pullback_proj,
    pushforward_proj,
)


class KernelError(ValueError):
    pass


class CatalogError(KernelError):
    """Input outside the classical pushforward catalog."""


def spaces_match(x: SpaceModel, y: SpaceModel) -> bool:
    """Same space up to basis names (e.g. ``X x pt`` against ``X``, or the two
    bracketings of a triple product)."""
    return x is y or (x.ring.compatible(y.ring) and x.todd.coeffs == y.todd.coeffs)


def _transport(c: HHClass, space: SpaceModel) -> HHClass:
    if c.space is space:
        return c
    if not spaces_match(c.space, space):
        raise SpaceError(f"class on {c.space.label} does not live on {space.label}")
    return HHClass(space, space.element(c.value.coeffs))


@dataclass(frozen=True, eq=False)
class Kernel:
    source: SpaceModel
    target: SpaceModel
    ch: HHClass
    label: str = field(default="kernel")

    def __post_init__(self):
        p = product(self.source, self.target)
        if self.ch.space is not p:
            object.__setattr__(self, "ch", _transport(self.ch, p))
        if self.ch.degrees() - {0}:
            raise KernelError("kernel character must have Hochschild degree 0")

    @classmethod
    def from_matrix(cls, source, target, m: Matrix, label="kernel") -> Kernel:
        p = product(source, target)
        return cls(source, target, HHClass(p, from_coefficient_matrix(p.ring, m)), label)

    @cached_property
    def matrix(self) -> Matrix:
        d = self.target.dim
        c = self.ch.value.coeffs
        return tuple(tuple(c[k * d: (k + 1) * d]) for k in range(self.source.dim))

    def components(self) -> list[tuple[int, HHClass, HHClass]]:
        return kunneth_components(self.ch)

    def __eq__(self, other):
        if not isinstance(other, Kernel):
            return NotImplemented
        return (
            spaces_match(self.source, other.source)
            and spaces_match(self.target, other.target)
            and self.matrix == other.matrix
        )

    __hash__ = object.__hash__

    def __repr__(self):
        return f"Kernel({self.label}: {self.source.label} -> {self.target.label})"


def convolve(phi: Kernel, x: HHClass) -> HHClass:
    """``sum (integral_X x * alpha * td_X) beta`` over the Kunneth terms."""
    x = _transport(x, phi.source)
    pairs = vecmat(x.value.coeffs, shklyarov_gram(phi.source))
    return HHClass(phi.target, phi.target.element(vecmat(pairs, phi.matrix)))


def mukai_convolve(phi: Kernel, x: HHClass) -> HHClass:
    """``sum <W(x), alpha>_M beta``: the transform built from the Mukai pairing."""
    x = _transport(x, phi.source)
    wx = HHClass(x.space, w_involution(x.value))
    out = phi.target.ring.zero()
    for _, alpha, beta in phi.components():
        c = mukai_pairing(wx, alpha)
        if c:
            out = out + c * beta.value
    return HHClass(phi.target, out)


def transform_matrix(phi: Kernel, via=convolve) -> Matrix:
    """Row ``k`` is the image of the ``k``-th source basis element."""
    return tuple(via(phi, x).value.coeffs for x in HHClass.basis(phi.source))


def compose(phi: Kernel, psi: Kernel) -> Kernel:
    """Kernel of ``psi o phi``: ``sum (integral_Y beta gamma td_Y) alpha (x) delta``,
    i.e. the matrix product ``C_phi S_Y C_psi``."""
    if not spaces_match(phi.target, psi.source):
        raise SpaceError("middle spaces differ")
    m = matmul(matmul(phi.matrix, shklyarov_gram(phi.target)), psi.matrix)
    return Kernel.from_matrix(phi.source, psi.target, m, f"({psi.label})o({phi.label})")


def compose_by_pushforward(phi: Kernel, psi: Kernel) -> Kernel:
    """Same kernel computed as ``pi_XZ*(pi_XY^* ch(phi) . pi_YZ^* ch(psi) . pi_Y^* td_Y)``
    inside the cohomology ring of ``X x Y x Z``."""
    if not spaces_match(phi.target, psi.source):
        raise SpaceError("middle spaces differ")
    x, y, z = phi.source, phi.target, psi.target
    xy = tensor(x.ring, y.ring)
    triple = tensor(xy, z.ring)
    dx, dy, dz = x.dim, y.dim, z.dim

    def at(k, l, m):
        return (k * dy + l) * dz + m

    a = [Fraction(0)] * triple.dim
    b = [Fraction(0)] * triple.dim
    t = [Fraction(0)] * triple.dim
    for k in range(dx):
        for l in range(dy):
            a[at(k, l, z.ring.unit_index)] = phi.matrix[k][l]
    for l in range(dy):
        for m in range(dz):
            b[at(x.ring.unit_index, l, m)] = psi.matrix[l][m]
        t[at(x.ring.unit_index, l, z.ring.unit_index)] = y.todd.coeffs[l]
    prod = HodgeClass(triple, a) * HodgeClass(triple, b) * HodgeClass(triple, t)
    top = y.ring.top_index
    m = tuple(tuple(prod.coeffs[at(k, top, j)] for j in range(dz)) for k in range(dx))
    return Kernel.from_matrix(x, z, m, f"({psi.label})o({phi.label})")


def identity_kernel(x: SpaceModel) -> Kernel:
    """Character of the diagonal, ``Delta_*(td^-1)``."""
    p = product(x, x)
    ch = diagonal_pushforward(x.todd.inverse())
    return Kernel(x, x, HHClass(p, p.element(ch.coeffs)), "id")


def dual_basis_kernel(x: SpaceModel) -> Kernel:
    """``sum_k e_k (x) f_k`` with ``<f_k, e_l>_Shk = delta_kl``.

    Writing ``f_k = sum_l C[k][l] e_l`` the condition is ``C S = 1``.
    """
    return Kernel.from_matrix(x, x, inverse(shklyarov_gram(x)), "id-dual")


def adjoint(phi: Kernel) -> Kernel:
    """Right adjoint kernel ``sum (-1)^i W(beta) (x) W(alpha) ch(S_X)``, ``alpha``
    in degree ``i``."""
    x, y = phi.source, phi.target
    twisted = [star(e) * x.serre_ch for e in x.basis()]
    ysign = [(-1) ** q for _, q in y.ring.bidegrees]
    rows = [[Fraction(0)] * x.dim for _ in range(y.dim)]
    for k, row in enumerate(phi.matrix):
        sk = (-1) ** (hh_degree(x.ring.bidegrees[k]) % 2)
        vec = twisted[k].coeffs
        for l, c in enumerate(row):
            if c:
                f = sk * ysign[l] * c
                target_row = rows[l]
                for j, v in enumerate(vec):
                    if v:
                        target_row[j] += f * v
    return Kernel.from_matrix(y, x, rows, f"{phi.label}^!")


def external_product(phi: Kernel, phi2: Kernel) -> Kernel:
    """``phi (x) phi2`` reshuffled from ``(X x Y) x (X' x Y')`` to
    ``(X x X') x (Y x Y')`` with the sign ``(-1)^{|y||x'|}``."""
    x, y, x2, y2 = phi.source, phi.target, phi2.source, phi2.target
    py, px2 = y.ring.parity, x2.ring.parity
    rows = []
    for i in range(x.dim):
        for i2 in range(x2.dim):
            row = []
            for j in range(y.dim):
                c = phi.matrix[i][j]
                for j2 in range(y2.dim):
                    v = c * phi2.matrix[i2][j2] if c else Fraction(0)
                    row.append(-v if py[j] and px2[i2] else v)
            rows.append(row)
    return Kernel.from_matrix(product(x, x2), product(y, y2), rows, f"{phi.label}[x]{phi2.label}")


def tensor_maps(f: Matrix, g: Matrix) -> Matrix:
    """Matrix of ``f (x) g`` on tensor bases (row convention of
    :func:`transform_matrix`); both maps preserve parity, so no sign appears."""
    return tuple(
        tuple(a * b for a in fr for b in gr) for fr in f for gr in g
    )


# catalog ---------------------------------------------------------------------


def rank_one_kernel(alpha: HHClass, beta: HHClass) -> Kernel:
    return Kernel(alpha.space, beta.space, kunneth(alpha, beta), f"[{alpha}]x[{beta}]")


def line_bundle_kernel(x: SpaceModel, y: SpaceModel, a, b) -> Kernel:
    """``ch(O(a) [x] O(b))`` on ``X x Y``."""
    p = product(x, y)
    c1 = pullback_proj(line_bundle_class(x, a), 0, p) + pullback_proj(line_bundle_class(y, b), 1, p)
    return Kernel(x, y, HHClass(p, exp_class(c1)), f"O({a})[x]O({b})")


def random_kernel(x: SpaceModel, y: SpaceModel, seed) -> Kernel:
    """Pseudo-random rational kernel supported on degree-matched basis pairs."""
    rng = random.Random(f"{seed}:{x.label}:{y.label}")
    dx = [hh_degree(b) for b in x.ring.bidegrees]
    dy = [hh_degree(b) for b in y.ring.bidegrees]
    rows = []
    for i in range(x.dim):
        row = []
        for j in range(y.dim):
            if dx[i] + dy[j] == 0 and rng.random() < 0.7:
                row.append(Fraction(rng.randint(-6, 6), rng.randint(1, 5)))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return Kernel.from_matrix(x, y, rows, f"random({seed})")


def basis_rank_one_kernels(x: SpaceModel, y: SpaceModel) -> list[Kernel]:
    out = []
    for i, e in enumerate(HHClass.basis(x)):
        for j, f in enumerate(HHClass.basis(y)):
            if hh_degree(x.ring.bidegrees[i]) + hh_degree(y.ring.bidegrees[j]) == 0:
                out.append(rank_one_kernel(e, f))
    return out


LINE_BUNDLE_TWISTS = ((0, 0), (1, -1), (2, 1))


def kernel_catalog(x: SpaceModel, y: SpaceModel, seed: int = 0, n_random: int = 5) -> list[Kernel]:
    """Identity (when ``x is y``), rank-one basis kernels, line-bundle kernels
    and ``n_random`` seeded random kernels."""
    out = []
    if x is y:
        out.append(identity_kernel(x))
    out += basis_rank_one_kernels(x, y)
    if x.kind != "product" and y.kind != "product":
        out += [line_bundle_kernel(x, y, a, b) for a, b in LINE_BUNDLE_TWISTS]
    out += [random_kernel(x, y, f"{seed}.{j}") for j in range(n_random)]
    return out


# Riemann-Roch for projections -----------------------------------------------


def euler_characteristic(x: SpaceModel, twist) -> int:
    """Classical ``chi(X, O(d))``: ``binom(n+d, n)`` as a polynomial on
    ``P^n``, ``d + 1 - g`` on a curve, multiplicative on products."""
    if x.kind == "point":
        if twist not in (0, (0,)):
            raise CatalogError("the point only carries the trivial bundle")
        return 1
    if x.kind == "projective":
        num = 1
        for k in range(1, x.n + 1):
            num *= twist + k
        return num // factorial(x.n)
    if x.kind == "curve":
        return twist + 1 - x.param
    if x.kind == "product":
        a, b = twist
        return euler_characteristic(x.factors[0], a) * euler_characteristic(x.factors[1], b)
    raise CatalogError(f"no classical formula for {x.label}")


@dataclass(frozen=True)
class GRRReport:
    ok: bool
    lhs: HodgeClass
    rhs: HodgeClass
    label: str


def grr_projection_check(x: SpaceModel, twist, z: SpaceModel | None = None, z_twist=0) -> GRRReport:
    """Compare ``(f x id)_*(ch(a) pi_X^* td_X)`` with ``ch((f x id)_! a)`` for
    ``f: X -> pt`` and ``a = O_X(twist) [x] O_Z(z_twist)``.

    The K-theoretic pushforward is ``chi(X, O(twist)) [O_Z(z_twist)]``, taken
    from :func:`euler_characteristic`; ``td(pt) = 1``.
    """
    z = point() if z is None else z
    if z.kind == "point" and z_twist:
        raise CatalogError("the point only carries the trivial bundle")
    p = product(x, z)
    c1 = pullback_proj(line_bundle_class(x, twist), 0, p) + pullback_proj(line_bundle_class(z, z_twist), 1, p)
    ch_alpha = chern_character(BundleData.line(c1), p)
    lhs = pushforward_proj(ch_alpha * pullback_proj(x.todd, 0, p), onto=1)
    chi = euler_characteristic(x, twist)
    rhs = chi * exp_class(line_bundle_class(z, z_twist)) * point().todd.constant_term
    label = f"{x.label}x{z.label}->{z.label}, O({twist})[x]O({z_twist})"
    return GRRReport(lhs == rhs, lhs, rhs, label)


@lru_cache(maxsize=None)
def diagonal_to_point_kernel(x: SpaceModel) -> Kernel:
    """The diagonal viewed as a kernel ``X x X -> pt``."""
    d = identity_kernel(x)
    pp = product(product(x, x), point())
    return Kernel(product(x, x), point(), HHClass(pp, pp.element(d.ch.value.coeffs)), "Delta")


def point_source_kernel(phi: Kernel) -> Kernel:
    """``phi`` viewed as a kernel ``pt -> X x Y``."""
    xy = product(phi.source, phi.target)
    p = product(point(), xy)
    return Kernel(point(), xy, HHClass(p, p.element(phi.ch.value.coeffs)), f"{phi.label}_pt")


def factor_through_diagonal(phi: Kernel) -> Kernel:
    """Rebuild ``phi`` as ``(Delta [x] id_Y) o (O_Delta [x] phi_pt)``, a kernel
    ``X x pt -> pt x Y``."""
    x, y = phi.source, phi.target
    first = external_product(identity_kernel(x), point_source_kernel(phi))
    second = external_product(diagonal_to_point_kernel(x), identity_kernel(y))
    return compose(first, second)
