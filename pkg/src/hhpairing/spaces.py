"""The corpus of spaces: projective spaces, curves, the point and products.

Builders are cached, so asking twice for the same space returns the same
object and classes built on either are directly comparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characteristic import BundleData, exp_class, todd_class
from .graded_ring import BigradedAlgebra, HodgeClass, tensor, tensor_classes

MAX_PROJECTIVE_DIM = 4
MAX_GENUS = 3


class SpaceError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SpaceModel:
    ring: BigradedAlgebra
    n: int
    tangent_ch: HodgeClass
    todd: HodgeClass
    canonical_ch: HodgeClass
    serre_ch: HodgeClass
    label: str
    kind: str
    param: int = 0
    factors: tuple[SpaceModel, SpaceModel] | None = None

    def __repr__(self):
        return f"SpaceModel({self.label})"

    @property
    def dim(self) -> int:
        return self.ring.dim

    def element(self, coeffs) -> HodgeClass:
        return self.ring.element(coeffs)

    def basis(self) -> list[HodgeClass]:
        return self.ring.basis()

    def to_record(self) -> dict:
        if self.kind == "product":
            return {"kind": "product", "factors": [f.to_record() for f in self.factors]}
        if self.kind == "projective":
            return {"kind": "projective", "n": self.param}
        if self.kind == "curve":
            return {"kind": "curve", "genus": self.param}
        return {"kind": "point"}


def _finish(ring, tangent_ch, canonical_ch, label, kind, param=0, factors=None, todd=None):
    if todd is None:
        todd = todd_class(BundleData.from_ch(tangent_ch), ring)
    serre = canonical_ch if ring.n % 2 == 0 else -canonical_ch
    return SpaceModel(ring, ring.n, tangent_ch, todd, canonical_ch, serre, label, kind, param, factors)


@lru_cache(maxsize=None)
def point() -> SpaceModel:
    """``Spec K``: a one-dimensional ring concentrated in bidegree (0, 0)."""
    ring = BigradedAlgebra(["1"], [(0, 0)], 0, {(0, 0): (0, 1)})
    return _finish(ring, ring.zero(), ring.one(), "pt", "point", todd=ring.one())


@lru_cache(maxsize=None)
def projective_space(n: int) -> SpaceModel:
    """``P^n``: ``Q[h]/(h^{n+1})`` with ``h^p`` in bidegree ``(p, p)`` and
    ``integral h^n = 1``."""
    if not 1 <= n <= MAX_PROJECTIVE_DIM:
        raise SpaceError(f"projective dimension must be in [1, {MAX_PROJECTIVE_DIM}]")
    names = ["1", "h"] + [f"h^{p}" for p in range(2, n + 1)]
    products = {(i, j): (i + j, 1) for i in range(n + 1) for j in range(n + 1) if i + j <= n}
    ring = BigradedAlgebra(names, [(p, p) for p in range(n + 1)], n, products)
    h = ring.basis_element(1)
    tangent = (n + 1) * exp_class(h) - ring.one()
    canonical = exp_class(-(n + 1) * h)
    return _finish(ring, tangent, canonical, f"P{n}", "projective", n)


@lru_cache(maxsize=None)
def curve(g: int) -> SpaceModel:
    """Smooth projective curve of genus ``g``.

    Basis ``1, a_1..a_g, b_1..b_g, w`` with ``a_i`` in ``H^1(O)``, ``b_i`` in
    ``H^0(Omega)`` and ``w`` the point class; ``a_i b_j = delta_ij w`` and
    ``b_j a_i = -delta_ij w``.
    """
    if not 0 <= g <= MAX_GENUS:
        raise SpaceError(f"genus must be in [0, {MAX_GENUS}]")
    names = ["1"] + [f"a{i}" for i in range(1, g + 1)] + [f"b{i}" for i in range(1, g + 1)] + ["w"]
    bidegrees = [(0, 0)] + [(0, 1)] * g + [(1, 0)] * g + [(1, 1)]
    top = 2 * g + 1
    products = {}
    for i in range(len(names)):
        products[(0, i)] = (i, 1)
        products[(i, 0)] = (i, 1)
    for i in range(1, g + 1):
        products[(i, g + i)] = (top, 1)
        products[(g + i, i)] = (top, -1)
    ring = BigradedAlgebra(names, bidegrees, 1, products)
    w = ring.basis_element(top)
    one = ring.one()
    return _finish(ring, one + (2 - 2 * g) * w, one + (2 * g - 2) * w, f"C{g}", "curve", g)


@lru_cache(maxsize=None)
def product(x: SpaceModel, y: SpaceModel) -> SpaceModel:
    """``X x Y`` with the Kunneth ring and multiplicative decorations."""
    ring = tensor(x.ring, y.ring)
    tangent = tensor_classes(x.tangent_ch, y.ring.one()) + tensor_classes(x.ring.one(), y.tangent_ch)
    todd = tensor_classes(x.todd, y.todd)
    canonical = tensor_classes(x.canonical_ch, y.canonical_ch)

    def part(s):
        return f"({s.label})" if s.kind == "product" else s.label

    return _finish(ring, tangent, canonical, f"{part(x)}x{part(y)}", "product", factors=(x, y), todd=todd)


def _factor_rings(p) -> tuple[BigradedAlgebra, BigradedAlgebra]:
    ring = getattr(p, "ring", p)
    if ring.factors is None:
        raise SpaceError("not a product space")
    return ring.factors


def pullback_proj(x: HodgeClass, which: int, p) -> HodgeClass:
    """Pull back along the projection to factor ``which`` (0 or 1) of ``p``:
    units are inserted in the other factor."""
    rings = _factor_rings(p)
    if which not in (0, 1) or not rings[which].same_as(x.owner):
        raise SpaceError("class does not live on the tagged factor")
    if which == 0:
        return tensor_classes(x, rings[1].one())
    return tensor_classes(rings[0].one(), x)


def pushforward_proj(z: HodgeClass, onto: int) -> HodgeClass:
    """Integrate out the other factor: ``a (x) b -> (integral a) b`` when
    pushing onto factor 1. No sign appears because the integral only sees the
    even top bidegree."""
    a, b = _factor_rings(z.owner)
    if onto == 1:
        row = a.top_index * b.dim
        return HodgeClass(b, z.coeffs[row: row + b.dim])
    if onto == 0:
        return HodgeClass(a, [z.coeffs[i * b.dim + b.top_index] for i in range(a.dim)])
    raise SpaceError("factor tag must be 0 or 1")


def hyperplane_class(x: SpaceModel) -> HodgeClass:
    """Degree-one divisor class: ``h`` on ``P^n``, the point class on a curve."""
    if x.kind == "projective":
        return x.ring.basis_element("h")
    if x.kind == "curve":
        return x.ring.basis_element("w")
    if x.kind == "point":
        return x.ring.zero()
    raise SpaceError("products have no single hyperplane class; twist each factor")


def line_bundle_class(x: SpaceModel, twist) -> HodgeClass:
    """First Chern class of ``O(d)``; on products ``twist`` is a pair."""
    if x.kind == "product":
        if not isinstance(twist, (list, tuple)) or len(twist) != 2:
            raise SpaceError("product twist must be a pair")
        left = line_bundle_class(x.factors[0], twist[0])
        right = line_bundle_class(x.factors[1], twist[1])
        return pullback_proj(left, 0, x) + pullback_proj(right, 1, x)
    if isinstance(twist, (list, tuple)):
        raise SpaceError("twist must be an integer on a non-product space")
    return Fraction(twist) * hyperplane_class(x)


def tangent_bundle(x: SpaceModel) -> BundleData:
    return BundleData.from_ch(x.tangent_ch)


def elliptic_curve() -> SpaceModel:
    return curve(1)


def corpus() -> dict[str, SpaceModel]:
    """The spaces every identity is checked on."""
    p1, e = projective_space(1), curve(1)
    spaces = [projective_space(n) for n in range(1, MAX_PROJECTIVE_DIM + 1)]
    spaces += [curve(g) for g in range(MAX_GENUS + 1)]
    spaces += [product(p1, p1), product(e, e), product(p1, e)]
    return {s.label: s for s in spaces}
