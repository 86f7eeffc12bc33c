"""Hochschild homology through its Hodge decomposition.

A Hochschild class is stored as its Hodge representative (the HKR map is the
identity in this representation). The piece ``H^q(Omega^p)`` sits in
Hochschild degree ``i = p - q``.

The Shklyarov pairing is taken in closed form, ``integral a*b*td``. Its sign on
odd-degree components follows that formula as written; a chain-level model
could differ from it by a global sign on those components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characteristic import star
from .graded_ring import DistinctSpaceError, HodgeClass, coefficient_matrix, tensor_classes
from .linalg import Matrix
from .spaces import SpaceError, SpaceModel, product


@dataclass(frozen=True)
class HHClass:
    space: SpaceModel
    value: HodgeClass

    def __post_init__(self):
        if not self.value.owner.same_as(self.space.ring):
            raise DistinctSpaceError("value does not live on this space")

    @classmethod
    def basis(cls, space: SpaceModel) -> list[HHClass]:
        return [cls(space, e) for e in space.basis()]

    @classmethod
    def of(cls, space: SpaceModel, coeffs) -> HHClass:
        return cls(space, space.element(coeffs))

    def _same(self, other: HHClass):
        if self.space is not other.space:
            raise DistinctSpaceError("classes live on different spaces")

    def __add__(self, other: HHClass) -> HHClass:
        self._same(other)
        return HHClass(self.space, self.value + other.value)

    def __sub__(self, other: HHClass) -> HHClass:
        self._same(other)
        return HHClass(self.space, self.value - other.value)

    def __neg__(self) -> HHClass:
        return HHClass(self.space, -self.value)

    def __mul__(self, c) -> HHClass:
        if isinstance(c, (int, Fraction)):
            return HHClass(self.space, c * self.value)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self):
        return str(self.value)

    def degree_split(self) -> dict[int, HodgeClass]:
        return hh_degree_split(self)

    def degrees(self) -> set[int]:
        return {p - q for p, q in self.value.support()}


def hh_degree(bidegree: tuple[int, int]) -> int:
    p, q = bidegree
    return p - q


def hh_degree_split(x: HHClass) -> dict[int, HodgeClass]:
    """Nonzero components by Hochschild degree ``form - coh``."""
    ring = x.value.owner
    parts: dict[int, list[Fraction]] = {}
    for k, c in enumerate(x.value.coeffs):
        if c:
            i = hh_degree(ring.bidegrees[k])
            parts.setdefault(i, [Fraction(0)] * ring.dim)[k] = c
    return {i: HodgeClass(ring, v) for i, v in sorted(parts.items())}


def _pair_check(a: HHClass, b: HHClass):
    if a.space is not b.space:
        raise DistinctSpaceError("pairing needs classes on the same space")


def mukai_pairing(a: HHClass, b: HHClass) -> Fraction:
    """``integral star(a) * b * td``."""
    _pair_check(a, b)
    return (star(a.value) * b.value * a.space.todd).integrate()


def shklyarov_pairing(a: HHClass, b: HHClass) -> Fraction:
    """``integral a * b * td``."""
    _pair_check(a, b)
    return (a.value * b.value * a.space.todd).integrate()


@lru_cache(maxsize=None)
def shklyarov_gram(space: SpaceModel) -> Matrix:
    """``S[i][j] = <e_i, e_j>_Shk`` over the basis of ``space``."""
    return space.ring.weighted_pairing(space.todd)


@lru_cache(maxsize=None)
def mukai_gram(space: SpaceModel) -> Matrix:
    """``M[i][j] = <e_i, e_j>_M``; star only flips the sign of row ``i``."""
    s = shklyarov_gram(space)
    bd = space.ring.bidegrees
    return tuple(
        tuple(-x for x in row) if bd[i][1] % 2 else row for i, row in enumerate(s)
    )


def kunneth(a: HHClass, b: HHClass, p: SpaceModel | None = None) -> HHClass:
    """``a (x) b`` on ``X x Y``; degrees add."""
    if p is None:
        p = product(a.space, b.space)
    elif p.factors is None or p.factors[0] is not a.space or p.factors[1] is not b.space:
        raise SpaceError("product was not built from these factors")
    return HHClass(p, tensor_classes(a.value, b.value))


def kunneth_inverse(z: HHClass) -> Matrix:
    """Coefficient matrix of ``z`` over ``basis(X) x basis(Y)``."""
    if z.space.factors is None:
        raise SpaceError("class does not live on a product")
    return coefficient_matrix(z.value)


def kunneth_components(z: HHClass) -> list[tuple[int, HHClass, HHClass]]:
    """Decompose ``z = sum alpha (x) beta`` with ``alpha`` running over the
    basis of the first factor; each term is tagged with ``deg alpha``."""
    x, y = z.space.factors or (None, None)
    if x is None:
        raise SpaceError("class does not live on a product")
    out = []
    for k, row in enumerate(kunneth_inverse(z)):
        if any(row):
            alpha = x.ring.basis_element(k)
            out.append((hh_degree(x.ring.bidegrees[k]), HHClass(x, alpha), HHClass(y, y.element(row))))
    return out
