"""Finite-dimensional bigraded-commutative algebras with exact coefficients.

A basis element has a bidegree ``(p, q)``: ``p`` is the form degree and ``q``
the cohomological degree, so it lives in ``H^q(X, Omega^p)``. Koszul signs use
the total degree ``p + q``.

Every product of two basis elements is a rational multiple of a single basis
element (a *monomial* table). The builders in :mod:`hhpairing.spaces` and the
tensor construction all produce such tables.
"""

from __future__ import annotations

from array import array
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, Mapping, Sequence

from . import backend
from .linalg import Matrix, SingularMatrixError, inverse, matmul, transpose

TENSOR_SEP = "⊗"


class RingError(ValueError):
    pass


class DistinctSpaceError(RingError):
    """Raised when an operation mixes classes from different algebras."""


class DegenerateRingError(RingError):
    """The Poincare pairing of an algebra is singular."""


class ShapeError(RingError):
    """The algebra does not have the tensor shape an operation needs."""


def _scaled(values: Sequence[Fraction]) -> tuple[list[int], int]:
    den = lcm(*(v.denominator for v in values)) if values else 1
    return [v.numerator * (den // v.denominator) for v in values], den


class BigradedAlgebra:
    """Bigraded-commutative algebra over Q given by a monomial structure table.

    ``products`` maps a pair of basis indices ``(i, j)`` to ``(k, c)``, meaning
    ``e_i * e_j = c * e_k``. Pairs that are absent multiply to zero.
    """

    def __init__(
        self,
        names: Sequence[str],
        bidegrees: Sequence[tuple[int, int]],
        n: int,
        products: Mapping[tuple[int, int], tuple[int, Fraction]],
        *,
        factors: tuple[BigradedAlgebra, BigradedAlgebra] | None = None,
    ):
        dim = len(names)
        if len(bidegrees) != dim:
            raise RingError("one bidegree per basis element is required")
        idx = array("i", [-1]) * (dim * dim)
        coefs = [Fraction(0)] * (dim * dim)
        for (i, j), (k, c) in products.items():
            c = Fraction(c)
            if not c:
                continue
            idx[i * dim + j] = k
            coefs[i * dim + j] = c
        num, den = _scaled(coefs)
        self._init(tuple(names), tuple(tuple(b) for b in bidegrees), n, idx, num, den, factors)

    @classmethod
    def from_structure_constants(
        cls,
        names: Sequence[str],
        bidegrees: Sequence[tuple[int, int]],
        n: int,
        constants: Mapping[tuple[int, int], Mapping[int, Fraction]],
    ) -> BigradedAlgebra:
        """Build from general constants ``e_i e_j = sum_k c[i,j][k] e_k``.

        Only monomial tables are supported; a product spread over several
        basis elements raises :class:`RingError`.
        """
        products = {}
        for key, terms in constants.items():
            nonzero = [(k, Fraction(c)) for k, c in terms.items() if c]
            if len(nonzero) > 1:
                raise RingError(f"product {key} is not a multiple of one basis element")
            if nonzero:
                products[key] = nonzero[0]
        return cls(names, bidegrees, n, products)

    @classmethod
    def _from_tables(cls, names, bidegrees, n, idx, num, den, factors=None):
        self = cls.__new__(cls)
        self._init(names, bidegrees, n, idx, num, den, factors)
        return self

    def _init(self, names, bidegrees, n, idx, num, den, factors):
        if n < 0:
            raise RingError("dimension must be non-negative")
        self.names: tuple[str, ...] = names
        self.bidegrees: tuple[tuple[int, int], ...] = bidegrees
        self.n = n
        self.dim = len(names)
        self.factors = factors
        self._idx = idx
        self._num = num
        self._den = den
        self.parity = tuple((p + q) % 2 for p, q in bidegrees)
        for p, q in bidegrees:
            if not (0 <= p <= n and 0 <= q <= n):
                raise RingError(f"bidegree {(p, q)} outside [0, {n}]^2")
        units = [i for i, b in enumerate(bidegrees) if b == (0, 0)]
        tops = [i for i, b in enumerate(bidegrees) if b == (n, n)]
        if len(units) != 1 or len(tops) != 1:
            raise RingError("need exactly one basis element in bidegree (0,0) and one in (n,n)")
        self.unit_index = units[0]
        self.top_index = tops[0]
        self._index = {name: i for i, name in enumerate(names)}
        if len(self._index) != self.dim:
            raise RingError("basis names must be distinct")

    def __repr__(self):
        return f"BigradedAlgebra(dim={self.dim}, n={self.n})"

    # structure --------------------------------------------------------------

    def structure_constant(self, i: int, j: int) -> tuple[int, Fraction] | None:
        r = i * self.dim + j
        k = self._idx[r]
        if k < 0:
            return None
        return k, Fraction(self._num[r], self._den)

    def compatible(self, other: BigradedAlgebra) -> bool:
        """Equal bidegrees and structure constants, names ignored."""
        if self is other:
            return True
        return (
            self.n == other.n
            and self.bidegrees == other.bidegrees
            and self._idx == other._idx
            and all(
                Fraction(a, self._den) == Fraction(b, other._den)
                for a, b in zip(self._num, other._num)
            )
        )

    def same_as(self, other: BigradedAlgebra) -> bool:
        return self is other or (self.names == other.names and self.compatible(other))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingError(f"no basis element named {name!r}") from None

    # elements ---------------------------------------------------------------

    def element(self, coeffs: Sequence | Mapping[str, object]) -> HodgeClass:
        if isinstance(coeffs, Mapping):
            vec = [Fraction(0)] * self.dim
            for name, c in coeffs.items():
                vec[self.index(name)] += Fraction(c)
            return HodgeClass(self, vec)
        return HodgeClass(self, coeffs)

    def basis_element(self, i: int | str) -> HodgeClass:
        if isinstance(i, str):
            i = self.index(i)
        vec = [Fraction(0)] * self.dim
        vec[i] = Fraction(1)
        return HodgeClass(self, vec)

    def basis(self) -> list[HodgeClass]:
        return [self.basis_element(i) for i in range(self.dim)]

    def zero(self) -> HodgeClass:
        return HodgeClass(self, [Fraction(0)] * self.dim)

    def one(self) -> HodgeClass:
        return self.basis_element(self.unit_index)

    # pairings ---------------------------------------------------------------

    def integrals_against(self, w: HodgeClass) -> list[Fraction]:
        """The vector ``u[k] = integral of e_k * w``."""
        dim, top = self.dim, self.top_index
        out = []
        for k in range(dim):
            s = Fraction(0)
            row = k * dim
            for m, wm in enumerate(w.coeffs):
                if wm and self._idx[row + m] == top:
                    s += wm * self._num[row + m]
            out.append(s / self._den)
        return out

    def weighted_pairing(self, w: HodgeClass | None = None) -> Matrix:
        """Matrix ``P[i][j] = integral of e_i * e_j * w`` (``w`` defaults to 1)."""
        if w is None:
            w = self.one()
        u = self.integrals_against(w)
        unum, uden = _scaled(u)
        flat = backend.weighted_gram(self._idx, self._num, unum, self.dim)
        den = uden * self._den
        d = self.dim
        return tuple(tuple(Fraction(flat[i * d + j], den) for j in range(d)) for i in range(d))

    @cached_property
    def gram(self) -> Matrix:
        return self.weighted_pairing()

    @cached_property
    def gram_inverse(self) -> Matrix:
        try:
            return inverse(self.gram)
        except SingularMatrixError:
            raise DegenerateRingError("Poincare pairing is singular") from None

    @cached_property
    def dual_basis(self) -> tuple[HodgeClass, ...]:
        ginv = self.gram_inverse
        return tuple(
            HodgeClass(self, [ginv[m][l] for m in range(self.dim)]) for l in range(self.dim)
        )

    # checks -----------------------------------------------------------------

    def check_axioms(self) -> None:
        """Raise :class:`RingError` unless unit, grading, commutativity and
        associativity hold on all basis pairs and triples."""
        basis = self.basis()
        one = self.one()
        for i, x in enumerate(basis):
            if one * x != x or x * one != x:
                raise RingError(f"unit fails on {self.names[i]}")
        for i in range(self.dim):
            for j in range(self.dim):
                sc = self.structure_constant(i, j)
                p, q = self.bidegrees[i]
                p2, q2 = self.bidegrees[j]
                if sc is not None:
                    if self.bidegrees[sc[0]] != (p + p2, q + q2):
                        raise RingError(f"bidegree not additive on ({i}, {j})")
                sign = -1 if self.parity[i] and self.parity[j] else 1
                if basis[i] * basis[j] != sign * (basis[j] * basis[i]):
                    raise RingError(f"graded commutativity fails on ({i}, {j})")
        for x in basis:
            for y in basis:
                xy = x * y
                for z in basis:
                    if xy * z != x * (y * z):
                        raise RingError("associativity fails")


class HodgeClass:
    """An element of a :class:`BigradedAlgebra` with ``Fraction`` coefficients."""

    __slots__ = ("owner", "coeffs", "_hash")

    def __init__(self, owner: BigradedAlgebra, coeffs: Iterable):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != owner.dim:
            raise RingError(f"expected {owner.dim} coefficients, got {len(coeffs)}")
        self.owner = owner
        self.coeffs = coeffs
        self._hash = None

    def _check(self, other: HodgeClass):
        if not self.owner.same_as(other.owner):
            raise DistinctSpaceError("classes live in different algebras")

    def __add__(self, other):
        if not isinstance(other, HodgeClass):
            return NotImplemented
        self._check(other)
        return HodgeClass(self.owner, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, HodgeClass):
            return NotImplemented
        self._check(other)
        return HodgeClass(self.owner, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return HodgeClass(self.owner, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, HodgeClass):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return HodgeClass(self.owner, [a * other for a in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HodgeClass(self.owner, [other * a for a in self.coeffs])
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HodgeClass):
            return NotImplemented
        return self.owner.same_as(other.owner) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.owner.names, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"HodgeClass({self})"

    def __str__(self):
        terms = []
        for c, name in zip(self.coeffs, self.owner.names):
            if not c:
                continue
            if name == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{c}*{name}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __getitem__(self, name: str) -> Fraction:
        return self.coeffs[self.owner.index(name)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[self.owner.unit_index]

    def support(self) -> set[tuple[int, int]]:
        """Bidegrees carrying a nonzero coefficient."""
        return {self.owner.bidegrees[i] for i, c in enumerate(self.coeffs) if c}

    def is_homogeneous(self, bidegree: tuple[int, int] | None = None) -> bool:
        s = self.support()
        if bidegree is None:
            return len(s) <= 1
        return s <= {tuple(bidegree)}

    def component(self, p: int, q: int) -> HodgeClass:
        bd = self.owner.bidegrees
        return HodgeClass(self.owner, [c if bd[i] == (p, q) else 0 for i, c in enumerate(self.coeffs)])

    def map_signs(self, sign) -> HodgeClass:
        """Multiply each coefficient by ``sign(p, q)`` of its basis bidegree."""
        bd = self.owner.bidegrees
        return HodgeClass(self.owner, [c * sign(*bd[i]) if c else c for i, c in enumerate(self.coeffs)])

    def integrate(self) -> Fraction:
        return integrate(self)

    def __pow__(self, k: int) -> HodgeClass:
        if k < 0:
            return self.inverse() ** (-k)
        out = self.owner.one()
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> HodgeClass:
        """Inverse of a class with invertible constant term (geometric series)."""
        c = self.constant_term
        if not c:
            raise RingError("class has no inverse: constant term vanishes")
        one = self.owner.one()
        y = one - self * (1 / c)
        out, term = one, one
        while True:
            term = term * y
            if term.is_zero():
                break
            out = out + term
        return out * (1 / c)

    def to_dict(self) -> dict[str, str]:
        return {name: str(c) for name, c in zip(self.owner.names, self.coeffs) if c}


def mul(a: HodgeClass, b: HodgeClass) -> HodgeClass:
    """Cup product, extended bilinearly from the structure table."""
    a._check(b)
    ring = a.owner
    an, ad = _scaled(a.coeffs)
    bn, bd = _scaled(b.coeffs)
    out = backend.monomial_product(an, bn, ring._idx, ring._num, ring.dim)
    den = ad * bd * ring._den
    return HodgeClass(ring, [Fraction(x, den) for x in out])


def integrate(a: HodgeClass) -> Fraction:
    """Coefficient on the fundamental class; zero on every other bidegree."""
    return a.coeffs[a.owner.top_index]


def gram_and_dual_basis(ring: BigradedAlgebra) -> tuple[Matrix, tuple[HodgeClass, ...]]:
    """Poincare Gram matrix ``G[x][y] = integral(x*y)`` and the dual classes
    ``f^l`` with ``integral(e_k * f^l) = delta_{k,l}``."""
    return ring.gram, ring.dual_basis


@lru_cache(maxsize=None)
def tensor(a: BigradedAlgebra, b: BigradedAlgebra) -> BigradedAlgebra:
    """Graded tensor product; ``(x(x)y)(x'(x)y') = (-1)^{|y||x'|} xx' (x) yy'``."""
    idx, coef = backend.tensor_tables(
        a._idx, a._num, a.dim, bytes(a.parity), b._idx, b._num, b.dim, bytes(b.parity)
    )
    names = tuple(f"{x}{TENSOR_SEP}{y}" for x in a.names for y in b.names)
    bidegrees = tuple((p + p2, q + q2) for p, q in a.bidegrees for p2, q2 in b.bidegrees)
    return BigradedAlgebra._from_tables(
        names, bidegrees, a.n + b.n, idx, coef, a._den * b._den, factors=(a, b)
    )


def tensor_classes(x: HodgeClass, y: HodgeClass) -> HodgeClass:
    """The pure tensor ``x (x) y`` (the tensor basis is the Kunneth basis)."""
    ring = tensor(x.owner, y.owner)
    return HodgeClass(ring, [a * b for a in x.coeffs for b in y.coeffs])


def coefficient_matrix(z: HodgeClass) -> Matrix:
    """Coefficients of a class on ``A (x) B`` as a ``dim A x dim B`` matrix."""
    if z.owner.factors is None:
        raise ShapeError("class does not live on a tensor product")
    da, db = z.owner.factors[0].dim, z.owner.factors[1].dim
    c = z.coeffs
    return tuple(tuple(c[i * db: (i + 1) * db]) for i in range(da))


def from_coefficient_matrix(ring: BigradedAlgebra, m: Matrix) -> HodgeClass:
    return HodgeClass(ring, [x for row in m for x in row])


def koszul_swap(x: HodgeClass) -> HodgeClass:
    """``a (x) b -> (-1)^{|a||b|} b (x) a``, landing on ``B (x) A``."""
    if x.owner.factors is None:
        raise ShapeError("koszul_swap needs a class on a tensor product")
    a, b = x.owner.factors
    target = tensor(b, a)
    out = [Fraction(0)] * target.dim
    for i in range(a.dim):
        for j in range(b.dim):
            c = x.coeffs[i * b.dim + j]
            if c:
                out[j * a.dim + i] = -c if a.parity[i] and b.parity[j] else c
    return HodgeClass(target, out)


def diagonal_pushforward(a: HodgeClass) -> HodgeClass:
    """The class ``D`` on ``A (x) A`` with
    ``integral_{A(x)A} D * (b (x) c) = integral_A a*b*c`` for all ``b, c``.

    Writing ``D = sum d_kl e_k (x) e_l`` the adjunction reads
    ``sum d_kl (-1)^{|k||l|} G[k][b] G[l][c] = T[b][c]`` with ``T`` the pairing
    weighted by ``a``, so the sign-twisted coefficients are ``G^-T T G^-1``.
    """
    ring = a.owner
    ginv = ring.gram_inverse
    # weighted_pairing puts the weight last; moving odd parts of a to the front costs a sign
    t = ring.weighted_pairing(a.map_signs(lambda p, q: -1 if (p + q) % 2 else 1))
    d = matmul(matmul(transpose(ginv), t), ginv)
    par = ring.parity
    signed = tuple(
        tuple(-x if par[k] and par[l] else x for l, x in enumerate(row)) for k, row in enumerate(d)
    )
    return from_coefficient_matrix(tensor(ring, ring), signed)
