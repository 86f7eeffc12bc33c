"""Chern characters, Todd classes and the sign involutions on Hodge cohomology.

Power series in a nilpotent class are evaluated until the powers vanish, so
truncation at the dimension of the space is automatic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .graded_ring import HodgeClass, RingError


class BundleError(ValueError):
    pass


# series ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def bernoulli_plus(m: int) -> tuple[Fraction, ...]:
    """Bernoulli numbers ``B_0..B_m`` with ``B_1 = +1/2``."""
    b = [Fraction(1)]
    for k in range(1, m + 1):
        s = sum((comb(k + 1, j) * b[j] for j in range(k)), Fraction(0))
        b.append(-s / (k + 1))
    if m >= 1:
        b[1] = Fraction(1, 2)
    return tuple(b)


@lru_cache(maxsize=None)
def todd_series(m: int) -> tuple[Fraction, ...]:
    """Coefficients of ``x / (1 - e^{-x})`` up to ``x^m``."""
    return tuple(bk / factorial(k) for k, bk in enumerate(bernoulli_plus(m)))


@lru_cache(maxsize=None)
def log_todd_series(m: int) -> tuple[Fraction, ...]:
    """Coefficients of ``log(x / (1 - e^{-x}))`` up to ``x^m``.

    The constant term is 0, the linear term 1/2, and for even ``k >= 2`` the
    coefficient is ``-B_k / (k * k!)``; odd terms beyond the first vanish.
    """
    b = bernoulli_plus(m)
    out = [Fraction(0)] * (m + 1)
    if m >= 1:
        out[1] = Fraction(1, 2)
    for k in range(2, m + 1, 2):
        out[k] = -b[k] / (k * factorial(k))
    return tuple(out)


def evaluate_series(coeffs, x: HodgeClass) -> HodgeClass:
    """``sum_k coeffs(k) x^k`` for nilpotent ``x`` (zero constant term).

    ``coeffs`` is a callable returning the k-th coefficient.
    """
    if x.constant_term:
        raise RingError("series argument must have zero constant term")
    out = coeffs(0) * x.owner.one()
    power = x.owner.one()
    k = 0
    while True:
        k += 1
        power = power * x
        if power.is_zero():
            return out
        c = coeffs(k)
        if c:
            out = out + c * power


def exp_class(x: HodgeClass) -> HodgeClass:
    return evaluate_series(lambda k: Fraction(1, factorial(k)), x)


def _series_fn(table):
    def coeff(k):
        return table(max(k, 8))[k]

    return coeff


# graded pieces --------------------------------------------------------------


def _require_diagonal(x: HodgeClass) -> None:
    if any(p != q for p, q in x.support()):
        raise BundleError("characteristic classes must be supported in bidegrees (p, p)")


def degree_part(x: HodgeClass, k: int) -> HodgeClass:
    """The ``(k, k)`` component."""
    return x.component(k, k)


def power_sums(ch: HodgeClass) -> list[HodgeClass]:
    """``p_k = k! ch_k`` for ``k = 1..n``: the power sums of the Chern roots."""
    _require_diagonal(ch)
    return [factorial(k) * degree_part(ch, k) for k in range(1, ch.owner.n + 1)]


def chern_classes(ch: HodgeClass) -> HodgeClass:
    """Total Chern class from a Chern character via Newton's identities."""
    p = power_sums(ch)
    ring = ch.owner
    c = [ring.one()]
    for k in range(1, ring.n + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            term = c[k - i] * p[i - 1]
            acc = acc + term if i % 2 else acc - term
        c.append(acc * Fraction(1, k))
    total = ring.zero()
    for ck in c:
        total = total + ck
    return total


# bundles --------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BundleData:
    """A (virtual) bundle given by Chern roots or directly by its character."""

    rank: int
    roots: tuple[HodgeClass, ...] | None = None
    ch: HodgeClass | None = None

    def __post_init__(self):
        if self.roots is None and self.ch is None:
            raise BundleError("give chern roots or a chern character")
        if self.roots is not None:
            if len(self.roots) != self.rank:
                raise BundleError("rank must equal the number of chern roots")
            for r in self.roots:
                if not r.is_homogeneous((1, 1)):
                    raise BundleError(f"chern root {r} is not of bidegree (1,1)")
        if self.ch is not None and self.ch.constant_term != self.rank:
            raise BundleError("chern character constant term must equal the rank")

    @classmethod
    def from_roots(cls, roots) -> BundleData:
        roots = tuple(roots)
        return cls(len(roots), roots=roots)

    @classmethod
    def from_ch(cls, ch: HodgeClass) -> BundleData:
        _require_diagonal(ch)
        r = ch.constant_term
        if r.denominator != 1:
            raise BundleError("rank must be an integer")
        return cls(int(r), ch=ch)

    @classmethod
    def line(cls, c1: HodgeClass) -> BundleData:
        return cls.from_roots([c1])


def trivial_bundle(rank: int, ring) -> BundleData:
    return BundleData(rank, roots=tuple(ring.zero() for _ in range(rank)))


def direct_sum(e: BundleData, f: BundleData) -> BundleData:
    if e.roots is not None and f.roots is not None:
        return BundleData.from_roots(e.roots + f.roots)
    return BundleData.from_ch(_ch(e) + _ch(f))


def tensor_product(e: BundleData, f: BundleData) -> BundleData:
    if e.roots is not None and f.roots is not None:
        return BundleData.from_roots(a + b for a in e.roots for b in f.roots)
    return BundleData.from_ch(_ch(e) * _ch(f))


def dual_bundle(e: BundleData) -> BundleData:
    if e.roots is not None:
        return BundleData.from_roots(-r for r in e.roots)
    return BundleData.from_ch(vee(e.ch))


def _ch(e: BundleData) -> HodgeClass:
    if e.ch is not None:
        return e.ch
    ring = e.roots[0].owner if e.roots else None
    if ring is None:
        raise BundleError("empty root list carries no ring")
    out = ring.zero()
    for r in e.roots:
        out = out + exp_class(r)
    return out


def _ring(space):
    return getattr(space, "ring", space)


def _check_ring(e: BundleData, space) -> None:
    for x in (e.roots or ()) + ((e.ch,) if e.ch is not None else ()):
        if not x.owner.same_as(_ring(space)):
            raise BundleError("bundle data does not live on this space")


def chern_character(e: BundleData, space) -> HodgeClass:
    """``sum_i exp(root_i)``; the stored character when no roots are given."""
    _check_ring(e, space)
    if e.roots == ():
        return _ring(space).zero()
    return _ch(e)


def todd_class(e: BundleData, space) -> HodgeClass:
    """``prod_i root_i / (1 - e^{-root_i})``.

    Without roots the class is ``exp(sum_k l_k k! ch_k)`` where ``l_k`` are the
    coefficients of ``log(x / (1 - e^{-x}))`` and ``k! ch_k`` are the power
    sums of the (virtual) roots; this also covers virtual bundles such as
    ``T_{P^n} = O(1)^{n+1} - O``.
    """
    _check_ring(e, space)
    ring = _ring(space)
    coeff = _series_fn(todd_series)
    if e.roots is not None:
        out = ring.one()
        for r in e.roots:
            out = out * evaluate_series(coeff, r)
        return out
    logc = log_todd_series(max(ring.n, 1))
    exponent = ring.zero()
    for k, pk in enumerate(power_sums(e.ch), start=1):
        if logc[k]:
            exponent = exponent + logc[k] * pk
    return exp_class(exponent)


# involutions ----------------------------------------------------------------


def star(x: HodgeClass) -> HodgeClass:
    """Sign ``(-1)^q`` on ``H^q(Omega^p)``: the cohomological degree."""
    return x.map_signs(lambda p, q: -1 if q % 2 else 1)


def vee(x: HodgeClass) -> HodgeClass:
    """Sign ``(-1)^p`` on ``H^q(Omega^p)``: the form degree.

    On characters this is dualisation, ``vee(ch E) = ch(E^dual)``.
    """
    return x.map_signs(lambda p, q: -1 if p % 2 else 1)


def w_involution(x: HodgeClass) -> HodgeClass:
    """The Hochschild-side involution W; it acts as :func:`star` on Hodge
    representatives because the HKR identification is the identity here."""
    return star(x)
