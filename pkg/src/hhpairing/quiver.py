"""Path algebras of finite directed quivers, the algebra-side check.

Paths compose left to right: ``p * q`` is "``p`` then ``q``" and is nonzero
only when ``p`` ends where ``q`` starts. With this convention
``e_i A e_j`` is spanned by the paths from ``i`` to ``j``.

Dictionary used by the cross-check: ``O(i)`` on ``P^1`` corresponds to the
left projective ``A e_i`` of the Kronecker algebra, so
``Hom(O(i), O(j)) = Hom_A(A e_i, A e_j) = e_i A e_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .characteristic import vee
from .linalg import rref
from .spaces import projective_space


class QuiverError(ValueError):
    pass


Path = tuple  # (start, end, arrows)


@dataclass(frozen=True)
class PathAlgebra:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, int, int], ...]
    paths: tuple[Path, ...] = field(init=False)

    def __post_init__(self):
        nv = len(self.vertices)
        for name, s, t in self.arrows:
            if not (0 <= s < nv and 0 <= t < nv):
                raise QuiverError(f"arrow {name} has an endpoint outside the vertex set")
        paths = [(v, v, ()) for v in range(nv)]
        frontier = [(v, v, ()) for v in range(nv)]
        for _ in range(nv + 1):
            nxt = []
            for s, t, arr in frontier:
                for k, (_, a_s, a_t) in enumerate(self.arrows):
                    if a_s == t:
                        nxt.append((s, a_t, arr + (k,)))
            if not nxt:
                break
            paths += nxt
            frontier = nxt
        else:
            raise QuiverError("quiver has an oriented cycle")
        object.__setattr__(self, "paths", tuple(paths))

    @property
    def dim(self) -> int:
        return len(self.paths)

    def path_name(self, i: int) -> str:
        s, _, arr = self.paths[i]
        if not arr:
            return f"e{self.vertices[s]}"
        return "".join(self.arrows[k][0] for k in arr)

    def index(self, name: str) -> int:
        for i in range(self.dim):
            if self.path_name(i) == name:
                return i
        raise QuiverError(f"no path named {name!r}")

    def idempotent(self, v: int) -> int:
        return self.paths.index((v, v, ()))

    def mul_paths(self, i: int, j: int) -> int | None:
        """Index of ``path_i * path_j`` or ``None`` when it vanishes."""
        s, t, a = self.paths[i]
        s2, t2, b = self.paths[j]
        if t != s2:
            return None
        return self.paths.index((s, t2, a + b))

    def mul(self, x, y) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        k = self.mul_paths(i, j)
                        if k is not None:
                            out[k] += a * b
        return tuple(out)

    def basis_vector(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def paths_between(self, i: int, j: int) -> list[int]:
        return [k for k, (s, t, _) in enumerate(self.paths) if s == i and t == j]


def kronecker_algebra() -> PathAlgebra:
    """Two vertices and two parallel arrows ``x, y: 0 -> 1``; the
    endomorphism algebra of ``O + O(1)`` on ``P^1``."""
    return PathAlgebra(("0", "1"), (("x", 0, 1), ("y", 0, 1)))


def trivial_algebra() -> PathAlgebra:
    return PathAlgebra(("0",), ())


def beilinson_algebra(n: int) -> PathAlgebra:
    if n == 1:
        return kronecker_algebra()
    raise QuiverError("Beilinson algebras with relations (n >= 2) are not in the catalog")


def commutator_span(a: PathAlgebra) -> tuple[tuple[Fraction, ...], ...]:
    """Row-reduced basis of ``[A, A]`` spanned by basis commutators."""
    rows = []
    for i in range(a.dim):
        for j in range(a.dim):
            ei, ej = a.basis_vector(i), a.basis_vector(j)
            c = tuple(x - y for x, y in zip(a.mul(ei, ej), a.mul(ej, ei)))
            if any(c):
                rows.append(c)
    if not rows:
        return ()
    red, pivots = rref(tuple(rows))
    return red[: len(pivots)]


def hh0_classes(a: PathAlgebra) -> list[str]:
    """Basis of ``HH_0(A) = A / [A, A]`` as names of representative paths
    (the non-pivot coordinates of the reduced commutator span)."""
    span = commutator_span(a)
    pivots = {next(k for k, x in enumerate(row) if x) for row in span}
    return [a.path_name(k) for k in range(a.dim) if k not in pivots]


def hattori_stallings(a: PathAlgebra, v: int) -> tuple[Fraction, ...]:
    """Trace class of the projective at vertex ``v``: the class of ``e_v``
    in ``HH_0``, written in the basis returned by :func:`hh0_classes`."""
    names = hh0_classes(a)
    target = a.path_name(a.idempotent(v))
    return tuple(Fraction(int(n == target)) for n in names)


def euler_matrix(a: PathAlgebra) -> list[list[int]]:
    """``E[i][j] = dim e_i A e_j``; projectives of a hereditary algebra have no
    higher extensions, so this is the Euler form."""
    nv = len(a.vertices)
    return [[len(a.paths_between(i, j)) for j in range(nv)] for i in range(nv)]


def geometric_hom_matrix(todd=None) -> list[list[Fraction]]:
    """``[integral_{P^1} vee(ch O(i)) ch O(j) td]`` for ``i, j`` in ``{0, 1}``."""
    p1 = projective_space(1)
    td = p1.todd if todd is None else todd
    h = p1.ring.basis_element("h")
    one = p1.ring.one()
    ch = [one + i * h for i in (0, 1)]
    return [[(vee(ch[i]) * ch[j] * td).integrate() for j in (0, 1)] for i in (0, 1)]


@dataclass(frozen=True)
class CrossCheckReport:
    ok: bool
    algebra_side: list
    geometry_side: list
    convention: str = "E[i][j] = dim e_i A e_j = dim Hom(O(i), O(j)); O(i) <-> A e_i"


def geometric_cross_check(todd=None) -> CrossCheckReport:
    """Kronecker Euler matrix against the Hom-dimension matrix on ``P^1``."""
    alg = euler_matrix(kronecker_algebra())
    geo = geometric_hom_matrix(todd)
    return CrossCheckReport(alg == geo, alg, [[str(x) for x in row] for row in geo])
