"""Verification suites and the machine-readable report.

Each check evaluates one identity exhaustively over basis inputs and records
the first counterexample as a witness. Checks are independent, so they may
run in any order or concurrently; the report is sorted by check name.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Callable

from . import __version__
from .characteristic import star, vee
from .hochschild import HHClass, hh_degree, mukai_gram, mukai_pairing, shklyarov_gram, shklyarov_pairing
from .linalg import det
from .quiver import beilinson_algebra, euler_matrix, geometric_cross_check, hh0_classes, kronecker_algebra
from .spaces import corpus
from .transforms import (
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
    mukai_convolve,
    tensor_maps,
    transform_matrix,
)

SUITES = ("theorem1", "prop1", "prop2", "prop3", "theorem2", "theorem3", "quiver")
DEFAULT_SEED = 0


class CheckFailure(Exception):
    def __init__(self, witness: dict):
        super().__init__(witness)
        self.witness = witness


def _s(x) -> str:
    return str(x)


def expect(cond: bool, **witness) -> None:
    if not cond:
        raise CheckFailure({k: _s(v) for k, v in witness.items()})


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    anchor: str
    run: Callable[[], int]


@dataclass
class CheckResult:
    name: str
    suite: str
    anchor: str
    status: str
    instances: int
    witness: dict | None
    seconds: float

    def to_json(self, timings: bool) -> dict:
        out = {
            "name": self.name,
            "suite": self.suite,
            "anchor": self.anchor,
            "status": self.status,
            "instances": self.instances,
            "witness": self.witness,
        }
        if timings:
            out["seconds"] = round(self.seconds, 6)
        return out


# individual identities -------------------------------------------------------


def pairing_comparison(space) -> int:
    n = 0
    for a in HHClass.basis(space):
        for b in HHClass.basis(space):
            lhs = shklyarov_pairing(a, b)
            rhs = mukai_pairing(HHClass(space, vee(b.value)), a)
            expect(lhs == rhs, a=a, b=b, shk=lhs, mukai=rhs)
            n += 1
    return n


def nondegenerate(space) -> int:
    dm, ds = det(mukai_gram(space)), det(shklyarov_gram(space))
    expect(dm != 0 and ds != 0, det_mukai=dm, det_shk=ds)
    return 2


def degree_orthogonality(space) -> int:
    n = 0
    bd = space.ring.bidegrees
    m, s = mukai_gram(space), shklyarov_gram(space)
    for i, j in cartesian(range(space.dim), repeat=2):
        if hh_degree(bd[i]) + hh_degree(bd[j]) != 0:
            expect(m[i][j] == 0 and s[i][j] == 0, i=space.ring.names[i], j=space.ring.names[j])
            n += 1
    return n


def identity_is_identity(space) -> int:
    k = identity_kernel(space)
    for x in HHClass.basis(space):
        y = convolve(k, x)
        expect(y == x, x=x, image=y)
    return space.dim


def diagonal_matches_dual_basis(space) -> int:
    grr, dual = identity_kernel(space), dual_basis_kernel(space)
    expect(grr == dual, grr=grr.ch, dual_basis=dual.ch)
    for k, row in enumerate(grr.matrix):
        f = HHClass(space, space.element(row))
        for l, e in enumerate(HHClass.basis(space)):
            expect(shklyarov_pairing(f, e) == int(k == l), k=k, l=l)
    return 1 + space.dim ** 2


def functoriality(x, y, z, seed) -> int:
    n = 0
    for phi in kernel_catalog(x, y, seed):
        for psi in kernel_catalog(y, z, seed):
            c = compose(phi, psi)
            for v in HHClass.basis(x):
                lhs, rhs = convolve(c, v), convolve(psi, convolve(phi, v))
                expect(lhs == rhs, phi=phi.label, psi=psi.label, x=v, composite=lhs, iterated=rhs)
                n += 1
    return n


def compose_routes_agree(x, y, z, seed) -> int:
    n = 0
    for phi in kernel_catalog(x, y, seed):
        for psi in kernel_catalog(y, z, seed):
            a, b = compose(phi, psi), compose_by_pushforward(phi, psi)
            expect(a == b, phi=phi.label, psi=psi.label, matrix_route=a.ch, pushforward_route=b.ch)
            n += 1
    return n


def compose_associative(space, seed) -> int:
    cat = kernel_catalog(space, space, seed)
    n = 0
    for a, b, c in cartesian(cat, repeat=3):
        lhs, rhs = compose(compose(a, b), c), compose(a, compose(b, c))
        expect(lhs == rhs, a=a.label, b=b.label, c=c.label)
        n += 1
    return n


def adjointness(x, y, seed) -> int:
    n = 0
    for phi in kernel_catalog(x, y, seed):
        adj = adjoint(phi)
        for u in HHClass.basis(x):
            image = convolve(phi, u)
            for v in HHClass.basis(y):
                lhs = mukai_pairing(image, v)
                rhs = mukai_pairing(u, convolve(adj, v))
                expect(lhs == rhs, kernel=phi.label, x=u, y=v, lhs=lhs, rhs=rhs)
                n += 1
    return n


def serre_identities(space) -> int:
    sign = -1 if space.n % 2 else 1
    expect(space.serre_ch == sign * space.canonical_ch, serre=space.serre_ch, canonical=space.canonical_ch)
    lhs, rhs = space.todd * space.canonical_ch, star(space.todd)
    expect(lhs == rhs, td_times_canonical=lhs, star_td=rhs)
    return 2


def mukai_equals_natural(x, y, seed) -> int:
    n = 0
    for phi in kernel_catalog(x, y, seed):
        a, b = transform_matrix(phi), transform_matrix(phi, mukai_convolve)
        expect(a == b, kernel=phi.label, convolve=a, mukai=b)
        n += 1
    return n


def external_factorization(pairs, seed) -> int:
    n = 0
    for (x, y), (x2, y2) in pairs:
        cat1 = kernel_catalog(x, y, seed, n_random=2)
        cat2 = kernel_catalog(x2, y2, seed, n_random=2)
        for phi in cat1[:8] + cat1[-2:]:
            for phi2 in cat2[:8] + cat2[-2:]:
                lhs = transform_matrix(external_product(phi, phi2))
                rhs = tensor_maps(transform_matrix(phi), transform_matrix(phi2))
                expect(lhs == rhs, phi=phi.label, phi2=phi2.label)
                n += 1
    return n


def point_factorization(x, y, seed) -> int:
    cat = kernel_catalog(x, y, seed, n_random=2)
    n = 0
    for phi in cat[:3] + cat[-2:]:
        rebuilt = factor_through_diagonal(phi)
        expect(rebuilt == phi, kernel=phi.label, rebuilt=rebuilt.ch, original=phi.ch)
        n += 1
    return n


def grr_cases(cases) -> int:
    for x, twist, z, z_twist in cases:
        r = grr_projection_check(x, twist, z, z_twist)
        expect(r.ok, case=r.label, lhs=r.lhs, rhs=r.rhs)
    return len(cases)


def euler_characteristics(space, formula) -> int:
    for d in range(-3, 4):
        r = grr_projection_check(space, d)
        expected = formula(d)
        expect(
            r.lhs.constant_term == expected == euler_characteristic(space, d),
            d=d, hrr=r.lhs, classical=expected,
        )
    return 7


def quiver_cross_check() -> int:
    r = geometric_cross_check()
    expect(r.ok, algebra=r.algebra_side, geometry=r.geometry_side)
    return 4


def quiver_negative_control() -> int:
    p1 = corpus()["P1"]
    broken = p1.todd - p1.todd.component(1, 1)
    r = geometric_cross_check(todd=broken)
    expect(not r.ok, note="dropping the h term of td should break the match")
    return 1


def quiver_hh0() -> int:
    k = kronecker_algebra()
    expect(hh0_classes(k) == ["e0", "e1"], classes=hh0_classes(k))
    expect(euler_matrix(k) == [[1, 2], [0, 1]], euler=euler_matrix(k))
    try:
        beilinson_algebra(2)
    except ValueError:
        pass
    else:
        expect(False, note="relations are outside the catalog")
    return 3


# registry --------------------------------------------------------------------


def build_checks(seed: int = DEFAULT_SEED) -> list[Check]:
    spaces = corpus()
    p1, e = spaces["P1"], spaces["C1"]
    checks: list[Check] = []

    def add(suite, name, anchor, fn, *args):
        checks.append(Check(f"{suite}.{name}", suite, anchor, lambda: fn(*args)))

    for label, s in spaces.items():
        add("theorem1", f"pairing_comparison.{label}", "<b^v, a>_M = <a, b>_Shk", pairing_comparison, s)
        add("theorem1", f"nondegenerate.{label}", "Mukai and Shklyarov pairings are non-degenerate", nondegenerate, s)
        add("theorem1", f"degree_orthogonality.{label}", "pairings vanish unless HH degrees cancel", degree_orthogonality, s)
        add("prop2", f"identity_kernel.{label}", "mu(O_Delta) = id", identity_is_identity, s)
        add("prop2", f"diagonal_dual_basis.{label}", "Ch(O_Delta) = sum e (x) f, <f_k, e_l>_Shk = delta_kl", diagonal_matches_dual_basis, s)
        add("prop3", f"serre_identities.{label}", "ch(S_X) = (-1)^n ch(K_X); td ch(K_X) = td^*", serre_identities, s)

    chains = {"P1-P1-P1": (p1, p1, p1), "P1-C1-P1": (p1, e, p1)}
    for label, (x, y, z) in chains.items():
        add("prop1", f"functoriality.{label}", "mu(Psi o Phi) = mu(Psi) o mu(Phi)", functoriality, x, y, z, seed)
        add("prop1", f"compose_routes.{label}", "ch(Psi o Phi) = pi_XZ*(ch Phi . ch Psi . td_Y)", compose_routes_agree, x, y, z, seed)
    add("prop1", "associativity.P1", "(Phi o Psi) o Theta = Phi o (Psi o Theta)", compose_associative, p1, seed)

    pairs = {
        "P1-P1": (p1, p1), "P1-C1": (p1, e), "C1-P1": (e, p1), "C1-C1": (e, e),
        "P2-P1": (spaces["P2"], p1), "C2-C1": (spaces["C2"], e), "P1xP1-P1": (spaces["P1xP1"], p1),
        "C1-P1xC1": (e, spaces["P1xC1"]),
    }
    for label, (x, y) in pairs.items():
        add("prop3", f"adjointness.{label}", "<mu Phi(x), y>_M = <x, mu Phi^!(y)>_M", adjointness, x, y, seed)
        add("theorem2", f"mukai_equals_natural.{label}", "Phi^nat = Phi^muk", mukai_equals_natural, x, y, seed)
    add(
        "theorem2", "external_product.P1-C1", "mu(Phi [x] Phi') = mu(Phi) (x) mu(Phi')",
        external_factorization, [((p1, e), (e, p1)), ((e, e), (p1, p1)), ((p1, p1), (e, e))], seed,
    )
    add("theorem2", "point_factorization.P1-P1", "Phi = Delta o (O_Delta [x] Phi_pt)", point_factorization, p1, p1, seed)
    add("theorem2", "point_factorization.C1-P1", "Phi = Delta o (O_Delta [x] Phi_pt)", point_factorization, e, p1, seed)

    p2 = spaces["P2"]
    grr = [(p1, d, None, 0) for d in range(-3, 4)] + [(p2, d, None, 0) for d in range(-3, 4)]
    grr += [(p1, a, p1, b) for a in range(-3, 4) for b in (-2, 0, 1, 3)]
    grr += [(s, d, None, 0) for s in (spaces[f"C{g}"] for g in range(4)) for d in (-2, 0, 3)]
    add("theorem3", "grr_projection", "(f x id)_*(ch(a) td_X) = ch((f x id)_* a) td_Y", grr_cases, grr)
    add("theorem3", "euler_characteristic.P1", "chi(O_P1(d)) = d + 1", euler_characteristics, p1, lambda d: d + 1)
    add(
        "theorem3", "euler_characteristic.P2", "chi(O_P2(d)) = (d+1)(d+2)/2",
        euler_characteristics, p2, lambda d: (d + 1) * (d + 2) // 2,
    )

    add("quiver", "cross_check", "Kronecker Euler form = Hom dimensions on P1", quiver_cross_check)
    add("quiver", "negative_control", "corrupted td breaks the cross-check", quiver_negative_control)
    add("quiver", "hh0_and_euler", "HH_0 of the Kronecker algebra; Euler matrix", quiver_hh0)
    return checks


def _run(check: Check) -> CheckResult:
    start = time.perf_counter()
    try:
        instances = check.run()
        status, witness = "pass", None
    except CheckFailure as exc:
        instances, status, witness = 0, "fail", exc.witness
    except Exception as exc:  # a crashing check is a failed check
        instances, status, witness = 0, "fail", {"error": f"{type(exc).__name__}: {exc}"}
    return CheckResult(
        check.name, check.suite, check.anchor, status, instances, witness, time.perf_counter() - start
    )


def run_suite(suite: str = "all", seed: int = DEFAULT_SEED, jobs: int = 1) -> list[CheckResult]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    checks = [c for c in build_checks(seed) if suite == "all" or c.suite == suite]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, checks))
    else:
        results = [_run(c) for c in checks]
    return sorted(results, key=lambda r: r.name)


def report(results: list[CheckResult], seed: int, suite: str = "all", timings: bool = False) -> dict:
    failed = sum(r.status != "pass" for r in results)
    return {
        "engine_version": __version__,
        "seed": seed,
        "suite": suite,
        "checks": [r.to_json(timings) for r in results],
        "summary": {"total": len(results), "passed": len(results) - failed, "failed": failed},
    }


def dumps(rep: dict) -> str:
    return json.dumps(rep, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
