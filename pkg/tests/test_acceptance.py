"""Acceptance criteria 1-9, one PASS/FAIL line per criterion, exact equality."""

from __future__ import annotations

import pytest

from hhpairing import verify
from hhpairing.quiver import euler_matrix, geometric_hom_matrix, kronecker_algebra
from hhpairing.spaces import projective_space
from hhpairing.transforms import euler_characteristic, grr_projection_check

REQUIRED_SPACES = {"P1", "P2", "P3", "C0", "C1", "C2", "C3", "P1xP1", "C1xC1", "P1xC1"}


@pytest.fixture(scope="module")
def results():
    return {r.name: r for r in verify.run_suite("all", seed=verify.DEFAULT_SEED)}


def _select(results, prefix):
    return [r for name, r in results.items() if name.startswith(prefix)]


def _verdict(capsys, number, title, ok, detail=""):
    with capsys.disabled():
        print(f"\ncriterion {number} {'PASS' if ok else 'FAIL'}  {title}{'  ' + detail if detail else ''}")
    assert ok, detail


def _all_pass(checks):
    bad = [r.name for r in checks if r.status != "pass"]
    return bool(checks) and not bad, bad


def test_criterion_1_pairing_comparison(results, capsys):
    checks = _select(results, "theorem1.pairing_comparison.")
    ok, bad = _all_pass(checks)
    covered = {r.name.rsplit(".", 1)[1] for r in checks}
    n = sum(r.instances for r in checks)
    ok = ok and REQUIRED_SPACES <= covered and n >= 500
    _verdict(capsys, 1, "<b^v, a>_M = <a, b>_Shk on every corpus basis pair", ok, f"{n} instances, failures={bad}")


def test_criterion_2_non_degenerate(results, capsys):
    checks = _select(results, "theorem1.nondegenerate.")
    ok, bad = _all_pass(checks)
    ok = ok and REQUIRED_SPACES <= {r.name.rsplit(".", 1)[1] for r in checks}
    _verdict(capsys, 2, "Mukai and Shklyarov Gram matrices invertible", ok, f"{len(checks)} spaces, failures={bad}")


def test_criterion_3_identity_kernel(results, capsys):
    ok, bad = _all_pass(_select(results, "prop2."))
    _verdict(capsys, 3, "identity kernel acts as identity; Delta_*(td^-1) = dual-basis kernel", ok, f"failures={bad}")


def test_criterion_4_functoriality(results, capsys):
    checks = _select(results, "prop1.")
    ok, bad = _all_pass(checks)
    names = {r.name for r in checks}
    ok = ok and {"prop1.functoriality.P1-P1-P1", "prop1.functoriality.P1-C1-P1"} <= names
    n = sum(r.instances for r in checks if ".functoriality." in r.name)
    _verdict(capsys, 4, "convolve(compose(Phi, Psi)) = convolve(Psi) o convolve(Phi)", ok, f"{n} instances, failures={bad}")


def test_criterion_5_adjoint_and_serre(results, capsys):
    checks = _select(results, "prop3.")
    ok, bad = _all_pass(checks)
    ok = ok and any(".adjointness." in r.name for r in checks) and any(".serre_identities." in r.name for r in checks)
    _verdict(capsys, 5, "adjoint kernel is Mukai-adjoint; Serre and td identities", ok, f"failures={bad}")


def test_criterion_6_mukai_transform_and_external_products(results, capsys):
    checks = _select(results, "theorem2.")
    ok, bad = _all_pass(checks)
    ok = ok and any("mukai_equals_natural" in r.name for r in checks) and any("external_product" in r.name for r in checks)
    _verdict(capsys, 6, "convolve = mukai_convolve; external products factorise", ok, f"failures={bad}")


def test_criterion_7_grr(results, capsys):
    ok, bad = _all_pass(_select(results, "theorem3."))
    p1, p2 = projective_space(1), projective_space(2)
    for d in range(-3, 4):
        ok = ok and grr_projection_check(p1, d).lhs.constant_term == d + 1 == euler_characteristic(p1, d)
        ok = ok and grr_projection_check(p2, d).lhs.constant_term == (d + 1) * (d + 2) // 2
    ok = ok and all(grr_projection_check(p1, a, p1, b).ok for a in range(-3, 4) for b in range(-3, 4))
    _verdict(capsys, 7, "GRR for projections, chi(O_P1(d)) and chi(O_P2(d)) for d in [-3, 3]", ok, f"failures={bad}")


def test_criterion_8_quiver(results, capsys):
    ok, bad = _all_pass(_select(results, "quiver."))
    alg, geo = euler_matrix(kronecker_algebra()), geometric_hom_matrix()
    ok = ok and alg == geo == [[1, 2], [0, 1]] and results["quiver.negative_control"].status == "pass"
    _verdict(capsys, 8, "Kronecker Euler matrix = [[1,2],[0,1]] = Hom dimensions; negative control fails", ok, f"failures={bad}")


def test_criterion_9_determinism(capsys):
    seed = verify.DEFAULT_SEED
    first = verify.dumps(verify.report(verify.run_suite("all", seed=seed), seed))
    second = verify.dumps(verify.report(verify.run_suite("all", seed=seed, jobs=4), seed))
    _verdict(capsys, 9, "two runs with the same seed give byte-identical reports", first == second, f"{len(first)} bytes")
