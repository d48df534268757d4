"""Smoke test for the qplane_py bindings.

Build and install first:
    pip install -e crates/qplane-py --no-build-isolation
then run `python python/smoke_test.py` or `pytest python/smoke_test.py`.
"""

import math

import numpy as np
import qplane_py as q
from scipy import special


def test_version():
    assert q.version() == "0.1.0"


def test_algebra_suite_is_exact():
    suite = q.algebra_suite(3)
    assert suite and all(not c["failures"] for c in suite)


def test_hopf_axioms():
    rep = q.hopf_axioms(seed=3, random=5)
    for part in ("group", "dual", "pairing_generators", "pairing_random"):
        assert rep[part]["failures"] == [], part


def test_circle_relations():
    for c in q.circle_relations(0.9, 32):
        assert c["max_deviation"] < 1e-13, c


def test_stationary_state_against_scipy_bessel():
    qq, j, energy = 0.9, 2, 1.0
    r, psi, residual = q.stationary(qq, j, energy)
    assert residual < 1e-8
    k_eff = math.sqrt(2.0 * energy) * qq ** (j / 2)
    ref = special.jv(j, k_eff * np.asarray(r))
    # psi is normalized, so compare shapes
    scale = np.dot(ref, psi) / np.dot(ref, ref)
    assert np.max(np.abs(np.asarray(psi) - scale * ref)) < 1e-10 * np.max(np.abs(psi))


def test_zero_ratios():
    for row in q.zero_scaling(0.8, 4):
        assert abs(row["ratio"] - 0.8 ** (-row["j"] / 2)) < 1e-8
    # J_1's first zero at k r = 3.8317...; k = sqrt(2) for energy 1
    row = q.zero_scaling(0.9, 1)[1]
    assert abs(row["zero_classical"] * math.sqrt(2.0) - special.jn_zeros(1, 1)[0]) < 1e-9


def test_minimal_packet_saturates_bound():
    rep = q.minimal_report(0.9, 1)
    assert abs(rep["equality_gap"]) < 1e-8
    assert rep["equality_case"]


def test_gaussian_mean_radius():
    rep = q.gaussian_report(0.999)
    # the lattice lands on (1/2)sqrt(pi/2) eps, half the stated closed form
    assert abs(rep["values"]["mean_r"] - 0.5 * math.sqrt(math.pi / 2)) < 1e-2


def test_plane_wave_report():
    rep = q.plane_wave_report(0.9, degree=6)
    assert rep["eigen"]["failures"] == []
    assert rep["factorization_reversed_order"]["failures"] == []
    m = rep["momentum"]
    assert m["product"] - m["bound"] >= -1e-10


def test_heisenberg_report():
    rep = q.heisenberg("y", 0.9, 3)
    assert rep["classical_limit_holds"]
    assert rep["checked"] > 0


def test_errors_raise():
    for call in (lambda: q.circle_relations(1.5), lambda: q.heisenberg("z", 0.9), lambda: q.algebra_suite(9)):
        try:
            call()
        except q.QPlaneError:
            continue
        raise AssertionError("expected QPlaneError")
    assert issubclass(q.QPlaneError, ValueError)


if __name__ == "__main__":
    tests = [(n, f) for n, f in sorted(globals().items()) if n.startswith("test_")]
    for name, f in tests:
        f()
        print(f"ok   {name}")
    print(f"{len(tests)} passed")
