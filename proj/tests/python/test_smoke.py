import math
import os

import numpy as np
import pytest

import cube_spectra as cs

DATA = os.environ.get("CUBE_SPECTRA_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def test_wht_round_trip_and_kernel_spectrum():
    rng = np.random.default_rng(3)
    f = rng.uniform(-1, 1, 64)
    np.testing.assert_allclose(cs.inverse_wht(cs.wht(f)), f, atol=1e-12)
    kernel = np.zeros(8)
    kernel[[1, 2, 4]] = 8.0
    np.testing.assert_array_equal(cs.wht(kernel), [3, 1, 1, -1, 1, -1, -1, -3])


def test_convolution_and_adjacency_agree():
    rng = np.random.default_rng(5)
    f = rng.uniform(-1, 1, 32)
    kernel = np.zeros(32)
    kernel[[1, 2, 4, 8, 16]] = 32.0
    np.testing.assert_allclose(cs.convolve(f, kernel), cs.adjacency_apply(f), atol=1e-12)


def test_bad_length_raises():
    with pytest.raises(ValueError):
        cs.wht(np.ones(6))


def test_lambda_routes():
    assert cs.lambda_ball_exact(4, 2) == pytest.approx(math.sqrt(10), abs=1e-9)
    w = cs.lambda_for_radius_recurrence(2, 1)
    assert w["p"] == 1
    assert w["lambda"] == pytest.approx(math.sqrt(2), abs=1e-8)
    ball = [x for x in range(64) if bin(x).count("1") <= 2]
    assert cs.lambda_subset_bruteforce(6, ball) == pytest.approx(cs.lambda_ball_exact(6, 2), abs=1e-8)


def test_bounds():
    rep = cs.finite_code_bound(7, 3)
    assert rep["bound"] == 56 and rep["r_star"] == 1
    assert cs.first_lp_rate(0.1) == pytest.approx(0.721928, abs=1e-6)
    assert cs.ball_size(10, 5) == 638
    assert cs.ball_size(200, 100) > 2**190
    assert cs.essential_covering_radius_bound(100, 30)["r_asymptotic"] == pytest.approx(4.1742, abs=1e-4)
    with pytest.raises(ValueError):
        cs.first_lp_rate(0.7)


def test_code_checks_and_files():
    n, pts = cs.read_code_file(os.path.join(DATA, "codes", "rep4.txt"))
    assert (n, sorted(pts)) == (4, [0, 15])
    assert cs.covered_fraction(n, pts, 1) == 0.625
    rep = cs.check_covering(n, pts, 1)
    assert rep["verdict"] == "holds"
    even = [x for x in range(16) if bin(x).count("1") % 2 == 0]
    assert cs.min_distance(4, even) == 2
    assert cs.check_prop_ineq(4, even, 1)["verdict"] == "holds"
    phi = cs.phi_from_code(4, even)
    assert np.mean(phi**2) / np.mean(phi) ** 2 == pytest.approx(8.0, rel=1e-9)


def test_verify_and_random_codes_are_deterministic():
    s = cs.exhaustive_verify(4, "all-linear")
    assert s["codes"] == 66 and s["violations"] == 0
    assert cs.random_code(9, 3, 7) == cs.random_code(9, 3, 7)
    assert cs.exhaustive_verify(6, "random-general", 20, 1, 2) == cs.exhaustive_verify(6, "random-general", 20, 1, 1)
