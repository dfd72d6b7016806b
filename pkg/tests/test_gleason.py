import math
from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose

import framelab as fl
from framelab import Frame, SplitMix64


E = math.e


def grid_zero_count(a, b, c, points=100_000):
    """Independent oracle: count sign changes of the quadratic form
    a x^2 + 2b xy + c y^2 around the circle, including the wrap."""
    t = np.linspace(0.0, 2.0 * math.pi, points, endpoint=False)
    f = (a + c) / 2.0 + ((a - c) / 2.0) * np.cos(2.0 * t) + b * np.sin(2.0 * t)
    s = np.signbit(f)
    return int(np.count_nonzero(s != np.roll(s, 1)))


# --- constructions ---------------------------------------------------------


def test_quadratic_gleason_values_and_weight():
    a = np.array([[2.0, 1.0], [1.0, 3.0]])
    g = fl.quadratic_gleason(a)
    assert g.field == "R" and g.dim == 2
    x = np.array([0.6, 0.8])
    assert_allclose(g(x), x @ a @ x, atol=1e-14)
    gc = fl.quadratic_gleason(a, const=0.5)
    assert_allclose(gc(x), x @ a @ x + 0.5, atol=1e-14)
    zero = np.zeros(2)
    assert gc(zero) == 0.5


def test_quadratic_gleason_complex_conjugation():
    a = np.array([[1.0, 1.0j], [-1.0j, 2.0]])
    g = fl.quadratic_gleason(a)
    assert g.field == "C"
    x = np.array([1.0, 1.0j]) / math.sqrt(2.0)
    assert_allclose(g(x), np.vdot(x, a @ x).real, atol=1e-14)


def test_quadratic_gleason_rejects_non_hermitian():
    with pytest.raises(fl.NotHermitianError):
        fl.quadratic_gleason(np.array([[1.0, 1.0], [0.0, 1.0]]))
    with pytest.raises(fl.NotSquareError):
        fl.quadratic_gleason(np.ones((2, 3)))


def test_eval_guards():
    g = fl.quadratic_gleason(np.eye(2))
    with pytest.raises(fl.OutOfBallError):
        g(np.array([2.0, 0.0]))
    with pytest.raises(fl.InputError):
        g(np.array([1.0, 0.0, 0.0]))
    with pytest.raises(fl.InputError):
        g(np.array([1.0j, 0.0]))  # real-field function, complex point


def test_expnorm_values():
    g = fl.expnorm_gleason(3)
    assert_allclose(g(np.array([1.0, 0, 0], dtype=complex)), E - 1.0)
    assert g(np.zeros(3, dtype=complex)) == 0.0
    half = np.array([0.5, 0.5, 0.5], dtype=complex)
    assert_allclose(g(half), math.expm1(0.75), atol=1e-15)


def test_cos_counterexample_values():
    g = fl.cos_counterexample(2)
    # 1 + cos(2t) = 2 x^2 on the circle
    for t in (0.0, 0.3, 1.2, 3.0):
        x = np.array([math.cos(t), math.sin(t)])
        assert_allclose(g(x), 2.0 * x[0] ** 2, atol=1e-12)
    # r^2 extension
    assert_allclose(g(np.array([0.5, 0.0])), 0.25 * 2.0 * 1.0, atol=1e-14)
    assert g(np.zeros(2)) == 0.0
    with pytest.raises(fl.BadNError):
        fl.cos_counterexample(4)
    with pytest.raises(fl.BadNError):
        fl.cos_counterexample(3)
    # negative indices in the right class are fine
    assert fl.cos_counterexample(-6).params["n"] == -6


def test_rational_indicator_branch_values():
    g = fl.rational_indicator_counterexample()
    # pi/4 is a rational multiple of pi
    x = np.array([math.cos(math.pi / 4), math.sin(math.pi / 4)])
    assert g(x) == 1.0
    # angle 1 radian is not
    y = np.array([math.cos(1.0), math.sin(1.0)])
    assert g(y) == 0.0
    # second quadrant complements the first
    x2 = np.array([math.cos(math.pi / 4 + math.pi / 2), math.sin(math.pi / 4 + math.pi / 2)])
    assert g(x2) == 0.0
    y2 = np.array([math.cos(1.0 + math.pi / 2), math.sin(1.0 + math.pi / 2)])
    assert g(y2) == 1.0
    # antipodal invariance and r^2 scaling
    assert g(-y) == g(y)
    assert_allclose(g(0.5 * x), 0.25, atol=1e-14)


def test_periodic_extension_sums_to_weight():
    f = lambda t: math.sin(2.0 * t) ** 2  # pi/2-periodic, sup 1
    g = fl.periodic_extension_gleason(f, weight=1.5, f_sup=1.0)
    report = fl.verify_onb_gleason(g, trials=50, seed=4)
    assert report.passed
    assert_allclose(complex(report.mean_weight).real, 1.5, atol=1e-12)
    with pytest.raises(fl.BadWeightError):
        fl.periodic_extension_gleason(f, weight=0.5, f_sup=1.0)


def test_epsilon_1d_branch_values():
    g = fl.epsilon_1d_counterexample(0.2)
    assert_allclose(g(np.array([math.sqrt(0.2)])), 0.8, atol=1e-14)
    assert_allclose(g(np.array([math.sqrt(0.8)])), 0.2, atol=1e-14)
    assert_allclose(g(np.array([0.7])), 0.49, atol=1e-14)
    assert g(np.zeros(1)) == 0.0
    for bad in (0.0, 1.0 / 3.0, 0.4, -0.1):
        with pytest.raises(fl.BadEpsilonError):
            fl.epsilon_1d_counterexample(bad)


# --- verify over orthonormal bases ----------------------------------------


def test_verify_onb_quadratic_weight_is_trace():
    for field in ("R", "C"):
        a = fl.random_hermitian(3, seed=10, field=field)
        g = fl.quadratic_gleason(a)
        report = fl.verify_onb_gleason(g, trials=40, seed=2)
        assert report.passed
        assert_allclose(
            complex(report.mean_weight).real, float(np.trace(a).real), atol=1e-10
        )


def test_verify_onb_cos_family():
    for n in (2, 6, 10, -6):
        g = fl.cos_counterexample(n)
        report = fl.verify_onb_gleason(g, trials=60, seed=n & 0xFFFF)
        assert report.passed, f"n={n} spread {report.max_deviation}"
        assert_allclose(complex(report.mean_weight).real, 2.0, atol=1e-12)


def test_verify_onb_rational_indicator_exact():
    g = fl.rational_indicator_counterexample()
    report = fl.verify_onb_gleason(g, trials=80, seed=5)
    assert report.passed
    assert report.max_deviation <= 1e-12
    assert_allclose(complex(report.mean_weight).real, 1.0, atol=1e-12)


def test_verify_onb_expnorm_weight():
    for d in (2, 3, 4):
        g = fl.expnorm_gleason(d)
        report = fl.verify_onb_gleason(g, trials=30, seed=d)
        assert report.passed
        assert_allclose(
            complex(report.mean_weight).real, d * (E - 1.0), atol=1e-12
        )


def test_verify_onb_detects_a_non_frame_function():
    # x -> x_0^4 is not a frame function; rotations expose it
    g = fl.custom_gleason(lambda x: float(x[0].real) ** 4, 2, "R", bound=1.0)
    report = fl.verify_onb_gleason(g, trials=50, seed=1)
    assert not report.passed
    assert report.max_deviation > 0.1
    low, high = report.witness_low, report.witness_high
    assert complex(high[1]).real - complex(low[1]).real > 0.1


# --- verify over Parseval frames -------------------------------------------


def test_verify_parseval_quadratic_any_size():
    a = fl.random_hermitian(2, seed=21)
    g = fl.quadratic_gleason(a)
    for n in (2, 3, 5, 8):
        report = fl.verify_parseval_gleason(g, n, trials=25, seed=n)
        assert report.passed
        assert_allclose(
            complex(report.mean_weight).real, float(np.trace(a).real), atol=1e-10
        )


def test_verify_parseval_expnorm_splits_by_frame():
    g = fl.expnorm_gleason(2)
    report = fl.verify_parseval_gleason(g, 3, trials=30, seed=9)
    assert not report.passed
    # padded basis and harmonic frame realize the extreme sums
    assert_allclose(complex(report.witness_high[1]).real, 2.0 * E - 2.0, atol=1e-12)
    assert_allclose(
        complex(report.witness_low[1]).real, 3.0 * math.exp(2.0 / 3.0) - 3.0,
        atol=1e-12,
    )
    assert report.max_deviation > 0.1


def test_verify_parseval_epsilon_degree_two():
    g = fl.epsilon_1d_counterexample(0.25)
    report = fl.verify_parseval_gleason(g, 2, trials=200, seed=3)
    assert report.passed
    assert abs(complex(report.mean_weight).real - 1.0) <= 1e-12


def test_verify_parseval_epsilon_fails_degree_three():
    g = fl.epsilon_1d_counterexample(0.2)
    w = Frame(
        np.array([[math.sqrt(0.2)], [math.sqrt(0.2)], [math.sqrt(0.6)]]), "R"
    )
    total = sum(float(g(row)) for row in w.vectors)
    assert_allclose(total, 2.2, atol=1e-12)  # not the weight 1


def test_verify_parseval_requires_enough_vectors():
    g = fl.quadratic_gleason(np.eye(3))
    with pytest.raises(fl.BadCardinalityError):
        fl.verify_parseval_gleason(g, 2)


def test_effect_measure_restriction_is_degree_n():
    rho = fl.random_density(2, seed=17)
    g = fl.gleason_from_effect_measure(
        lambda e: float(np.trace(rho @ e).real), 2
    )
    report = fl.verify_parseval_gleason(g, 5, trials=25, seed=6)
    assert report.passed
    assert_allclose(complex(report.mean_weight).real, 1.0, atol=1e-10)


# --- quadratic fitting ------------------------------------------------------


def test_fit_recovers_random_operators():
    for field, seed in (("C", 3), ("C", 4), ("R", 5)):
        a = fl.random_hermitian(3, seed=seed, field=field)
        fit = fl.fit_quadratic(fl.quadratic_gleason(a), samples=200, seed=1)
        assert fit.verdict == "quadratic"
        assert fit.residual <= 1e-9
        assert_allclose(np.asarray(fit.operator), a, atol=1e-10)
        assert_allclose(complex(fit.weight).real, np.trace(a).real, atol=1e-10)


def test_fit_cos2_gives_diag_2_0():
    fit = fl.fit_quadratic(fl.cos_counterexample(2), samples=400, seed=2)
    assert fit.verdict == "quadratic"
    assert_allclose(np.asarray(fit.operator), np.diag([2.0, 0.0]), atol=1e-9)


def test_fit_rejects_higher_cos_and_indicator():
    for g in (fl.cos_counterexample(6), fl.rational_indicator_counterexample()):
        fit = fl.fit_quadratic(g, samples=400, seed=7)
        assert fit.verdict == "not_quadratic"
        assert fit.residual > 0.1


def test_fit_flags_constant_offset():
    g = fl.quadratic_gleason(np.eye(2), const=0.25)
    fit = fl.fit_quadratic(g, samples=200, seed=3)
    assert fit.verdict == "not_quadratic"  # offset is not r^2-homogeneous


# --- scaling laws -----------------------------------------------------------


def test_homogeneity_of_sphere_extensions():
    for g in (
        fl.quadratic_gleason(fl.random_hermitian(2, seed=2)),
        fl.cos_counterexample(6),
        fl.rational_indicator_counterexample(),
    ):
        report = fl.homogeneity_check(g, samples=100, seed=8)
        assert report.passed, report.max_deviation


def test_homogeneity_fails_for_expnorm():
    report = fl.homogeneity_check(fl.expnorm_gleason(2), samples=100, seed=8)
    assert not report.passed
    assert report.witness is not None


def test_partition_scaling():
    g = fl.quadratic_gleason(fl.random_hermitian(2, seed=31))
    x = np.array([0.3, 0.4], dtype=complex)
    assert fl.partition_scaling_check(g, x, [1.0 / math.sqrt(2)] * 2)
    assert fl.partition_scaling_check(g, x, [0.6, 0.8])
    with pytest.raises(fl.BadAlphasError):
        fl.partition_scaling_check(g, x, [0.5, 0.5])
    with pytest.raises(fl.BadAlphasError):
        fl.partition_scaling_check(g, x, [])


def test_rational_scaling():
    g = fl.cos_counterexample(6)
    x = np.array([0.3, 0.2])
    assert fl.rational_scaling_check(g, x, Fraction(1, 4))
    assert fl.rational_scaling_check(g, x, 2)
    with pytest.raises(fl.OutOfBallError):
        fl.rational_scaling_check(g, np.array([1.0, 0.0]), 4)
    with pytest.raises(fl.OutOfBallError):
        fl.rational_scaling_check(g, x, -1)


# --- zeros of quadratic forms on the circle ---------------------------------


def test_zero_count_closed_cases():
    assert fl.quadratic_zero_count_s1(np.array([[0.0, 0.5], [0.5, 0.0]])) == 4
    assert fl.quadratic_zero_count_s1(np.eye(2)) == 0
    assert fl.quadratic_zero_count_s1(np.diag([1.0, 0.0])) == 2
    assert fl.quadratic_zero_count_s1(np.diag([1.0, -1.0])) == 4
    assert fl.quadratic_zero_count_s1(np.zeros((2, 2))) == math.inf
    with pytest.raises(fl.NotHermitianError):
        fl.quadratic_zero_count_s1(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(fl.NotSquareError):
        fl.quadratic_zero_count_s1(np.eye(3))


def test_zero_count_matches_grid_oracle():
    rng = SplitMix64(61)
    for _ in range(300):
        a, b, c = (rng.gaussian() for _ in range(3))
        mat = np.array([[a, b], [b, c]])
        predicted = fl.quadratic_zero_count_s1(mat)
        assert predicted == grid_zero_count(a, b, c)


# --- degree ladder -----------------------------------------------------------


def test_ladder_increments_equal_value_at_zero():
    a = fl.random_hermitian(2, seed=12)
    g = fl.quadratic_gleason(a, const=0.3)
    report = fl.degree_ladder_experiment(g, 4, 7, trials=20, seed=5)
    assert report.degrees == [4, 5, 6, 7]
    assert all(report.passed)
    assert report.increments_ok
    assert_allclose(report.g_at_zero, 0.3, atol=1e-15)
    assert_allclose(report.increments, [0.3] * 3, atol=1e-9)
    for n, w in zip(report.degrees, report.weights):
        assert_allclose(w, float(np.trace(a).real) + 0.3 * n, atol=1e-9)


def test_ladder_requires_dim_plus_two():
    g = fl.quadratic_gleason(np.eye(3))
    with pytest.raises(fl.BadCardinalityError):
        fl.degree_ladder_experiment(g, 4, 6)
    with pytest.raises(fl.BadCardinalityError):
        fl.degree_ladder_experiment(g, 5, 4)
