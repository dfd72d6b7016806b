import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import framelab as fl
from framelab import Frame, SplitMix64
from framelab.serialize import frame_from_json, frame_to_json


def test_frame_dtype_normalization():
    f = Frame(np.eye(2, dtype=int), "R")
    assert f.vectors.dtype == np.float64
    g = Frame(np.eye(2), "C")
    assert g.vectors.dtype == np.complex128
    # complex data with exactly zero imaginary part may be tagged real
    h = Frame(np.eye(2, dtype=complex), "R")
    assert h.vectors.dtype == np.float64


def test_frame_rejects_garbage():
    with pytest.raises(fl.InputError):
        Frame(np.array([1.0, 2.0]), "R")  # 1-d
    with pytest.raises(fl.InputError):
        Frame(np.eye(2), "Q")
    with pytest.raises(fl.InputError):
        Frame(np.array([[1.0, np.inf]]), "R")
    with pytest.raises(fl.InputError):
        Frame(np.array([[1.0 + 1.0j, 0.0]]), "R")
    with pytest.raises(fl.InputError):
        Frame(np.zeros((0, 2)), "R")


def test_frame_operator_definition():
    # operator must act as sum of rank-one projections of the rows
    rng = SplitMix64(3)
    x = rng.complex_gaussians((4, 3))
    f = Frame(x, "C")
    s = fl.frame_operator(f)
    direct = np.zeros((3, 3), dtype=complex)
    for row in x:
        direct += np.outer(row, row.conj())
    assert_allclose(s, direct, atol=1e-13)


def test_frame_bounds_vs_lapack():
    rng = SplitMix64(8)
    for _ in range(20):
        x = rng.complex_gaussians((6, 3))
        f = Frame(x, "C")
        lo, hi = fl.frame_bounds(f)
        ref = np.linalg.eigvalsh(fl.frame_operator(f))
        assert_allclose([lo, hi], [ref[0], ref[-1]], atol=1e-9)


def test_standard_onb_is_parseval():
    for field in ("R", "C"):
        f = fl.standard_onb(3, field)
        assert fl.is_parseval(f)
        assert fl.frame_bounds(f) == (1.0, 1.0)


def test_random_onb_orthonormal_both_fields():
    for field in ("R", "C"):
        f = fl.random_onb(5, seed=77, field=field)
        gram = f.vectors @ f.vectors.conj().T
        assert_allclose(gram, np.eye(5), atol=1e-12)
    # deterministic in the seed
    a = fl.random_onb(4, seed=5).vectors
    b = fl.random_onb(4, seed=5).vectors
    assert np.array_equal(a, b)


def test_canonical_parseval_makes_parseval():
    rng = SplitMix64(12)
    for field in ("R", "C"):
        for d, n in ((1, 3), (2, 2), (3, 7), (5, 6)):
            raw = (
                rng.complex_gaussians((n, d))
                if field == "C"
                else rng.gaussians((n, d))
            )
            g = fl.canonical_parseval(Frame(raw, field))
            assert g.field == field
            lo, hi = fl.frame_bounds(g)
            assert abs(lo - 1.0) <= 1e-10 and abs(hi - 1.0) <= 1e-10
            assert float(g.norms().max()) <= 1.0 + 1e-12


def test_canonical_parseval_fixes_parseval_frames():
    f = fl.harmonic_frame(2, 5)
    g = fl.canonical_parseval(f)
    assert_allclose(g.vectors, f.vectors, atol=1e-12)


def test_canonical_parseval_rejects_non_spanning():
    bad = Frame(np.array([[1.0, 0.0], [2.0, 0.0]]), "R")
    with pytest.raises(fl.NotAFrameError):
        fl.canonical_parseval(bad)


def test_simplex_frozen_d2():
    f = fl.simplex_etf(2)
    expect = np.array(
        [[1.0, 0.0], [-0.5, math.sqrt(3.0) / 2.0], [-0.5, -math.sqrt(3.0) / 2.0]]
    )
    assert_allclose(f.vectors, expect, atol=1e-12)


def test_simplex_properties_up_to_d8():
    for d in range(1, 9):
        f = fl.simplex_etf(d)
        assert len(f) == d + 1
        assert_allclose(f.norms(), np.ones(d + 1), atol=1e-12)
        lo, hi = fl.frame_bounds(f)
        assert_allclose([lo, hi], [(d + 1) / d, (d + 1) / d], atol=1e-10)
        equi, angle = fl.is_equiangular(f)
        assert equi
        assert_allclose(angle, 1.0 / d, atol=1e-12)


def test_harmonic_parseval_and_norms():
    for d, n in ((2, 3), (2, 5), (3, 7), (4, 9), (3, 3)):
        f = fl.harmonic_frame(d, n)
        assert fl.is_parseval(f)
        assert_allclose(f.norms(), math.sqrt(d / n) * np.ones(n), atol=1e-13)


def test_harmonic_selector_validation():
    f = fl.harmonic_frame(2, 6, selector=(2, 5))
    assert fl.is_parseval(f)
    with pytest.raises(fl.BadSelectorError):
        fl.harmonic_frame(2, 6, selector=(5, 2))
    with pytest.raises(fl.BadSelectorError):
        fl.harmonic_frame(2, 6, selector=(0, 3))
    with pytest.raises(fl.BadSelectorError):
        fl.harmonic_frame(2, 6, selector=(1, 7))
    with pytest.raises(fl.BadSelectorError):
        fl.harmonic_frame(2, 6, selector=(1, 2, 3))
    with pytest.raises(fl.BadCardinalityError):
        fl.harmonic_frame(4, 3)


def test_welch_bound_values():
    assert fl.welch_bound(3, 3) == 0.0
    assert_allclose(fl.welch_bound(3, 2), 0.5)
    assert_allclose(fl.welch_bound(4, 2), math.sqrt(2.0 / 6.0))
    with pytest.raises(fl.BadCardinalityError):
        fl.welch_bound(2, 3)
    with pytest.raises(fl.BadCardinalityError):
        fl.welch_bound(0, 0)


def test_coherence_requirements():
    f = fl.standard_onb(2)
    assert fl.coherence(f) == 0.0
    with pytest.raises(fl.TooFewVectorsError):
        fl.coherence(Frame(np.array([[1.0, 0.0]]), "R"))
    with pytest.raises(fl.NotUnitNormError):
        fl.coherence(Frame(np.array([[2.0, 0.0], [0.0, 1.0]]), "R"))


def test_coherence_never_beats_welch():
    rng = SplitMix64(21)
    for _ in range(25):
        d = 2 + rng.below(3)
        n = d + 1 + rng.below(4)
        raw = rng.complex_gaussians((n, d))
        norms = np.sqrt(np.sum(np.abs(raw) ** 2, axis=1))
        f = Frame(raw / norms[:, None], "C")
        assert fl.coherence(f) >= fl.welch_bound(n, d) - 1e-12


def test_is_equiangular_negative():
    f = Frame(np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]) , "R")
    equi, angle = fl.is_equiangular(f)
    assert not equi and angle is None
    with pytest.raises(fl.TooFewVectorsError):
        fl.is_equiangular(Frame(np.ones((1, 2)), "R"))


def test_frame_potential_of_parseval_is_dim():
    # trace of the squared frame operator, and the operator is I
    for d, n in ((2, 5), (3, 4), (4, 9)):
        f = fl.random_parseval(d, n, seed=d * 100 + n)
        assert_allclose(fl.frame_potential(f), float(d), atol=1e-10)
    # and for a unit-norm frame it is at least N^2/d (tightness bound)
    f = fl.simplex_etf(3)
    assert fl.frame_potential(f) >= 16.0 / 3.0 - 1e-12


def test_project_frame_keeps_parseval():
    f = fl.random_parseval(4, 7, seed=3)
    basis = fl.random_onb(4, seed=9).vectors[:2]
    g = fl.project_frame(f, basis)
    assert g.dim == 2 and len(g) == 7
    assert fl.is_parseval(g)


def test_project_frame_rejects_bad_inputs():
    f = fl.random_parseval(3, 5, seed=1)
    with pytest.raises(fl.BasisNotOrthonormalError):
        fl.project_frame(f, np.array([[1.0, 1.0, 0.0]]))
    onb = fl.standard_onb(3).vectors[:2]
    not_parseval = Frame(2.0 * f.vectors, "C")
    with pytest.raises(fl.NotParsevalError):
        fl.project_frame(not_parseval, onb)
    with pytest.raises(fl.InputError):
        fl.project_frame(f, np.eye(4))


def test_with_zeros():
    f = fl.with_zeros(fl.standard_onb(2), 3)
    assert len(f) == 5
    assert fl.is_parseval(f)
    assert_allclose(f.vectors[2:], np.zeros((3, 2)))
    with pytest.raises(fl.BadCardinalityError):
        fl.with_zeros(f, -1)


def test_analyze_frame_report_fields():
    r = fl.analyze_frame(fl.simplex_etf(2))
    assert r.num_vectors == 3 and r.dim == 2 and r.field == "R"
    assert r.is_tight and not r.is_parseval
    assert r.is_unit_norm and r.is_equiangular
    assert_allclose(r.coherence, 0.5, atol=1e-12)
    assert_allclose(r.welch_bound, 0.5, atol=1e-15)
    assert_allclose(r.common_angle, 0.5, atol=1e-12)

    r2 = fl.analyze_frame(fl.random_parseval(3, 5, seed=4))
    assert r2.is_parseval and r2.is_tight
    assert r2.coherence is None  # not unit norm
    assert_allclose(r2.frame_potential, 3.0, atol=1e-10)


def test_frame_json_roundtrip_exact():
    for f in (
        fl.random_parseval(3, 5, seed=6),
        fl.simplex_etf(3),
        fl.harmonic_frame(2, 5),
    ):
        g = frame_from_json(frame_to_json(f))
        assert g.field == f.field
        assert np.array_equal(g.vectors, f.vectors)


def test_frame_json_rejects_malformed():
    with pytest.raises(fl.InputError):
        frame_from_json({"dim": 2, "field": "R"})
    with pytest.raises(fl.InputError):
        frame_from_json({"dim": 2, "field": "R", "vectors": [[1.0]]})
    with pytest.raises(fl.InputError):
        frame_from_json({"dim": 1, "field": "C", "vectors": [["1", "0"]]})
    with pytest.raises(fl.InputError):
        frame_from_json({"dim": 1, "field": "C", "vectors": [[[1.0, 0.0, 0.0]]]})
    with pytest.raises(fl.InputError):
        frame_from_json({"dim": 0, "field": "R", "vectors": []})
    # bare numbers are accepted as real entries of a complex vector
    f = frame_from_json({"dim": 1, "field": "C", "vectors": [[1.0]]})
    assert f.vectors.dtype == np.complex128
