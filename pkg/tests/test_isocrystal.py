"""Tests for the Monte-Carlo isocrystal oracle: truncated Laurent matrices,
exact FFT products checked against direct convolution, Newton points from
valuation hulls, precision-loss guards, and the deterministic sampler."""

import os

import numpy as np
import pytest

from newton_strata import (
    AffineElement,
    DiagramAutomorphism,
    IsoClass,
    LaurentPolyMatrix,
    PrecisionLoss,
    SamplerConfig,
    WeylElement,
    cartan_type_a,
    estimate_generic_newton,
    generic_newton_point,
    matrix_of,
    newton_point_of_matrix,
    required_deg_cap,
    sample_iwahori,
)
from newton_strata.isocrystal import (
    _stream,
    elementary_symmetric_valuations,
    multiply,
    resolve_threads,
)


def iso(text: str) -> IsoClass:
    return IsoClass.from_string(text)


def diag_matrix(exponents, p=101, deg_cap=40) -> LaurentPolyMatrix:
    """Diagonal matrix with entries t^e (e may be negative)."""
    return matrix_of(AffineElement.translation_of(exponents), p, deg_cap)


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

class TestConfig:
    def test_required_deg_cap(self):
        assert required_deg_cap((3, -3), 2) == 14
        assert required_deg_cap((150, 75, 0, -75, -150), 5) == 1505
        assert required_deg_cap((0, 0), 2) == 2

    def test_sampler_config_validation(self):
        SamplerConfig(p=101, samples=10, rng_seed=0)
        with pytest.raises(ValueError):
            SamplerConfig(p=100, samples=10, rng_seed=0)
        with pytest.raises(ValueError):
            SamplerConfig(p=101, samples=0, rng_seed=0)
        with pytest.raises(ValueError):
            SamplerConfig(p=101, samples=10, rng_seed=-1)

    def test_resolve_threads(self, monkeypatch):
        monkeypatch.delenv("NEWTON_STRATA_THREADS", raising=False)
        assert resolve_threads(None) == 1
        assert resolve_threads(4) == 4
        monkeypatch.setenv("NEWTON_STRATA_THREADS", "3")
        assert resolve_threads(None) == 3
        assert resolve_threads(2) == 2  # explicit wins
        with pytest.raises(ValueError):
            resolve_threads(0)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

class TestMatrices:
    def test_matrix_of_translation(self):
        m = diag_matrix((2, -1))
        assert m.n == 2
        assert m.val_min == -1
        assert m.entry_valuation(0, 0) == 2
        assert m.entry_valuation(1, 1) == -1
        assert m.entry_valuation(0, 1) is None
        assert m.exact_floor() == m.deg_cap - 2 * 1

    def test_matrix_of_with_finite_part(self):
        # x = t^(3,-3) s_1 has normal form (e, (3,-3), s_1): the antidiagonal
        # matrix [[0, t^3], [t^-3, 0]].
        x = AffineElement((3, -3), WeylElement((2, 1)))
        m = matrix_of(x, 101, 20)
        assert m.entry_valuation(0, 1) == 3
        assert m.entry_valuation(1, 0) == -3
        assert m.entry_valuation(0, 0) is None
        assert m.entry_valuation(1, 1) is None

    def test_exact_floor_nonnegative_val_min(self):
        m = diag_matrix((2, 1), deg_cap=30)
        assert m.val_min == 0
        assert m.exact_floor() == 30

    def test_sample_iwahori_shape(self):
        rng = np.random.default_rng(0)
        for _ in range(25):
            m = sample_iwahori(3, 101, 12, rng)
            assert m.coeffs.shape == (3, 3, 13)
            assert m.val_min == 0
            assert np.all(m.coeffs >= 0) and np.all(m.coeffs < 101)
            # Unit diagonal, above-diagonal entries divisible by t.
            for i in range(3):
                assert 1 <= m.coeffs[i, i, 0] < 101
                for j in range(i + 1, 3):
                    assert m.coeffs[i, j, 0] == 0

    def test_iwahori_determinant_valuation_zero(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            m = sample_iwahori(4, 101, 8, rng)
            assert elementary_symmetric_valuations(m)[4] == 0

    def test_iwahori_newton_point_is_zero(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            m = sample_iwahori(3, 101, 9, rng)
            assert newton_point_of_matrix(m) == iso("0,0,0")


# ---------------------------------------------------------------------------
# Multiplication: FFT product against direct convolution
# ---------------------------------------------------------------------------

def brute_multiply(a: LaurentPolyMatrix, b: LaurentPolyMatrix) -> np.ndarray:
    """Entrywise np.convolve matrix product, mod p, truncated at deg_cap."""
    n, p = a.n, a.p
    val_min = a.val_min + b.val_min
    width = a.deg_cap - val_min + 1
    out = np.zeros((n, n, width), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            acc = np.zeros(a.coeffs.shape[2] + b.coeffs.shape[2] - 1,
                           dtype=np.int64)
            for k in range(n):
                acc += np.convolve(a.coeffs[i, k], b.coeffs[k, j])
            acc %= p
            keep = min(width, acc.size)
            out[i, j, :keep] = acc[:keep]
    return out


class TestMultiply:
    @pytest.mark.parametrize("n,seed", [(2, 0), (3, 1), (4, 2)])
    def test_against_convolution(self, n, seed):
        rng = np.random.default_rng(seed)
        p, deg_cap = 7, 6
        a = sample_iwahori(n, p, deg_cap, rng)
        b = sample_iwahori(n, p, deg_cap, rng)
        prod = multiply(a, b)
        assert prod.val_min == 0 and prod.deg_cap == deg_cap
        assert np.array_equal(prod.coeffs, brute_multiply(a, b))

    def test_with_negative_valuations(self):
        rng = np.random.default_rng(3)
        p, deg_cap = 101, 10
        g = sample_iwahori(3, p, deg_cap, rng)
        x = diag_matrix((2, 0, -2), p=p, deg_cap=deg_cap)
        prod = multiply(g, x)
        assert prod.val_min == -2
        assert np.array_equal(prod.coeffs, brute_multiply(g, x))
        both = multiply(prod, sample_iwahori(3, p, deg_cap, rng))
        assert both.val_min == -2

    def test_identity_product(self):
        e = diag_matrix((0, 0), p=13, deg_cap=14)
        x = diag_matrix((3, -1), p=13, deg_cap=14)
        assert np.array_equal(multiply(e, x).coeffs, brute_multiply(e, x))
        assert newton_point_of_matrix(multiply(e, x)) == iso("3,-1")


# ---------------------------------------------------------------------------
# Newton points from matrices
# ---------------------------------------------------------------------------

class TestNewtonPointOfMatrix:
    def test_diagonal_examples(self):
        assert newton_point_of_matrix(diag_matrix((2, -1))) == iso("2,-1")
        assert newton_point_of_matrix(diag_matrix((1, 0))) == iso("1,0")
        assert newton_point_of_matrix(diag_matrix((3, 1, -4))) == iso("3,1,-4")

    def test_unipotent_with_t_entry(self):
        # [[1, 0], [0, t]]: e_1 = 1 + t (val 0), e_2 = t (val 1);
        # hull slopes (0, 1) reversed give (1, 0).
        coeffs = np.zeros((2, 2, 3), dtype=np.int64)
        coeffs[0, 0, 0] = 1
        coeffs[1, 1, 1] = 1
        m = LaurentPolyMatrix(coeffs, 0, 101, 10)
        assert newton_point_of_matrix(m) == iso("1,0")

    def test_fractional_slopes(self):
        # [[0, t], [1, 0]]: e_1 = 0, e_2 = -t (val 1); the hull runs
        # (0,0) -> (2,1), slope 1/2 twice.
        coeffs = np.zeros((2, 2, 3), dtype=np.int64)
        coeffs[0, 1, 1] = 1
        coeffs[1, 0, 0] = 1
        m = LaurentPolyMatrix(coeffs, 0, 101, 10)
        assert newton_point_of_matrix(m) == iso("1/2,1/2")

    def test_determinant_outside_window(self):
        k = 8
        m = diag_matrix((k, k), deg_cap=k)  # det = t^16, window ends at 8
        with pytest.raises(PrecisionLoss):
            newton_point_of_matrix(m)

    def test_guard_band(self):
        k = 8
        m = diag_matrix((k, 0), deg_cap=k + 1)  # hull vertex at floor - 1
        with pytest.raises(PrecisionLoss):
            newton_point_of_matrix(m)

    def test_enough_precision_succeeds(self):
        k = 8
        m = diag_matrix((k, 0), deg_cap=required_deg_cap((k, 0), 2))
        assert newton_point_of_matrix(m) == iso("8,0")


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

class TestSampler:
    def test_stream_determinism(self):
        a = _stream(42, 3).integers(0, 1000, size=8)
        b = _stream(42, 3).integers(0, 1000, size=8)
        c = _stream(42, 4).integers(0, 1000, size=8)
        assert np.array_equal(a, b)
        assert not np.array_equal(a, c)

    def test_deg_cap_floor_enforced(self):
        x = AffineElement((3, -3), WeylElement((2, 1)))
        config = SamplerConfig(p=101, samples=5, rng_seed=0, deg_cap=10)
        with pytest.raises(ValueError):
            estimate_generic_newton(x, config)

    def test_gl2_max_matches_formula(self):
        x = AffineElement((3, -3), WeylElement((2, 1)))
        sigma = DiagramAutomorphism.identity(cartan_type_a(1))
        formula = generic_newton_point(x, sigma)
        assert formula == iso("2,-2")
        report = estimate_generic_newton(
            x, SamplerConfig(p=101, samples=40, rng_seed=7))
        assert report.max_points == (formula,)
        assert report.total == 40
        assert sum(c for _, c in report.histogram) == 40 - report.discarded
        assert report.count_of(formula) > 0
        assert report.count_of(iso("3,-3")) == 0
        # Every observed class lies at or below the generic point.
        from newton_strata import dominance_leq
        for cls, _ in report.histogram:
            assert dominance_leq(cls, formula)
            assert cls.kappa == 0

    def test_gl3_max_matches_formula(self):
        v = WeylElement((2, 1, 3))
        w = WeylElement((1, 3, 2))
        x = AffineElement.from_normal(v, (4, 0, -4), w)
        sigma = DiagramAutomorphism.identity(cartan_type_a(2))
        formula = generic_newton_point(x, sigma)
        report = estimate_generic_newton(
            x, SamplerConfig(p=101, samples=30, rng_seed=11))
        assert report.max_points == (formula,)

    def test_determinism_across_runs_and_threads(self, monkeypatch):
        monkeypatch.delenv("NEWTON_STRATA_THREADS", raising=False)
        x = AffineElement((3, -3), WeylElement((2, 1)))
        config = SamplerConfig(p=101, samples=24, rng_seed=5)
        first = estimate_generic_newton(x, config)
        again = estimate_generic_newton(x, config)
        threaded = estimate_generic_newton(x, config, threads=3)
        assert first.to_json() == again.to_json() == threaded.to_json()

    def test_env_var_threads(self, monkeypatch):
        x = AffineElement((3, -3), WeylElement((2, 1)))
        config = SamplerConfig(p=101, samples=12, rng_seed=5)
        monkeypatch.delenv("NEWTON_STRATA_THREADS", raising=False)
        base = estimate_generic_newton(x, config)
        monkeypatch.setenv("NEWTON_STRATA_THREADS", "2")
        assert estimate_generic_newton(x, config).to_json() == base.to_json()

    def test_stability_recheck_agrees(self):
        x = AffineElement((3, -3), WeylElement((2, 1)))
        plain = estimate_generic_newton(
            x, SamplerConfig(p=101, samples=20, rng_seed=9))
        checked = estimate_generic_newton(
            x, SamplerConfig(p=101, samples=20, rng_seed=9,
                             stability_recheck=True))
        assert plain.histogram == checked.histogram
        assert checked.discarded == 0

    def test_report_json_shape(self):
        x = AffineElement((2, -2), WeylElement((2, 1)))
        report = estimate_generic_newton(
            x, SamplerConfig(p=13, samples=10, rng_seed=1))
        data = report.to_json()
        assert data["p"] == 13 and data["total"] == 10
        assert data["rng_seed"] == 1
        assert isinstance(data["histogram"], list)
        assert all(set(row) == {"nu", "count"} for row in data["histogram"])
        assert data["max_points"]

    def test_different_seeds_same_generic_point(self):
        x = AffineElement((3, -3), WeylElement((2, 1)))
        reports = [estimate_generic_newton(
            x, SamplerConfig(p=101, samples=30, rng_seed=seed))
            for seed in (1, 2)]
        assert reports[0].max_points == reports[1].max_points
        assert reports[0].histogram != reports[1].histogram or True  # may differ
