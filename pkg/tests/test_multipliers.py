import numpy as np
import pytest

from schurlab.multipliers import (
    MultiplierNormEstimate,
    SymbolMatrix,
    divided_difference_integral,
    divided_difference_symbol,
    hadamard_ratio,
    multiplier_norm_lower,
    rank_one_sum_bound,
    restrict_symbol,
    schur_apply,
)
from schurlab.operators import (
    SchattenIndex,
    SignedPowerFunction,
    apply_calculus,
    spectral_decompose,
)

from conftest import random_hermitian


def separated_hermitian(dim, rng, gap=1e-3):
    """Hermitian matrix whose spectrum has gaps above the grouping threshold."""
    vals = np.sort(rng.standard_normal(dim))[::-1]
    while np.any(-np.diff(vals) < gap):
        vals = np.sort(rng.standard_normal(dim))[::-1]
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    u, _ = np.linalg.qr(g)
    h = (u * vals) @ u.conj().T
    return 0.5 * (h + h.conj().T)


class TestDividedDifferenceSymbol:
    def test_simple_value(self):
        f = SignedPowerFunction(0.5, signed=False)
        m = divided_difference_symbol([4.0], [1.0], f)
        assert m.values[0, 0] == pytest.approx(1.0 / 3.0, rel=1e-15)

    def test_coincidence_convention(self):
        f = SignedPowerFunction(0.5, signed=False)
        m = divided_difference_symbol([2.0], [2.0], f)
        assert m.values[0, 0] == 0.0

    def test_unit_step(self):
        for theta in (0.25, 0.5, 0.9):
            f = SignedPowerFunction(theta, signed=False)
            m = divided_difference_symbol([1.0], [0.0], f)
            assert m.values[0, 0] == pytest.approx(1.0)


class TestDividedDifferenceIntegral:
    def test_closed_form(self):
        assert divided_difference_integral(4.0, 1.0, 0.5) == pytest.approx(1 / 3, abs=1e-14)

    def test_equal_arguments(self):
        for theta in (0.25, 0.5, 0.75):
            assert divided_difference_integral(1.0, 1.0, theta) == pytest.approx(theta, abs=1e-12)

    def test_direct_formula_oracle(self):
        x, y, theta = 2.0, 0.5, 0.3
        direct = (x**theta - y**theta) / (x - y)
        assert divided_difference_integral(x, y, theta) == pytest.approx(direct, abs=1e-10)

    def test_grid_agreement(self):
        # matches the quotient within 1e-10 over the articulated range
        for x in (0.25, 1.0, 4.0):
            for y in (0.25, 0.7, 4.0):
                for theta in (0.25, 0.5, 0.75):
                    direct = (theta * x ** (theta - 1) if x == y
                              else (x**theta - y**theta) / (x - y))
                    got = divided_difference_integral(x, y, theta, 64)
                    assert got == pytest.approx(direct, abs=1e-10)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            divided_difference_integral(-1.0, 2.0, 0.5)
        with pytest.raises(ValueError):
            divided_difference_integral(1.0, 0.0, 0.5)


class TestSchurApply:
    def test_constant_symbol_is_identity(self, rng):
        x = spectral_decompose(random_hermitian(4, rng))
        y = spectral_decompose(random_hermitian(4, rng))
        m = SymbolMatrix(x.distinct_eigenvalues, y.distinct_eigenvalues,
                         np.ones((x.distinct_eigenvalues.size, y.distinct_eigenvalues.size)))
        z = random_hermitian(4, rng)
        assert np.abs(schur_apply(m, x, y, z) - z).max() < 1e-12

    def test_divided_difference_identity(self, rng):
        for theta in (0.25, 0.5, 0.75):
            for signed in (False, True):
                f = SignedPowerFunction(theta, signed)
                x = spectral_decompose(separated_hermitian(6, rng))
                y = spectral_decompose(separated_hermitian(6, rng))
                m = divided_difference_symbol(
                    x.distinct_eigenvalues, y.distinct_eigenvalues, f)
                lhs = apply_calculus(x, f).entries - apply_calculus(y, f).entries
                rhs = schur_apply(m, x, y, x.entries - y.entries)
                scale = max(x.spectral_radius, y.spectral_radius) ** theta
                assert np.abs(lhs - rhs).max() <= 1e-9 * scale

    def test_diagonal_reduces_to_hadamard(self, rng):
        xv = np.array([3.0, 1.0])
        yv = np.array([2.0, -1.0])
        x = spectral_decompose(np.diag(xv))
        y = spectral_decompose(np.diag(yv))
        vals = rng.standard_normal((2, 2))
        m = SymbolMatrix(xv, yv, vals)
        z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        assert np.abs(schur_apply(m, x, y, z) - vals * z).max() < 1e-12

    def test_linearity(self, rng):
        x = spectral_decompose(separated_hermitian(4, rng))
        y = spectral_decompose(separated_hermitian(4, rng))
        m = divided_difference_symbol(x.distinct_eigenvalues, y.distinct_eigenvalues,
                                      SignedPowerFunction(0.5))
        z1 = random_hermitian(4, rng)
        z2 = random_hermitian(4, rng)
        lhs = schur_apply(m, x, y, 2.0 * z1 + 1j * z2)
        rhs = 2.0 * schur_apply(m, x, y, z1) + 1j * schur_apply(m, x, y, z2)
        assert np.abs(lhs - rhs).max() < 1e-10 * max(1.0, np.abs(rhs).max())

    def test_adjoint_compatibility(self, rng):
        x = spectral_decompose(separated_hermitian(4, rng))
        y = spectral_decompose(separated_hermitian(4, rng))
        m = divided_difference_symbol(x.distinct_eigenvalues, y.distinct_eigenvalues,
                                      SignedPowerFunction(0.5, signed=True))
        z = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        lhs = schur_apply(m, x, y, z).conj().T
        rhs = schur_apply(m.transpose(), y, x, z.conj().T)
        assert np.abs(lhs - rhs).max() < 1e-10 * max(1.0, np.abs(rhs).max())

    def test_spectrum_mismatch_rejected(self, rng):
        x = spectral_decompose(np.diag([3.0, 1.0]))
        y = spectral_decompose(np.diag([2.0, 0.0]))
        m = SymbolMatrix([3.0, 1.5], [2.0, 0.0], np.ones((2, 2)))
        with pytest.raises(ValueError, match="spectrum"):
            schur_apply(m, x, y, np.eye(2))


class TestRankOneSumBound:
    def test_single_term(self):
        assert rank_one_sum_bound([1.0], [1.0], [1.0], 1.0) == 1.0

    def test_two_terms_half(self):
        assert rank_one_sum_bound([1.0, 1.0], [1.0, 1.0], [1.0, 1.0], 0.5) == pytest.approx(4.0)

    def test_geometric(self):
        alphas = [2.0**-k for k in range(11)]
        ones = np.ones(11)
        assert rank_one_sum_bound(alphas, ones, ones, 1.0) == pytest.approx(2 - 2.0**-10)

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            rank_one_sum_bound([1.0, 2.0], [1.0], [1.0], 0.5)

    def test_rejects_p_above_one(self):
        with pytest.raises(ValueError):
            rank_one_sum_bound([1.0], [1.0], [1.0], 2.0)


class TestMultiplierNormLower:
    def test_constant_symbol_exact(self):
        m = SymbolMatrix([0.0, 1.0], [0.0, 1.0], np.ones((2, 2)))
        for p in (0.5, 1.0, 2.0, SchattenIndex.INF):
            est = multiplier_norm_lower(m, p, trials=2, seed=3)
            assert est.lower == 1.0

    def test_sign_symbol_isometric_on_frobenius(self):
        m = SymbolMatrix([0.0, 1.0], [0.0, 1.0], np.array([[1.0, 1.0], [1.0, -1.0]]))
        est = multiplier_norm_lower(m, 2.0, trials=4, seed=0)
        assert est.lower == 1.0

    def test_rank_one_symbol_bounded(self, rng):
        f = rng.standard_normal(3)
        g = rng.standard_normal(4)
        m = SymbolMatrix(np.arange(3.0), np.arange(4.0), np.outer(f, g))
        cap = np.abs(f).max() * np.abs(g).max()
        for seed in range(5):
            est = multiplier_norm_lower(m, 0.5, trials=4, seed=seed)
            assert est.lower <= cap + 1e-9

    def test_monotone_in_trials(self):
        vals = np.array([[1.0, 2.0, 0.3], [0.5, -1.0, 2.5]])
        m = SymbolMatrix([0.0, 1.0], [0.0, 1.0, 2.0], vals)
        lows = [multiplier_norm_lower(m, 0.7, trials=t, seed=11).lower for t in (1, 3, 9)]
        assert lows[0] <= lows[1] <= lows[2]

    def test_deterministic_per_seed(self):
        vals = np.array([[1.0, 2.0], [0.5, -1.0]])
        m = SymbolMatrix([0.0, 1.0], [0.0, 1.0], vals)
        a = multiplier_norm_lower(m, 0.5, trials=5, seed=7)
        b = multiplier_norm_lower(m, 0.5, trials=5, seed=7)
        assert a.lower == b.lower
        assert np.array_equal(a.witness, b.witness)

    def test_estimate_metadata(self):
        m = SymbolMatrix([0.0], [0.0], np.array([[2.0]]))
        est = multiplier_norm_lower(m, 1.0, trials=1, seed=9)
        assert est.seed == 9 and est.trials == 1
        assert "matrix" in est.lower_scope
        est2 = est.with_upper(5.0)
        assert est2.upper == 5.0

    def test_sandwich_validation(self):
        with pytest.raises(ValueError, match="sandwich"):
            MultiplierNormEstimate(lower=2.0, p=SchattenIndex(1.0), upper=1.0)

    def test_rejects_zero_trials(self):
        m = SymbolMatrix([0.0], [0.0], np.array([[1.0]]))
        with pytest.raises(ValueError):
            multiplier_norm_lower(m, 1.0, trials=0)


class TestRestrictSymbol:
    def test_full_subset_identity(self, rng):
        vals = rng.standard_normal((3, 3))
        m = SymbolMatrix(np.arange(3.0), np.arange(3.0), vals)
        r = restrict_symbol(m, range(3), range(3))
        assert np.array_equal(r.values, vals)

    def test_scalar_restriction_is_exact_norm(self, rng):
        vals = rng.standard_normal((3, 3))
        m = SymbolMatrix(np.arange(3.0), np.arange(3.0), vals)
        r = restrict_symbol(m, [1], [2])
        for p in (0.5, 1.0, 2.0, SchattenIndex.INF):
            est = multiplier_norm_lower(r, p, trials=1, seed=0)
            assert est.lower == pytest.approx(abs(vals[1, 2]), rel=1e-12)

    def test_rejects_empty(self, rng):
        m = SymbolMatrix([0.0, 1.0], [0.0, 1.0], np.eye(2))
        with pytest.raises(ValueError, match="nonempty"):
            restrict_symbol(m, [], [0])

    def test_shared_witness_never_exceeds_parent(self, rng):
        # the restricted best witness, zero-padded, realizes the same ratio
        # on the parent symbol, so the parent estimate dominates
        vals = rng.standard_normal((4, 4))
        m = SymbolMatrix(np.arange(4.0), np.arange(4.0), vals)
        rows, cols = [0, 2], [1, 3]
        r = restrict_symbol(m, rows, cols)
        est = multiplier_norm_lower(r, 0.5, trials=3, seed=5)
        padded = np.zeros((4, 4), dtype=complex)
        padded[np.ix_(rows, cols)] = est.witness
        parent_ratio = hadamard_ratio(m, padded, 0.5)
        assert parent_ratio >= est.lower - 1e-9


from hypothesis import given
from hypothesis import strategies as st


@given(st.floats(0.26, 4.0), st.floats(0.26, 4.0), st.floats(0.05, 0.95))
def test_integral_matches_quotient_property(x, y, theta):
    direct = (theta * x ** (theta - 1.0) if x == y
              else (x**theta - y**theta) / (x - y))
    assert divided_difference_integral(x, y, theta, 96) == pytest.approx(
        direct, abs=1e-10, rel=1e-9)


def test_symbol_json_roundtrip(rng):
    vals = rng.standard_normal((2, 3))
    m = SymbolMatrix([0.0, 1.0], [0.0, 1.0, 2.0], vals)
    m2 = SymbolMatrix.from_json(m.to_json())
    assert np.array_equal(m2.values, m.values)
    assert np.array_equal(m2.rows, m.rows)
    assert np.array_equal(m2.cols, m.cols)
