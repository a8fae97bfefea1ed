import numpy as np
import pytest

from schurlab.interpolation import (
    KFunctionalQuery,
    RearrangementProfile,
    k_functional,
    kfonc_check,
    lorentz_norm,
    rearrangement,
    selfadjoint_k_gap,
    weak_lp_check,
)
from schurlab.experiments import ando_ratio
from schurlab.operators import SchattenIndex, schatten_norm

from conftest import random_hermitian


def peetre_l1_linf(values, t):
    """Classical K_t(x; l_1, l_inf) = sum of the largest floor(t) values plus
    the fractional remainder of the next one."""
    s = np.sort(np.asarray(values, dtype=float))[::-1]
    n = s.size
    if t >= n:
        return float(s.sum())
    whole = int(np.floor(t))
    out = float(s[:whole].sum())
    if whole < n:
        out += (t - whole) * s[whole]
    return out


class TestRearrangement:
    def test_diagonal(self):
        prof = rearrangement(np.diag([1.0, 3.0, 2.0]))
        assert np.allclose(prof.values, [3.0, 2.0, 1.0])

    def test_rank_one(self):
        prof = rearrangement(np.ones((2, 2)))
        assert np.allclose(prof.values, [2.0, 0.0], atol=1e-14)

    def test_gram_oracle(self, rng):
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        prof = rearrangement(a)
        gram = np.sort(np.sqrt(np.maximum(np.linalg.eigvalsh(a.conj().T @ a), 0.0)))[::-1]
        assert np.abs(prof.values - gram).max() < 1e-10

    def test_rejects_increasing(self):
        with pytest.raises(ValueError, match="nonincreasing"):
            RearrangementProfile(np.array([1.0, 2.0]))


class TestLorentzNorm:
    def test_two_step_sup(self):
        prof = RearrangementProfile(np.array([3.0, 1.0]))
        assert lorentz_norm(prof, 1.0, SchattenIndex.INF) == pytest.approx(3.0)

    def test_collapse_to_schatten(self, rng):
        a = random_hermitian(5, rng)
        for p in (0.5, 1.0, 2.0):
            lhs = lorentz_norm(rearrangement(a), p, p)
            rhs = schatten_norm(a, p)
            assert abs(lhs - rhs) <= 1e-12 * max(rhs, 1.0)

    def test_flat_profile_sup(self):
        n = 7
        prof = RearrangementProfile(np.ones(n))
        assert lorentz_norm(prof, 2.0, SchattenIndex.INF) == pytest.approx(np.sqrt(n))

    def test_weight_scaling(self):
        prof1 = RearrangementProfile(np.array([2.0, 1.0]), weight=1.0)
        prof3 = RearrangementProfile(np.array([2.0, 1.0]), weight=3.0)
        p, q = 1.5, 0.7
        assert lorentz_norm(prof3, p, q) == pytest.approx(
            3.0 ** (1.0 / p) * lorentz_norm(prof1, p, q), rel=1e-12)

    def test_rejects_bad_p(self):
        with pytest.raises(ValueError):
            lorentz_norm(RearrangementProfile(np.array([1.0])), 0.0, 1.0)


from hypothesis import given
from hypothesis import strategies as st


@given(st.lists(st.floats(0.0, 5.0), min_size=1, max_size=6),
       st.sampled_from([0.5, 1.0, 2.0]))
def test_lorentz_diagonal_collapse_property(values, p):
    s = np.sort(np.asarray(values))[::-1]
    prof = RearrangementProfile(s)
    direct = float(np.sum(s**p) ** (1.0 / p)) if s.any() else 0.0
    assert lorentz_norm(prof, p, p) == pytest.approx(direct, abs=1e-12, rel=1e-12)


class TestKFunctional:
    def test_large_t_recovers_p0_norm(self, rng):
        a = random_hermitian(4, rng)
        prof = rearrangement(a)
        for p0, p1 in ((1.0, SchattenIndex.INF), (0.5, 2.0)):
            q = KFunctionalQuery(1e6, SchattenIndex(p0), SchattenIndex(p1))
            val = k_functional(prof, q, grid=64)
            target = prof.schatten(p0)
            assert abs(val - target) <= 1e-4 * target

    def test_classical_formula(self, rng):
        for _ in range(25):
            values = np.sort(rng.uniform(0, 3, 5))[::-1]
            prof = RearrangementProfile(values)
            for t in (0.5, 1.0, 2.5, 4.0):
                grid = 256
                val = k_functional(prof, KFunctionalQuery(t, SchattenIndex(1.0),
                                                          SchattenIndex.INF), grid)
                target = peetre_l1_linf(values, t)
                assert val >= target - 1e-12
                assert val <= target + 2.0 * values[0] / grid + 1e-9

    def test_scalar_case(self):
        prof = RearrangementProfile(np.array([1.0]))
        for t in (0.25, 1.0, 4.0):
            val = k_functional(prof, KFunctionalQuery(t, SchattenIndex(1.0),
                                                      SchattenIndex.INF), 64)
            assert val == pytest.approx(min(1.0, t), abs=1e-9)

    def test_concave_nondecreasing_in_t(self, rng):
        values = np.sort(rng.uniform(0, 2, 4))[::-1]
        prof = RearrangementProfile(values)
        ts = np.logspace(-1.5, 1.5, 20)
        q = lambda t: KFunctionalQuery(t, SchattenIndex(0.5), SchattenIndex(2.0))
        vals = np.array([k_functional(prof, q(t), 64) for t in ts])
        scale = vals.max()
        assert np.all(np.diff(vals) >= -1e-2 * scale)
        # concavity: nonuniform second differences stay below grid noise
        for i in range(1, len(ts) - 1):
            h1, h2 = ts[i] - ts[i - 1], ts[i + 1] - ts[i]
            second = (vals[i + 1] - vals[i]) / h2 - (vals[i] - vals[i - 1]) / h1
            assert second <= 2e-2 * scale / h1

    def test_monotone_under_grid_refinement(self, rng):
        values = np.sort(rng.uniform(0, 1, 5))[::-1]
        prof = RearrangementProfile(values)
        q = KFunctionalQuery(0.7, SchattenIndex(0.5), SchattenIndex(4.0))
        for g in (16, 32, 64, 128):
            coarse = k_functional(prof, q, g)
            fine = k_functional(prof, q, 2 * g)
            assert fine <= coarse + 1e-12

    def test_rejects_bad_query(self):
        with pytest.raises(ValueError, match="p0 < p1"):
            KFunctionalQuery(1.0, SchattenIndex(2.0), SchattenIndex(1.0))
        with pytest.raises(ValueError):
            k_functional(RearrangementProfile(np.array([1.0])),
                         KFunctionalQuery(1.0, SchattenIndex(1.0), SchattenIndex.INF),
                         grid=4)


class TestSelfadjointGap:
    def test_diagonal_gap_zero(self):
        x = np.diag([2.0, -1.0, 0.5])
        q = KFunctionalQuery(1.0, SchattenIndex(1.0), SchattenIndex.INF)
        plain, sa = selfadjoint_k_gap(x, q, 64)
        assert sa == pytest.approx(plain, abs=1e-9)

    def test_p0_one_equality(self, rng):
        x = random_hermitian(4, rng)
        q = KFunctionalQuery(0.8, SchattenIndex(1.0), SchattenIndex.INF)
        plain, sa = selfadjoint_k_gap(x, q, 64)
        # factor 2^(max(1/p0,1)-1) = 1 at p0 = 1
        assert plain <= sa + 1e-9
        assert sa <= plain + 1e-9

    def test_half_factor_bound(self, rng):
        factor = 2.0 ** (1.0 / 0.5 - 1.0)
        for _ in range(10):
            x = np.diag(rng.standard_normal(4))
            q = KFunctionalQuery(1.3, SchattenIndex(0.5), SchattenIndex(2.0))
            plain, sa = selfadjoint_k_gap(x, q, 64)
            assert sa >= plain - 1e-9          # constrained infimum dominates
            assert plain >= sa / factor - 1e-9  # and is within the 2^(1/p0-1) factor


class TestKfoncCheck:
    def test_single_jump(self):
        s = kfonc_check(np.diag([1.0, 0.0]), np.zeros((2, 2)),
                        1.0, SchattenIndex.INF, 0.5, False, t=1.0, grid=64)
        assert s.ratio == pytest.approx(1.0, abs=1e-6)

    def test_commuting_diagonals_finite(self, rng):
        x = np.diag(rng.standard_normal(4))
        y = np.diag(rng.standard_normal(4))
        s = kfonc_check(x, y, 0.5, 2.0, 0.5, True, t=1.0, grid=64)
        assert np.isfinite(s.ratio) and s.ratio > 0

    def test_sweep_logged(self, rng):
        x, y = random_hermitian(3, rng), random_hermitian(3, rng)
        ratios = [kfonc_check(x, y, 0.5, 2.0, 0.5, True, t=t, grid=32).ratio
                  for t in (0.1, 1.0, 10.0)]
        assert all(np.isfinite(r) for r in ratios)


class TestWeakLp:
    def test_collapse_to_power_ratio(self, rng):
        x, y = random_hermitian(4, rng), random_hermitian(4, rng)
        p, theta = 1.0, 0.5
        s = weak_lp_check(x, y, p, p / theta, theta, signed=True)
        a = ando_ratio(x, y, p, theta, signed=True)
        assert s.ratio == pytest.approx(a.ratio, rel=1e-10)

    def test_rank_one_exact(self):
        x = np.zeros((3, 3))
        x[0, 0] = 2.0
        s = weak_lp_check(x, np.zeros((3, 3)), 1.0, 1.0, 0.5, signed=False)
        assert s.ratio == pytest.approx(1.0, rel=1e-12)

    def test_sweep_over_q(self, rng):
        x, y = random_hermitian(5, rng), random_hermitian(5, rng)
        for q in (0.5, 1.0, SchattenIndex.INF):
            s = weak_lp_check(x, y, 1.0, q, 0.5, signed=True)
            assert np.isfinite(s.ratio) and s.ratio > 0
