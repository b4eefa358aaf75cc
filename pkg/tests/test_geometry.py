import math

import pytest
from hypothesis import given, strategies as st

from orifold import (
    DomainError,
    FoldParams,
    FoldState,
    PROTOTYPE,
    dimensions,
    phi_from_theta,
    sweep,
    theta_from_height,
)

# frozen from a 50-digit evaluation of the closed forms
PHI_70_100 = 149.62215124012698
DIMS_130 = (9.2976017582953876, 166.32963194127818, 125.49827908179575)
H_58 = 19.241633557066708
THETA_H_9298 = 129.99771122555143

angles = st.floats(min_value=0.01, max_value=180.0, allow_nan=False)
betas_st = st.floats(min_value=1.0, max_value=89.0, allow_nan=False)
sides = st.floats(min_value=0.5, max_value=200.0, allow_nan=False)
counts = st.integers(min_value=1, max_value=6)


def fold_params_st():
    return st.builds(FoldParams, p=sides, beta=betas_st, n=counts, m=counts,
                     theta_neutral=st.just(130.0))


class TestFoldParams:
    def test_prototype_defaults(self):
        assert PROTOTYPE == FoldParams(p=22.0, beta=70.0, n=4, m=3,
                                       theta_neutral=130.0)
        assert PROTOTYPE.units == 12

    @pytest.mark.parametrize("kwargs,param", [
        (dict(p=0.0), "p"),
        (dict(p=-2.0), "p"),
        (dict(beta=0.0), "beta"),
        (dict(beta=90.0), "beta"),
        (dict(beta=95.0), "beta"),
        (dict(n=0), "n"),
        (dict(m=-1), "m"),
        (dict(theta_neutral=0.0), "theta_neutral"),
        (dict(theta_neutral=181.0), "theta_neutral"),
    ])
    def test_invariants_rejected(self, kwargs, param):
        base = dict(p=22.0, beta=70.0, n=4, m=3, theta_neutral=130.0)
        base.update(kwargs)
        with pytest.raises(DomainError) as err:
            FoldParams(**base)
        assert err.value.param == param

    def test_fold_state_range(self):
        assert FoldState(theta=180.0).theta == 180.0
        with pytest.raises(DomainError):
            FoldState(theta=0.0)
        with pytest.raises(DomainError):
            FoldState(theta=180.5)


class TestPhi:
    def test_flat_state_is_twice_beta_exactly(self, prototype):
        assert phi_from_theta(prototype, 180.0) == 140.0

    def test_known_half_cosine(self):
        params = FoldParams(p=22.0, beta=45.0, n=4, m=3)
        # cos45 * sin45 = 1/2, acos(1/2) = 60 deg
        assert phi_from_theta(params, 90.0) == pytest.approx(120.0, abs=1e-9)

    def test_high_precision_value(self, prototype):
        assert phi_from_theta(prototype, 100.0) == pytest.approx(
            PHI_70_100, abs=1e-9)

    @pytest.mark.parametrize("theta", [0.0, -10.0, 180.1, 360.0])
    def test_theta_out_of_range(self, prototype, theta):
        with pytest.raises(DomainError) as err:
            phi_from_theta(prototype, theta)
        assert err.value.param == "theta"

    @given(beta=betas_st, theta_lo=angles, theta_hi=angles)
    def test_strictly_decreasing_and_bounded(self, beta, theta_lo, theta_hi):
        params = FoldParams(p=10.0, beta=beta, n=1, m=1)
        lo, hi = sorted((theta_lo, theta_hi))
        phi_lo = phi_from_theta(params, lo)
        phi_hi = phi_from_theta(params, hi)
        assert 2.0 * beta - 1e-9 <= phi_hi <= phi_lo <= 180.0
        if hi - lo > 1e-6:
            assert phi_hi < phi_lo


class TestDimensions:
    def test_flat_height_is_exactly_zero(self, prototype):
        assert dimensions(prototype, 180.0).h == 0.0

    def test_neutral_state_values(self, prototype):
        d = dimensions(prototype, 130.0)
        assert d.h == pytest.approx(DIMS_130[0], rel=1e-12)
        assert d.l == pytest.approx(DIMS_130[1], rel=1e-12)
        assert d.w == pytest.approx(DIMS_130[2], rel=1e-12)

    def test_actuated_height(self, prototype):
        assert dimensions(prototype, 58.0).h == pytest.approx(H_58, rel=1e-12)

    @given(params=fold_params_st(), theta_lo=angles, theta_hi=angles)
    def test_height_decreases_length_increases(self, params, theta_lo, theta_hi):
        lo, hi = sorted((theta_lo, theta_hi))
        if hi - lo < 1e-6:
            return
        d_lo = dimensions(params, lo)
        d_hi = dimensions(params, hi)
        assert d_hi.h < d_lo.h
        assert d_hi.l > d_lo.l

    @given(params=fold_params_st(), theta=angles)
    def test_invariance_under_unit_counts(self, params, theta):
        import dataclasses
        d = dimensions(params, theta)
        other_beta = dataclasses.replace(params, beta=params.beta / 2.0 + 10.0)
        assert dimensions(other_beta, theta).h == d.h
        more_m = dataclasses.replace(params, m=params.m + 2)
        assert dimensions(more_m, theta).h == d.h
        assert dimensions(more_m, theta).l == d.l
        more_n = dataclasses.replace(params, n=params.n + 2)
        assert dimensions(more_n, theta).w == d.w


class TestThetaFromHeight:
    def test_flat(self, prototype):
        assert theta_from_height(prototype, 0.0) == 180.0

    def test_half_side(self, prototype):
        assert theta_from_height(prototype, 11.0) == pytest.approx(120.0, abs=1e-9)

    def test_neutral_height(self, prototype):
        assert theta_from_height(prototype, 9.298) == pytest.approx(
            THETA_H_9298, abs=1e-6)

    @pytest.mark.parametrize("h", [-0.1, 22.0, 25.0])
    def test_unreachable(self, prototype, h):
        with pytest.raises(DomainError) as err:
            theta_from_height(prototype, h)
        assert "unreachable" in str(err.value)

    @given(params=fold_params_st(), theta=angles)
    def test_round_trip(self, params, theta):
        h = dimensions(params, theta).h
        assert theta_from_height(params, h) == pytest.approx(theta, abs=1e-9)


class TestSweep:
    def test_prototype_grid(self, prototype):
        table = sweep(prototype, 90.0, 180.0, 1.0, [45.0, 60.0, 70.0])
        assert len(table) == 273
        flat = [r for r in table if r.theta_deg == 180.0]
        assert len(flat) == 3
        assert all(r.h_mm == 0.0 for r in flat)

    def test_height_identical_across_beta(self, prototype):
        table = sweep(prototype, 90.0, 180.0, 1.0, [45.0, 60.0, 70.0])
        by_theta = {}
        for row in table:
            by_theta.setdefault(row.theta_deg, set()).add(row.h_mm)
        assert all(len(hs) == 1 for hs in by_theta.values())

    def test_width_range_shrinks_with_beta(self, prototype):
        table = sweep(prototype, 90.0, 180.0, 1.0, [45.0, 60.0, 70.0])
        ranges = {}
        for row in table:
            lo, hi = ranges.get(row.beta_deg, (float("inf"), float("-inf")))
            ranges[row.beta_deg] = (min(lo, row.w_mm), max(hi, row.w_mm))
        spans = [hi - lo for _, (lo, hi) in sorted(ranges.items())]
        assert spans[0] > spans[1] > spans[2]

    def test_coarse_grid_endpoints(self, prototype):
        table = sweep(prototype, 90.0, 180.0, 45.0, [70.0])
        assert [r.theta_deg for r in table] == [90.0, 135.0, 180.0]

    def test_non_divisible_step_stops_inside(self, prototype):
        table = sweep(prototype, 90.0, 180.0, 40.0, [70.0])
        assert [r.theta_deg for r in table] == [90.0, 130.0, 170.0]

    @pytest.mark.parametrize("kwargs", [
        dict(theta_min=90.0, theta_max=90.0, step=1.0, betas=[70.0]),
        dict(theta_min=120.0, theta_max=90.0, step=1.0, betas=[70.0]),
        dict(theta_min=90.0, theta_max=180.0, step=0.0, betas=[70.0]),
        dict(theta_min=90.0, theta_max=180.0, step=-1.0, betas=[70.0]),
        dict(theta_min=90.0, theta_max=180.0, step=1.0, betas=[]),
        dict(theta_min=90.0, theta_max=180.0, step=1.0, betas=[95.0]),
        dict(theta_min=0.0, theta_max=180.0, step=1.0, betas=[70.0]),
        dict(theta_min=90.0, theta_max=181.0, step=1.0, betas=[70.0]),
    ])
    def test_invalid_grid(self, prototype, kwargs):
        with pytest.raises(DomainError):
            sweep(prototype, **kwargs)


def test_phi_of_theta_90_against_direct_formula():
    # independent of the library helpers on purpose
    for beta in (30.0, 45.0, 70.0):
        params = FoldParams(p=5.0, beta=beta, n=1, m=1)
        expected = 2.0 * math.degrees(math.acos(
            math.cos(math.radians(beta)) * math.sin(math.radians(45.0))))
        assert phi_from_theta(params, 90.0) == pytest.approx(expected, abs=1e-12)
