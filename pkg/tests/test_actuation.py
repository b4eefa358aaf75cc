import math

import pytest
from hypothesis import given, settings, strategies as st

from orifold import (
    ActuationCommand,
    ActuatorConfig,
    ClampWarning,
    ConfigError,
    DomainError,
    InfeasibleError,
    PROTOTYPE,
    actuation_time,
    cable_displacement,
    power_draw,
    servo_for_theta,
    theta_from_servo,
)

from oracles import geometric_theta_closed_form

# frozen from high-precision evaluation
DISP_120 = 41.887902047863909
DISP_180 = 62.831853071795865
THETA_FOR_6_172_MM = 99.998327217395707

# largest servo angle whose displacement stays within one unit's contraction
GEOM_SERVO_MAX = math.degrees((2 * 22.0 * math.sin(math.radians(65.0))) / 20.0)


class TestActuatorConfig:
    def test_defaults_match_prototype_hardware(self, actuator):
        assert actuator.wheel_diameter == 40.0
        assert actuator.servo_range == (0.0, 180.0)
        assert actuator.calibration == ((0.0, 130.0), (60.0, 100.0), (120.0, 58.0))
        assert actuator.voltages == (5.0, 8.4)

    @pytest.mark.parametrize("kwargs", [
        dict(wheel_diameter=0.0),
        dict(servo_range=(180.0, 0.0)),
        dict(calibration=()),
        dict(calibration=((10.0, 130.0),)),                 # first servo not 0
        dict(calibration=((0.0, 130.0), (0.0, 100.0))),     # servo not increasing
        dict(calibration=((0.0, 100.0), (60.0, 130.0))),    # theta not decreasing
        dict(calibration=((0.0, 200.0), (60.0, 100.0))),    # theta out of range
        dict(n_active=0),
        dict(sweep_time_s=0.0),
    ])
    def test_invalid_config(self, kwargs):
        with pytest.raises(DomainError):
            ActuatorConfig(**kwargs)


class TestCableDisplacement:
    def test_values(self, actuator):
        assert cable_displacement(actuator, 0.0) == 0.0
        assert cable_displacement(actuator, 120.0) == pytest.approx(
            DISP_120, rel=1e-12)
        assert cable_displacement(actuator, 180.0) == pytest.approx(
            DISP_180, rel=1e-12)

    def test_out_of_range(self, actuator):
        with pytest.raises(DomainError):
            cable_displacement(actuator, -1.0)
        with pytest.raises(DomainError):
            cable_displacement(actuator, 181.0)

    @given(servo=st.floats(min_value=0.0, max_value=180.0, allow_nan=False),
           scale=st.floats(min_value=0.5, max_value=3.0, allow_nan=False))
    def test_linear_in_angle_and_diameter(self, servo, scale):
        base = ActuatorConfig()
        bigger = ActuatorConfig(wheel_diameter=base.wheel_diameter * scale)
        d0 = cable_displacement(base, servo)
        assert cable_displacement(bigger, servo) == pytest.approx(
            d0 * scale, rel=1e-12)
        assert cable_displacement(base, servo / 2.0) == pytest.approx(
            d0 / 2.0, rel=1e-12)


class TestCalibratedMode:
    def test_knots_exact(self, actuator, prototype):
        assert theta_from_servo(actuator, prototype, 0.0) == 130.0
        assert theta_from_servo(actuator, prototype, 60.0) == 100.0
        assert theta_from_servo(actuator, prototype, 120.0) == 58.0

    def test_midpoint_interpolation(self, actuator, prototype):
        assert theta_from_servo(actuator, prototype, 90.0) == pytest.approx(
            79.0, abs=1e-9)

    def test_extrapolation_beyond_last_knot(self, actuator, prototype):
        assert theta_from_servo(actuator, prototype, 160.0) == pytest.approx(
            30.0, abs=1e-9)

    def test_extrapolation_clamps_with_warning(self, prototype):
        wide = ActuatorConfig(servo_range=(0.0, 400.0))
        with pytest.warns(ClampWarning):
            theta = theta_from_servo(wide, prototype, 300.0)
        assert 0.0 < theta <= 180.0

    def test_monotone_non_increasing(self, actuator, prototype):
        servos = [0.0, 15.0, 30.0, 60.0, 90.0, 120.0, 150.0, 180.0]
        thetas = [theta_from_servo(actuator, prototype, s) for s in servos]
        assert all(b <= a for a, b in zip(thetas, thetas[1:]))

    def test_inverse_knots_exact(self, actuator, prototype):
        assert servo_for_theta(actuator, prototype, 130.0) == 0.0
        assert servo_for_theta(actuator, prototype, 58.0) == 120.0
        assert servo_for_theta(actuator, prototype, 79.0) == pytest.approx(
            90.0, abs=1e-9)

    def test_inverse_unreachable(self, actuator, prototype):
        with pytest.raises(InfeasibleError) as err:
            servo_for_theta(actuator, prototype, 140.0)
        assert err.value.reachable is not None
        with pytest.raises(InfeasibleError):
            servo_for_theta(actuator, prototype, 10.0)  # below servo-180 reach

    @given(servo=st.floats(min_value=0.0, max_value=180.0, allow_nan=False))
    @settings(max_examples=200)
    def test_round_trip(self, servo):
        actuator = ActuatorConfig()
        theta = theta_from_servo(actuator, PROTOTYPE, servo)
        assert servo_for_theta(actuator, PROTOTYPE, theta) == pytest.approx(
            servo, abs=1e-6)


class TestGeometricMode:
    def test_zero_pull_is_neutral(self, actuator, prototype):
        assert theta_from_servo(actuator, prototype, 0.0, "geometric") == \
            pytest.approx(130.0, abs=1e-6)

    def test_bisection_against_closed_form(self, actuator, prototype):
        servo = math.degrees(6.172 / 20.0)
        theta = theta_from_servo(actuator, prototype, servo, "geometric")
        assert theta == pytest.approx(THETA_FOR_6_172_MM, abs=1e-6)
        assert theta == pytest.approx(
            geometric_theta_closed_form(22.0, 130.0, 1, 6.172), abs=1e-6)

    def test_excess_displacement_infeasible(self, actuator, prototype):
        with pytest.raises(InfeasibleError):
            theta_from_servo(actuator, prototype, 180.0, "geometric")

    def test_more_active_units_allow_full_range(self, prototype):
        actuator = ActuatorConfig(n_active=2)
        theta = theta_from_servo(actuator, prototype, 180.0, "geometric")
        assert theta == pytest.approx(
            geometric_theta_closed_form(22.0, 130.0, 2, DISP_180), abs=1e-6)

    def test_above_neutral_unreachable(self, actuator, prototype):
        with pytest.raises(InfeasibleError):
            servo_for_theta(actuator, prototype, 150.0, "geometric")

    def test_monotone_non_increasing(self, actuator, prototype):
        servos = [0.0, 20.0, 40.0, 60.0, 80.0, 100.0, GEOM_SERVO_MAX]
        thetas = [theta_from_servo(actuator, prototype, s, "geometric")
                  for s in servos]
        assert all(b <= a for a, b in zip(thetas, thetas[1:]))

    @given(servo=st.floats(min_value=0.0, max_value=GEOM_SERVO_MAX - 1e-6,
                           allow_nan=False))
    @settings(max_examples=100)
    def test_round_trip(self, servo):
        actuator = ActuatorConfig()
        theta = theta_from_servo(actuator, PROTOTYPE, servo, "geometric")
        assert servo_for_theta(actuator, PROTOTYPE, theta, "geometric") == \
            pytest.approx(servo, abs=1e-6)

    def test_unknown_mode(self, actuator, prototype):
        with pytest.raises(DomainError):
            theta_from_servo(actuator, prototype, 10.0, "psychic")
        with pytest.raises(DomainError):
            servo_for_theta(actuator, prototype, 100.0, "psychic")


class TestTimingAndPower:
    def test_full_sweep_times_exact(self, actuator):
        assert actuation_time(actuator, 180.0, 5.0) == 0.48
        assert actuation_time(actuator, 180.0, 8.4) == 0.39

    def test_linear_scaling(self, actuator):
        assert actuation_time(actuator, 90.0, 5.0) == 0.24
        assert actuation_time(actuator, 0.0, 5.0) == 0.0

    def test_power_values_exact(self, actuator):
        assert power_draw(actuator, 5.0) == 9.625
        assert power_draw(actuator, 8.4) == 23.645

    def test_controller_only(self):
        actuator = ActuatorConfig(servo_current_a=0.0)
        assert power_draw(actuator, 5.0) == 0.125

    def test_unknown_voltage(self, actuator):
        with pytest.raises(ConfigError):
            power_draw(actuator, 6.0)
        with pytest.raises(ConfigError):
            actuation_time(actuator, 90.0, 12.0)

    def test_negative_sweep_rejected(self, actuator):
        with pytest.raises(DomainError):
            actuation_time(actuator, -5.0, 5.0)


def test_actuation_command_defaults():
    cmd = ActuationCommand(servo_deg=40.0)
    assert cmd.voltage == 5.0
