"""Curve containers: derivatives, CSV ingestion, integration, invariants."""

import math

import numpy as np
import pytest

from hhcurves import (
    CausalCharacter,
    CoordinateCurve,
    FDConfig,
    FrameCurve,
    HelixSpec,
    InvalidInputError,
    MixedCausalityError,
    UnitSpeedError,
    causal_character_of_curve,
    check_unit_speed,
    fd_derivative,
    integrate_frame_curve,
    is_horizontal,
    make_spacelike_biharmonic,
    make_spacelike_horizontal,
    read_curve_csv,
    vertical_momentum,
)

GRID = tuple(-1.0 + 0.25 * i for i in range(9))


def _smooth(s):
    return (math.sin(s), math.exp(0.3 * s), s**3 - 0.5 * s)


def _smooth_derivative(s, order):
    quarter = order % 4
    trig = (math.sin, math.cos, lambda u: -math.sin(u), lambda u: -math.cos(u))
    x = trig[quarter](s)
    y = 0.3**order * math.exp(0.3 * s)
    z = {1: 3.0 * s**2 - 0.5, 2: 6.0 * s, 3: 6.0, 4: 0.0}[order]
    return (x, y, z)


class TestFiniteDifferences:
    def test_low_orders_at_default_step(self):
        cfg = FDConfig()
        for s in (-0.7, 0.0, 1.3):
            for order, tol in ((1, 1e-10), (2, 1e-7)):
                got = fd_derivative(_smooth, s, order, cfg)
                want = _smooth_derivative(s, order)
                assert max(
                    abs(a - b) for a, b in zip(got, want)
                ) <= tol, (s, order)

    def test_high_orders_at_coarser_step(self):
        # Orders 3-4 divide by h^3 / h^4; a coarser step balances roundoff
        # against truncation.
        cfg = FDConfig(step=1e-2)
        for s in (-0.7, 0.0, 1.3):
            for order, tol in ((3, 1e-5), (4, 1e-4)):
                got = fd_derivative(_smooth, s, order, cfg)
                want = _smooth_derivative(s, order)
                assert max(
                    abs(a - b) for a, b in zip(got, want)
                ) <= tol, (s, order)

    def test_richardson_beats_single_step(self):
        plain = FDConfig(step=1e-3, richardson=False)
        extrapolated = FDConfig(step=1e-3, richardson=True)
        s = 0.4
        err_plain = abs(
            fd_derivative(_smooth, s, 1, plain)[0]
            - _smooth_derivative(s, 1)[0]
        )
        err_rich = abs(
            fd_derivative(_smooth, s, 1, extrapolated)[0]
            - _smooth_derivative(s, 1)[0]
        )
        assert err_rich < err_plain

    def test_invalid_order_rejected(self):
        with pytest.raises(InvalidInputError):
            fd_derivative(_smooth, 0.0, 5, FDConfig())


class TestCoordinateCurve:
    def test_analytic_flag(self):
        analytic = CoordinateCurve.from_functions(
            _smooth, derivative=_smooth_derivative
        )
        fd_backed = CoordinateCurve.from_functions(_smooth)
        assert analytic.analytic
        assert not fd_backed.analytic

    def test_fd_backing_approximates_analytic(self):
        fd_backed = CoordinateCurve.from_functions(_smooth)
        for s in (-0.5, 0.2):
            got = fd_backed.derivative(s, 1)
            want = _smooth_derivative(s, 1)
            assert max(abs(a - b) for a, b in zip(got, want)) <= 1e-9

    def test_derivative_order_validation(self):
        curve = CoordinateCurve.from_functions(
            _smooth, derivative=_smooth_derivative
        )
        with pytest.raises(InvalidInputError):
            curve.derivative(0.0, 0)
        with pytest.raises(InvalidInputError):
            curve.derivative(0.0, 5)

    def test_tangent_formula(self):
        # T = (x', y', z'/2 + x'·y − x·y') on any coordinate curve.
        curve = CoordinateCurve.from_functions(
            _smooth, derivative=_smooth_derivative
        )
        s = 0.7
        x, y, _ = _smooth(s)
        dx, dy, dz = _smooth_derivative(s, 1)
        want = (dx, dy, dz / 2.0 + dx * y - x * dy)
        assert curve.tangent(s) == pytest.approx(want, abs=1e-15)


class TestSampledCurves:
    def _samples(self, n=41, d=0.05):
        s_values = [i * d for i in range(n)]
        points = [_smooth(s) for s in s_values]
        return s_values, points

    def test_round_trip_derivatives_on_interior(self):
        s_values, points = self._samples()
        curve = CoordinateCurve.from_samples(s_values, points)
        table = curve.samples
        lo, hi = table.interior_range()
        for i in range(lo, hi + 1, 7):
            s = s_values[i]
            got = curve.derivative(s, 1)
            want = _smooth_derivative(s, 1)
            # Richardson stencil truncation at spacing 0.05 is ~|f⁽⁵⁾|·h⁴/30.
            assert max(abs(a - b) for a, b in zip(got, want)) <= 1e-6

    def test_off_grid_evaluation_rejected(self):
        s_values, points = self._samples()
        curve = CoordinateCurve.from_samples(s_values, points)
        with pytest.raises(InvalidInputError):
            curve.point(0.123456)

    def test_boundary_nodes_rejected_for_derivatives(self):
        s_values, points = self._samples()
        curve = CoordinateCurve.from_samples(s_values, points)
        with pytest.raises(InvalidInputError):
            curve.derivative(s_values[0], 1)

    def test_non_uniform_spacing_rejected(self):
        with pytest.raises(InvalidInputError):
            CoordinateCurve.from_samples(
                [0.0, 0.1, 0.25, 0.3], [(0.0, 0.0, 0.0)] * 4
            )

    def test_length_mismatch_rejected(self):
        with pytest.raises(InvalidInputError):
            CoordinateCurve.from_samples([0.0, 0.1], [(0.0, 0.0, 0.0)])


class TestCsv:
    def _write(self, tmp_path, text):
        path = tmp_path / "curve.csv"
        path.write_text(text, encoding="utf-8")
        return str(path)

    def test_round_trip(self, tmp_path):
        lines = ["s,x,y,z"]
        for i in range(25):
            s = i * 0.05
            x, y, z = _smooth(s)
            lines.append("%.17g,%.17g,%.17g,%.17g" % (s, x, y, z))
        path = self._write(tmp_path, "\n".join(lines) + "\n")
        curve = read_curve_csv(path)
        assert curve.samples is not None
        assert curve.point(0.1) == pytest.approx(_smooth(0.1), abs=1e-15)

    def test_wrong_header_rejected(self, tmp_path):
        path = self._write(tmp_path, "s,x,y,w\n0,0,0,0\n1,1,1,1\n")
        with pytest.raises(InvalidInputError):
            read_curve_csv(path)

    def test_extra_columns_ignored(self, tmp_path):
        # The generate command appends tangent columns; ingestion reads the
        # four position columns and skips the rest.
        text = "s,x,y,z,T1,T2,T3\n" + "".join(
            "%.17g,%.17g,%.17g,%.17g,9,9,9\n" % ((i * 0.05,) + _smooth(i * 0.05))
            for i in range(25)
        )
        path = self._write(tmp_path, text)
        curve = read_curve_csv(path)
        assert curve.point(0.1) == pytest.approx(_smooth(0.1), abs=1e-15)

    def test_ragged_row_rejected(self, tmp_path):
        path = self._write(tmp_path, "s,x,y,z,T1\n0,0,0,0,1\n0.1,0,0,0\n")
        with pytest.raises(InvalidInputError):
            read_curve_csv(path)

    def test_decreasing_s_rejected(self, tmp_path):
        path = self._write(tmp_path, "s,x,y,z\n0,0,0,0\n-1,1,1,1\n")
        with pytest.raises(InvalidInputError):
            read_curve_csv(path)

    def test_missing_file_rejected(self):
        with pytest.raises(InvalidInputError):
            read_curve_csv("/no/such/file.csv")

    def test_malformed_number_rejected(self, tmp_path):
        path = self._write(tmp_path, "s,x,y,z\n0,0,0,0\n0.1,zero,0,0\n")
        with pytest.raises(InvalidInputError):
            read_curve_csv(path)


class TestIntegration:
    def test_reproduces_closed_form_coordinates(self):
        # Integrating the horizontal family's tangent from its own starting
        # point must reproduce the closed-form coordinates.
        curve = make_spacelike_horizontal(branch=1)
        frame = FrameCurve(curve.tangent)
        integrated = integrate_frame_curve(
            frame, curve.point(0.0), (0.0, 1.0), 1e-3
        )
        worst = 0.0
        for i in range(0, 1001, 125):
            s = i * 1e-3
            got = integrated.point(s)
            want = curve.point(s)
            worst = max(worst, max(abs(a - b) for a, b in zip(got, want)))
        assert worst <= 1e-9

    def test_invalid_ranges_rejected(self):
        frame = FrameCurve(lambda s: (1.0, 0.0, 0.0))
        with pytest.raises(InvalidInputError):
            integrate_frame_curve(frame, (0, 0, 0), (1.0, 0.0), 0.1)
        with pytest.raises(InvalidInputError):
            integrate_frame_curve(frame, (0, 0, 0), (0.0, 1.0), -0.1)
        with pytest.raises(InvalidInputError):
            integrate_frame_curve(frame, (0, 0, 0), (0.0, 1.0), 0.3)


class TestCurveInvariants:
    def test_vertical_momentum_is_twice_t3(self):
        curve = make_spacelike_biharmonic(0.5)
        for s in GRID:
            assert vertical_momentum(curve, s) == pytest.approx(
                2.0 * curve.tangent(s)[2], abs=0.0
            )

    def test_horizontality(self):
        horizontal = make_spacelike_horizontal()
        tilted = make_spacelike_biharmonic(0.5)
        assert is_horizontal(horizontal, GRID)
        assert not is_horizontal(tilted, GRID)

    def test_causal_character_of_families(self):
        spacelike = make_spacelike_biharmonic(0.5)
        assert (
            causal_character_of_curve(spacelike, GRID)
            is CausalCharacter.SPACELIKE
        )

    def test_mixed_causality_detected(self):
        # T = (s, 1, 0) has inner(T, T) = s² − 1: spacelike for |s| > 1,
        # timelike inside.
        frame = FrameCurve(lambda s: (s, 1.0, 0.0))
        with pytest.raises(MixedCausalityError):
            causal_character_of_curve(frame, (-2.0, 0.0, 2.0))

    def test_unit_speed_check(self):
        good = make_spacelike_horizontal()
        assert check_unit_speed(good, GRID) <= 1e-12
        bad = FrameCurve(lambda s: (2.0, 0.0, 0.0))
        with pytest.raises(UnitSpeedError):
            check_unit_speed(bad, GRID)


class TestHelixSpec:
    def test_tangent_matches_closed_form(self):
        spec = HelixSpec(0, 1.25, 0.5, 2.0, 0.0, 0.3)
        for s in (-1.0, 0.0, 0.7):
            u = 2.0 * s + 0.3
            want = (1.25 * math.cosh(u), 1.25 * math.sinh(u), 0.5)
            assert spec.tangent(s) == pytest.approx(want, rel=1e-15)

    def test_slope_property_is_hi_word(self):
        spec = HelixSpec(1, 1.0, 0.0, 2.0, 1e-20, 0.0)
        assert spec.slope == 2.0
