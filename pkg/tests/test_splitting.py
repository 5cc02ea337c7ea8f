"""Spectral functions, doublet formulas, and the quantization solver."""
import dataclasses
import math

import numpy as np
import pytest

from tunnelkit import (
    BiasedQuartic,
    DEFAULT_CONSTANTS as C,
    DomainError,
    DoubleOscillator,
    K_FIRST_ORDER,
    OutOfSupportedRange,
    PhysConstants,
    RootNotBracketed,
    action_slope,
    analyze,
    compute_splitting,
    delta_first_order,
    evaluate_action,
    f_of_zeta,
    g_of_zeta,
    gamma_fn,
    gamow_integral,
    level_shifts,
    level_splitting,
    solve_quantization,
)


class TestSpectralFunctions:
    def test_first_order_constant_value(self):
        assert K_FIRST_ORDER == float(np.euler_gamma) - math.log(2.0)
        assert K_FIRST_ORDER == pytest.approx(-0.11593151565841242, abs=0.0)

    def test_gamma_window_against_the_standard_library(self):
        for z in np.linspace(0.25, 2.5, 451):
            assert gamma_fn(float(z)) == pytest.approx(
                math.gamma(float(z)), rel=1e-12
            )

    @pytest.mark.parametrize("z", [0.2, 2.6, -0.1, 5.0])
    def test_gamma_window_is_enforced(self, z):
        with pytest.raises(OutOfSupportedRange):
            gamma_fn(z)

    def test_density_of_states_reference_values(self):
        assert g_of_zeta(0.5) == math.sqrt(2.0 * math.pi) / math.e
        assert g_of_zeta(0.0) == pytest.approx(1.0750476034999201, rel=1e-14)

    def test_density_of_states_dips_at_one_half(self):
        # g falls on [0, 1/2) and rises on (1/2, 1]; its logarithmic slope
        # is ln(zeta + 1/2), which changes sign at zeta = 1/2.
        zs = np.linspace(0.0, 1.0, 201)
        gs = [g_of_zeta(float(z)) for z in zs]
        i_min = int(np.argmin(gs))
        assert abs(zs[i_min] - 0.5) < 0.006
        assert all(b < a for a, b in zip(gs[:100], gs[1:101]))
        assert all(b > a for a, b in zip(gs[100:-1], gs[101:]))

    def test_density_of_states_domain_edge(self):
        with pytest.raises(DomainError):
            g_of_zeta(-0.5)
        with pytest.raises(DomainError):
            g_of_zeta(-0.7)

    def test_matching_function_value_at_zero(self):
        assert f_of_zeta(0.0) == pytest.approx(
            1.0 / math.sqrt(4.0 * math.e * math.pi), abs=2e-16
        )
        assert f_of_zeta(0.0) == pytest.approx(0.17109914015610822, abs=0.0)

    def test_matching_function_log_slope_at_zero(self):
        h = 1e-4
        fd = (math.log(f_of_zeta(h)) - math.log(f_of_zeta(-h))) / (2.0 * h)
        assert fd == pytest.approx(K_FIRST_ORDER, abs=1e-6)

    def test_matching_function_log_slope_converges_with_step(self):
        errs = []
        for h in (1e-3, 1e-4):
            fd = (math.log(f_of_zeta(h)) - math.log(f_of_zeta(-h))) / (2.0 * h)
            errs.append(abs(fd - K_FIRST_ORDER))
        assert errs[1] < errs[0] / 50.0


class TestFirstOrderSplitting:
    def test_reference_arithmetic(self):
        # hbar = 1, omega_L = 1, omega_R = 1.2, zero static bias, so
        # eps = 0.1 from the zero-point mismatch alone; at I = 7 the
        # formula is a product of plain factors.
        spec = DoubleOscillator(1.0, 1.2, 0.0, 8.0)
        a = analyze(spec, C)
        assert a.eps == pytest.approx(0.1, rel=1e-14)
        d = delta_first_order(a, 7.0)
        manual = (
            (math.sqrt(1.2) / math.sqrt(math.e * math.pi))
            * (1.0 + (K_FIRST_ORDER / 4.0) * 0.1 * (0.2 / 1.2))
            * math.exp(-7.0)
        )
        assert d == pytest.approx(manual, rel=1e-14)

    def test_bias_derivative_of_the_log_splitting(self):
        # d(ln Delta)/d(tilde_eps) has two terms: the explicit correction
        # factor and the action moving with the mean level.  Compare the
        # analytic value against a central difference of the full formula.
        spec = DoubleOscillator(1.0, 1.3, 0.05, 9.0)
        a = analyze(spec, C)

        def delta_at(te):
            dialed = dataclasses.replace(
                a,
                tilde_eps=te,
                eps=te + C.hbar * (a.omega_R - a.omega_L) / 2.0,
                E_bar=C.hbar * (a.omega_L + a.omega_R) / 4.0 + te / 2.0,
            )
            return delta_first_order(dialed, gamow_integral(spec, C, dialed.E_bar, dialed))

        h = 1e-4
        fd = (math.log(delta_at(0.05 + h)) - math.log(delta_at(0.05 - h))) / (2 * h)
        slope = action_slope(spec, C, a.E_bar, a)
        analytic = (
            (K_FIRST_ORDER / 4.0)
            * (1.0 / (C.hbar * a.omega_L))
            * ((a.omega_R - a.omega_L) / a.omega_R)
            - slope / 2.0
        )
        assert fd == pytest.approx(analytic, rel=1e-4)

    def test_scaling_all_energies_with_hbar(self):
        # Doubling hbar while doubling the bias and barrier height leaves
        # the action invariant and doubles every energy output.
        spec1 = DoubleOscillator(1.0, 1.3, 0.05, 9.0)
        a1 = analyze(spec1, C)
        act1 = evaluate_action(spec1, C, analysis=a1)
        d1 = delta_first_order(a1, act1.I)

        c2 = PhysConstants(hbar=2.0, mass=1.0)
        spec2 = DoubleOscillator(1.0, 1.3, 0.10, 18.0)
        a2 = analyze(spec2, c2)
        act2 = evaluate_action(spec2, c2, analysis=a2)
        d2 = delta_first_order(a2, act2.I)

        assert act2.I == pytest.approx(act1.I, rel=1e-13)
        assert d2 / d1 == pytest.approx(2.0, rel=1e-13)
        assert level_splitting(a2.eps, d2) == pytest.approx(
            2.0 * level_splitting(a1.eps, d1), rel=1e-13
        )


class TestLevelArithmetic:
    def test_splitting_is_the_euclidean_combination(self):
        assert level_splitting(3.0, 4.0) == 5.0
        assert level_splitting(0.0, -2.5) == 2.5
        assert level_splitting(-1.0, 0.0) == 1.0
        assert level_splitting(1e300, 1e300) == pytest.approx(
            math.sqrt(2.0) * 1e300, rel=1e-15
        )

    def test_shift_formulas_recompute(self):
        spec = DoubleOscillator(1.0, 1.4, 0.1, 8.0)
        a = analyze(spec, C)
        act = evaluate_action(spec, C, analysis=a)
        ls = level_shifts(a, act)
        wl, wr = a.omega_L, a.omega_R
        u = 2.0 * act.I_slope - K_FIRST_ORDER * (wl + wr) / (C.hbar * wl * wr)
        b = C.hbar**2 * wl * wr * math.exp(-2.0 * act.I) * u / (8 * math.pi * math.e)
        root = math.sqrt((a.eps / 2) ** 2 + (ls.delta / 2) ** 2 + b**2)
        assert ls.u == pytest.approx(u, rel=1e-14)
        assert ls.b_prime == pytest.approx(b, rel=1e-14)
        assert ls.dE_plus == pytest.approx(-b - root, rel=1e-14)
        assert ls.dE_minus == pytest.approx(-b + root, rel=1e-14)

    def test_common_shift_is_tiny_and_upward(self):
        spec = DoubleOscillator(1.0, 1.4, 0.1, 8.0)
        a = analyze(spec, C)
        act = evaluate_action(spec, C, analysis=a)
        ls = level_shifts(a, act)
        assert ls.u < 0.0
        assert ls.b_prime < 0.0
        assert ls.dE_plus + ls.dE_minus == pytest.approx(-2 * ls.b_prime, rel=1e-12)
        assert abs(2.0 * ls.b_prime) < 1e-3 * ls.delta

    def test_gap_reduces_to_the_closed_form_when_shift_vanishes(self):
        spec = DoubleOscillator(1.0, 1.4, 0.1, 8.0)
        a = analyze(spec, C)
        act = evaluate_action(spec, C, analysis=a)
        ls = level_shifts(a, act)
        gap = ls.dE_minus - ls.dE_plus
        closed = level_splitting(a.eps, ls.delta)
        assert gap == pytest.approx(closed, rel=1e-6)


class TestSolveQuantization:
    @pytest.mark.parametrize(
        "spec",
        [
            BiasedQuartic(1.0, 2.1),
            BiasedQuartic(0.7, 2.3, 0.3),
            DoubleOscillator(1.0, 1.4, 0.1, 8.0),
            DoubleOscillator(0.9, 1.6, 0.0, 10.0),
        ],
        ids=["quartic", "tilted_quartic", "do_biased", "do_stiff_right"],
    )
    def test_roots_leave_negligible_residual(self, spec):
        a = analyze(spec, C)
        q = solve_quantization(spec, C, analysis=a)
        assert q.E_minus > q.E_plus
        scale = max(abs(q.zeta_L_plus), abs(q.zeta_R_plus), 1e-12)
        assert abs(q.residual_plus) < 1e-10 * scale
        assert abs(q.residual_minus) < 1e-10 * scale

    def test_symmetric_roots_satisfy_the_reduced_condition(self):
        # With eps = 0 each root collapses to zeta = -/+ f(zeta) e^(-I(E)).
        spec = BiasedQuartic(1.0, 2.1)
        a = analyze(spec, C)
        q = solve_quantization(spec, C, analysis=a)
        for e, zl, sign in (
            (q.E_plus, q.zeta_L_plus, -1.0),
            (q.E_minus, q.zeta_L_minus, 1.0),
        ):
            i_e = gamow_integral(spec, C, e, a)
            assert zl == pytest.approx(sign * f_of_zeta(zl) * math.exp(-i_e), rel=1e-8)

    def test_levels_straddle_the_mean(self):
        spec = DoubleOscillator(1.0, 1.4, 0.1, 8.0)
        a = analyze(spec, C)
        q = solve_quantization(spec, C, analysis=a)
        assert q.E_plus < a.E_bar < q.E_minus

    def test_shallow_barrier_cannot_bracket_roots(self):
        with pytest.raises(RootNotBracketed):
            solve_quantization(BiasedQuartic(3.0, 1.0, 0.15), C)


class TestComputeSplitting:
    def test_collects_all_three_routes(self):
        spec = DoubleOscillator(1.0, 1.4, 0.1, 8.0)
        a = analyze(spec, C)
        r = compute_splitting(spec, C, analysis=a)
        act = evaluate_action(spec, C, analysis=a)
        assert r.I_bar == pytest.approx(act.I, rel=1e-14)
        assert r.delta_E == pytest.approx(level_splitting(a.eps, r.delta), rel=1e-14)
        assert r.E_minus - r.E_plus == pytest.approx(r.delta_E_quadratic, rel=1e-12)
        assert r.delta_E_transcendental == pytest.approx(
            r.E_trans_minus - r.E_trans_plus, rel=1e-12
        )
        assert r.delta_E_transcendental == pytest.approx(r.delta_E, rel=1e-4)

    def test_solve_flag_off_leaves_transcendental_fields_empty(self):
        spec = BiasedQuartic(3.0, 1.0, 0.15)
        r = compute_splitting(spec, C, solve=False)
        assert math.isnan(r.E_trans_plus)
        assert math.isnan(r.delta_E_transcendental)
        assert r.delta_E > 0.0
