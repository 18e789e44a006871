import numpy as np
import pytest

from stripcoef.logcoef import (
    LogCoeffVector,
    SchwarzSpec,
    extremal_dorff,
    extremal_strip,
    generate_member,
    koebe_rotation,
    log_coefficients,
    random_dorff_param,
    random_schwarz_spec,
    random_strip_params,
)
from stripcoef.maps import (
    DorffParam,
    StripParams,
    b_strip_coeff,
    b_tilde_coeff,
    p_hat_coeff,
    p_strip_series,
)
from stripcoef.series import TruncatedSeries, compose_schwarz

PI = np.pi
HALF = StripParams(0.5, 1.5)
RIGHT = DorffParam(PI / 2.0)


class TestLogCoeffVector:
    def test_order_and_indexing(self):
        v = LogCoeffVector([1.0, 0.5j, 0.25])
        assert v.order == 3
        assert v.gamma(2) == 0.5j
        with pytest.raises(IndexError):
            v.gamma(0)
        with pytest.raises(IndexError):
            v.gamma(4)

    def test_rejects_negative_tail(self):
        with pytest.raises(ValueError):
            LogCoeffVector([1.0], tail_constant=-1.0)


class TestLogCoefficients:
    def test_identity_function_has_zero_gammas(self):
        v = log_coefficients(TruncatedSeries.identity(16))
        assert np.allclose(v.gammas, 0.0)
        assert v.tail_constant == 0.0

    def test_koebe_gammas(self):
        f, _ = koebe_rotation(1.0, 64)
        v = log_coefficients(f)
        n = np.arange(1, v.order + 1)
        assert np.max(np.abs(v.gammas - 1.0 / n)) < 1e-12

    def test_gamma2_from_initial_coefficients(self):
        a2, a3 = 0.4 - 0.2j, -0.1 + 0.3j
        v = log_coefficients(TruncatedSeries([0, 1, a2, a3]))
        assert abs(v.gamma(1) - a2 / 2.0) < 1e-15
        assert abs(v.gamma(2) - 0.5 * (a3 - a2 * a2 / 2.0)) < 1e-14


class TestExtremalStrip:
    def test_symmetric_strip_gammas(self):
        _, v = extremal_strip(HALF, 64)
        assert abs(v.gamma(1) - 1j / PI) < 1e-15
        assert v.gamma(2) == 0.0
        assert abs(v.gamma(3) - 1j / (9.0 * PI)) < 1e-15

    def test_series_and_closed_form_agree(self):
        rng = np.random.default_rng(31)
        for _ in range(5):
            p = random_strip_params(rng)
            f, v = extremal_strip(p, 256)
            extracted = log_coefficients(f)
            err = np.max(np.abs(extracted.gammas[:128] - v.gammas[:128]))
            assert err < 1e-10

    def test_log_derivative_reproduces_map_coefficients(self):
        # z f'/f of the extremal equals the strip map, order by order
        f, _ = extremal_strip(HALF, 128)
        ell = log_coefficients(f)
        n = np.arange(1, 65)
        got = 2.0 * n * ell.gammas[:64]
        assert np.max(np.abs(got - b_strip_coeff(HALF, n))) < 1e-12

    def test_gamma_square_sum_symmetric_strip(self):
        _, v = extremal_strip(HALF, 2048)
        total = float(np.sum(np.abs(v.gammas) ** 2))
        assert abs(total - PI**2 / 96.0) < 1e-7

    def test_tail_constant_bounds_stored_gammas(self):
        rng = np.random.default_rng(37)
        for _ in range(5):
            p = random_strip_params(rng)
            _, v = extremal_strip(p, 128)
            n = np.arange(1, 129)
            assert np.all(np.abs(v.gammas) <= v.tail_constant / n**2 + 1e-15)


class TestExtremalDorff:
    def test_right_angle_gammas(self):
        _, v = extremal_dorff(RIGHT, 64)
        assert abs(v.gamma(1) - 0.5) < 1e-15
        assert abs(v.gamma(2)) < 1e-15
        assert abs(v.gamma(3) - (-1.0 / 18.0)) < 1e-15

    def test_series_and_closed_form_agree(self):
        rng = np.random.default_rng(41)
        for _ in range(5):
            d = random_dorff_param(rng)
            f, v = extremal_dorff(d, 256)
            extracted = log_coefficients(f)
            err = np.max(np.abs(extracted.gammas[:128] - v.gammas[:128]))
            assert err < 1e-10

    def test_per_n_cap(self):
        rng = np.random.default_rng(43)
        for _ in range(10):
            d = random_dorff_param(rng)
            _, v = extremal_dorff(d, 128)
            n = np.arange(1, 129)
            assert np.all(np.abs(v.gammas) <= 0.5 / n + 1e-15)

    def test_gamma_square_sum_right_angle(self):
        _, v = extremal_dorff(RIGHT, 2048)
        total = float(np.sum(np.abs(v.gammas) ** 2))
        assert abs(total - PI**4 / 384.0) < 1e-7


class TestKoebe:
    def test_expansion_start(self):
        f, v = koebe_rotation(1.0, 8)
        assert np.allclose(f.coeffs[:4], [0, 1, 2, 3])
        assert np.allclose(v.gammas[:3], [1.0, 0.5, 1.0 / 3.0])

    def test_rotated_gamma(self):
        _, v = koebe_rotation(-1.0, 8)
        assert v.gamma(2) == 0.5

    def test_square_sum_approaches_classical_constant(self):
        _, v = koebe_rotation(1.0, 4096)
        total = float(np.sum(np.abs(v.gammas) ** 2))
        # gamma_n = 1/n: the partial sum sits ~1/N below pi^2/6
        assert total < PI**2 / 6.0
        assert PI**2 / 6.0 - total < 1.0 / 4096.0 + 1e-6

    def test_rejects_non_unimodular(self):
        with pytest.raises(ValueError):
            koebe_rotation(0.5, 8)


class TestSchwarzSpec:
    def test_families_are_schwarz(self):
        specs = [
            SchwarzSpec.scaled_rotation(0.7j),
            SchwarzSpec.power(0.9, 3),
            SchwarzSpec.blaschke(0.5 - 0.2j, 1.3),
        ]
        for spec in specs:
            assert spec.series(64).is_schwarz()

    def test_blaschke_series_matches_pointwise(self):
        a, phi = 0.4 + 0.3j, 0.7
        spec = SchwarzSpec.blaschke(a, phi)
        s = spec.series(256)
        rng = np.random.default_rng(47)
        for _ in range(10):
            z = 0.5 * np.sqrt(rng.uniform()) * np.exp(2j * PI * rng.uniform())
            exact = np.exp(1j * phi) * z * (z + a) / (1.0 + np.conj(a) * z)
            assert abs(s.evaluate(z) - exact) < 1e-12

    def test_validation(self):
        with pytest.raises(ValueError):
            SchwarzSpec.scaled_rotation(1.5)
        with pytest.raises(ValueError):
            SchwarzSpec.power(0.5, 0)
        with pytest.raises(ValueError):
            SchwarzSpec.blaschke(1.0)
        with pytest.raises(ValueError):
            SchwarzSpec("unknown-kind")


class TestGenerateMember:
    def test_identity_reproduces_extremal_strip(self):
        f, _ = extremal_strip(HALF, 128)
        g = generate_member(HALF, SchwarzSpec.identity(), 128)
        assert np.max(np.abs(f.coeffs - g.coeffs)) < 1e-12

    def test_identity_reproduces_extremal_dorff(self):
        d = DorffParam(2.0)
        f, _ = extremal_dorff(d, 128)
        g = generate_member(d, SchwarzSpec.identity(), 128)
        assert np.max(np.abs(f.coeffs - g.coeffs)) < 1e-12

    def test_zero_inner_function_gives_identity_map(self):
        g = generate_member(HALF, SchwarzSpec.scaled_rotation(0.0), 64)
        assert np.array_equal(g.coeffs, TruncatedSeries.identity(64).coeffs)

    def test_matches_generic_composition_route(self):
        # independent route: compose the target map series with omega,
        # then integrate and exponentiate by the series engine
        from stripcoef.series import series_exp

        order = 64
        rng = np.random.default_rng(53)
        for _ in range(5):
            p = random_strip_params(rng)
            spec = random_schwarz_spec(rng)
            q = compose_schwarz(p_strip_series(p, order), spec.series(order))
            q_minus_1 = TruncatedSeries(
                np.concatenate([[0.0], q.coeffs[1:]])
            ).integrate_over_t()
            expected = series_exp(q_minus_1).shift(1).truncate(order)
            got = generate_member(p, spec, order)
            assert np.max(np.abs(got.coeffs - expected.coeffs[: order + 1])) < 1e-10

    def test_power_member_rogosinski_partial_sums(self):
        g = generate_member(HALF, SchwarzSpec.power(1.0, 2), 256)
        gam = log_coefficients(g.truncate(65)).gammas
        n = np.arange(1, 65)
        sub = np.cumsum(np.abs(2.0 * gam[:64]) ** 2)
        dom = np.cumsum(np.abs(p_hat_coeff(HALF, n)) ** 2)
        assert np.all(sub <= dom + 1e-12)

    def test_member_gammas_respect_per_n_bounds(self):
        rng = np.random.default_rng(59)
        for _ in range(10):
            p = random_strip_params(rng)
            spec = random_schwarz_spec(rng)
            g = generate_member(p, spec, 256)
            gam = log_coefficients(g.truncate(129)).gammas
            n = np.arange(1, 129)
            cap = (p.width / (n * PI)) * abs(np.sin(PI * p.mu))
            assert np.all(np.abs(gam) <= cap + 1e-12)

    def test_dorff_member_gammas_respect_half_over_n(self):
        rng = np.random.default_rng(61)
        for _ in range(10):
            d = random_dorff_param(rng)
            spec = random_schwarz_spec(rng)
            g = generate_member(d, spec, 256)
            gam = log_coefficients(g.truncate(129)).gammas
            n = np.arange(1, 129)
            assert np.all(np.abs(gam) <= 0.5 / n + 1e-12)

    def test_dorff_rogosinski_against_integrated_map(self):
        rng = np.random.default_rng(67)
        d = random_dorff_param(rng)
        spec = SchwarzSpec.blaschke(0.3 + 0.4j, 2.0)
        g = generate_member(d, spec, 256)
        gam = log_coefficients(g.truncate(65)).gammas
        n = np.arange(1, 65)
        sub = np.cumsum(np.abs(2.0 * gam[:64]) ** 2)
        dom = np.cumsum(np.abs(b_tilde_coeff(d, n)) ** 2)
        assert np.all(sub <= dom + 1e-12)


class TestRandomDraws:
    def test_draws_are_reproducible(self):
        a = random_schwarz_spec(np.random.default_rng(5))
        b = random_schwarz_spec(np.random.default_rng(5))
        assert a == b

    def test_draw_ranges(self):
        rng = np.random.default_rng(71)
        for _ in range(100):
            p = random_strip_params(rng)
            assert -2.0 <= p.alpha <= 0.9
            assert 1.1 <= p.beta <= 4.0
            d = random_dorff_param(rng)
            assert PI / 2.0 <= d.delta <= PI - 1e-3
