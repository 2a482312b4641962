#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "passim/analytic_rates.hpp"
#include "passim/constants.hpp"
#include "passim/random.hpp"
#include "passim/units.hpp"

using namespace passim;

namespace {

SystemParams params_at(double power_dbm, int users = 2)
{
    return make_params(2.4e9, 1e6, power_dbm, users);
}

SystemParams params_lambda_125(double power_dbm = 30.0)
{
    return make_params(speed_of_light / 0.125, 1e6, power_dbm, 2);
}

const RoomGeometry kRoom{10.0, 20.0};

} // namespace

TEST_CASE("lemma2_amplitude")
{
    const SystemParams p = params_lambda_125();
    CHECK(lemma2_amplitude(7.3, p, 0) == 0.0);

    // 16 asinh(0.0625)
    const double closed = lemma2_amplitude(20.0, p, 10);
    CHECK(closed == doctest::Approx(0.999350100088645).epsilon(1e-12));

    // oracle: direct inverse-distance sum over the uniform far-zone grid
    double direct = 0.0;
    for (int n = -10; n <= 10; ++n)
        direct += 1.0 / std::sqrt(400.0 + n * n * 0.125 * 0.125);
    CHECK(direct == doctest::Approx(1.0492494927664662).epsilon(1e-12));
    // the integral form drops about one of the 2N+1 terms
    CHECK(closed / direct == doctest::Approx(20.0 / 21.0).epsilon(1e-3));

    double prev = 0.0;
    for (int n = 1; n <= 30; ++n) {
        const double v = lemma2_amplitude(20.0, p, n);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("closed-form ergodic rate (shared kernel)")
{
    SUBCASE("zero power is exactly zero")
    {
        const SystemParams p0 = params_at(30.0);
        SystemParams p = p0;
        p.tx_power = 0.0;
        CHECK(ergodic_rate_closed_form(p, kRoom, 20.0) == 0.0);
        CHECK(rate_spsu(p, kRoom) == 0.0);
    }

    SUBCASE("reference values at 30 dBm")
    {
        const SystemParams p = params_at(30.0);
        CHECK(rate_mpsu(p, kRoom, 10) == doctest::Approx(15.048350476456088).epsilon(1e-12));
        CHECK(rate_spsu(p, kRoom) == doctest::Approx(12.88738644097681).epsilon(1e-12));
        const double diff = rate_mpsu(p, kRoom, 10) - rate_spsu(p, kRoom);
        CHECK(diff == doctest::Approx(2.160964035479278).epsilon(1e-9));
        CHECK(diff == doctest::Approx(0.5 * std::log2(20.0)).epsilon(1e-6));
    }

    SUBCASE("structural identities")
    {
        const SystemParams p = params_at(17.0);
        CHECK(rate_spsu(p, kRoom) == ergodic_rate_closed_form(p, kRoom, 1.0));
        CHECK(rate_mpsu(p, kRoom, 0) == rate_spsu(p, kRoom));
    }

    SUBCASE("Monte Carlo oracle for the y-average")
    {
        // Theorem value == E_y (1/I) log2(1 + 2N gamma P / (y^2 + h^2)),
        // estimated directly from the defining kernel.
        const SystemParams p = params_at(30.0);
        const double g = 20.0;
        RandomSource rng(5150, 0);
        const int n = 1000000;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double y = rng.uniform(0.0, kRoom.extent);
            sum += 0.5 * std::log2(1.0 + g * p.gamma * p.tx_power /
                                             (y * y + kRoom.height * kRoom.height));
        }
        CHECK(std::abs(sum / n - rate_mpsu(p, kRoom, 10)) < 0.01);
    }

    SUBCASE("monotone in power and gain")
    {
        double prev = -1.0;
        for (double dbm : {0.0, 10.0, 20.0, 30.0, 40.0}) {
            const double v = rate_spsu(params_at(dbm), kRoom);
            CHECK(v > prev);
            prev = v;
        }
        const SystemParams p = params_at(20.0);
        CHECK(rate_mpsu(p, kRoom, 2) > rate_mpsu(p, kRoom, 1));
        CHECK(ergodic_rate_closed_form(p, kRoom, 8.0) > ergodic_rate_closed_form(p, kRoom, 7.0));
    }
}

TEST_CASE("high-SNR approximation")
{
    const SystemParams p = params_at(30.0);

    SUBCASE("constant tail")
    {
        const double log_term = 0.5 * std::log2(1.0 + p.gamma * p.tx_power / 500.0);
        CHECK(rate_highsnr(p, kRoom, 1.0) - log_term ==
              doctest::Approx(0.10489082843798725).epsilon(1e-9));
    }

    SUBCASE("remainder bound on a (D, h, P) grid")
    {
        constexpr double ln2 = 0.6931471805599453;
        for (double dbm : {10.0, 30.0, 50.0})
            for (double h : {5.0, 20.0})
                for (double D : {2.0, 10.0}) {
                    const SystemParams pp = params_at(dbm);
                    const RoomGeometry room{D, h};
                    for (double g : {1.0, 20.0}) {
                        const double gp = g * pp.gamma * pp.tx_power;
                        const double bound =
                            2.0 * D * D / (3.0 * pp.num_users * ln2 * (h * h + gp));
                        CHECK(std::abs(rate_highsnr(pp, room, g) -
                                       ergodic_rate_closed_form(pp, room, g)) <=
                              bound * (1.0 + 1e-9) + 1e-12);
                    }
                }
    }

    SUBCASE("agreement at high power")
    {
        CHECK(std::abs(rate_highsnr(p, kRoom, 20.0) - rate_mpsu(p, kRoom, 10)) < 1e-6);
    }
}

TEST_CASE("Maclaurin series form")
{
    for (double dbm : {0.0, 10.0, 20.0, 30.0}) {
        const SystemParams p = params_at(dbm);
        CHECK(std::abs(rate_spsu_maclaurin(p, kRoom) - rate_spsu(p, kRoom)) < 1e-6);
    }

    SystemParams p0 = params_at(30.0);
    p0.tx_power = 0.0;
    CHECK(rate_spsu_maclaurin(p0, kRoom) == 0.0);

    const SystemParams p = params_at(30.0);
    CHECK_THROWS_AS(rate_spsu_maclaurin(p, RoomGeometry{10.0, 5.0}), std::domain_error);
    CHECK_THROWS_AS(rate_spsu_maclaurin(p, RoomGeometry{10.0, 10.0}), std::domain_error);
    CHECK_NOTHROW(rate_spsu_maclaurin(p, RoomGeometry{10.0, 11.0}));

    // h >= 1.1 D keeps the series within 1e-6 of the closed form
    for (double D : {2.0, 5.0, 10.0}) {
        const RoomGeometry room{D, 1.1 * D};
        CHECK(std::abs(rate_spsu_maclaurin(p, room) - rate_spsu(p, room)) < 1e-6);
    }
}

TEST_CASE("SPMU quadrature and approximation")
{
    SUBCASE("zero power")
    {
        SystemParams p = params_at(30.0);
        p.tx_power = 0.0;
        CHECK(rate_spmu_quadrature(p, kRoom) == 0.0);
        CHECK(rate_spmu_approx(p, kRoom) >= 0.0); // clamped, never negative
    }

    SUBCASE("reference values at 30 dBm")
    {
        const SystemParams p = params_at(30.0);
        CHECK(rate_spmu_quadrature(p, kRoom) ==
              doctest::Approx(12.873687785639385).epsilon(5e-8));
        CHECK(rate_spmu_approx(p, kRoom) ==
              doctest::Approx(12.73704475233099).epsilon(1e-12));
    }

    SUBCASE("approximation tracks the exact integral within 0.2 bits/s/Hz")
    {
        for (double dbm = 0.0; dbm <= 30.0; dbm += 5.0) {
            const SystemParams p = params_at(dbm);
            CHECK(std::abs(rate_spmu_approx(p, kRoom) - rate_spmu_quadrature(p, kRoom)) < 0.2);
        }
    }

    SUBCASE("dedicated PA beats the shared center PA")
    {
        for (double dbm : {10.0, 30.0}) {
            const SystemParams p = params_at(dbm);
            CHECK(rate_spmu_quadrature(p, kRoom) < rate_spsu(p, kRoom));
        }
    }
}

TEST_CASE("high-SNR slope")
{
    const SystemParams p2 = params_at(30.0, 2);
    for (ScenarioKind k : {ScenarioKind::mpsu, ScenarioKind::spsu, ScenarioKind::spmu,
                           ScenarioKind::siso})
        CHECK(highsnr_slope(k, p2) == 0.5);
    CHECK(highsnr_slope(ScenarioKind::spsu, params_at(30.0, 1)) == 1.0);

    // finite-difference slope (R(4P) - R(P)) / log2(4) at 60 dBm
    const SystemParams pa = params_at(60.0);
    const SystemParams pb = params_at(60.0 + 10.0 * std::log10(4.0));
    const double slope_mpsu = (rate_mpsu(pb, kRoom, 10) - rate_mpsu(pa, kRoom, 10)) / 2.0;
    const double slope_spsu = (rate_spsu(pb, kRoom) - rate_spsu(pa, kRoom)) / 2.0;
    const double slope_spmu =
        (rate_spmu_quadrature(pb, kRoom) - rate_spmu_quadrature(pa, kRoom)) / 2.0;
    CHECK(std::abs(slope_mpsu - 0.5) < 0.005);
    CHECK(std::abs(slope_spsu - 0.5) < 0.005);
    CHECK(std::abs(slope_spmu - 0.5) < 0.005);
}

TEST_CASE("MPSU-SPSU sum-rate gap")
{
    SystemParams p0 = params_at(30.0);
    p0.tx_power = 0.0;
    CHECK(scenario_gap_mpsu_spsu(p0, kRoom, 10) == 0.0);

    const SystemParams p = params_at(30.0);
    CHECK(scenario_gap_mpsu_spsu(p, kRoom, 10) ==
          doctest::Approx(4.321928067277202).epsilon(1e-12));

    const SystemParams p60 = params_at(60.0);
    for (int n : {5, 10, 20})
        CHECK(std::abs(scenario_gap_mpsu_spsu(p60, kRoom, n) - std::log2(2.0 * n)) < 0.05);

    // arctan tails cancel between the two high-SNR expressions
    for (double dbm : {10.0, 30.0, 60.0}) {
        const SystemParams pp = params_at(dbm);
        const double via_highsnr =
            pp.num_users * (rate_highsnr(pp, kRoom, 20.0) - rate_highsnr(pp, kRoom, 1.0));
        CHECK(scenario_gap_mpsu_spsu(pp, kRoom, 10) ==
              doctest::Approx(via_highsnr).epsilon(1e-9));
    }

    CHECK_THROWS_AS(scenario_gap_mpsu_spsu(p, kRoom, 0), std::domain_error);
}
