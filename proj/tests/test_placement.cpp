#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "passim/constants.hpp"
#include "passim/placement.hpp"
#include "passim/random.hpp"

using namespace passim;

namespace {

SystemParams params_lambda_125()
{
    return make_params(speed_of_light / 0.125, 1e6, 30.0, 2);
}

double coherence_residual(double offset, double d0, int n, double lambda)
{
    return std::sqrt(offset * offset + d0 * d0) + offset - d0 - n * lambda;
}

// High-SNR two-user sum-rate objective (constant terms dropped).
double sum_rate_objective(double x, const UserPosition& u1, const UserPosition& u2, double h)
{
    const double a1 = (x - u1.x) * (x - u1.x) + u1.y * u1.y + h * h;
    const double a2 = (x - u2.x) * (x - u2.x) + u2.y * u2.y + h * h;
    return -0.5 * std::log2(a1) - 0.5 * std::log2(a2);
}

} // namespace

TEST_CASE("lemma1_positions values")
{
    const SystemParams p = params_lambda_125();

    for (double d0 : {2.0, 5.0, 40.0})
        CHECK(lemma1_positions(d0, p, 0)[0] == 0.0);

    const auto offs = lemma1_positions(5.0, p, 1);
    CHECK(offs[2] == doctest::Approx(0.12347560975609756).epsilon(1e-14));
    CHECK(offs[0] == doctest::Approx(-0.1266025641025641).epsilon(1e-14));
    CHECK(std::abs(coherence_residual(offs[2], 5.0, 1, 0.125)) < 1e-12);
    CHECK(std::abs(coherence_residual(offs[0], 5.0, -1, 0.125)) < 1e-12);

    // boundary of the validity condition: 40 * 0.125 = 5 exactly
    CHECK_THROWS_AS(lemma1_positions(5.0, p, 40), std::domain_error);
    CHECK_NOTHROW(lemma1_positions(5.0, p, 39));
    CHECK_THROWS_WITH_AS(lemma1_positions(1.0, p, 10),
                         doctest::Contains("d0 > N*lambda"), std::domain_error);
}

TEST_CASE("lemma1 coherence over random parameters")
{
    const SystemParams p = params_lambda_125();
    const double lambda = p.wavelength;
    RandomSource rng(314, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n_half = 1 + static_cast<int>(rng.uniform01() * 40.0);
        const double lo = n_half * lambda * 1.001;
        const double d0 = rng.uniform(lo, lo + 45.0);
        const auto offs = lemma1_positions(d0, p, n_half);
        for (int n = -n_half; n <= n_half; ++n) {
            const double r =
                coherence_residual(offs[static_cast<std::size_t>(n + n_half)], d0, n, lambda);
            REQUIRE(std::abs(r) < 1e-9 * lambda);
        }
        // asymmetry: the near-array element sits farther out than its mirror
        for (int n = 1; n <= n_half; ++n)
            REQUIRE(offs[static_cast<std::size_t>(n + n_half)] +
                        offs[static_cast<std::size_t>(n_half - n)] <
                    0.0);
    }
}

TEST_CASE("fz_positions")
{
    const SystemParams p = params_lambda_125();
    const auto offs = fz_positions(p, 4);
    CHECK(offs[8] == doctest::Approx(0.5).epsilon(1e-15));
    for (int n = 0; n <= 4; ++n)
        CHECK(offs[static_cast<std::size_t>(4 - n)] ==
              doctest::Approx(-offs[static_cast<std::size_t>(4 + n)]).epsilon(1e-15));

    // far away, the coherent offsets converge to the uniform grid
    const auto exact = lemma1_positions(100.0, p, 10);
    const auto fz = fz_positions(p, 10);
    double max_diff = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i)
        max_diff = std::max(max_diff, std::abs(exact[i] - fz[i]));
    // worst at n = -N: N^2 lambda^2 / (2 (d0 - N lambda)) = 0.0079114
    CHECK(max_diff < 0.008);
    CHECK(max_diff > 0.007);
}

TEST_CASE("spacing_profile")
{
    const SystemParams p = params_lambda_125();
    const double lambda = p.wavelength;

    SUBCASE("near-zone spacings decrease and stay above lambda/2")
    {
        const auto profile = spacing_profile(lemma1_positions(5.0, p, 10));
        REQUIRE(profile.size() == 20);
        CHECK(profile.front().index == -10);
        CHECK(profile.back().index == 9);
        for (std::size_t i = 0; i < profile.size(); ++i) {
            CHECK(profile[i].spacing > lambda / 2.0);
            if (i > 0)
                CHECK(profile[i].spacing < profile[i - 1].spacing);
        }
    }

    SUBCASE("pair-sum identity")
    {
        const double d0 = 5.0;
        const auto offs = lemma1_positions(d0, p, 10);
        for (int n = 1; n <= 10; ++n) {
            const double lhs = offs[static_cast<std::size_t>(10 + n)] +
                               offs[static_cast<std::size_t>(10 - n)];
            const double nl2 = n * n * lambda * lambda;
            const double rhs = -nl2 * d0 / (d0 * d0 - nl2);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(rhs));
        }
    }

    SUBCASE("uniform grid has constant spacing")
    {
        for (const auto& e : spacing_profile(fz_positions(p, 6)))
            CHECK(e.spacing == doctest::Approx(lambda).epsilon(1e-15));
    }

    SUBCASE("far-zone spacings stay within 12% of lambda")
    {
        RandomSource rng(99, 0);
        for (int trial = 0; trial < 100; ++trial) {
            const int n_half = 1 + static_cast<int>(rng.uniform01() * 40.0);
            const double d0 = 10.0 * n_half * lambda * rng.uniform(1.0, 6.0);
            for (const auto& e : spacing_profile(lemma1_positions(d0, p, n_half)))
                REQUIRE(std::abs(e.spacing / lambda - 1.0) <= 0.12);
        }
    }

    CHECK_THROWS_AS(spacing_profile({0.3, 0.1, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(spacing_profile({0.1}), std::invalid_argument);
}

TEST_CASE("spmu_center_position")
{
    CHECK(spmu_center_position({10.0, 20.0}) == 5.0);
    CHECK(spmu_center_position({2.0, 20.0}) == 1.0);
    CHECK(spmu_center_position({0.5, 20.0}) == 0.25);
}

TEST_CASE("optimal_spmu_position")
{
    SUBCASE("equal y coordinates give the midpoint")
    {
        for (double h : {1.0, 3.0, 20.0}) {
            const RoomGeometry room{10.0, h};
            CHECK(std::abs(optimal_spmu_position({2.0, 3.0}, {8.0, 3.0}, room) - 5.0) < 1e-9);
        }
    }

    SUBCASE("degenerate interval")
    {
        const RoomGeometry room{10.0, 20.0};
        CHECK(optimal_spmu_position({4.0, 1.0}, {4.0, 7.0}, room) == 4.0);
    }

    SUBCASE("user order does not matter")
    {
        const RoomGeometry room{10.0, 5.0};
        const double a = optimal_spmu_position({1.0, 2.0}, {9.0, 6.0}, room);
        const double b = optimal_spmu_position({9.0, 6.0}, {1.0, 2.0}, room);
        CHECK(a == doctest::Approx(b).epsilon(1e-14));
    }

    SUBCASE("asymmetric case: stationary and globally optimal")
    {
        const RoomGeometry room{10.0, 3.0};
        const UserPosition u1{0.0, 1.0};
        const UserPosition u2{8.0, 6.0};
        const double x = optimal_spmu_position(u1, u2, room);
        CHECK(x == doctest::Approx(0.7897916033375211).epsilon(1e-9));
        CHECK(x < 4.0); // closer to the user with the smaller lateral distance

        const double h2 = room.height * room.height;
        const double t1 = x - u1.x;
        const double t2 = u2.x - x;
        const double residual = t1 / (t1 * t1 + u1.y * u1.y + h2) -
                                t2 / (t2 * t2 + u2.y * u2.y + h2);
        CHECK(std::abs(residual) < 1e-9);

        // dense 1e-4 grid scan of the sum-rate objective
        double best = -1e300;
        double best_x = u1.x;
        for (double xx = u1.x; xx <= u2.x; xx += 1e-4) {
            const double v = sum_rate_objective(xx, u1, u2, room.height);
            if (v > best) {
                best = v;
                best_x = xx;
            }
        }
        CHECK(std::abs(best_x - x) < 2e-4);
        CHECK(sum_rate_objective(x, u1, u2, room.height) >= best - 1e-6);
    }
}

TEST_CASE("count_outside_waveguide reports, never clamps")
{
    const SystemParams p = params_lambda_125();
    const RoomGeometry room{10.0, 20.0};
    const auto offs = lemma1_positions(5.0, p, 10);
    CHECK(count_outside_waveguide(5.0, offs, room) == 0);
    CHECK(count_outside_waveguide(0.5, offs, room) > 0);  // near array leaves the room
    CHECK(count_outside_waveguide(-5.0, offs, room) == static_cast<int>(offs.size()));
}

TEST_CASE("make_array validates")
{
    CHECK_NOTHROW(make_array(1.0, {-0.2, 0.0, 0.2}));
    CHECK_THROWS_AS(make_array(1.0, {-0.2, 0.0}), std::invalid_argument);
}
