#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "passim/constants.hpp"
#include "passim/random.hpp"
#include "passim/system_model.hpp"
#include "passim/units.hpp"

using namespace passim;

namespace {
bool close_rel(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}
} // namespace

TEST_CASE("dbm conversions")
{
    CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3).epsilon(1e-12));
    // -174 + 10 log10(1e6) = -114 dBm
    CHECK(dbm_to_watts(-114.0) == doctest::Approx(3.9810717055349695e-15).epsilon(1e-12));
    CHECK(dbm_to_watts(watts_to_dbm(0.25)) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(watts_to_dbm(1.0) == doctest::Approx(30.0).epsilon(1e-12));

    CHECK_THROWS_AS(watts_to_dbm(0.0), std::domain_error);
    CHECK_THROWS_AS(watts_to_dbm(-1.0), std::domain_error);

    // round trips stay exact to 1e-12 relative over a wide range
    RandomSource rng(11, 0);
    for (int i = 0; i < 200; ++i) {
        const double dbm = rng.uniform(-150.0, 60.0);
        CHECK(close_rel(watts_to_dbm(dbm_to_watts(dbm)), dbm, 1e-12));
    }
}

TEST_CASE("make_params populates derived quantities")
{
    const SystemParams p = make_params(2.4e9, 1e6, 30.0, 2);

    CHECK(p.wavelength == doctest::Approx(0.12491352416666666).epsilon(1e-14));
    CHECK(p.noise_power == doctest::Approx(3.9810717055349695e-15).epsilon(1e-12));
    CHECK(p.gamma == doctest::Approx(24819852394.471516).epsilon(1e-12));
    CHECK(p.tx_power == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.num_users == 2);

    // invariants
    CHECK(close_rel(p.wavelength * p.carrier_frequency, speed_of_light, 1e-12));
    const double amp = speed_of_light / (4.0 * pi * p.carrier_frequency);
    CHECK(close_rel(p.gamma * p.noise_power, amp * amp, 1e-12));

    CHECK_THROWS_AS(make_params(0.0, 1e6, 30.0, 2), std::domain_error);
    CHECK_THROWS_AS(make_params(2.4e9, 0.0, 30.0, 2), std::domain_error);
    CHECK_THROWS_AS(make_params(2.4e9, 1e6, 30.0, 0), std::domain_error);
}

TEST_CASE("RandomSource is a portable PCG32")
{
    // Reference outputs of PCG32 XSH-RR with seed 42, stream 54.
    RandomSource rng(42, 54);
    CHECK(rng.next_u32() == 0xa15c02b7u);
    CHECK(rng.next_u32() == 0x7b47f409u);
    CHECK(rng.next_u32() == 0xba1d3330u);
    CHECK(rng.next_u32() == 0x83d2f293u);

    RandomSource rng2(42, 54);
    CHECK(rng2.uniform01() == doctest::Approx(0.6303102205231708).epsilon(1e-15));
    CHECK(rng2.uniform01() == doctest::Approx(0.7270080560154601).epsilon(1e-15));

    // identical (seed, stream) => identical sequence; different stream differs
    RandomSource a(123, 9);
    RandomSource b(123, 9);
    RandomSource c(123, 10);
    bool all_equal = true;
    bool any_diff = false;
    for (int i = 0; i < 64; ++i) {
        const auto va = a.next_u32();
        all_equal = all_equal && (va == b.next_u32());
        any_diff = any_diff || (va != c.next_u32());
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("sample_user support and moments")
{
    const RoomGeometry room{10.0, 20.0};
    RandomSource rng(7, 1);

    double sum_x = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) {
        const UserPosition u = sample_user(rng, room);
        REQUIRE(u.x >= 0.0);
        REQUIRE(u.x <= 10.0);
        REQUIRE(u.y >= 0.0);
        REQUIRE(u.y <= 10.0);
        sum_x += u.x;
    }
    // 3 sigma band around D/2 for the sample mean of uniform(0, D)
    const double tol = 3.0 * 10.0 / std::sqrt(12.0 * n);
    CHECK(std::abs(sum_x / n - 5.0) < tol);
}

TEST_CASE("sampled x passes a Kolmogorov-Smirnov test against uniform")
{
    const RoomGeometry room{10.0, 20.0};
    RandomSource rng(2024, 3);
    const int n = 100000;
    std::vector<double> xs;
    xs.reserve(n);
    for (int i = 0; i < n; ++i)
        xs.push_back(sample_user(rng, room).x);
    std::sort(xs.begin(), xs.end());

    double d_stat = 0.0;
    for (int i = 0; i < n; ++i) {
        const double f = xs[static_cast<std::size_t>(i)] / 10.0;
        d_stat = std::max(d_stat, std::abs(f - static_cast<double>(i) / n));
        d_stat = std::max(d_stat, std::abs(static_cast<double>(i + 1) / n - f));
    }
    // 1% critical value, asymptotic: 1.6276 / sqrt(n)
    CHECK(d_stat < 1.6276 / std::sqrt(static_cast<double>(n)));
}
