#include <doctest.h>

#include <cmath>

#include "passim/quadrature.hpp"
#include "passim/roots.hpp"

using namespace passim;

TEST_CASE("adaptive Simpson on known integrals")
{
    CHECK(integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, 3.14159265358979323846) ==
          doctest::Approx(2.0).epsilon(1e-8));
    CHECK(integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-10));
    CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
    // a sharper integrand still converges: int_0^1 1/sqrt(x + 1e-4)
    const double sharp = integrate_adaptive(
        [](double x) { return 1.0 / std::sqrt(x + 1e-4); }, 0.0, 1.0);
    CHECK(sharp == doctest::Approx(2.0 * (std::sqrt(1.0001) - 0.01)).epsilon(1e-7));
}

TEST_CASE("nested 2-D quadrature")
{
    CHECK(integrate_adaptive_2d([](double x, double y) { return x * y; }, 0, 1, 0, 1) ==
          doctest::Approx(0.25).epsilon(1e-9));
    CHECK(integrate_adaptive_2d([](double x, double y) { return x + y; }, 0, 2, 0, 2) ==
          doctest::Approx(8.0).epsilon(1e-9));
    CHECK(integrate_adaptive_2d(
              [](double x, double y) { return std::log2(1.0 + 1.0 / (x * x + y * y + 1.0)); },
              0, 1, 0, 1) == doctest::Approx(0.7063477296743461).epsilon(1e-8));
}

TEST_CASE("bisection")
{
    const double r = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0);
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(bisect([](double x) { return x; }, 0.0, 1.0) == 0.0);
    CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    std::invalid_argument);
}
