#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "beliefsim/errors.hpp"
#include "beliefsim/numerics.hpp"

using namespace beliefsim;

TEST_CASE("brent finds sqrt(2)") {
    const auto f = [](double x) { return x * x - 2.0; };
    const double r = brent_root(f, Bracket(0.0, 2.0, f(0.0), f(2.0)));
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("brent on a transcendental root") {
    const auto f = [](double x) { return std::cos(x) - x; };
    const double r = brent_root(f, Bracket(0.0, 1.0, f(0.0), f(1.0)));
    CHECK(std::abs(std::cos(r) - r) < 1e-14);
}

TEST_CASE("bracket construction rejects non-bracketing endpoints") {
    CHECK_THROWS_AS(Bracket(0.0, 1.0, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(Bracket(0.0, 1.0, std::nan(""), -1.0), std::invalid_argument);
}

TEST_CASE("log_sum_exp basics") {
    const std::vector<double> v = {0.0, std::log(3.0)};
    CHECK(log_sum_exp(v) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    const std::vector<double> big = {1000.0, 1000.0};
    CHECK(log_sum_exp(big) == doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-15));
    const std::vector<double> vals = {1.0, 2.0};
    const std::vector<double> lw = {std::log(0.5), std::log(0.5)};
    CHECK(log_sum_exp(vals, lw) ==
          doctest::Approx(std::log(0.5 * std::exp(1.0) + 0.5 * std::exp(2.0))).epsilon(1e-14));
    CHECK_THROWS_AS(log_sum_exp(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("kummer matches elementary closed forms") {
    for (double u = -30.0; u <= 30.0; u += 1.5) {
        CHECK(kummer_1f1(1.0, 1.0, u) == doctest::Approx(std::exp(u)).epsilon(1e-12));
        const double expected = std::abs(u) < 1e-12 ? 1.0 : std::expm1(u) / u;
        CHECK(kummer_1f1(1.0, 2.0, u) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("kummer deep negative argument stays accurate") {
    // 1F1(1; 2; u) = (e^u - 1)/u
    const double u = -300.0;
    CHECK(kummer_1f1(1.0, 2.0, u) == doctest::Approx(std::expm1(u) / u).epsilon(1e-12));
    CHECK(kummer_1f1(2.0, 5.0, -120.0) > 0.0);
}

TEST_CASE("kummer domain limits") {
    CHECK_THROWS_AS(kummer_1f1(1.0, 2.0, 701.0), NumericalError);
    CHECK_THROWS_AS(kummer_1f1(1.0, 2.0, -701.0), NumericalError);
    CHECK_THROWS_AS(kummer_1f1(-1.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(kummer_1f1(1.0, 0.0, 1.0), std::invalid_argument);
    CHECK(kummer_1f1(0.0, 2.0, 5.0) == 1.0);
}

TEST_CASE("norminv inverts the normal cdf") {
    CHECK(norminv(0.5) == 0.0);
    for (double x = -8.0; x <= 5.5; x += 0.25) {
        const double p = normal_cdf(x);
        if (p > 0.0 && p < 1.0) CHECK(norminv(p) == doctest::Approx(x).epsilon(1e-9));
    }
    // In the far upper tail p sits against 1, so the spacing of doubles near 1
    // (not the inverse itself) limits the round trip.
    for (double x = 5.75; x <= 8.0; x += 0.25) {
        CHECK(std::abs(norminv(normal_cdf(x)) - x) < 0.05);
    }
    CHECK(std::isfinite(norminv(1e-300)));
    CHECK(norminv(1e-300) < -30.0);
    CHECK_THROWS_AS(norminv(0.0), std::invalid_argument);
    CHECK_THROWS_AS(norminv(1.0), std::invalid_argument);
}

TEST_CASE("ols recovers an exact line") {
    const std::vector<double> x = {0.0, 1.0, 2.0, 3.0};
    const std::vector<double> y = {1.0, 0.5, 0.0, -0.5};
    const LinearFit fit = ols_fit(x, y);
    CHECK(fit.slope == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(ols_fit(std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("moment helpers") {
    const std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
    CHECK(mean_of(v) == 2.5);
    CHECK(sample_variance(v) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    CHECK(standard_error(v) == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)).epsilon(1e-15));
    const std::vector<double> w = {2.0, 4.0, 6.0, 8.0};
    CHECK(pearson_correlation(v, w) == doctest::Approx(1.0).epsilon(1e-14));
    const std::vector<double> neg = {4.0, 3.0, 2.0, 1.0};
    CHECK(pearson_correlation(v, neg) == doctest::Approx(-1.0).epsilon(1e-14));
}
