#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "beliefsim/measures.hpp"

using namespace beliefsim;

TEST_CASE("construction sorts, merges and renormalizes") {
    DiscreteMeasure1D mu({3.0, 1.0, 2.0, 1.0}, {0.25, 0.25, 0.25, 0.25});
    REQUIRE(mu.size() == 3);
    CHECK(mu.atoms() == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(mu.weights()[0] == doctest::Approx(0.5));
    CHECK(mu.cumulative().back() == 1.0);
}

TEST_CASE("construction rejects bad weights") {
    CHECK_THROWS_AS(DiscreteMeasure1D({0.0}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteMeasure1D({0.0, 1.0}, {0.6, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteMeasure1D({0.0, 1.0}, {-0.1, 1.1}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteMeasure1D({}, {}), std::invalid_argument);
}

TEST_CASE("zero-weight atoms are dropped") {
    DiscreteMeasure1D mu({0.0, 1.0, 2.0}, {0.5, 0.0, 0.5});
    CHECK(mu.size() == 2);
    CHECK(mu.atoms() == std::vector<double>{0.0, 2.0});
}

TEST_CASE("mean and variance") {
    DiscreteMeasure1D mu({-1.0, 1.0}, {0.5, 0.5});
    CHECK(mu.mean() == 0.0);
    CHECK(mu.variance() == 1.0);
    DiscreteMeasure1D nu({2.0, 4.0, 6.0}, {0.2, 0.5, 0.3});
    CHECK(nu.mean() == doctest::Approx(4.2).epsilon(1e-15));
    CHECK(nu.variance() == doctest::Approx(0.2 * 4.84 + 0.5 * 0.04 + 0.3 * 3.24).epsilon(1e-12));
}

TEST_CASE("quantile is the left-continuous inverse") {
    DiscreteMeasure1D mu({0.0, 1.0, 2.0}, {0.25, 0.5, 0.25});
    CHECK(mu.quantile(0.1) == 0.0);
    CHECK(mu.quantile(0.25 + 1e-12) == 1.0);
    CHECK(mu.quantile(0.74) == 1.0);
    CHECK(mu.quantile(0.76) == 2.0);
    CHECK_THROWS_AS(mu.quantile(0.0), std::invalid_argument);
    CHECK_THROWS_AS(mu.quantile(1.0), std::invalid_argument);
}

TEST_CASE("w2 between point masses is the atom distance") {
    CHECK(w2_discrete(DiscreteMeasure1D::dirac(1.0), DiscreteMeasure1D::dirac(4.0)) == 3.0);
    const DiscreteMeasure1D mu({0.0, 1.0}, {0.5, 0.5});
    CHECK(w2_discrete(mu, mu) == 0.0);
}

TEST_CASE("w2 is symmetric and translation covariant") {
    std::mt19937_64 engine(7);
    std::uniform_real_distribution<double> atom(-5.0, 5.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> a, b, wa, wb;
        for (int i = 0; i < 4; ++i) {
            a.push_back(atom(engine));
            b.push_back(atom(engine));
            wa.push_back(0.25);
            wb.push_back(0.25);
        }
        const DiscreteMeasure1D mu(a, wa), nu(b, wb);
        const double d = w2_discrete(mu, nu);
        CHECK(w2_discrete(nu, mu) == d);
        std::vector<double> shifted = b;
        for (double& x : shifted) x += 2.5;
        // shifting one marginal changes the distance by at most the shift
        const double d2 = w2_discrete(mu, DiscreteMeasure1D(shifted, wb));
        CHECK(std::abs(d2 - d) < 2.5 + 1e-12);
    }
}

TEST_CASE("w2 against a shifted copy equals the shift") {
    const DiscreteMeasure1D mu({0.0, 0.5, 3.0}, {0.3, 0.4, 0.3});
    const DiscreteMeasure1D nu({1.0, 1.5, 4.0}, {0.3, 0.4, 0.3});
    CHECK(w2_discrete(mu, nu) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("w2_to_dirac closed form") {
    const DiscreteMeasure1D mu({-1.0, 1.0}, {0.5, 0.5});
    CHECK(w2_to_dirac(mu, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    const double direct = w2_discrete(mu, DiscreteMeasure1D::dirac(1.0));
    CHECK(std::sqrt(w2_to_dirac(mu, 1.0)) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("barycenter of point masses is the weighted mean point") {
    const std::vector<DiscreteMeasure1D> ms = {DiscreteMeasure1D::dirac(0.0),
                                               DiscreteMeasure1D::dirac(2.0)};
    const DiscreteMeasure1D bary = w2_barycenter_1d(ms, {0.5, 0.5});
    CHECK(bary.size() == 1);
    CHECK(bary.atoms()[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("barycenter of one measure is itself") {
    const DiscreteMeasure1D mu({0.0, 1.0, 5.0}, {0.2, 0.3, 0.5});
    const DiscreteMeasure1D bary = w2_barycenter_1d({mu}, {1.0});
    REQUIRE(bary.size() == mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        CHECK(bary.atoms()[i] == doctest::Approx(mu.atoms()[i]).epsilon(1e-14));
        CHECK(bary.weights()[i] == doctest::Approx(mu.weights()[i]).epsilon(1e-12));
    }
}

TEST_CASE("barycenter mean is the weighted mean of means") {
    const DiscreteMeasure1D mu({0.0, 2.0}, {0.5, 0.5});
    const DiscreteMeasure1D nu({10.0, 14.0}, {0.25, 0.75});
    const DiscreteMeasure1D bary = w2_barycenter_1d({mu, nu}, {0.4, 0.6});
    CHECK(bary.mean() == doctest::Approx(0.4 * 1.0 + 0.6 * 13.0).epsilon(1e-12));
    CHECK_THROWS_AS(w2_barycenter_1d({mu, nu}, {0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(w2_barycenter_1d({mu, nu}, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("kl on matching and mismatched supports") {
    const DiscreteMeasure1D mu({0.0, 1.0}, {0.75, 0.25});
    const DiscreteMeasure1D nu({0.0, 1.0}, {0.5, 0.5});
    const double expected = 0.75 * std::log(1.5) + 0.25 * std::log(0.5);
    CHECK(kl_discrete(mu, nu) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(kl_discrete(mu, mu) == 0.0);
    const DiscreteMeasure1D wider({0.0, 1.0, 2.0}, {0.5, 0.25, 0.25});
    CHECK(kl_discrete(wider, nu) == std::numeric_limits<double>::infinity());
    CHECK(std::isfinite(kl_discrete(mu, wider)));
}
