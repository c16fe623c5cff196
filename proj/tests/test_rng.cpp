#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "beliefsim/brownian.hpp"
#include "beliefsim/rng.hpp"
#include "beliefsim/time_grid.hpp"

using namespace beliefsim;

TEST_CASE("same key reproduces the same sequence") {
    GaussianStream a(42, 7, kStreamBrownian);
    GaussianStream b(42, 7, kStreamBrownian);
    for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("distinct streams and paths give distinct draws") {
    GaussianStream base(42, 7, kStreamBrownian);
    GaussianStream other_stream(42, 7, kStreamObservation);
    GaussianStream other_path(42, 8, kStreamBrownian);
    GaussianStream other_seed(43, 7, kStreamBrownian);
    const double x = base.next();
    CHECK(x != other_stream.next());
    CHECK(x != other_path.next());
    CHECK(x != other_seed.next());
}

TEST_CASE("stream_key avalanche") {
    std::set<std::uint64_t> keys;
    for (std::uint64_t s = 0; s < 10; ++s)
        for (std::uint64_t p = 0; p < 10; ++p)
            for (std::uint64_t t = 0; t < 4; ++t) keys.insert(stream_key(s, p, t));
    CHECK(keys.size() == 400);
}

TEST_CASE("draws are standard normal to MC accuracy") {
    GaussianStream g(20250801, 0, 0);
    const std::size_t n = 200000;
    double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double z = g.next();
        sum += z;
        sum2 += z * z;
        sum4 += z * z * z * z;
    }
    const double nn = static_cast<double>(n);
    CHECK(std::abs(sum / nn) < 0.01);
    CHECK(std::abs(sum2 / nn - 1.0) < 0.02);
    CHECK(std::abs(sum4 / nn - 3.0) < 0.1);
}

TEST_CASE("all draws are finite and nondegenerate") {
    GaussianStream g(1, 1, 1);
    for (int i = 0; i < 100000; ++i) {
        const double z = g.next();
        CHECK(std::isfinite(z));
    }
}

TEST_CASE("brownian increments scale with dt") {
    const TimeGrid grid(2.0, 500);
    const BrownianPath w = generate_brownian(9, 3, grid);
    REQUIRE(w.increments.size() == 500);
    double sum2 = 0.0;
    for (double dw : w.increments) sum2 += dw * dw;
    // quadratic variation concentrates near the horizon
    CHECK(sum2 == doctest::Approx(2.0).epsilon(0.2));
    CHECK(w.seed == 9);
    CHECK(w.path_index == 3);
}

TEST_CASE("brownian path independent of other paths drawn") {
    const TimeGrid grid(1.0, 64);
    const BrownianPath alone = generate_brownian(123, 5, grid);
    generate_brownian(123, 4, grid);
    const BrownianPath again = generate_brownian(123, 5, grid);
    CHECK(alone.increments == again.increments);
}
