#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "swarm/direction.hpp"

using namespace swarm;

TEST_CASE("cap sample at r = 1 is the north pole") {
    RandomSource rng(1);
    for (std::size_t d : {2, 3, 10}) {
        const Vec x = sample_cap_point(d, 1.0, rng);
        for (std::size_t i = 0; i + 1 < d; ++i) CHECK(x[i] == 0.0);
        CHECK(x[d - 1] == 1.0);
    }
}

TEST_CASE("cap sample in d = 2 picks a random sign") {
    RandomSource rng(2);
    bool seen_pos = false, seen_neg = false;
    for (int trial = 0; trial < 100; ++trial) {
        const Vec x = sample_cap_point(2, 0.5, rng);
        CHECK(x[1] == 0.5);
        CHECK(std::abs(std::abs(x[0]) - std::sqrt(0.75)) < 1e-12);
        (x[0] > 0 ? seen_pos : seen_neg) = true;
    }
    CHECK(seen_pos);
    CHECK(seen_neg);
}

TEST_CASE("cap samples are unit vectors with last coordinate r") {
    RandomSource rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const double r = rng.uniform(0.0, 1.0);
        const Vec x = sample_cap_point(5, r, rng);
        CHECK(std::abs(norm(x) - 1.0) <= 1e-12);
        CHECK(x[4] == r);
    }
}

TEST_CASE("cap sampling rejects bad arguments") {
    RandomSource rng(4);
    CHECK_THROWS_AS(sample_cap_point(1, 0.5, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_cap_point(3, -0.1, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_cap_point(3, 1.1, rng), std::invalid_argument);
}

TEST_CASE("reflection special cases") {
    const std::size_t d = 4;
    Vec z(d, 0.0);
    z[d - 1] = 1.0;
    RandomSource rng(5);
    const Vec x = sample_cap_point(d, 0.3, rng);

    SECTION("pole target is the identity") { CHECK(reflect_to(z, x) == x); }
    SECTION("pole input maps to the target") {
        Vec q{0.5, 0.5, 0.5, -0.5};
        const Vec w = reflect_to(q, z);
        for (std::size_t i = 0; i < d; ++i) CHECK(w[i] == Catch::Approx(q[i]).margin(1e-12));
    }
    SECTION("antipodal target preserves the cosine") {
        Vec q(d, 0.0);
        q[d - 1] = -1.0;
        const Vec w = reflect_to(q, x);
        CHECK(dot(w, q) == Catch::Approx(x[d - 1]).margin(1e-10));
    }
}

TEST_CASE("reflection is a unitary involution") {
    RandomSource rng(6);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 3 + static_cast<std::size_t>(rng.uniform(0.0, 8.0));
        Vec q(d);
        for (auto& qi : q) qi = rng.normal();
        const double qn = norm(q);
        for (auto& qi : q) qi /= qn;
        const Vec x = sample_cap_point(d, rng.uniform(0.0, 1.0), rng);
        const Vec w = reflect_to(q, x);
        CHECK(std::abs(norm(w) - 1.0) <= 1e-12);
        CHECK(dot(w, q) == Catch::Approx(x[d - 1]).margin(1e-10));
        const Vec back = reflect_to(q, w);
        for (std::size_t i = 0; i < d; ++i)
            CHECK(back[i] == Catch::Approx(x[i]).margin(1e-12));
    }
}

TEST_CASE("heaviest agent and SBGD mode follow the gradient exactly") {
    RandomSource rng(7);
    const Vec grad{1.0, -2.0, 0.5};
    SECTION("m_rel = 1") {
        const auto s = random_descent_direction(grad, 1.0, Mode::SBRD, rng);
        CHECK(s.p == grad);
        CHECK(s.r == 1.0);
    }
    SECTION("SBGD regardless of mass") {
        for (double m : {0.01, 0.4, 1.0}) {
            const auto s = random_descent_direction(grad, m, Mode::SBGD, rng);
            CHECK(s.p == grad);
        }
    }
    SECTION("d = 1 falls back to the gradient") {
        const auto s = random_descent_direction(Vec{2.5}, 0.2, Mode::SBRD, rng);
        CHECK(s.p == Vec{2.5});
    }
    SECTION("zero gradient is an error") {
        CHECK_THROWS_AS(random_descent_direction(Vec{0.0, 0.0}, 0.5, Mode::SBRD, rng),
                        std::invalid_argument);
    }
}

TEST_CASE("sampled directions satisfy the alignment bounds") {
    RandomSource rng(8);
    for (std::size_t d : {2, 3, 10, 20}) {
        Vec grad(d);
        for (auto& g : grad) g = rng.normal();
        const double gnorm = norm(grad);
        const double m_rel = 0.35;
        const double lower = 0.5 * (1.0 + m_rel);
        double r_sum = 0.0;
        const int samples = 100000;
        for (int trial = 0; trial < samples; ++trial) {
            const auto s = random_descent_direction(grad, m_rel, Mode::SBRD, rng);
            REQUIRE(std::abs(norm(s.omega) - 1.0) <= 1e-12);
            REQUIRE(std::abs(norm(s.p) - gnorm) <= 1e-12 * gnorm);
            const double cosine = dot(s.omega, grad) / gnorm;
            REQUIRE(std::abs(cosine - s.r) <= 1e-10);
            REQUIRE(s.r >= lower - 1e-10);
            REQUIRE(s.r <= 1.0);
            r_sum += s.r;
        }
        // mean of U[(1+m)/2, 1] is (3+m)/4; allow 3 standard errors
        const double width = 1.0 - lower;
        const double se = width / std::sqrt(12.0 * samples);
        CHECK(std::abs(r_sum / samples - (3.0 + m_rel) / 4.0) <= 3.0 * se);
    }
}
