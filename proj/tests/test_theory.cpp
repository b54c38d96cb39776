#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rstg/errors.hpp"
#include "rstg/theory.hpp"

using namespace rstg;
using namespace rstg::theory;

TEST_CASE("harmonic-like sum") {
    CHECK(harmonic_like_sum(1, 1, 2) == doctest::Approx(0.5));
    CHECK(harmonic_like_sum(1, 3, 4) == doctest::Approx(0.7));
    CHECK_THROWS_AS(harmonic_like_sum(0, 1, 4), DomainError);
    CHECK_THROWS_AS(harmonic_like_sum(3, 2, 4), DomainError);
    CHECK_THROWS_AS(harmonic_like_sum(1, 4, 4), DomainError);

    const auto r = favsum_estimate(1, 999, 1000);
    CHECK(r.satisfied);
    CHECK(std::abs(r.value - 2 * std::log(1000.0) / 1000) < 3.0 / 1000);
}

TEST_CASE("favsum sandwich on an n=100 grid") {
    for (std::size_t s : {1, 2, 5, 10})
        for (std::size_t k = s; k + s + 1 <= 100; ++k) CHECK(favsum_estimate(s, k, 100).satisfied);
    for (std::size_t n = 10; n <= 60; ++n)
        for (std::size_t s = 1; s < n; ++s) CHECK(favsum_estimate(s, s, n).satisfied);
    const auto tiny = favsum_estimate(1, 1, 2);
    CHECK(tiny.value == doctest::Approx(std::log(2.0) / 2));
    CHECK(tiny.lower == doctest::Approx(tiny.value - 1.5));
    CHECK(tiny.satisfied);
}

TEST_CASE("truncation constants") {
    const std::size_t n = 1000;
    const double ll = std::log(std::log(1000.0));
    for (std::size_t k : {1, 10, 500, 990}) {
        const double m = static_cast<double>(std::min(k, n - k));
        const double kk = static_cast<double>(k);
        CHECK(truncation_c(k, n, 1) == doctest::Approx((2 * std::log(m) + ll) / (kk * (1000 - kk))));
        if (k >= 8) CHECK(truncation_c(k, n, 8) == doctest::Approx(2 * truncation_c(k, n, 1)));
    }
    CHECK(truncation_c(500, n, 1) > 0);
    CHECK_THROWS_AS(truncation_c(3, 15, 1), DomainError);
}

TEST_CASE("sum of squared truncation constants") {
    double prev_ratio = 1e300;
    for (double n_d : {1e3, 1e4, 1e5, 1e6}) {
        const auto n = static_cast<std::size_t>(n_d);
        const auto s = static_cast<std::size_t>(std::ceil(std::pow(std::log(n_d), 2)));
        const auto r = ck_sum_sq(n, s);
        const double ratio = r.value / r.upper;
        CHECK(ratio < prev_ratio);
        prev_ratio = ratio;
        if (n == 1000000) CHECK(r.satisfied);
    }
    CHECK(ck_sum_sq(100, 50).value == 0.0);
    CHECK(ck_sum_sq(100, 50).satisfied);
    // rises for small s (log s factor), falls past the peak
    for (std::size_t s = 64; 2 * s <= 256; s *= 2) CHECK(ck_sum_sq(512, 2 * s).value <= ck_sum_sq(512, s).value);
}

TEST_CASE("threshold constants") {
    CHECK(threshold_p(ThresholdKind::pairwise, 1000) == doctest::Approx(0.0069078).epsilon(1e-4));
    CHECK(threshold_p(ThresholdKind::temporal_connectivity, 1000) ==
          doctest::Approx(3 * threshold_p(ThresholdKind::pairwise, 1000)));
    CHECK(threshold_p(ThresholdKind::source, 1000) == doctest::Approx(2 * threshold_p(ThresholdKind::pairwise, 1000)));
    CHECK(threshold_p(ThresholdKind::giant_component, 1000) == threshold_p(ThresholdKind::pairwise, 1000));
    CHECK(parse_threshold_kind("tc") == ThresholdKind::temporal_connectivity);
    CHECK(to_string(ThresholdKind::source) == "source");
    CHECK_THROWS_AS(parse_threshold_kind("nope"), DomainError);
}

TEST_CASE("two-hop bound") {
    CHECK(two_hop_bound(500, 2.0, 0.8) == doctest::Approx(1 - std::pow(500.0, -0.2)));
    CHECK(two_hop_bound(500, 2.0, 0.8) == doctest::Approx(0.7114).epsilon(1e-3));
    const double ln = std::log(1000.0);
    CHECK(two_hop_bound(1000, std::sqrt(ln), 0.8) == doctest::Approx(1 - std::pow(1000.0, -ln * 0.3 + 1)));
    CHECK(two_hop_bound(500, 2.0, 0.5 + 1e-12) == 0.0);
    CHECK_THROWS_AS(two_hop_bound(500, 2.0, 0.5), DomainError);
}

TEST_CASE("waiting-time bounds") {
    const auto r = waiting_bounds(500, 1000, 1.0, 0.01);
    CHECK(r.lower == doctest::Approx(0.99 / 250001));
    CHECK(r.upper == doctest::Approx(1 / (250000 * (1 - std::log(1000.0) / 500) + 1)));
    CHECK(r.value == doctest::Approx(1.0 / 250001));
    const auto lim = waiting_bounds(10, 1000000, 0.1, 0.0);
    CHECK(lim.lower == doctest::Approx(lim.value));
    CHECK(lim.upper == doctest::Approx(lim.value).epsilon(1e-5));
    for (double y : {0.0, 0.001, 0.01})
        for (std::size_t k = 1; k < 980; ++k) {
            const auto b = waiting_bounds(k, 1000, 1.0, y);
            CHECK(b.lower <= b.upper);
        }
    CHECK_THROWS_AS(waiting_bounds(999, 1000, 1.0, 0.0), DomainError);
}

TEST_CASE("growth time") {
    const double n = 1000.0, ln = std::log(n), ll = std::log(ln);
    CHECK(growth_time(2.0 / 3.0, 1, 1000) == doctest::Approx(2.0 / 3.0 * ln / n + 3 * ll / n));
    CHECK(growth_time(0.5, 10, 1000) < growth_time(0.5, 1, 1000));
    const double z = 1.0 / 3.0 + ll / ln;
    CHECK(growth_time(z, 1, 1000) > 0);
    CHECK_THROWS_AS(growth_time(1.0, 1, 1000), DomainError);
    CHECK_THROWS_AS(growth_time(0.5, 1, 10), DomainError);
}

TEST_CASE("slack terms") {
    CHECK(eps(1000) == doctest::Approx(1 / std::log(std::log(1000.0))));
    CHECK_THROWS_AS(eps(15), DomainError);
    CHECK(lower_side_slack(1000) == doctest::Approx(3 * std::pow(std::log(1000.0), 0.8) / 1000));
    CHECK(delta_k(500, 1000, 1.0) == doctest::Approx(std::log(1000.0) / 500));
    CHECK(gamma(1000, 1.0, 10) > 0);
}
