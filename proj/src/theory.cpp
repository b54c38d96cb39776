#include "rstg/theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rstg/errors.hpp"

namespace rstg::theory {

namespace {

double lg(double x) { return std::log(x); }

void need_loglog(std::size_t n, const char* who) {
    if (n < 16) throw DomainError(std::string(who) + ": requires n >= 16 (log log n)");
}

BoundReport report(double value, double lower, double upper) {
    return {value, lower, upper, lower <= value && value <= upper};
}

}  // namespace

ThresholdKind parse_threshold_kind(std::string_view name) {
    if (name == "pairwise") return ThresholdKind::pairwise;
    if (name == "source") return ThresholdKind::source;
    if (name == "temporal_connectivity" || name == "tc") return ThresholdKind::temporal_connectivity;
    if (name == "giant_component" || name == "giant") return ThresholdKind::giant_component;
    throw DomainError("unknown threshold kind '" + std::string(name) + "'");
}

std::string_view to_string(ThresholdKind kind) {
    switch (kind) {
        case ThresholdKind::pairwise: return "pairwise";
        case ThresholdKind::source: return "source";
        case ThresholdKind::temporal_connectivity: return "temporal_connectivity";
        case ThresholdKind::giant_component: return "giant_component";
    }
    return "?";
}

double eps(std::size_t n) {
    need_loglog(n, "eps");
    return 1.0 / lg(lg(static_cast<double>(n)));
}

double lower_side_slack(std::size_t n) {
    if (n < 2) throw DomainError("lower_side_slack: requires n >= 2");
    const double nn = static_cast<double>(n);
    return 3.0 * std::pow(lg(nn), 0.8) / nn;
}

double delta_k(std::size_t k, std::size_t n, double a) {
    if (n < 2 || k >= n) throw DomainError("delta_k: requires k < n");
    return std::pow(lg(static_cast<double>(n)), a) / static_cast<double>(n - k);
}

double gamma(std::size_t n, double a, std::size_t s) {
    if (n < 2 || s == 0) throw DomainError("gamma: requires n >= 2, s >= 1");
    const double ln = lg(static_cast<double>(n));
    return 3.0 * (ln / std::sqrt(static_cast<double>(n)) + std::pow(ln, a) / static_cast<double>(s));
}

double harmonic_like_sum(std::size_t s, std::size_t k, std::size_t n) {
    if (s < 1 || s > k || k + 1 > n)
        throw DomainError("harmonic_like_sum: requires 1 <= s <= k <= n - 1");
    const double nn = static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t i = s; i <= k; ++i) {
        const double ii = static_cast<double>(i);
        sum += 1.0 / (ii * (nn - ii) + 1.0);
    }
    return sum;
}

BoundReport favsum_estimate(std::size_t s, std::size_t k, std::size_t n) {
    const double sum = harmonic_like_sum(s, k, n);
    const double nn = static_cast<double>(n);
    const double est = (lg(static_cast<double>(k)) - lg(static_cast<double>(s)) +
                        lg(static_cast<double>(n - s + 1)) - lg(static_cast<double>(n - k))) /
                       nn;
    BoundReport r{est, est - 3.0 / nn, est + 3.0 / nn, false};
    r.satisfied = r.lower <= sum && sum <= r.upper;
    return r;
}

double truncation_c(std::size_t k, std::size_t n, std::size_t s) {
    need_loglog(n, "truncation_c");
    if (s < 1 || s > k || k + 1 > n)
        throw DomainError("truncation_c: requires 1 <= s <= k <= n - 1");
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    const double m = static_cast<double>(std::min(k, n - k));
    return (2.0 * lg(m) + lg(lg(nn))) * std::cbrt(static_cast<double>(s)) / (kk * (nn - kk));
}

BoundReport ck_sum_sq(std::size_t n, std::size_t s) {
    need_loglog(n, "ck_sum_sq");
    if (s < 1 || 2 * s > n) throw DomainError("ck_sum_sq: requires 1 <= s <= n/2");
    double sum = 0.0;
    for (std::size_t i = s; i + s + 1 <= n; ++i) {
        const double c = truncation_c(i, n, s);
        sum += c * c;
    }
    const double nn = static_cast<double>(n);
    const double llog = lg(lg(nn));
    const double ls = lg(static_cast<double>(s));
    const double upper = 64.0 * llog * llog * ls * ls / (nn * nn * std::cbrt(static_cast<double>(s)));
    return report(sum, 0.0, upper);
}

double threshold_p(ThresholdKind kind, std::size_t n) {
    if (n < 2) throw DomainError("threshold_p: requires n >= 2");
    const double base = lg(static_cast<double>(n)) / static_cast<double>(n);
    switch (kind) {
        case ThresholdKind::pairwise:
        case ThresholdKind::giant_component: return base;
        case ThresholdKind::source: return 2.0 * base;
        case ThresholdKind::temporal_connectivity: return 3.0 * base;
    }
    return base;
}

double two_hop_bound(std::size_t n, double alpha, double beta) {
    if (!(alpha > 0.0)) throw DomainError("two_hop_bound: requires alpha > 0");
    if (!(beta > 0.5)) throw DomainError("two_hop_bound: requires beta > 1/2");
    if (n < 1) throw DomainError("two_hop_bound: requires n >= 1");
    const double exponent = -alpha * alpha * (2.0 * beta - 1.0) / 2.0 + 1.0;
    return std::clamp(1.0 - std::pow(static_cast<double>(n), exponent), 0.0, 1.0);
}

BoundReport waiting_bounds(std::size_t k, std::size_t n, double a, double y_prev) {
    if (k < 1 || k + 1 > n) throw DomainError("waiting_bounds: requires 1 <= k <= n - 1");
    if (!(y_prev >= 0.0 && y_prev <= 1.0)) throw DomainError("waiting_bounds: y_prev outside [0,1]");
    const double d = delta_k(k, n, a);
    if (d >= 1.0) throw DomainError("waiting_bounds: delta_k >= 1");
    const double kn = static_cast<double>(k) * static_cast<double>(n - k);
    return report(1.0 / (kn + 1.0), (1.0 - y_prev) / (kn + 1.0), 1.0 / (kn * (1.0 - d) + 1.0));
}

double growth_time(double z, std::size_t s, std::size_t n) {
    need_loglog(n, "growth_time");
    if (!(z > 0.0 && z < 1.0)) throw DomainError("growth_time: requires 0 < z < 1");
    if (s < 1) throw DomainError("growth_time: requires s >= 1");
    const double nn = static_cast<double>(n);
    return (z * lg(nn) - lg(static_cast<double>(s))) / nn + 3.0 * lg(lg(nn)) / nn;
}

}  // namespace rstg::theory
