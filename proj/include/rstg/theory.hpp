#pragma once

#include <cstddef>
#include <string_view>

namespace rstg::theory {

// Closed-form quantities for random temporal graphs. Natural logarithms
// throughout. Every function throws DomainError outside its domain; any
// expression involving log log n requires n >= 16.

enum class ThresholdKind { pairwise, source, temporal_connectivity, giant_component };

ThresholdKind parse_threshold_kind(std::string_view name);
std::string_view to_string(ThresholdKind kind);

struct BoundReport {
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool satisfied = false;  // lower <= value <= upper
};

// 1 / log log n.
double eps(std::size_t n);
// Lower-bound-side slack 3 (log n)^0.8 / n.
double lower_side_slack(std::size_t n);
// (log n)^a / (n - k).
double delta_k(std::size_t k, std::size_t n, double a);
// 3 (log n / sqrt(n) + (log n)^a / s).
double gamma(std::size_t n, double a, std::size_t s);

// sum_{i=s}^{k} 1 / (i (n - i) + 1), accumulated in ascending i.
// Requires 1 <= s <= k <= n - 1.
double harmonic_like_sum(std::size_t s, std::size_t k, std::size_t n);

// value = (log k - log s + log(n - s + 1) - log(n - k)) / n,
// window value -+ 3/n, satisfied iff harmonic_like_sum(s,k,n) lies inside.
BoundReport favsum_estimate(std::size_t s, std::size_t k, std::size_t n);

// c_k = (2 log min{k, n-k} + log log n) * s^(1/3) / (k (n - k)).
// Requires n >= 16 and 1 <= s <= k <= n - 1.
double truncation_c(std::size_t k, std::size_t n, std::size_t s);

// value = sum_{i=s}^{n-s-1} c_i^2, upper = 64 (log log n)^2 (log s)^2 / (n^2 s^(1/3)).
// Requires n >= 16, 1 <= s <= n/2.
BoundReport ck_sum_sq(std::size_t n, std::size_t s);

// log n / n times 1, 2, 3, 1 for pairwise, source, temporal connectivity,
// giant component. n >= 2.
double threshold_p(ThresholdKind kind, std::size_t n);

// 1 - n^(-alpha^2 (2 beta - 1) / 2 + 1), clamped to [0, 1].
double two_hop_bound(std::size_t n, double alpha, double beta);

// lower = (1 - y_prev) / (k(n-k) + 1), upper = 1 / (k(n-k)(1 - delta_k) + 1);
// value is the nominal 1 / (k(n-k) + 1). Domain error if delta_k >= 1.
BoundReport waiting_bounds(std::size_t k, std::size_t n, double a, double y_prev);

// (z log n - log s) / n + 3 log log n / n: the time by which s sources reach
// ceil(n^z) vertices. Requires 0 < z < 1, s >= 1, n >= 16.
double growth_time(double z, std::size_t s, std::size_t n);

}  // namespace rstg::theory
