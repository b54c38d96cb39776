#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rstg/temporal_graph.hpp"

namespace rstg::experiments {

// How the time line [0, p] of a sweep trial is split when measuring the
// set Z of vertices that reach and are reached by many vertices early and
// late. whole: Z is not measured (z_size = 0). thirds: early = [0, p/3],
// late = [2p/3, p]. fifths: early = [0, 2p/5], late = [3p/5, p].
enum class WindowProtocol { whole, thirds, fifths };

// open: largest_open_bounds only, closed_lb is the trivial singleton (1).
// open_closed: additionally the larger of the peel and core closed
// lower bounds.
enum class ComponentMethod { open, open_closed };

WindowProtocol parse_protocol(const std::string& name);
ComponentMethod parse_method(const std::string& name);

struct SweepConfig {
    std::vector<std::size_t> n_values;
    std::vector<double> c_grid;  // p = c log n / n
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    WindowProtocol protocol = WindowProtocol::whole;
    ComponentMethod method = ComponentMethod::open;
    unsigned threads = 1;

    // Throws DomainError unless trials >= 1, every n >= 2, every c >= 0.
    void validate() const;
};

struct TrialRecord {
    std::size_t n = 0;
    double c = 0.0;
    double p = 0.0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t open_lower = 0;
    std::size_t open_upper = 0;
    std::size_t closed_lower = 0;
    bool pair_reached = false;  // vertex 0 reaches vertex 1
    std::size_t source_count = 0;
    bool temporally_connected = false;
    std::size_t z_size = 0;
};

struct TrialFailure {
    std::size_t n = 0;
    double c = 0.0;
    std::size_t trial = 0;
    std::string message;
};

struct SweepResult {
    std::vector<TrialRecord> records;  // sorted by (n, c index, trial)
    std::vector<TrialFailure> failures;
};

// Stream index of trial `trial` at size n. It does not depend on c, so for a
// fixed trial the graphs along the c grid are nested.
std::uint64_t trial_stream(std::size_t n, std::size_t trial);

TrialRecord run_trial(std::size_t n, double c, std::size_t trial, std::uint64_t master_seed,
                      WindowProtocol protocol, ComponentMethod method);

SweepResult run_sweep(const SweepConfig& cfg);

inline constexpr const char* kSweepCsvHeader = "n,c,p,trial,seed,open_lb,open_ub,closed_lb,pair,src_count,tc,z_size";
void write_sweep_csv(std::ostream& os, const std::vector<TrialRecord>& records);
std::string sweep_csv(const std::vector<TrialRecord>& records);

// Per-(n, c) means over trials.
struct SweepPoint {
    std::size_t n = 0;
    double c = 0.0;
    std::size_t trials = 0;
    double mean_open_lower = 0.0;
    double mean_open_upper = 0.0;
    double mean_closed_lower = 0.0;
    double se_open_lower = 0.0;
    double pair_rate = 0.0;
    double tc_rate = 0.0;
};

std::vector<SweepPoint> aggregate(const std::vector<TrialRecord>& records);

// c at which a curve sampled on an increasing grid first reaches `level`,
// by linear interpolation between neighbouring grid points. Returns the
// first grid value if the curve starts at or above the level and NaN if it
// never reaches it.
double crossing_point(const std::vector<double>& c_grid, const std::vector<double>& curve, double level = 0.5);

// ----- three-interval protocol -------------------------------------------

struct PhaseRecord {
    std::size_t n = 0;
    double p = 0.0, p1 = 0.0, p2 = 0.0;
    double reach_low = 0.0;   // n^{1/3} log n
    double reach_high = 0.0;  // n^{1/3 + eps(n)}
    std::size_t x_size = 0, y_size = 0, z_size = 0;
    std::size_t pairs_checked = 0, pairs_reached = 0;

    double success_rate() const {
        return pairs_checked ? static_cast<double>(pairs_reached) / static_cast<double>(pairs_checked) : 0.0;
    }
};

// p = (1 + eps(n)) log n / n split into thirds. X: vertices whose reach set
// in [0, p1] has size in [reach_low, reach_high]; Y: the same for the set
// reaching the vertex in [p2, p]; Z = X ∩ Y. A random sample of ordered
// pairs of Z is checked for reachability in [0, p]. Requires n >= 16.
PhaseRecord run_phase_protocol(std::size_t n, std::uint64_t seed, std::size_t sample_pairs = 30);

// ----- waiting times ------------------------------------------------------

struct WaitingTrial {
    double dev_capped = 0.0;    // max_k |Ŷ_k - sum_{i=s}^k 1/(i(n-i)+1)|
    double dev_harmonic = 0.0;  // max_k |Y_k - sum_{i=s}^k 1/(i(n-i)+1)|
    double dev_estimate = 0.0;  // max_k |Y_k - log estimate|
};

struct WaitingSummary {
    std::size_t n = 0, s = 0;
    std::size_t k_first = 0, k_last = 0;  // inclusive range [s, n - s - 1]
    bool empty_range = false;
    double capped_window = 0.0;    // 2 (log n)^0.8 / n
    double harmonic_window = 0.0;  // 2 log log n / n
    double estimate_window = 0.0;  // (2 log log n + 3) / n
    std::vector<WaitingTrial> trials;

    double fraction_capped_within() const;
    double fraction_harmonic_within() const;
    double fraction_estimate_within() const;
};

// Grows a foremost forest from a random s-set in F_1(K_n) per trial.
WaitingSummary run_waiting_time_study(std::size_t n, std::size_t s, std::size_t trials,
                                      std::uint64_t master_seed, unsigned threads = 1);

// ----- target sets --------------------------------------------------------

struct TargetSetSummary {
    std::size_t trials = 0;
    std::size_t hits = 0;
    std::size_t min_base_degree = 0;  // smallest delta(G) seen
    double hit_rate() const { return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0; }
};

// Per trial: base G = K_n minus a G(n, (2/3)(1 + eps) log n / n) sample of
// max degree <= (log n)^2, random S and T, graph ~ F_p(G); a hit is a
// foremost forest from S that meets T.
TargetSetSummary run_target_set_study(std::size_t n, std::size_t s_size, std::size_t t_size, double p,
                                      std::size_t trials, std::uint64_t master_seed, unsigned threads = 1);

// ----- threshold ladder ---------------------------------------------------

struct LadderResult {
    std::size_t n = 0;
    std::vector<double> c_grid;
    std::vector<double> pair_curve;    // P(0 reaches 1)
    std::vector<double> source_curve;  // P(0 is a temporal source)
    std::vector<double> tc_curve;      // P(temporally connected)
    double c_pair = 0.0, c_source = 0.0, c_tc = 0.0;
};

LadderResult run_threshold_ladder(std::size_t n, const std::vector<double>& c_grid, std::size_t trials,
                                  std::uint64_t master_seed, unsigned threads = 1);

// ----- k-added vertex -----------------------------------------------------

enum class UniformityBase { complete, minus_matching };

struct UniformityResult {
    std::size_t n = 0, s = 0, k = 0, trials = 0;
    std::size_t counted = 0;           // trials in which the k-added vertex exists
    std::vector<std::size_t> counts;   // indexed by vertex - s (V \ S = {s..n-1})
    double max_scaled_deviation = 0.0; // max_u |freq(u) - 1/(n-s)| * (n-s)
    double chi_square = 0.0;
    std::size_t dof = 0;
    double p_value = 0.0;
};

// S = {0..s-1}, graph ~ F_1(base); records which vertex enters at index k.
UniformityResult run_added_vertex_uniformity(std::size_t n, std::size_t s_size, std::size_t trials,
                                             std::size_t checkpoint_k, std::uint64_t master_seed,
                                             UniformityBase base = UniformityBase::complete,
                                             unsigned threads = 1);

// ----- oracle self-test ---------------------------------------------------

struct SelftestReport {
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages;
    std::optional<std::string> first_failure_tgf;
    bool passed() const { return failures == 0; }
};

// Random F_{n,p} instances with n in [n_min, n_max] and p cycling through
// 0.1..1.0, plus fixed regression cases. Checks literal/sweep agreement,
// forest vs all-pairs arrivals, monotone labels, strictly increasing tree
// paths, and (n <= 16) exact clique vs exhaustive subset search.
SelftestReport run_oracle_selftest(std::size_t instances, std::size_t n_min, std::size_t n_max,
                                   std::uint64_t master_seed);

// Checks one graph; returns the violated properties.
std::vector<std::string> check_instance(const TemporalGraph& g);

}  // namespace rstg::experiments
