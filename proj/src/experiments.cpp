#include "rstg/experiments.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "parallel.hpp"
#include "rstg/components.hpp"
#include "rstg/errors.hpp"
#include "rstg/random_models.hpp"
#include "rstg/reachability.hpp"
#include "rstg/theory.hpp"

namespace rstg::experiments {

namespace {

double ln(double x) { return std::log(x); }

double p_of(double c, std::size_t n) {
    return std::min(1.0, c * ln(static_cast<double>(n)) / static_cast<double>(n));
}

struct ZMeasure {
    std::size_t x = 0, y = 0, z = 0;
    std::vector<VertexId> z_set;
};

// X: |reach(v)| in `early` within [low, high]; Y: |coreach(v)| in `late`
// within [low, high].
ZMeasure measure_z(const TemporalGraph& g, const TimeWindow& early, const TimeWindow& late, double low,
                   double high) {
    const std::size_t n = g.vertex_count();
    std::vector<char> in_x(n, 0);
    ZMeasure out;
    {
        const auto counts = all_pairs_arrival(g, early, false).reach_counts();
        for (std::size_t v = 0; v < n; ++v) {
            const double c = static_cast<double>(counts[v]);
            in_x[v] = low <= c && c <= high;
            out.x += static_cast<std::size_t>(in_x[v]);
        }
    }
    const auto counts = all_pairs_arrival(g, late, false).coreach_counts();
    for (std::size_t v = 0; v < n; ++v) {
        const double c = static_cast<double>(counts[v]);
        if (!(low <= c && c <= high)) continue;
        ++out.y;
        if (in_x[v]) out.z_set.push_back(static_cast<VertexId>(v));
    }
    out.z = out.z_set.size();
    return out;
}

double reach_low(std::size_t n) {
    const double nn = static_cast<double>(n);
    return std::cbrt(nn) * ln(nn);
}

double reach_high(std::size_t n) {
    const double nn = static_cast<double>(n);
    return std::pow(nn, 1.0 / 3.0 + theory::eps(n));
}

// Samples F_1(base) restricted to [0, cutoff] first; the draws are the same
// as for p = 1, so when the forest reaches `need` vertices before the cutoff
// the result equals the one on the full graph. Otherwise falls back to p = 1.
ForemostForest forest_on_f1(const BaseGraph& base, const std::vector<VertexId>& sources, std::size_t need,
                            double cutoff, const RngStream& rng) {
    if (cutoff < 1.0) {
        RngStream local = rng;
        const TemporalGraph g = sample_fp_of_g(base, cutoff, local);
        ForemostForest f = grow_forest(g, sources, TimeWindow::full(), need);
        if (f.added.size() >= need) return f;
    }
    RngStream local = rng;
    const TemporalGraph g = sample_fp_of_g(base, 1.0, local);
    return grow_forest(g, sources, TimeWindow::full(), need);
}

void format_double(std::ostream& os, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    os << buf;
}

}  // namespace

WindowProtocol parse_protocol(const std::string& name) {
    if (name == "whole") return WindowProtocol::whole;
    if (name == "thirds") return WindowProtocol::thirds;
    if (name == "fifths") return WindowProtocol::fifths;
    throw DomainError("unknown window protocol '" + name + "'");
}

ComponentMethod parse_method(const std::string& name) {
    if (name == "open" || name == "bounds") return ComponentMethod::open;
    if (name == "open_closed" || name == "peel") return ComponentMethod::open_closed;
    throw DomainError("unknown component method '" + name + "'");
}

void SweepConfig::validate() const {
    if (trials < 1) throw DomainError("sweep: trials must be >= 1");
    if (n_values.empty() || c_grid.empty()) throw DomainError("sweep: empty n or c grid");
    for (auto n : n_values)
        if (n < 2) throw DomainError("sweep: n must be >= 2");
    for (auto c : c_grid)
        if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("sweep: c must be finite and >= 0");
    if (protocol != WindowProtocol::whole)
        for (auto n : n_values)
            if (n < 16) throw DomainError("sweep: window protocols need n >= 16");
}

std::uint64_t trial_stream(std::size_t n, std::size_t trial) {
    return (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(trial);
}

TrialRecord run_trial(std::size_t n, double c, std::size_t trial, std::uint64_t master_seed,
                      WindowProtocol protocol, ComponentMethod method) {
    TrialRecord rec;
    rec.n = n;
    rec.c = c;
    rec.p = p_of(c, n);
    rec.trial = trial;
    rec.seed = master_seed;
    const TemporalGraph g = sample_fnp(n, rec.p, RngStream(master_seed, trial_stream(n, trial)));
    {
        const ReachMatrix reach = all_pairs_arrival(g, TimeWindow::full(), false);
        const ComponentEstimate open = largest_open_bounds(reach);
        rec.open_lower = open.lower();
        rec.open_upper = open.upper_bound;
        rec.pair_reached = n >= 2 && reach.reaches(0, 1);
        for (std::size_t count : reach.reach_counts()) rec.source_count += count == n;
        rec.temporally_connected = rec.source_count == n;
    }
    rec.closed_lower = 1;
    if (method == ComponentMethod::open_closed) {
        // both are certified lower bounds; keep the better one
        rec.closed_lower = std::max(largest_closed_peel(g, TimeWindow::full(), rec.open_upper).lower(),
                                    largest_closed_core(g, TimeWindow::full(), rec.open_upper).lower());
    }
    if (protocol != WindowProtocol::whole) {
        const double frac = protocol == WindowProtocol::thirds ? 1.0 / 3.0 : 2.0 / 5.0;
        const TimeWindow early{0.0, frac * rec.p};
        const TimeWindow late{(1.0 - frac) * rec.p, rec.p};
        rec.z_size = measure_z(g, early, late, reach_low(n), reach_high(n)).z;
    }
    return rec;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const std::size_t per_n = cfg.c_grid.size() * cfg.trials;
    const std::size_t total = cfg.n_values.size() * per_n;
    std::vector<std::optional<TrialRecord>> slots(total);
    std::vector<std::string> errors(total);
    detail::parallel_for(total, cfg.threads, [&](std::size_t i) {
        const std::size_t n = cfg.n_values[i / per_n];
        const double c = cfg.c_grid[(i % per_n) / cfg.trials];
        const std::size_t trial = i % cfg.trials;
        try {
            slots[i] = run_trial(n, c, trial, cfg.master_seed, cfg.protocol, cfg.method);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    SweepResult result;
    for (std::size_t i = 0; i < total; ++i) {
        if (slots[i]) {
            result.records.push_back(*slots[i]);
        } else {
            result.failures.push_back({cfg.n_values[i / per_n], cfg.c_grid[(i % per_n) / cfg.trials],
                                       i % cfg.trials, errors[i]});
        }
    }
    return result;
}

void write_sweep_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
    os << kSweepCsvHeader << '\n';
    for (const auto& r : records) {
        os << r.n << ',';
        format_double(os, r.c);
        os << ',';
        format_double(os, r.p);
        os << ',' << r.trial << ',' << r.seed << ',' << r.open_lower << ',' << r.open_upper << ','
           << r.closed_lower << ',' << (r.pair_reached ? 1 : 0) << ',' << r.source_count << ','
           << (r.temporally_connected ? 1 : 0) << ',' << r.z_size << '\n';
    }
}

std::string sweep_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream os;
    write_sweep_csv(os, records);
    return os.str();
}

std::vector<SweepPoint> aggregate(const std::vector<TrialRecord>& records) {
    std::vector<SweepPoint> points;
    std::vector<std::vector<double>> lowers;
    for (const auto& r : records) {
        auto it = std::find_if(points.begin(), points.end(),
                               [&](const SweepPoint& p) { return p.n == r.n && p.c == r.c; });
        if (it == points.end()) {
            points.push_back({r.n, r.c});
            lowers.emplace_back();
            it = points.end() - 1;
        }
        auto& p = *it;
        p.trials++;
        p.mean_open_lower += static_cast<double>(r.open_lower);
        p.mean_open_upper += static_cast<double>(r.open_upper);
        p.mean_closed_lower += static_cast<double>(r.closed_lower);
        p.pair_rate += r.pair_reached ? 1.0 : 0.0;
        p.tc_rate += r.temporally_connected ? 1.0 : 0.0;
        lowers[static_cast<std::size_t>(it - points.begin())].push_back(static_cast<double>(r.open_lower));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto& p = points[i];
        const double t = static_cast<double>(p.trials);
        p.mean_open_lower /= t;
        p.mean_open_upper /= t;
        p.mean_closed_lower /= t;
        p.pair_rate /= t;
        p.tc_rate /= t;
        if (p.trials > 1) {
            double ss = 0.0;
            for (double x : lowers[i]) ss += (x - p.mean_open_lower) * (x - p.mean_open_lower);
            p.se_open_lower = std::sqrt(ss / (t - 1.0)) / std::sqrt(t);
        }
    }
    return points;
}

double crossing_point(const std::vector<double>& c_grid, const std::vector<double>& curve, double level) {
    if (c_grid.size() != curve.size() || c_grid.empty()) throw DomainError("crossing_point: grid/curve mismatch");
    if (curve[0] >= level) return c_grid[0];
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (curve[i] >= level) {
            const double f0 = curve[i - 1], f1 = curve[i];
            return c_grid[i - 1] + (level - f0) * (c_grid[i] - c_grid[i - 1]) / (f1 - f0);
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

PhaseRecord run_phase_protocol(std::size_t n, std::uint64_t seed, std::size_t sample_pairs) {
    if (n < 16) throw DomainError("run_phase_protocol: requires n >= 16");
    PhaseRecord rec;
    rec.n = n;
    const double base = ln(static_cast<double>(n)) / static_cast<double>(n);
    rec.p = std::min(1.0, (1.0 + theory::eps(n)) * base);
    rec.p1 = rec.p / 3.0;
    rec.p2 = 2.0 * rec.p / 3.0;
    rec.reach_low = reach_low(n);
    rec.reach_high = reach_high(n);

    RngStream rng(seed, 0);
    const TemporalGraph g = sample_fnp(n, rec.p, rng);
    const ZMeasure z = measure_z(g, {0.0, rec.p1}, {rec.p2, rec.p}, rec.reach_low, rec.reach_high);
    rec.x_size = z.x;
    rec.y_size = z.y;
    rec.z_size = z.z;
    if (z.z < 2) return rec;
    RngStream pick(seed, 1);
    for (std::size_t i = 0; i < sample_pairs; ++i) {
        const VertexId from = z.z_set[pick.below(z.z)];
        VertexId to = from;
        while (to == from) to = z.z_set[pick.below(z.z)];
        const ForemostForest f = grow_forest(g, {from}, {0.0, rec.p}, n);
        ++rec.pairs_checked;
        rec.pairs_reached += f.reached(to) ? 1 : 0;
    }
    return rec;
}

double WaitingSummary::fraction_capped_within() const {
    if (trials.empty()) return 0.0;
    auto hits = std::count_if(trials.begin(), trials.end(),
                              [&](const WaitingTrial& t) { return t.dev_capped <= capped_window; });
    return static_cast<double>(hits) / static_cast<double>(trials.size());
}

double WaitingSummary::fraction_harmonic_within() const {
    if (trials.empty()) return 0.0;
    auto hits = std::count_if(trials.begin(), trials.end(),
                              [&](const WaitingTrial& t) { return t.dev_harmonic <= harmonic_window; });
    return static_cast<double>(hits) / static_cast<double>(trials.size());
}

double WaitingSummary::fraction_estimate_within() const {
    if (trials.empty()) return 0.0;
    auto hits = std::count_if(trials.begin(), trials.end(),
                              [&](const WaitingTrial& t) { return t.dev_estimate <= estimate_window; });
    return static_cast<double>(hits) / static_cast<double>(trials.size());
}

WaitingSummary run_waiting_time_study(std::size_t n, std::size_t s, std::size_t trials, std::uint64_t master_seed,
                                      unsigned threads) {
    if (n < 16) throw DomainError("run_waiting_time_study: requires n >= 16");
    if (s < 1 || s > n) throw DomainError("run_waiting_time_study: requires 1 <= s <= n");
    WaitingSummary sum;
    sum.n = n;
    sum.s = s;
    const double nn = static_cast<double>(n);
    const double llog = ln(ln(nn));
    sum.capped_window = 2.0 * std::pow(ln(nn), 0.8) / nn;
    sum.harmonic_window = 2.0 * llog / nn;
    sum.estimate_window = (2.0 * llog + 3.0) / nn;
    if (n < 2 * s + 1) {
        sum.empty_range = true;
        return sum;
    }
    sum.k_first = s;
    sum.k_last = n - s - 1;
    const std::size_t need = sum.k_last - s + 1;
    const double cutoff = std::min(1.0, 3.0 * theory::favsum_estimate(s, sum.k_last, n).value + 10.0 / nn);
    const BaseGraph kn = BaseGraph::complete(n);

    sum.trials.resize(trials);
    detail::parallel_for(trials, threads, [&](std::size_t t) {
        RngStream rng(master_seed, t);
        const auto sources = random_subset(n, s, rng);
        const ForemostForest f = forest_on_f1(kn, sources, need, cutoff, rng);
        const WaitingTimes w = waiting_times(f, n);
        WaitingTrial out;
        double harmonic = 0.0;
        for (std::size_t k = s; k <= sum.k_last && k - s < f.added.size(); ++k) {
            const double kk = static_cast<double>(k);
            harmonic += 1.0 / (kk * (nn - kk) + 1.0);
            const double y = f.added[k - s].label;
            const double estimate = (ln(kk) - ln(static_cast<double>(s)) + ln(static_cast<double>(n - s + 1)) -
                                     ln(static_cast<double>(n - k))) /
                                    nn;
            out.dev_capped = std::max(out.dev_capped, std::abs(w.y_capped[k - s] - harmonic));
            out.dev_harmonic = std::max(out.dev_harmonic, std::abs(y - harmonic));
            out.dev_estimate = std::max(out.dev_estimate, std::abs(y - estimate));
        }
        if (f.added.size() < need) {
            // Unreached vertices: the deviation is unbounded.
            out.dev_capped = out.dev_harmonic = out.dev_estimate = std::numeric_limits<double>::infinity();
        }
        sum.trials[t] = out;
    });
    return sum;
}

TargetSetSummary run_target_set_study(std::size_t n, std::size_t s_size, std::size_t t_size, double p,
                                      std::size_t trials, std::uint64_t master_seed, unsigned threads) {
    if (n < 16) throw DomainError("run_target_set_study: requires n >= 16");
    if (s_size < 1 || t_size < 1 || s_size > n || t_size > n)
        throw DomainError("run_target_set_study: set sizes must lie in [1, n]");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("run_target_set_study: p outside [0,1]");
    const double nn = static_cast<double>(n);
    const double removed_p = (2.0 / 3.0) * (1.0 + theory::eps(n)) * ln(nn) / nn;
    const double max_removed_degree = ln(nn) * ln(nn);

    std::vector<char> hit(trials, 0);
    std::vector<std::size_t> min_degree(trials, n);
    detail::parallel_for(trials, threads, [&](std::size_t t) {
        RngStream rng(master_seed, t);
        BaseGraph removed = sample_gnp(n, removed_p, rng);
        while (static_cast<double>(removed.max_degree()) > max_removed_degree) removed = sample_gnp(n, removed_p, rng);
        const BaseGraph base = complement_base(n, removed.edge_list());
        min_degree[t] = base.min_degree();
        const auto s_set = random_subset(n, s_size, rng);
        const auto t_set = random_subset(n, t_size, rng);
        const TemporalGraph g = sample_fp_of_g(base, p, rng);
        const ForemostForest f = grow_forest(g, s_set, TimeWindow::full(), n);
        hit[t] = std::any_of(t_set.begin(), t_set.end(), [&](VertexId v) { return f.reached(v); });
    });
    TargetSetSummary out;
    out.trials = trials;
    out.hits = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
    out.min_base_degree = trials ? *std::min_element(min_degree.begin(), min_degree.end()) : 0;
    return out;
}

LadderResult run_threshold_ladder(std::size_t n, const std::vector<double>& c_grid, std::size_t trials,
                                  std::uint64_t master_seed, unsigned threads) {
    if (n < 2) throw DomainError("run_threshold_ladder: requires n >= 2");
    if (trials < 1) throw DomainError("run_threshold_ladder: trials must be >= 1");
    if (c_grid.empty() || !std::is_sorted(c_grid.begin(), c_grid.end()))
        throw DomainError("run_threshold_ladder: c grid must be non-empty and increasing");
    const std::size_t total = c_grid.size() * trials;
    std::vector<std::array<char, 3>> outcome(total);
    detail::parallel_for(total, threads, [&](std::size_t i) {
        const double c = c_grid[i / trials];
        const std::size_t trial = i % trials;
        const TemporalGraph g = sample_fnp(n, p_of(c, n), RngStream(master_seed, trial_stream(n, trial)));
        const ForemostForest f = grow_forest(g, {0}, TimeWindow::full(), n);
        const bool source = f.reached_count() == n;
        outcome[i] = {static_cast<char>(f.reached(1)), static_cast<char>(source),
                      static_cast<char>(source && is_temporally_connected(g))};
    });
    LadderResult out;
    out.n = n;
    out.c_grid = c_grid;
    for (std::size_t ci = 0; ci < c_grid.size(); ++ci) {
        double pair = 0, source = 0, tc = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto& o = outcome[ci * trials + t];
            pair += o[0];
            source += o[1];
            tc += o[2];
        }
        const double tt = static_cast<double>(trials);
        out.pair_curve.push_back(pair / tt);
        out.source_curve.push_back(source / tt);
        out.tc_curve.push_back(tc / tt);
    }
    out.c_pair = crossing_point(c_grid, out.pair_curve);
    out.c_source = crossing_point(c_grid, out.source_curve);
    out.c_tc = crossing_point(c_grid, out.tc_curve);
    return out;
}

UniformityResult run_added_vertex_uniformity(std::size_t n, std::size_t s_size, std::size_t trials,
                                             std::size_t checkpoint_k, std::uint64_t master_seed,
                                             UniformityBase base_kind, unsigned threads) {
    if (trials == 0) throw DomainError("run_added_vertex_uniformity: trials must be >= 1");
    if (s_size < 1 || 2 * s_size > n) throw DomainError("run_added_vertex_uniformity: requires 1 <= s <= n/2");
    if (checkpoint_k < s_size || checkpoint_k + s_size + 1 > n)
        throw DomainError("run_added_vertex_uniformity: checkpoint k outside [s, n - s - 1]");
    std::vector<VertexPair> matching;
    if (base_kind == UniformityBase::minus_matching)
        for (VertexId v = 0; v + 1 < n; v += 2) matching.emplace_back(v, v + 1);
    const BaseGraph base = BaseGraph::complement_of(n, matching);
    std::vector<VertexId> sources(s_size);
    for (std::size_t i = 0; i < s_size; ++i) sources[i] = static_cast<VertexId>(i);
    const std::size_t need = checkpoint_k - s_size + 1;
    const double nn = static_cast<double>(n);
    const double cutoff = std::min(1.0, 3.0 * theory::favsum_estimate(s_size, checkpoint_k, n).value + 10.0 / nn);

    std::vector<VertexId> added(trials, kNoVertex);
    detail::parallel_for(trials, threads, [&](std::size_t t) {
        const ForemostForest f = forest_on_f1(base, sources, need, cutoff, RngStream(master_seed, t));
        if (f.added.size() >= need) added[t] = f.added[need - 1].vertex;
    });

    UniformityResult out;
    out.n = n;
    out.s = s_size;
    out.k = checkpoint_k;
    out.trials = trials;
    out.counts.assign(n - s_size, 0);
    for (VertexId v : added) {
        if (v == kNoVertex) continue;
        ++out.counted;
        ++out.counts[v - s_size];
    }
    const double cells = static_cast<double>(n - s_size);
    const double expected = static_cast<double>(out.counted) / cells;
    for (std::size_t c : out.counts) {
        const double obs = static_cast<double>(c);
        if (out.counted > 0) {
            out.max_scaled_deviation =
                std::max(out.max_scaled_deviation, std::abs(obs / static_cast<double>(out.counted) - 1.0 / cells) * cells);
            out.chi_square += (obs - expected) * (obs - expected) / expected;
        }
    }
    out.dof = n - s_size - 1;
    if (out.counted > 0 && out.dof > 0) {
        boost::math::chi_squared dist(static_cast<double>(out.dof));
        out.p_value = boost::math::cdf(boost::math::complement(dist, out.chi_square));
    }
    return out;
}

std::vector<std::string> check_instance(const TemporalGraph& g) {
    std::vector<std::string> problems;
    const std::size_t n = g.vertex_count();
    const ReachMatrix oracle = all_pairs_arrival(g);
    for (VertexId v = 0; v < n; ++v) {
        const ForemostForest lit = foremost_forest(g, {v}, TimeWindow::full(), ForestMode::literal).forest;
        const ForemostForest swp = foremost_forest(g, {v}, TimeWindow::full(), ForestMode::sweep).forest;
        const std::string tag = "source " + std::to_string(v) + ": ";
        bool same = lit.added.size() == swp.added.size() && lit.root == swp.root;
        for (std::size_t i = 0; same && i < lit.added.size(); ++i) {
            const auto &a = lit.added[i], &b = swp.added[i];
            same = a.k == b.k && a.vertex == b.vertex && a.parent == b.parent && a.label == b.label;
        }
        if (!same) problems.push_back(tag + "literal and sweep forests differ");
        for (std::size_t i = 1; i < swp.added.size(); ++i)
            if (swp.added[i].label < swp.added[i - 1].label) problems.push_back(tag + "added labels decrease");
        for (const auto& step : swp.added)
            if (swp.root[step.parent] != step.parent && !(swp.arrival[step.parent] < step.label))
                problems.push_back(tag + "tree path not strictly increasing at " + std::to_string(step.vertex));
        for (VertexId w = 0; w < n; ++w) {
            const auto expected = oracle.arrival(v, w);
            if (swp.reached(w) != expected.has_value() || (expected && *expected != swp.arrival[w])) {
                problems.push_back(tag + "arrival mismatch at " + std::to_string(w));
                break;
            }
        }
    }
    if (n <= 16) {
        const MutualReachGraph mutual = mutual_reach_graph(oracle);
        std::size_t best = n > 0 ? 1 : 0;
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
            const auto size = static_cast<std::size_t>(std::popcount(mask));
            if (size <= best) continue;
            bool clique = true;
            for (VertexId a = 0; a < n && clique; ++a)
                for (VertexId b = a + 1; b < n && clique; ++b)
                    if (((mask >> a) & 1u) && ((mask >> b) & 1u)) clique = mutual.adjacent(a, b);
            if (clique) best = size;
        }
        if (largest_open_exact(mutual).lower() != best) problems.push_back("exact clique differs from subset search");
    }
    return problems;
}

SelftestReport run_oracle_selftest(std::size_t instances, std::size_t n_min, std::size_t n_max,
                                   std::uint64_t master_seed) {
    if (n_min < 1 || n_min > n_max) throw DomainError("run_oracle_selftest: requires 1 <= n_min <= n_max");
    SelftestReport report;
    auto run = [&](const TemporalGraph& g, const std::string& name) {
        ++report.instances;
        const auto problems = check_instance(g);
        if (problems.empty()) return;
        ++report.failures;
        for (const auto& p : problems) report.messages.push_back(name + ": " + p);
        if (!report.first_failure_tgf) report.first_failure_tgf = to_tgf(g);
    };
    run(TemporalGraph(4, {{0, 1, 0.1}, {1, 2, 0.2}, {2, 3, 0.3}, {0, 3, 0.4}}), "cycle regression");
    run(TemporalGraph(1, {}), "single vertex");
    run(TemporalGraph(2, {{0, 1, 0.5}}), "single edge");
    for (std::size_t i = 0; i < instances; ++i) {
        RngStream rng(master_seed, i);
        const std::size_t n = n_min + rng.below(n_max - n_min + 1);
        const double p = static_cast<double>(i % 10 + 1) / 10.0;
        run(sample_fnp(n, p, rng), "instance " + std::to_string(i) + " (n=" + std::to_string(n) + ")");
    }
    return report;
}

}  // namespace rstg::experiments
