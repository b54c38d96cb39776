#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rstg/components.hpp"
#include "rstg/errors.hpp"
#include "rstg/experiments.hpp"
#include "rstg/random_models.hpp"
#include "rstg/reachability.hpp"
#include "rstg/theory.hpp"

using json = nlohmann::ordered_json;
using namespace rstg;
namespace ex = rstg::experiments;

namespace {

constexpr int kDomainExit = 2;
constexpr int kGateExit = 3;

struct Globals {
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::string out = "-";
    std::string format = "csv";
};

// Rows of named columns, printed as CSV or as a JSON array of objects.
struct Table {
    std::vector<std::string> cols;
    std::vector<std::vector<json>> rows;

    void add(std::vector<json> row) { rows.push_back(std::move(row)); }
};

std::string cell(const json& v) {
    if (v.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw DomainError("cannot open output file " + path);
        }
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void emit(const Globals& g, const Table& t, const json& meta = json::object()) {
    Sink sink(g.out);
    auto& os = sink.os();
    if (g.format == "json") {
        json doc = meta;
        json rows = json::array();
        for (const auto& r : t.rows) {
            json o;
            for (std::size_t i = 0; i < t.cols.size(); ++i) o[t.cols[i]] = r[i];
            rows.push_back(o);
        }
        doc["rows"] = rows;
        os << doc.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < t.cols.size(); ++i) os << (i ? "," : "") << t.cols[i];
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i]);
        os << '\n';
    }
}

TemporalGraph load_graph(const std::string& path) {
    if (path == "-") return read_tgf(std::cin);
    return load_tgf(path);
}

TimeWindow window_of(const std::vector<double>& w) {
    if (w.empty()) return TimeWindow::full();
    if (w.size() != 2) throw DomainError("--window takes two values a b");
    return TimeWindow::make(w[0], w[1]);
}

std::string join(const std::vector<VertexId>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random simple temporal graphs: foremost forests, temporal components, threshold experiments"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Globals g;
    app.add_option("--seed", g.seed, "master seed")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads")->capture_default_str();
    app.add_option("--out", g.out, "output file, - for stdout")->capture_default_str();
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "sample a temporal graph and write it as tgf");
    std::size_t gen_n = 10;
    double gen_p = 1.0;
    std::string gen_model = "fnp";
    gen->add_option("-n,--n", gen_n, "vertices")->required();
    gen->add_option("-p,--p", gen_p, "edge survival threshold p")->required();
    gen->add_option("--model", gen_model, "fnp | permutation")->check(CLI::IsMember({"fnp", "permutation"}));

    // forest
    auto* forest = app.add_subcommand("forest", "foremost forest from a source set");
    std::string graph_path = "-";
    std::vector<VertexId> sources{0};
    std::vector<double> window;
    std::string mode = "sweep";
    forest->add_option("--graph", graph_path, "tgf file, - for stdin");
    forest->add_option("--sources", sources, "source vertices");
    forest->add_option("--window", window, "time window a b")->expected(2);
    forest->add_option("--mode", mode, "literal | sweep")->check(CLI::IsMember({"literal", "sweep"}));

    // reach
    auto* reach = app.add_subcommand("reach", "reach and coreach sizes of every vertex");
    reach->add_option("--graph", graph_path, "tgf file, - for stdin");
    reach->add_option("--window", window, "time window a b")->expected(2);

    // components
    auto* comps = app.add_subcommand("components", "largest open / closed temporal components");
    std::string comp_method = "bounds";
    comps->add_option("--graph", graph_path, "tgf file, - for stdin");
    comps->add_option("--window", window, "time window a b")->expected(2);
    comps->add_option("--method", comp_method, "exact | bounds | tiny | peel | core")
        ->check(CLI::IsMember({"exact", "bounds", "tiny", "peel", "core"}));

    // theory
    auto* theory_cmd = app.add_subcommand("theory", "evaluate the closed-form quantities for given n");
    std::size_t th_n = 1000, th_s = 1, th_k = 0;
    theory_cmd->add_option("-n,--n", th_n, "n")->required();
    theory_cmd->add_option("-s,--s", th_s, "source-set size");
    theory_cmd->add_option("-k,--k", th_k, "index k (default n - s - 1)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "threshold sweep over n and c, p = c log n / n");
    ex::SweepConfig cfg;
    std::string protocol = "whole", method = "open";
    sweep->add_option("--n", cfg.n_values, "vertex counts")->required();
    sweep->add_option("--c", cfg.c_grid, "c grid")->required();
    sweep->add_option("--trials", cfg.trials, "trials per (n, c)");
    sweep->add_option("--protocol", protocol, "whole | thirds | fifths");
    sweep->add_option("--method", method, "open | open_closed");

    // phase
    auto* phase = app.add_subcommand("phase", "three-interval protocol: sizes of X, Y, Z and sampled Z pairs");
    std::size_t ph_n = 2000, ph_pairs = 30, ph_trials = 1;
    phase->add_option("-n,--n", ph_n, "n");
    phase->add_option("--pairs", ph_pairs, "sampled ordered pairs of Z");
    phase->add_option("--trials", ph_trials, "independent graphs");

    // waiting
    auto* waiting = app.add_subcommand("waiting", "waiting-time concentration study on F_1(K_n)");
    std::size_t w_n = 2000, w_s = 1, w_trials = 50;
    waiting->add_option("-n,--n", w_n, "n");
    waiting->add_option("-s,--s", w_s, "source-set size");
    waiting->add_option("--trials", w_trials, "trials");

    // target
    auto* target = app.add_subcommand("target", "probability that a forest from S meets T");
    std::size_t t_n = 2000, t_trials = 100;
    std::optional<std::size_t> t_s, t_t;
    std::optional<double> t_p;
    target->add_option("-n,--n", t_n, "n");
    target->add_option("--s-size", t_s, "|S| (default ceil(n^(1/3) log n))");
    target->add_option("--t-size", t_t, "|T| (default |S|)");
    target->add_option("-p,--p", t_p, "p (default (1 + 1/log log n) log n / (3n))");
    target->add_option("--trials", t_trials, "trials");

    // ladder
    auto* ladder = app.add_subcommand("ladder", "pair / source / connectivity curves and their crossings");
    std::size_t l_n = 1000, l_trials = 20;
    std::vector<double> l_grid;
    ladder->add_option("-n,--n", l_n, "n");
    ladder->add_option("--c", l_grid, "increasing c grid (default 0.4..4.4 step 0.2)");
    ladder->add_option("--trials", l_trials, "trials per grid point");

    // uniformity
    auto* unif = app.add_subcommand("uniformity", "distribution of the k-added vertex");
    std::size_t u_n = 200, u_s = 10, u_k = 100, u_trials = 10000;
    std::string u_base = "complete";
    unif->add_option("-n,--n", u_n, "n");
    unif->add_option("-s,--s", u_s, "source-set size");
    unif->add_option("-k,--k", u_k, "checkpoint k");
    unif->add_option("--trials", u_trials, "trials");
    unif->add_option("--base", u_base, "complete | minus_matching")
        ->check(CLI::IsMember({"complete", "minus_matching"}));

    // selftest
    auto* selftest = app.add_subcommand("selftest", "cross-check forests, all-pairs and cliques on random instances");
    std::size_t st_instances = 200, st_min = 5, st_max = 40;
    selftest->add_option("--instances", st_instances, "random instances");
    selftest->add_option("--n-min", st_min, "smallest n");
    selftest->add_option("--n-max", st_max, "largest n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kDomainExit;
    }

    try {
        if (*gen) {
            RngStream rng(g.seed, 0);
            const auto graph = gen_model == "fnp" ? sample_fnp(gen_n, gen_p, rng)
                                                  : sample_rstg_permutation(gen_n, gen_p, rng);
            if (g.format == "json") {
                Table t{{"u", "v", "label"}, {}};
                for (const auto& e : graph.edges()) t.add({e.u, e.v, e.label});
                emit(g, t, {{"n", gen_n}, {"p", gen_p}, {"seed", g.seed}});
            } else {
                Sink sink(g.out);
                write_tgf(sink.os(), graph);
            }
        } else if (*forest) {
            const auto graph = load_graph(graph_path);
            const auto run = foremost_forest(graph, sources, window_of(window),
                                             mode == "literal" ? ForestMode::literal : ForestMode::sweep);
            Table t{{"k", "vertex", "parent", "label", "x"}, {}};
            for (std::size_t i = 0; i < run.forest.added.size(); ++i) {
                const auto& s = run.forest.added[i];
                t.add({s.k, s.vertex, s.parent, s.label, run.waiting.x[i]});
            }
            emit(g, t, {{"sources", run.forest.sources}, {"reached", run.forest.reached_count()}});
        } else if (*reach) {
            const auto graph = load_graph(graph_path);
            const auto m = all_pairs_arrival(graph, window_of(window), false);
            const auto r = m.reach_counts();
            const auto c = m.coreach_counts();
            Table t{{"vertex", "reach", "coreach", "source", "sink"}, {}};
            const std::size_t n = graph.vertex_count();
            for (VertexId v = 0; v < n; ++v) t.add({v, r[v], c[v], r[v] == n, c[v] == n});
            emit(g, t, {{"temporally_connected", is_temporally_connected(m)}});
        } else if (*comps) {
            const auto graph = load_graph(graph_path);
            const auto w = window_of(window);
            ComponentEstimate est;
            if (comp_method == "exact")
                est = largest_open_exact(graph, w);
            else if (comp_method == "bounds")
                est = largest_open_bounds(graph, w);
            else if (comp_method == "tiny")
                est = largest_closed_exact_tiny(graph, w);
            else if (comp_method == "core")
                est = largest_closed_core(graph, w);
            else
                est = largest_closed_peel(graph, w);
            Table t{{"kind", "method", "lower", "upper", "members"}, {}};
            t.add({to_string(est.kind), est.method, est.lower(), est.upper_bound, join(est.lower_set)});
            emit(g, t);
        } else if (*theory_cmd) {
            namespace th = rstg::theory;
            if (th_k == 0) th_k = th_n >= 2 * th_s + 1 ? th_n - th_s - 1 : th_s;
            Table t{{"quantity", "value", "lower", "upper", "satisfied"}, {}};
            for (auto kind : {th::ThresholdKind::pairwise, th::ThresholdKind::source,
                              th::ThresholdKind::temporal_connectivity, th::ThresholdKind::giant_component})
                t.add({"threshold_p_" + std::string(th::to_string(kind)), th::threshold_p(kind, th_n), nullptr, nullptr,
                       nullptr});
            t.add({"harmonic_like_sum", th::harmonic_like_sum(th_s, th_k, th_n), nullptr, nullptr, nullptr});
            const auto fav = th::favsum_estimate(th_s, th_k, th_n);
            t.add({"favsum_estimate", fav.value, fav.lower, fav.upper, fav.satisfied});
            if (th_n >= 16) {
                t.add({"eps", th::eps(th_n), nullptr, nullptr, nullptr});
                t.add({"truncation_c", th::truncation_c(th_k, th_n, th_s), nullptr, nullptr, nullptr});
                if (2 * th_s <= th_n) {
                    const auto ck = th::ck_sum_sq(th_n, th_s);
                    t.add({"ck_sum_sq", ck.value, ck.lower, ck.upper, ck.satisfied});
                }
            }
            t.add({"lower_side_slack", th::lower_side_slack(th_n), nullptr, nullptr, nullptr});
            t.add({"two_hop_bound_sqrt_log_n", th::two_hop_bound(th_n, std::sqrt(std::log(double(th_n))), 0.8),
                   nullptr, nullptr, nullptr});
            emit(g, t, {{"n", th_n}, {"s", th_s}, {"k", th_k}});
        } else if (*sweep) {
            cfg.master_seed = g.seed;
            cfg.threads = g.threads;
            cfg.protocol = ex::parse_protocol(protocol);
            cfg.method = ex::parse_method(method);
            const auto res = ex::run_sweep(cfg);
            for (const auto& f : res.failures)
                std::cerr << "trial failed: n=" << f.n << " c=" << f.c << " trial=" << f.trial << ": " << f.message
                          << '\n';
            if (g.format == "csv") {
                Sink sink(g.out);
                ex::write_sweep_csv(sink.os(), res.records);
            } else {
                Table t{{"n", "c", "p", "trial", "seed", "open_lb", "open_ub", "closed_lb", "pair", "src_count", "tc",
                         "z_size"},
                        {}};
                for (const auto& r : res.records)
                    t.add({r.n, r.c, r.p, r.trial, r.seed, r.open_lower, r.open_upper, r.closed_lower, r.pair_reached,
                           r.source_count, r.temporally_connected, r.z_size});
                emit(g, t, {{"failures", res.failures.size()}});
            }
        } else if (*phase) {
            Table t{{"trial", "n", "p", "reach_low", "reach_high", "x", "y", "z", "z_fraction", "pairs", "reached"}, {}};
            for (std::size_t i = 0; i < ph_trials; ++i) {
                const auto r = ex::run_phase_protocol(ph_n, g.seed + i, ph_pairs);
                t.add({i, r.n, r.p, r.reach_low, r.reach_high, r.x_size, r.y_size, r.z_size,
                       static_cast<double>(r.z_size) / static_cast<double>(r.n), r.pairs_checked, r.pairs_reached});
            }
            emit(g, t);
        } else if (*waiting) {
            const auto r = ex::run_waiting_time_study(w_n, w_s, w_trials, g.seed, g.threads);
            Table t{{"trial", "dev_capped", "dev_harmonic", "dev_estimate"}, {}};
            for (std::size_t i = 0; i < r.trials.size(); ++i)
                t.add({i, r.trials[i].dev_capped, r.trials[i].dev_harmonic, r.trials[i].dev_estimate});
            emit(g, t,
                 {{"n", r.n}, {"s", r.s}, {"empty_range", r.empty_range}, {"capped_window", r.capped_window},
                  {"harmonic_window", r.harmonic_window}, {"estimate_window", r.estimate_window},
                  {"fraction_capped", r.fraction_capped_within()}, {"fraction_harmonic", r.fraction_harmonic_within()},
                  {"fraction_estimate", r.fraction_estimate_within()}});
            if (g.format == "csv")
                std::cerr << "within windows: capped " << r.fraction_capped_within() << ", harmonic "
                          << r.fraction_harmonic_within() << ", estimate " << r.fraction_estimate_within() << '\n';
        } else if (*target) {
            const double nn = static_cast<double>(t_n);
            if (t_n < 16) throw DomainError("target: requires n >= 16");
            const std::size_t s = t_s.value_or(static_cast<std::size_t>(std::ceil(std::cbrt(nn) * std::log(nn))));
            const std::size_t tt = t_t.value_or(s);
            const double p = t_p.value_or((1.0 + theory::eps(t_n)) * std::log(nn) / (3.0 * nn));
            const auto r = ex::run_target_set_study(t_n, s, tt, p, t_trials, g.seed, g.threads);
            Table t{{"n", "s_size", "t_size", "p", "trials", "hits", "hit_rate", "min_base_degree"}, {}};
            t.add({t_n, s, tt, p, r.trials, r.hits, r.hit_rate(), r.min_base_degree});
            emit(g, t);
        } else if (*ladder) {
            if (l_grid.empty())
                for (int i = 2; i <= 22; ++i) l_grid.push_back(0.2 * i);
            const auto r = ex::run_threshold_ladder(l_n, l_grid, l_trials, g.seed, g.threads);
            Table t{{"c", "pair", "source", "tc"}, {}};
            for (std::size_t i = 0; i < r.c_grid.size(); ++i)
                t.add({r.c_grid[i], r.pair_curve[i], r.source_curve[i], r.tc_curve[i]});
            emit(g, t, {{"n", r.n}, {"c_pair", r.c_pair}, {"c_source", r.c_source}, {"c_tc", r.c_tc}});
            if (g.format == "csv")
                std::cerr << "crossings: pair " << r.c_pair << ", source " << r.c_source << ", tc " << r.c_tc << '\n';
        } else if (*unif) {
            const auto r = ex::run_added_vertex_uniformity(
                u_n, u_s, u_trials, u_k, g.seed,
                u_base == "complete" ? ex::UniformityBase::complete : ex::UniformityBase::minus_matching, g.threads);
            Table t{{"vertex", "count"}, {}};
            for (std::size_t i = 0; i < r.counts.size(); ++i) t.add({u_s + i, r.counts[i]});
            emit(g, t,
                 {{"n", r.n}, {"s", r.s}, {"k", r.k}, {"trials", r.trials}, {"counted", r.counted},
                  {"max_scaled_deviation", r.max_scaled_deviation}, {"chi_square", r.chi_square}, {"dof", r.dof},
                  {"p_value", r.p_value}});
            if (g.format == "csv")
                std::cerr << "chi2 " << r.chi_square << " dof " << r.dof << " p " << r.p_value << ", max scaled dev "
                          << r.max_scaled_deviation << '\n';
        } else if (*selftest) {
            const auto rep = ex::run_oracle_selftest(st_instances, st_min, st_max, g.seed);
            Table t{{"instances", "failures", "passed"}, {}};
            t.add({rep.instances, rep.failures, rep.passed()});
            emit(g, t, {{"messages", rep.messages}});
            for (const auto& m : rep.messages) std::cerr << m << '\n';
            if (!rep.passed()) {
                if (rep.first_failure_tgf) std::cerr << "first failing instance:\n" << *rep.first_failure_tgf;
                return kGateExit;
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainExit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
