// Acceptance checks AC1..AC12. One PASS/FAIL line per criterion.
// Usage: acceptance [AC1 AC7 ...]   (no arguments runs all)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rstg/components.hpp"
#include "rstg/experiments.hpp"
#include "rstg/random_models.hpp"
#include "rstg/reachability.hpp"
#include "rstg/theory.hpp"

using namespace rstg;
using namespace rstg::experiments;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string num(double x) { return fmt("%.4g", x); }

TemporalGraph random_instance(RngStream& pick, std::size_t n_min, std::size_t n_max, std::uint64_t stream) {
    const std::size_t n = n_min + pick.below(n_max - n_min + 1);
    const double p = 0.1 * static_cast<double>(1 + pick.below(10));
    return sample_fnp(n, p, RngStream(kSeed, stream));
}

// 1: forest arrivals equal all-pairs rows bit for bit; literal == sweep.
Outcome ac1() {
    RngStream pick(kSeed, 1000);
    std::size_t bad = 0, checked = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto g = random_instance(pick, 5, 40, 1'000'000 + i);
        const auto m = all_pairs_arrival(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const auto lit = foremost_forest(g, {v}, TimeWindow::full(), ForestMode::literal).forest;
            const auto swp = foremost_forest(g, {v}, TimeWindow::full(), ForestMode::sweep).forest;
            bool ok = lit.arrival == swp.arrival && lit.root == swp.root && lit.added.size() == swp.added.size();
            for (std::size_t j = 0; ok && j < lit.added.size(); ++j)
                ok = lit.added[j].vertex == swp.added[j].vertex && lit.added[j].parent == swp.added[j].parent &&
                     lit.added[j].label == swp.added[j].label;
            for (VertexId w = 0; ok && w < g.vertex_count(); ++w) {
                const auto a = m.arrival(v, w);
                ok = a ? (swp.reached(w) && *a == swp.arrival[w]) : !swp.reached(w);
            }
            ++checked;
            bad += !ok;
        }
    }
    return {bad == 0, std::to_string(checked) + " sources, " + std::to_string(bad) + " mismatches"};
}

// 2: label order, strictly increasing tree paths, reached set = oracle.
Outcome ac2() {
    RngStream pick(kSeed, 2000);
    std::size_t bad = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const auto g = random_instance(pick, 2, 40, 2'000'000 + i);
        const std::size_t n = g.vertex_count();
        const std::size_t s_size = 1 + pick.below(std::min<std::size_t>(3, n));
        std::vector<VertexId> s;
        for (std::size_t j = 0; j < s_size; ++j) s.push_back(static_cast<VertexId>(pick.below(n)));
        const auto f = foremost_forest(g, s, TimeWindow::full(), ForestMode::literal).forest;
        bool ok = true;
        for (std::size_t j = 1; j < f.added.size(); ++j) ok &= f.added[j - 1].label <= f.added[j].label;
        std::vector<VertexId> parent(n, kNoVertex);
        std::vector<double> in_label(n, 0.0);
        for (const auto& st : f.added) {
            parent[st.vertex] = st.parent;
            in_label[st.vertex] = st.label;
        }
        for (VertexId v = 0; v < n && ok; ++v) {
            // walk to the root; labels must decrease strictly going up
            VertexId x = v;
            std::size_t steps = 0;
            while (parent[x] != kNoVertex && ok) {
                const VertexId up = parent[x];
                if (parent[up] != kNoVertex) ok &= in_label[up] < in_label[x];
                ok &= g.label_of(x, up) == in_label[x];
                x = up;
                ok &= ++steps <= n;
            }
        }
        std::set<VertexId> expected;
        for (VertexId src : s) {
            const auto arr = oracle::arrival_from(g, src, TimeWindow::full());
            for (VertexId v = 0; v < n; ++v)
                if (arr[v] != oracle::kInf) expected.insert(v);
        }
        const auto got = f.reached_vertices();
        ok &= std::vector<VertexId>(expected.begin(), expected.end()) == got;
        bad += !ok;
    }
    return {bad == 0, "1000 instances, " + std::to_string(bad) + " violations"};
}

// 3: exact open and closed vs exhaustive subsets; peel <= exact.
Outcome ac3() {
    RngStream pick(kSeed, 3000);
    std::size_t bad_open = 0, bad_closed = 0, bad_peel = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        const auto g = random_instance(pick, 2, 14, 3'000'000 + i);
        const auto open = oracle::max_component(g, false);
        const auto closed = oracle::max_component(g, true);
        bad_open += largest_open_exact(g).lower() != open;
        bad_closed += largest_closed_exact_tiny(g).lower() != closed;
        const auto peel = largest_closed_peel(g);
        bad_peel += !(peel.lower() <= closed && verify_closed(g, peel.lower_set));
    }
    return {bad_open + bad_closed + bad_peel == 0, "open/closed/peel mismatches " + std::to_string(bad_open) + "/" +
                                                       std::to_string(bad_closed) + "/" + std::to_string(bad_peel)};
}

// 4: |sum - estimate| <= 3/n, every 1 <= s <= k <= n-1.
Outcome ac4() {
    std::set<std::size_t> ns;
    for (std::size_t n = 2; n <= 200; ++n) ns.insert(n);
    for (int i = 1; i <= 12; ++i) ns.insert(static_cast<std::size_t>(std::lround(200.0 * std::pow(10.0, i / 12.0))));
    std::size_t points = 0, bad = 0;
    double worst = 0;  // max |sum - est| * n
    for (std::size_t n : ns) {
        for (std::size_t s = 1; s < n; ++s)
            for (std::size_t k = s; k < n; ++k) {
                const auto r = theory::favsum_estimate(s, k, n);
                const double sum = theory::harmonic_like_sum(s, k, n);
                worst = std::max(worst, std::abs(sum - r.value) * static_cast<double>(n));
                ++points;
                bad += !r.satisfied;
            }
    }
    return {bad == 0, std::to_string(points) + " points, " + std::to_string(bad) + " outside, max n|dev| = " +
                          num(worst)};
}

// 5: two-hop regime n=400, p = log n / sqrt n.
Outcome ac5() {
    const std::size_t n = 400;
    const double p = std::log(400.0) / std::sqrt(400.0);
    int connected = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        connected += is_temporally_connected(sample_fnp(n, p, RngStream(kSeed + seed, 5)));
    return {connected >= 99, std::to_string(connected) + "/100 temporally connected (gate 99)"};
}

// 6: capped waiting times track the harmonic-like sum.
Outcome ac6() {
    const auto w = run_waiting_time_study(2000, 1, 50, kSeed + 6);
    const double frac = w.fraction_capped_within();
    double worst = 0;
    for (const auto& t : w.trials) worst = std::max(worst, t.dev_capped);
    return {frac >= 0.9, "within " + num(w.capped_window) + " in " + num(100 * frac) + "% (gate 90%), max dev " +
                             num(worst)};
}

SweepResult threshold_sweep(std::size_t n, const std::vector<double>& grid, ComponentMethod method,
                            std::uint64_t seed) {
    SweepConfig cfg;
    cfg.n_values = {n};
    cfg.c_grid = grid;
    cfg.trials = 10;
    cfg.master_seed = seed;
    cfg.method = method;
    return run_sweep(cfg);
}

const SweepPoint* at(const std::vector<SweepPoint>& pts, double c) {
    for (const auto& p : pts)
        if (std::abs(p.c - c) < 1e-12) return &p;
    return nullptr;
}

// 7: open component jump around c = 1 at n=5000.
Outcome ac7() {
    const std::size_t n = 5000;
    const std::vector<double> grid{0.5, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2, 1.3, 1.5};
    const auto res = threshold_sweep(n, grid, ComponentMethod::open, kSeed + 7);
    if (!res.failures.empty()) return {false, "trial failure: " + res.failures[0].message};
    const auto pts = aggregate(res.records);
    const double nn = static_cast<double>(n);
    const double up07 = at(pts, 0.7)->mean_open_upper / nn;
    const double lo15 = at(pts, 1.5)->mean_open_lower / nn;
    std::vector<double> curve;
    bool monotone = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        curve.push_back(pts[i].mean_open_lower / nn);
        if (i > 0 && pts[i].mean_open_lower + pts[i].se_open_lower < pts[i - 1].mean_open_lower) monotone = false;
    }
    const double mid = crossing_point(grid, curve, 0.5);
    const bool pass = up07 <= 0.15 && lo15 >= 0.85 && mid >= 0.8 && mid <= 1.3 && monotone;
    std::string curve_text;
    for (double x : curve) curve_text += num(x) + " ";
    return {pass, "upper/n at 0.7 = " + num(up07) + " (<= 0.15), lower/n at 1.5 = " + num(lo15) +
                      " (>= 0.85), midpoint " + num(mid) + " in [0.8,1.3], monotone " + (monotone ? "yes" : "no") +
                      "; lower/n: " + curve_text};
}

// 8: closed components with peel at n=2000.
Outcome ac8() {
    const std::size_t n = 2000;
    const auto res = threshold_sweep(n, {0.7, 1.5}, ComponentMethod::open_closed, kSeed + 8);
    if (!res.failures.empty()) return {false, "trial failure: " + res.failures[0].message};
    const auto pts = aggregate(res.records);
    const double nn = static_cast<double>(n);
    const double closed15 = at(pts, 1.5)->mean_closed_lower / nn;
    const double up07 = at(pts, 0.7)->mean_open_upper / nn;
    return {closed15 >= 0.75 && up07 <= 0.15,
            "closed lower/n at 1.5 = " + num(closed15) + " (>= 0.75), upper/n at 0.7 = " + num(up07) + " (<= 0.15)"};
}

// 9: c_pair < c_source < c_tc inside their brackets.
Outcome ac9() {
    std::vector<double> grid;
    for (int i = 2; i <= 22; ++i) grid.push_back(0.2 * i);
    const auto r = run_threshold_ladder(5000, grid, 50, kSeed + 9);
    const bool pass = r.c_pair < r.c_source && r.c_source < r.c_tc && r.c_pair >= 0.6 && r.c_pair <= 1.4 &&
                      r.c_source >= 1.5 && r.c_source <= 2.5 && r.c_tc >= 2.4 && r.c_tc <= 3.6;
    return {pass, "c_pair " + num(r.c_pair) + " [0.6,1.4], c_source " + num(r.c_source) + " [1.5,2.5], c_tc " +
                      num(r.c_tc) + " [2.4,3.6]"};
}

// 10: S of size n^{1/3} log n reaches T at p = (1 + eps) log n / (3n).
Outcome ac10() {
    const std::size_t n = 2000;
    const double nn = static_cast<double>(n);
    const auto size = static_cast<std::size_t>(std::ceil(std::cbrt(nn) * std::log(nn)));
    const double p = (1.0 + theory::eps(n)) * std::log(nn) / (3.0 * nn);
    const auto r = run_target_set_study(n, size, size, p, 100, kSeed + 10);
    return {r.hit_rate() >= 0.95, "|S|=|T|=" + std::to_string(size) + ", hit rate " + num(r.hit_rate()) +
                                      " (gate 0.95), min base degree " + std::to_string(r.min_base_degree)};
}

// 11: k-added vertex uniform over V \ S under K_n.
Outcome ac11() {
    bool pass = true;
    std::string detail;
    for (std::size_t k : {10, 100, 189}) {
        const auto r = run_added_vertex_uniformity(200, 10, 100000, k, kSeed + 11 + k);
        pass &= r.counted == r.trials && r.p_value > 0.01;
        detail += "k=" + std::to_string(k) + ": chi2 " + num(r.chi_square) + " dof " + std::to_string(r.dof) +
                  " p " + num(r.p_value) + "; ";
    }
    return {pass, detail + "gate p > 0.01"};
}

// 12: byte-identical CSV across thread counts.
Outcome ac12() {
    SweepConfig cfg;
    cfg.n_values = {120, 300};
    cfg.c_grid = {0.5, 1.0, 2.0, 3.0};
    cfg.trials = 4;
    cfg.master_seed = kSeed + 12;
    cfg.protocol = WindowProtocol::thirds;
    cfg.method = ComponentMethod::open_closed;
    std::vector<std::string> outputs;
    for (unsigned threads : {1u, 2u, 4u, 7u}) {
        cfg.threads = threads;
        outputs.push_back(sweep_csv(run_sweep(cfg).records));
    }
    bool same = true;
    for (const auto& o : outputs) same &= o == outputs[0];
    return {same, "threads 1/2/4/7, " + std::to_string(outputs[0].size()) + " bytes each"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 oracle equivalence", ac1},
        {"AC2 foremost forest invariants", ac2},
        {"AC3 clique correspondence", ac3},
        {"AC4 harmonic-like sum sandwich", ac4},
        {"AC5 two-hop connectivity", ac5},
        {"AC6 waiting-time concentration", ac6},
        {"AC7 open component threshold", ac7},
        {"AC8 closed component threshold", ac8},
        {"AC9 threshold ladder", ac9},
        {"AC10 target-set reachability", ac10},
        {"AC11 k-added exchangeability", ac11},
        {"AC12 reproducibility", ac12},
    };
    const std::vector<double> limits{60, 60, 120, 30, 120, 300, 1200, 1800, 1800, 300, 300, 600};
    std::set<std::string> only(argv + 1, argv + argc);
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, fn] = criteria[i];
        const std::string id = name.substr(0, name.find(' '));
        if (!only.empty() && !only.count(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < limits[i];
        const bool pass = out.pass && in_time;
        failed += !pass;
        std::printf("%s %s: %s [%.1fs, limit %.0fs%s]\n", pass ? "PASS" : "FAIL", name.c_str(), out.detail.c_str(),
                    secs, limits[i], in_time ? "" : ", too slow");
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
