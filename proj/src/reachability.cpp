#include "rstg/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rstg/errors.hpp"
#include "rstg/theory.hpp"

namespace rstg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ForemostForest start_forest(const TemporalGraph& g, const std::vector<VertexId>& sources) {
    if (sources.empty()) throw DomainError("foremost_forest: empty source set");
    const std::size_t n = g.vertex_count();
    ForemostForest f;
    f.sources = sources;
    std::sort(f.sources.begin(), f.sources.end());
    f.sources.erase(std::unique(f.sources.begin(), f.sources.end()), f.sources.end());
    f.root.assign(n, kNoVertex);
    f.arrival.assign(n, kInf);
    for (VertexId s : f.sources) {
        if (s >= n) throw DomainError("foremost_forest: source " + std::to_string(s) + " out of range");
        f.root[s] = s;
        f.arrival[s] = 0.0;
    }
    return f;
}

void attach(ForemostForest& f, VertexId vertex, VertexId parent, double label) {
    f.root[vertex] = f.root[parent];
    f.arrival[vertex] = label;
    f.added.push_back({f.sources.size() + f.added.size(), vertex, parent, label});
}

void sweep(ForemostForest& f, const TemporalGraph& g, const TimeWindow& window, std::size_t stop_after) {
    if (f.added.size() >= stop_after) return;
    auto [first, last] = g.window_range(window);
    const auto& edges = g.edges();
    for (std::size_t i = first; i < last; ++i) {
        const auto& e = edges[i];
        const bool ru = f.reached(e.u);
        if (ru == f.reached(e.v)) continue;
        if (ru)
            attach(f, e.v, e.u, e.label);
        else
            attach(f, e.u, e.v, e.label);
        if (f.added.size() >= stop_after) return;
    }
}

bool is_source(const ForemostForest& f, VertexId v) { return f.root[v] == v; }

// Algorithm 1 as stated: repeatedly add the minimum-label edge of ext(G_F).
void literal(ForemostForest& f, const TemporalGraph& g, const TimeWindow& window) {
    auto [first, last] = g.window_range(window);
    const auto& edges = g.edges();
    while (true) {
        const TemporalEdge* best = nullptr;
        VertexId best_in = 0;
        for (std::size_t i = first; i < last; ++i) {
            const auto& e = edges[i];
            const bool ru = f.reached(e.u);
            if (ru == f.reached(e.v)) continue;
            const VertexId in = ru ? e.u : e.v;
            // The tree path to `in` must stay strictly increasing.
            if (!is_source(f, in) && !(f.arrival[in] < e.label)) continue;
            if (best == nullptr || e.label < best->label) {
                best = &e;
                best_in = in;
            }
        }
        if (best == nullptr) return;
        attach(f, best->other(best_in), best_in, best->label);
    }
}

}  // namespace

std::vector<VertexId> ForemostForest::reached_vertices() const {
    std::vector<VertexId> out;
    out.reserve(reached_count());
    for (VertexId v = 0; v < root.size(); ++v)
        if (root[v] != kNoVertex) out.push_back(v);
    return out;
}

std::size_t ForemostForest::truncation_index() const {
    const std::size_t n = root.size(), s = sources.size();
    return n >= s + 1 ? n - s - 1 : 0;
}

WaitingTimes waiting_times(const ForemostForest& forest, std::size_t n, double window_start) {
    WaitingTimes w;
    const std::size_t s = forest.sources.size();
    w.first_k = s;
    double prev = window_start;
    for (const auto& step : forest.added) {
        w.x.push_back(step.label - prev);
        prev = step.label;
    }
    if (n < 16) return w;
    double y = window_start;
    for (std::size_t i = 0; i < forest.added.size(); ++i) {
        const std::size_t k = s + i;
        if (k + s + 1 > n) break;
        const double capped = std::min(w.x[i], theory::truncation_c(k, n, s));
        w.x_capped.push_back(capped);
        y += capped;
        w.y_capped.push_back(y);
    }
    return w;
}

ForestRun foremost_forest(const TemporalGraph& g, const std::vector<VertexId>& sources,
                          const TimeWindow& window, ForestMode mode) {
    ForestRun run{start_forest(g, sources), {}};
    if (mode == ForestMode::literal)
        literal(run.forest, g, window);
    else
        sweep(run.forest, g, window, g.vertex_count());
    run.waiting = waiting_times(run.forest, g.vertex_count(), window.a);
    return run;
}

ForemostForest grow_forest(const TemporalGraph& g, const std::vector<VertexId>& sources,
                           const TimeWindow& window, std::size_t stop_after) {
    ForemostForest f = start_forest(g, sources);
    sweep(f, g, window, stop_after);
    return f;
}

std::optional<double> ReachMatrix::arrival(VertexId from, VertexId to) const {
    if (!reaches(from, to)) return std::nullopt;
    if (from == to) return 0.0;
    if (arrivals_.empty()) return std::nullopt;
    return arrivals_[static_cast<std::size_t>(from) * size() + to];
}

std::vector<VertexId> ReachMatrix::reach_set(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId w = 0; w < size(); ++w)
        if (reached_by_.test(w, v)) out.push_back(w);
    return out;
}

std::vector<VertexId> ReachMatrix::coreach_set(VertexId v) const {
    std::vector<VertexId> out;
    for_each_bit(reached_by_.row(v), [&](std::size_t u) { out.push_back(static_cast<VertexId>(u)); });
    return out;
}

std::vector<std::size_t> ReachMatrix::reach_counts() const { return reached_by_.column_counts(); }

std::vector<std::size_t> ReachMatrix::coreach_counts() const {
    std::vector<std::size_t> out(size());
    for (std::size_t v = 0; v < size(); ++v) out[v] = reached_by_.row_count(v);
    return out;
}

ReachMatrix all_pairs_arrival(const TemporalGraph& g, const TimeWindow& window, bool record_arrivals) {
    const std::size_t n = g.vertex_count();
    BitMatrix rows(n);
    for (std::size_t v = 0; v < n; ++v) rows.set(v, v);
    std::vector<double> arrivals;
    if (record_arrivals) {
        arrivals.assign(n * n, kInf);
        for (std::size_t v = 0; v < n; ++v) arrivals[v * n + v] = 0.0;
    }
    const std::size_t words = rows.words_per_row();
    std::vector<BitMatrix::Word> snapshot(words);

    auto [first, last] = g.window_range(window);
    const auto& edges = g.edges();
    for (std::size_t i = first; i < last; ++i) {
        const auto& e = edges[i];
        auto ru = rows.row(e.u);
        auto rv = rows.row(e.v);
        std::copy(ru.begin(), ru.end(), snapshot.begin());
        if (record_arrivals) {
            for (std::size_t w = 0; w < words; ++w) {
                BitMatrix::Word into_u = rv[w] & ~ru[w];
                BitMatrix::Word into_v = snapshot[w] & ~rv[w];
                while (into_u) {
                    std::size_t from = w * 64 + static_cast<std::size_t>(std::countr_zero(into_u));
                    arrivals[from * n + e.u] = e.label;
                    into_u &= into_u - 1;
                }
                while (into_v) {
                    std::size_t from = w * 64 + static_cast<std::size_t>(std::countr_zero(into_v));
                    arrivals[from * n + e.v] = e.label;
                    into_v &= into_v - 1;
                }
            }
        }
        for (std::size_t w = 0; w < words; ++w) {
            ru[w] |= rv[w];
            rv[w] |= snapshot[w];
        }
    }
    return ReachMatrix(std::move(rows), std::move(arrivals));
}

std::vector<VertexId> reach_set(const TemporalGraph& g, VertexId v, const TimeWindow& window) {
    return foremost_forest(g, {v}, window, ForestMode::sweep).forest.reached_vertices();
}

std::vector<VertexId> coreach_set(const TemporalGraph& g, VertexId v, const TimeWindow& window) {
    return reach_set(reverse_time(g), v, window.reversed());
}

bool is_temporal_source(const TemporalGraph& g, VertexId v, const TimeWindow& window) {
    if (v >= g.vertex_count()) throw DomainError("is_temporal_source: vertex out of range");
    return grow_forest(g, {v}, window, g.vertex_count()).reached_count() == g.vertex_count();
}

bool is_temporally_connected(const ReachMatrix& m) {
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m.reached_by().row_count(v) != m.size()) return false;
    return true;
}

bool is_temporally_connected(const TemporalGraph& g, const TimeWindow& window) {
    return is_temporally_connected(all_pairs_arrival(g, window, false));
}

}  // namespace rstg
