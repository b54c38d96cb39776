#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "rstg/bit_matrix.hpp"
#include "rstg/temporal_graph.hpp"

namespace rstg {

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// One forest edge. k follows the numbering in which the first added edge
// has index |S|, so after step k the forest spans k + 1 vertices.
struct ForestStep {
    std::size_t k = 0;
    VertexId vertex = 0;  // the newly reached vertex
    VertexId parent = 0;  // its already-reached neighbour
    double label = 0.0;   // Y_k
};

struct ForemostForest {
    std::vector<VertexId> sources;  // sorted, distinct
    std::vector<ForestStep> added;  // in the order edges entered the forest
    std::vector<VertexId> root;     // source whose tree holds v, or kNoVertex
    std::vector<double> arrival;    // foremost arrival; 0 for sources, +inf if unreached

    bool reached(VertexId v) const { return root[v] != kNoVertex; }
    std::size_t reached_count() const { return sources.size() + added.size(); }
    std::vector<VertexId> reached_vertices() const;
    // Largest k covered by the waiting-time analysis: n - |S| - 1.
    std::size_t truncation_index() const;
};

// Waiting times indexed from k = s = |S|; entry i belongs to k = s + i.
// x[i] = Y_k - Y_{k-1} with Y_{s-1} = window start. The capped series use
// c_k and cover k in [s, min(last added k, n - s - 1)]; they are left empty
// when c_k is undefined (n < 16).
struct WaitingTimes {
    std::size_t first_k = 0;
    std::vector<double> x;
    std::vector<double> x_capped;
    std::vector<double> y_capped;
};

enum class ForestMode { literal, sweep };

struct ForestRun {
    ForemostForest forest;
    WaitingTimes waiting;
};

// Foremost forest for `sources` in g restricted to `window`.
//
// `literal` executes the extend-by-minimum-label loop over ext(G_F) verbatim
// (O(m) per added vertex). `sweep` scans edges once in ascending label order
// and adds every edge with exactly one reached endpoint: when an edge with
// label t is scanned, every reached vertex was reached by a label < t (or is
// a source), so such an edge always extends the forest increasingly, and it
// is the minimum-label extension available. Both modes return identical
// forests. Throws DomainError if sources is empty or holds invalid ids.
ForestRun foremost_forest(const TemporalGraph& g, const std::vector<VertexId>& sources,
                          const TimeWindow& window = TimeWindow::full(),
                          ForestMode mode = ForestMode::sweep);

// Sweep that stops once `stop_after` vertices beyond the sources are reached.
ForemostForest grow_forest(const TemporalGraph& g, const std::vector<VertexId>& sources,
                           const TimeWindow& window, std::size_t stop_after);

// Waiting-time series for a finished forest on n vertices.
WaitingTimes waiting_times(const ForemostForest& forest, std::size_t n, double window_start = 0.0);

// All-pairs foremost reachability. Row v holds the set of vertices that
// reach v ("who reaches me"); reflexive.
class ReachMatrix {
public:
    ReachMatrix() = default;
    ReachMatrix(BitMatrix reached_by, std::vector<double> arrivals)
        : reached_by_(std::move(reached_by)), arrivals_(std::move(arrivals)) {}

    std::size_t size() const { return reached_by_.size(); }
    bool reaches(VertexId from, VertexId to) const { return reached_by_.test(to, from); }
    bool has_arrivals() const { return !arrivals_.empty(); }
    // Foremost arrival from -> to; 0 on the diagonal; nullopt if unreachable
    // or arrivals were not recorded.
    std::optional<double> arrival(VertexId from, VertexId to) const;

    std::span<const BitMatrix::Word> reached_by_row(VertexId v) const { return reached_by_.row(v); }
    const BitMatrix& reached_by() const { return reached_by_; }

    std::vector<VertexId> reach_set(VertexId v) const;    // vertices v reaches
    std::vector<VertexId> coreach_set(VertexId v) const;  // vertices reaching v
    std::vector<std::size_t> reach_counts() const;        // |reach_set(v)| for all v
    std::vector<std::size_t> coreach_counts() const;      // |coreach_set(v)| for all v

private:
    BitMatrix reached_by_;
    std::vector<double> arrivals_;  // row-major [from * n + to], +inf if unreachable
};

// Streaming oracle: for edge {u,v}@t in ascending order, snapshot the sets
// A (reaching u) and B (reaching v), then row_v |= A and row_u |= B,
// recording arrival t for every newly set entry. With record_arrivals false
// only the boolean relation is built (n^2/8 bytes).
ReachMatrix all_pairs_arrival(const TemporalGraph& g, const TimeWindow& window = TimeWindow::full(),
                              bool record_arrivals = true);

std::vector<VertexId> reach_set(const TemporalGraph& g, VertexId v,
                                const TimeWindow& window = TimeWindow::full());
// reach_set of v in reverse_time(g) over the reversed window.
std::vector<VertexId> coreach_set(const TemporalGraph& g, VertexId v,
                                  const TimeWindow& window = TimeWindow::full());

bool is_temporal_source(const TemporalGraph& g, VertexId v,
                        const TimeWindow& window = TimeWindow::full());
bool is_temporally_connected(const TemporalGraph& g, const TimeWindow& window = TimeWindow::full());
bool is_temporally_connected(const ReachMatrix& m);

}  // namespace rstg
