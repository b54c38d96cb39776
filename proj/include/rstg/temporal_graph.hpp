#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rstg {

using VertexId = std::uint32_t;

// Closed time interval [a, b] inside [0, 1].
struct TimeWindow {
    double a = 0.0;
    double b = 1.0;

    // Throws DomainError unless 0 <= a <= b <= 1.
    static TimeWindow make(double a, double b);
    static TimeWindow full() { return {0.0, 1.0}; }

    bool contains(double t) const { return a <= t && t <= b; }
    // The window seen by reverse_time: [1 - b, 1 - a].
    TimeWindow reversed() const { return {1.0 - b, 1.0 - a}; }
};

// Undirected edge with a single time label; stored with u < v.
struct TemporalEdge {
    VertexId u = 0;
    VertexId v = 0;
    double label = 0.0;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool operator==(const TemporalEdge&) const = default;
};

// Simple temporal graph: n vertices, every edge carries exactly one label,
// labels pairwise distinct, edges kept in ascending label order.
// Immutable after construction.
class TemporalGraph {
public:
    TemporalGraph() = default;

    // Validates every invariant: ids < n, u != v, finite labels in [0,1],
    // no repeated vertex pair, ascending and pairwise distinct labels.
    // Endpoints are canonicalised to u < v. Throws GraphFormatError.
    TemporalGraph(std::size_t n, std::vector<TemporalEdge> edges);

    // Same validation, but sorts the edges by label first.
    static TemporalGraph from_unsorted(std::size_t n, std::vector<TemporalEdge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<TemporalEdge>& edges() const { return edges_; }

    // Label of {u, v} if present. Linear scan.
    std::optional<double> label_of(VertexId u, VertexId v) const;

    // Index range [first, last) of edges whose label lies in w.
    std::pair<std::size_t, std::size_t> window_range(const TimeWindow& w) const;

    bool operator==(const TemporalGraph&) const = default;

private:
    friend class TrustedGraphBuilder;
    struct Unchecked {};
    TemporalGraph(Unchecked, std::size_t n, std::vector<TemporalEdge> edges)
        : n_(n), edges_(std::move(edges)) {}

    std::size_t n_ = 0;
    std::vector<TemporalEdge> edges_;
};

// Generators that guarantee simplicity and canonical endpoints by
// construction use this to skip the pair-uniqueness hash check.
class TrustedGraphBuilder {
public:
    // Precondition: edges canonical (u < v), pairs unique, labels in [0,1],
    // sorted ascending with pairwise distinct labels.
    static TemporalGraph build(std::size_t n, std::vector<TemporalEdge> edges) {
        return TemporalGraph(TemporalGraph::Unchecked{}, n, std::move(edges));
    }
};

// Sequence u_0..u_l joined by edges e_1..e_l.
struct TemporalPath {
    std::vector<VertexId> vertices;
    std::vector<TemporalEdge> edges;

    double arrival() const { return edges.empty() ? 0.0 : edges.back().label; }
};

// Result of induced_subgraph: the subgraph on |s| densely renumbered
// vertices, and to_parent[i] = original id of local vertex i (ascending).
struct InducedSubgraph {
    TemporalGraph graph;
    std::vector<VertexId> to_parent;
};

TemporalGraph restrict_window(const TemporalGraph& g, const TimeWindow& w);

// s may be unsorted and contain repeats. Throws DomainError on ids >= n.
InducedSubgraph induced_subgraph(const TemporalGraph& g, const std::vector<VertexId>& s);

// Maps every label t to 1 - t. A temporal (u,v)-path of g is a temporal
// (v,u)-path of the result. Applying it twice restores labels bit-exactly
// whenever labels are multiples of 2^-53 (everything the generators emit).
TemporalGraph reverse_time(const TemporalGraph& g);

bool is_temporal_path(const TemporalGraph& g, const TemporalPath& path);

// tgf v1: "n m" then m lines "u v label", ascending label order,
// labels printed with 17 significant digits.
void write_tgf(std::ostream& os, const TemporalGraph& g);
std::string to_tgf(const TemporalGraph& g);
TemporalGraph read_tgf(std::istream& is);
TemporalGraph parse_tgf(const std::string& text);
TemporalGraph load_tgf(const std::string& path);
void save_tgf(const std::string& path, const TemporalGraph& g);

}  // namespace rstg
