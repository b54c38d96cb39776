#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rstg/bit_matrix.hpp"
#include "rstg/reachability.hpp"
#include "rstg/temporal_graph.hpp"

namespace rstg {

// u ~ v iff u reaches v and v reaches u. Open temporally connected
// components are exactly the maximal cliques of this graph: the membership
// condition only concerns ordered pairs, and the witnessing paths may leave
// the set, so a set qualifies iff all its pairs are adjacent here.
class MutualReachGraph {
public:
    MutualReachGraph() = default;
    explicit MutualReachGraph(BitMatrix adjacency) : adj_(std::move(adjacency)) {}

    std::size_t size() const { return adj_.size(); }
    bool adjacent(VertexId u, VertexId v) const { return adj_.test(u, v); }
    std::size_t degree(VertexId v) const { return adj_.row_count(v); }
    std::span<const BitMatrix::Word> neighbours(VertexId v) const { return adj_.row(v); }
    const BitMatrix& adjacency() const { return adj_; }

private:
    BitMatrix adj_;  // symmetric, zero diagonal
};

MutualReachGraph mutual_reach_graph(const ReachMatrix& reach);
MutualReachGraph mutual_reach_graph(const TemporalGraph& g, const TimeWindow& window = TimeWindow::full());

enum class ComponentKind { open, closed };

const char* to_string(ComponentKind kind);

// Certified bracket on the largest component: lower_set passes the verifier
// of its kind, and no component is larger than upper_bound.
struct ComponentEstimate {
    ComponentKind kind = ComponentKind::open;
    std::vector<VertexId> lower_set;  // sorted
    std::size_t upper_bound = 0;
    std::string method;

    std::size_t lower() const { return lower_set.size(); }
};

// Maximum clique of the mutual-reach graph by branch and bound with
// greedy-colouring pruning over a degeneracy ordering. Refuses n > cap.
ComponentEstimate largest_open_exact(const TemporalGraph& g, const TimeWindow& window = TimeWindow::full(),
                                     std::size_t cap = 64);
ComponentEstimate largest_open_exact(const MutualReachGraph& mutual, std::size_t cap = 64);

// lower: greedy clique (highest-degree seed, then the max-degree common
// neighbour) followed by one pass of (1,2)-swaps; upper: the smaller of the
// first-fit colouring number and max_v |reach(v) ∩ coreach(v)|.
ComponentEstimate largest_open_bounds(const TemporalGraph& g, const TimeWindow& window = TimeWindow::full());
ComponentEstimate largest_open_bounds(const ReachMatrix& reach);

// Every ordered pair of s reaches inside g[s] restricted to the window.
// Throws DomainError on an empty set.
bool verify_closed(const TemporalGraph& g, const std::vector<VertexId>& s,
                   const TimeWindow& window = TimeWindow::full());
// Every ordered pair of s reaches in g (paths may leave s).
bool verify_open(const TemporalGraph& g, const std::vector<VertexId>& s,
                 const TimeWindow& window = TimeWindow::full());

// Exhaustive subset search. Refuses n > cap; cap itself may not exceed 30.
ComponentEstimate largest_closed_exact_tiny(const TemporalGraph& g, const TimeWindow& window = TimeWindow::full(),
                                            std::size_t cap = 16);

// Peeling heuristic: while some ordered pair of the current set fails to
// reach inside the induced subgraph, drop the vertex with the most failures
// (as source plus as target), smallest id first on ties. upper_bound is the
// open upper bound (closed components are open-connected); pass it in when
// already known to skip recomputing it.
ComponentEstimate largest_closed_peel(const TemporalGraph& g, const TimeWindow& window = TimeWindow::full(),
                                      std::optional<std::size_t> open_upper = std::nullopt);

// Iterated core: S = V, then repeatedly replace S by the greedy clique of
// the mutual-reach graph of g[S] until the clique is all of S, which makes S
// closed. upper_bound as for the peel.
ComponentEstimate largest_closed_core(const TemporalGraph& g, const TimeWindow& window = TimeWindow::full(),
                                      std::optional<std::size_t> open_upper = std::nullopt);

}  // namespace rstg
