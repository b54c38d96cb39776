#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "rstg/rng.hpp"
#include "rstg/temporal_graph.hpp"

namespace rstg {

using VertexPair = std::pair<VertexId, VertexId>;

// Static simple graph used as the base of F_p(G).
//
// Two storage modes: explicit (adjacency lists of present edges) for sparse
// graphs such as G(n,p) samples, and complemented (adjacency lists of the
// *missing* edges) for K_n and near-complete graphs, so K_20000 costs
// nothing to hold. Edge enumeration order is the same in both modes:
// lexicographic by (u, v) with u < v.
class BaseGraph {
public:
    static BaseGraph complete(std::size_t n);
    static BaseGraph empty(std::size_t n);
    // Throws DomainError on self-loops, repeated pairs or ids >= n.
    static BaseGraph from_edges(std::size_t n, const std::vector<VertexPair>& edges);
    // K_n without the listed pairs (repeats tolerated).
    static BaseGraph complement_of(std::size_t n, const std::vector<VertexPair>& removed);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const;
    bool has_edge(VertexId u, VertexId v) const;
    std::size_t degree(VertexId v) const;
    std::size_t min_degree() const;  // delta(G)
    std::size_t max_degree() const;  // Delta(G)

    std::vector<VertexPair> edge_list() const;

    template <class F>
    void for_each_edge(F&& f) const {
        for (VertexId u = 0; u < n_; ++u) {
            const auto& lst = adj_[u];
            if (!complemented_) {
                for (VertexId v : lst)
                    if (v > u) f(u, v);
                continue;
            }
            auto it = std::upper_bound(lst.begin(), lst.end(), u);
            for (VertexId v = u + 1; v < n_; ++v) {
                if (it != lst.end() && *it == v) {
                    ++it;
                    continue;
                }
                f(u, v);
            }
        }
    }

private:
    BaseGraph(std::size_t n, bool complemented, std::vector<std::vector<VertexId>> adj)
        : n_(n), complemented_(complemented), adj_(std::move(adj)) {}

    std::size_t n_ = 0;
    bool complemented_ = false;
    // Sorted, duplicate-free neighbour lists (of present or missing edges).
    std::vector<std::vector<VertexId>> adj_;
};

// F_p(G): every base edge draws an independent uniform label, edges with
// label > p are dropped, retained labels are not rescaled. Exactly one draw
// is consumed per base edge in enumeration order, so for a fixed stream the
// graphs for p < q are nested (the p-graph is the q-graph restricted to
// [0, p]).
TemporalGraph sample_fp_of_g(const BaseGraph& base, double p, RngStream& rng);
TemporalGraph sample_fp_of_g(const BaseGraph& base, double p, RngStream&& rng);

// F_{n,p} = F_p(K_n).
TemporalGraph sample_fnp(std::size_t n, double p, RngStream& rng);
TemporalGraph sample_fnp(std::size_t n, double p, RngStream&& rng);

// RSTG permutation model: G ~ G(n,p), then a uniform random edge order;
// the rank-i edge (1-based) gets label (i - 0.5) / m.
TemporalGraph sample_rstg_permutation(std::size_t n, double p, RngStream& rng);

// Static Erdos-Renyi G(n,p).
BaseGraph sample_gnp(std::size_t n, double p, RngStream& rng);

// K_n minus the revealed pairs.
BaseGraph complement_base(std::size_t n, const std::vector<VertexPair>& revealed);

// k distinct vertices drawn uniformly from [0, n), returned sorted.
std::vector<VertexId> random_subset(std::size_t n, std::size_t k, RngStream& rng);

}  // namespace rstg
