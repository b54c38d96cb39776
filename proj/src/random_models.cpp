#include "rstg/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rstg/errors.hpp"

namespace rstg {

namespace {

void check_probability(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(who) + ": p must lie in [0,1]");
}

std::vector<std::vector<VertexId>> adjacency_from(std::size_t n, const std::vector<VertexPair>& pairs,
                                                  bool tolerate_repeats) {
    std::vector<std::vector<VertexId>> adj(n);
    for (auto [u, v] : pairs) {
        if (u >= n || v >= n) throw DomainError("base graph: vertex id out of range");
        if (u == v) throw DomainError("base graph: self-loop");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& lst : adj) {
        std::sort(lst.begin(), lst.end());
        auto last = std::unique(lst.begin(), lst.end());
        if (last != lst.end() && !tolerate_repeats) throw DomainError("base graph: repeated pair");
        lst.erase(last, lst.end());
    }
    return adj;
}

}  // namespace

BaseGraph BaseGraph::complete(std::size_t n) {
    return BaseGraph(n, true, std::vector<std::vector<VertexId>>(n));
}

BaseGraph BaseGraph::empty(std::size_t n) {
    return BaseGraph(n, false, std::vector<std::vector<VertexId>>(n));
}

BaseGraph BaseGraph::from_edges(std::size_t n, const std::vector<VertexPair>& edges) {
    return BaseGraph(n, false, adjacency_from(n, edges, false));
}

BaseGraph BaseGraph::complement_of(std::size_t n, const std::vector<VertexPair>& removed) {
    return BaseGraph(n, true, adjacency_from(n, removed, true));
}

std::size_t BaseGraph::edge_count() const {
    std::size_t listed = 0;
    for (const auto& lst : adj_) listed += lst.size();
    listed /= 2;
    return complemented_ ? n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2 - listed : listed;
}

bool BaseGraph::has_edge(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_ || u == v) return false;
    const auto& lst = adj_[u];
    bool listed = std::binary_search(lst.begin(), lst.end(), v);
    return complemented_ ? !listed : listed;
}

std::size_t BaseGraph::degree(VertexId v) const {
    return complemented_ ? n_ - 1 - adj_[v].size() : adj_[v].size();
}

std::size_t BaseGraph::min_degree() const {
    if (n_ == 0) return 0;
    std::size_t d = degree(0);
    for (VertexId v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::size_t BaseGraph::max_degree() const {
    std::size_t d = 0;
    for (VertexId v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<VertexPair> BaseGraph::edge_list() const {
    std::vector<VertexPair> out;
    for_each_edge([&](VertexId u, VertexId v) { out.emplace_back(u, v); });
    return out;
}

TemporalGraph sample_fp_of_g(const BaseGraph& base, double p, RngStream& rng) {
    check_probability(p, "sample_fp_of_g");
    std::vector<TemporalEdge> edges;
    if (p <= 0.0) {
        // Still consume one draw per base edge so streams stay aligned with other p.
        base.for_each_edge([&](VertexId, VertexId) { (void)rng.next_u64(); });
        return TrustedGraphBuilder::build(base.vertex_count(), {});
    }
    base.for_each_edge([&](VertexId u, VertexId v) {
        double label = rng.uniform01();
        if (label <= p) edges.push_back({u, v, label});
    });
    auto by_label = [](const TemporalEdge& x, const TemporalEdge& y) { return x.label < y.label; };
    std::sort(edges.begin(), edges.end(), by_label);
    // Equal labels occur with probability ~m^2 2^-54; redraw the later one.
    for (bool clean = false; !clean;) {
        clean = true;
        for (std::size_t i = 1; i < edges.size(); ++i) {
            if (edges[i].label == edges[i - 1].label) {
                double label;
                do label = rng.uniform01();
                while (label > p);
                edges[i].label = label;
                clean = false;
            }
        }
        if (!clean) std::sort(edges.begin(), edges.end(), by_label);
    }
    return TrustedGraphBuilder::build(base.vertex_count(), std::move(edges));
}

TemporalGraph sample_fp_of_g(const BaseGraph& base, double p, RngStream&& rng) {
    return sample_fp_of_g(base, p, rng);
}

TemporalGraph sample_fnp(std::size_t n, double p, RngStream& rng) {
    return sample_fp_of_g(BaseGraph::complete(n), p, rng);
}

TemporalGraph sample_fnp(std::size_t n, double p, RngStream&& rng) {
    return sample_fnp(n, p, rng);
}

BaseGraph sample_gnp(std::size_t n, double p, RngStream& rng) {
    check_probability(p, "sample_gnp");
    std::vector<VertexPair> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) edges.emplace_back(u, v);
    return BaseGraph::from_edges(n, edges);
}

TemporalGraph sample_rstg_permutation(std::size_t n, double p, RngStream& rng) {
    auto edges = sample_gnp(n, p, rng).edge_list();
    const std::size_t m = edges.size();
    for (std::size_t i = m; i > 1; --i) std::swap(edges[i - 1], edges[rng.below(i)]);
    std::vector<TemporalEdge> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        out.push_back({edges[i].first, edges[i].second,
                       (static_cast<double>(i) + 0.5) / static_cast<double>(m)});
    return TrustedGraphBuilder::build(n, std::move(out));
}

BaseGraph complement_base(std::size_t n, const std::vector<VertexPair>& revealed) {
    return BaseGraph::complement_of(n, revealed);
}

std::vector<VertexId> random_subset(std::size_t n, std::size_t k, RngStream& rng) {
    if (k > n) throw DomainError("random_subset: k exceeds n");
    // Partial Fisher-Yates over an identity permutation.
    std::vector<VertexId> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);
    for (std::size_t i = 0; i < k; ++i) std::swap(perm[i], perm[i + rng.below(n - i)]);
    perm.resize(k);
    std::sort(perm.begin(), perm.end());
    return perm;
}

}  // namespace rstg
