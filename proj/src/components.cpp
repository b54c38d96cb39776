#include "rstg/components.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "rstg/errors.hpp"

namespace rstg {

using Word = BitMatrix::Word;

const char* to_string(ComponentKind kind) { return kind == ComponentKind::open ? "open" : "closed"; }

MutualReachGraph mutual_reach_graph(const ReachMatrix& reach) {
    const BitMatrix& reached_by = reach.reached_by();
    BitMatrix adj = reached_by.transposed();  // row v: vertices v reaches
    for (std::size_t v = 0; v < adj.size(); ++v) {
        auto out = adj.row(v);
        auto in = reached_by.row(v);
        for (std::size_t w = 0; w < out.size(); ++w) out[w] &= in[w];
        adj.reset(v, v);
    }
    return MutualReachGraph(std::move(adj));
}

MutualReachGraph mutual_reach_graph(const TemporalGraph& g, const TimeWindow& window) {
    return mutual_reach_graph(all_pairs_arrival(g, window, false));
}

namespace {

std::vector<VertexId> bits_to_vertices(std::span<const Word> bits) {
    std::vector<VertexId> out;
    for_each_bit(bits, [&](std::size_t v) { out.push_back(static_cast<VertexId>(v)); });
    return out;
}

bool any(std::span<const Word> bits) {
    return std::any_of(bits.begin(), bits.end(), [](Word w) { return w != 0; });
}

// Branch and bound maximum clique over bitsets (MCQ/BBMC family).
class CliqueSearch {
public:
    explicit CliqueSearch(const MutualReachGraph& g) : n_(g.size()), words_((n_ + 63) / 64) {
        order_ = degeneracy_order(g);
        std::vector<std::size_t> pos(n_);
        for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
        adj_ = BitMatrix(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for_each_bit(g.neighbours(static_cast<VertexId>(order_[i])), [&](std::size_t v) { adj_.set(i, pos[v]); });
    }

    std::vector<VertexId> run() {
        if (n_ == 0) return {};
        std::vector<Word> all(words_, 0);
        for (std::size_t i = 0; i < n_; ++i) all[i / 64] |= Word{1} << (i % 64);
        best_ = {0};
        std::vector<std::size_t> current;
        expand(current, all);
        std::vector<VertexId> out;
        for (std::size_t i : best_) out.push_back(static_cast<VertexId>(order_[i]));
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    // Vertices in reverse removal order of repeated min-degree deletion, so
    // the densest core comes first.
    static std::vector<std::size_t> degeneracy_order(const MutualReachGraph& g) {
        const std::size_t n = g.size();
        std::vector<std::size_t> deg(n);
        for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<VertexId>(v));
        std::vector<bool> removed(n, false);
        std::vector<std::size_t> removal;
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t pick = n;
            for (std::size_t v = 0; v < n; ++v)
                if (!removed[v] && (pick == n || deg[v] < deg[pick])) pick = v;
            removed[pick] = true;
            removal.push_back(pick);
            for_each_bit(g.neighbours(static_cast<VertexId>(pick)), [&](std::size_t u) {
                if (!removed[u]) --deg[u];
            });
        }
        std::reverse(removal.begin(), removal.end());
        return removal;
    }

    void expand(std::vector<std::size_t>& current, std::vector<Word> candidates) {
        // First-fit colouring of the candidates in position order.
        std::vector<std::size_t> verts, colours;
        std::vector<Word> uncoloured = candidates, klass(words_);
        std::size_t colour = 0;
        while (any(uncoloured)) {
            ++colour;
            klass = uncoloured;
            while (any(klass)) {
                std::size_t w = 0;
                while (klass[w] == 0) ++w;
                std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(klass[w]));
                uncoloured[v / 64] &= ~(Word{1} << (v % 64));
                klass[v / 64] &= ~(Word{1} << (v % 64));
                auto nb = adj_.row(v);
                for (std::size_t i = 0; i < words_; ++i) klass[i] &= ~nb[i];
                verts.push_back(v);
                colours.push_back(colour);
            }
        }
        std::vector<Word> next(words_);
        for (std::size_t idx = verts.size(); idx-- > 0;) {
            if (current.size() + colours[idx] <= best_.size()) return;
            const std::size_t v = verts[idx];
            current.push_back(v);
            auto nb = adj_.row(v);
            bool nonempty = false;
            for (std::size_t i = 0; i < words_; ++i) {
                next[i] = candidates[i] & nb[i];
                nonempty |= next[i] != 0;
            }
            if (!nonempty) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            candidates[v / 64] &= ~(Word{1} << (v % 64));
        }
    }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::size_t> order_;
    BitMatrix adj_;
    std::vector<std::size_t> best_;
};

std::size_t greedy_colouring_number(const MutualReachGraph& g, const std::vector<std::size_t>& degree) {
    const std::size_t n = g.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    constexpr std::size_t kUncoloured = static_cast<std::size_t>(-1);
    std::vector<std::size_t> colour(n, kUncoloured), stamp(n + 1, kUncoloured);
    std::size_t colours = 0;
    for (std::size_t v : order) {
        for_each_bit(g.neighbours(static_cast<VertexId>(v)), [&](std::size_t u) {
            if (colour[u] != kUncoloured) stamp[colour[u]] = v;
        });
        std::size_t c = 0;
        while (stamp[c] == v) ++c;
        colour[v] = c;
        colours = std::max(colours, c + 1);
    }
    return colours;
}

class GreedyClique {
public:
    GreedyClique(const MutualReachGraph& g, const std::vector<std::size_t>& degree)
        : g_(g), degree_(degree), words_((g.size() + 63) / 64), members_(words_, 0) {}

    std::vector<VertexId> run() {
        const std::size_t n = g_.size();
        if (n == 0) return {};
        std::size_t seed = 0;
        for (std::size_t v = 1; v < n; ++v)
            if (degree_[v] > degree_[seed]) seed = v;
        std::vector<Word> cand(g_.neighbours(static_cast<VertexId>(seed)).begin(),
                               g_.neighbours(static_cast<VertexId>(seed)).end());
        add(seed);
        extend(cand);
        swap_pass();
        return bits_to_vertices(members_);
    }

private:
    void add(std::size_t v) { members_[v / 64] |= Word{1} << (v % 64); }
    void remove(std::size_t v) { members_[v / 64] &= ~(Word{1} << (v % 64)); }
    bool member(std::size_t v) const { return (members_[v / 64] >> (v % 64)) & 1u; }

    // Repeatedly add the highest-degree candidate (smallest id on ties).
    void extend(std::vector<Word>& cand) {
        while (any(cand)) {
            std::size_t pick = g_.size();
            for_each_bit(cand, [&](std::size_t v) {
                if (pick == g_.size() || degree_[v] > degree_[pick]) pick = v;
            });
            add(pick);
            auto nb = g_.neighbours(static_cast<VertexId>(pick));
            for (std::size_t i = 0; i < words_; ++i) cand[i] &= nb[i];
        }
    }

    // For each member w, the non-members adjacent to every member except w.
    std::vector<std::vector<std::size_t>> tight_groups() const {
        const std::size_t n = g_.size();
        std::vector<std::vector<std::size_t>> groups(n);
        for (std::size_t v = 0; v < n; ++v) {
            if (member(v)) continue;
            auto nb = g_.neighbours(static_cast<VertexId>(v));
            std::size_t missing = 0, missing_at = 0;
            for (std::size_t i = 0; i < words_ && missing < 2; ++i) {
                Word m = members_[i] & ~nb[i];
                if (m == 0) continue;
                missing += static_cast<std::size_t>(std::popcount(m));
                missing_at = i * 64 + static_cast<std::size_t>(std::countr_zero(m));
            }
            if (missing == 1) groups[missing_at].push_back(v);
        }
        return groups;
    }

    // One pass over the members w: two adjacent non-members v, x that miss
    // only w turn C into C - w + v + x, after which C is re-extended.
    void swap_pass() {
        const std::size_t n = g_.size();
        auto groups = tight_groups();
        for (std::size_t w = 0; w < n; ++w) {
            if (!member(w) || groups[w].size() < 2) continue;
            const auto& tight = groups[w];
            bool improved = false;
            for (std::size_t a = 0; a < tight.size() && !improved; ++a) {
                for (std::size_t b = a + 1; b < tight.size() && !improved; ++b) {
                    if (!g_.adjacent(static_cast<VertexId>(tight[a]), static_cast<VertexId>(tight[b]))) continue;
                    remove(w);
                    add(tight[a]);
                    add(tight[b]);
                    improved = true;
                }
            }
            if (!improved) continue;
            std::vector<Word> cand(words_, ~Word{0});
            if (n % 64) cand.back() = (Word{1} << (n % 64)) - 1;
            for (std::size_t i = 0; i < words_; ++i) cand[i] &= ~members_[i];
            for_each_bit(std::span<const Word>(members_), [&](std::size_t m) {
                auto nb = g_.neighbours(static_cast<VertexId>(m));
                for (std::size_t i = 0; i < words_; ++i) cand[i] &= nb[i];
            });
            extend(cand);
            groups = tight_groups();
        }
    }

    const MutualReachGraph& g_;
    const std::vector<std::size_t>& degree_;
    std::size_t words_;
    std::vector<Word> members_;
};

}  // namespace

ComponentEstimate largest_open_exact(const MutualReachGraph& mutual, std::size_t cap) {
    if (mutual.size() > cap)
        throw DomainError("largest_open_exact: n = " + std::to_string(mutual.size()) + " exceeds cap " +
                          std::to_string(cap));
    ComponentEstimate est;
    est.kind = ComponentKind::open;
    est.lower_set = CliqueSearch(mutual).run();
    est.upper_bound = est.lower_set.size();
    est.method = "exact_clique";
    return est;
}

ComponentEstimate largest_open_exact(const TemporalGraph& g, const TimeWindow& window, std::size_t cap) {
    if (g.vertex_count() > cap)
        throw DomainError("largest_open_exact: n = " + std::to_string(g.vertex_count()) + " exceeds cap " +
                          std::to_string(cap));
    return largest_open_exact(mutual_reach_graph(g, window), cap);
}

ComponentEstimate largest_open_bounds(const ReachMatrix& reach) {
    const MutualReachGraph mutual = mutual_reach_graph(reach);
    const std::size_t n = mutual.size();
    std::vector<std::size_t> degree(n);
    std::size_t max_degree = 0;
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = mutual.degree(static_cast<VertexId>(v));
        max_degree = std::max(max_degree, degree[v]);
    }
    ComponentEstimate est;
    est.kind = ComponentKind::open;
    est.method = "greedy_clique+swap/min(colouring,reach_coreach)";
    if (n == 0) return est;
    est.lower_set = GreedyClique(mutual, degree).run();
    // |reach(v) ∩ coreach(v)| = mutual degree + 1 (v itself).
    est.upper_bound = std::min(greedy_colouring_number(mutual, degree), max_degree + 1);
    return est;
}

ComponentEstimate largest_open_bounds(const TemporalGraph& g, const TimeWindow& window) {
    return largest_open_bounds(all_pairs_arrival(g, window, false));
}

bool verify_closed(const TemporalGraph& g, const std::vector<VertexId>& s, const TimeWindow& window) {
    if (s.empty()) throw DomainError("verify_closed: empty vertex set");
    auto sub = induced_subgraph(g, s);
    return is_temporally_connected(sub.graph, window);
}

bool verify_open(const TemporalGraph& g, const std::vector<VertexId>& s, const TimeWindow& window) {
    if (s.empty()) throw DomainError("verify_open: empty vertex set");
    for (VertexId v : s)
        if (v >= g.vertex_count()) throw DomainError("verify_open: vertex out of range");
    const ReachMatrix reach = all_pairs_arrival(g, window, false);
    for (VertexId u : s)
        for (VertexId v : s)
            if (!reach.reaches(u, v)) return false;
    return true;
}

ComponentEstimate largest_closed_exact_tiny(const TemporalGraph& g, const TimeWindow& window, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (cap > 30) throw DomainError("largest_closed_exact_tiny: cap may not exceed 30");
    if (n > cap)
        throw DomainError("largest_closed_exact_tiny: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    ComponentEstimate est;
    est.kind = ComponentKind::closed;
    est.method = "exact_subsets";
    if (n == 0) return est;

    auto [first, last] = g.window_range(window);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = first; i < last; ++i) edges.emplace_back(g.edges()[i].u, g.edges()[i].v);

    std::uint32_t best_mask = 1;
    int best_size = 1;
    std::vector<std::uint32_t> rows(n);
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        const int size = std::popcount(mask);
        if (size <= best_size) continue;
        for (std::size_t v = 0; v < n; ++v) rows[v] = std::uint32_t{1} << v;
        for (auto [u, v] : edges) {
            if (!((mask >> u) & 1u) || !((mask >> v) & 1u)) continue;
            const std::uint32_t tmp = rows[u];
            rows[u] |= rows[v];
            rows[v] |= tmp;
        }
        bool closed = true;
        for (std::size_t v = 0; v < n && closed; ++v)
            if ((mask >> v) & 1u) closed = (rows[v] & mask) == mask;
        if (closed) {
            best_mask = mask;
            best_size = size;
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if ((best_mask >> v) & 1u) est.lower_set.push_back(static_cast<VertexId>(v));
    est.upper_bound = est.lower_set.size();
    return est;
}

ComponentEstimate largest_closed_peel(const TemporalGraph& g, const TimeWindow& window,
                                      std::optional<std::size_t> open_upper) {
    ComponentEstimate est;
    est.kind = ComponentKind::closed;
    est.method = "peel";
    const std::size_t n = g.vertex_count();
    if (n == 0) return est;
    const TemporalGraph in_window = restrict_window(g, window);
    est.upper_bound = open_upper ? *open_upper : largest_open_bounds(in_window).upper_bound;

    std::vector<VertexId> current(n);
    std::iota(current.begin(), current.end(), VertexId{0});
    while (true) {
        const auto sub = induced_subgraph(in_window, current);
        const ReachMatrix reach = all_pairs_arrival(sub.graph, TimeWindow::full(), false);
        const std::size_t k = current.size();
        const auto as_source = reach.reach_counts();
        std::size_t worst = 0, worst_failures = 0;
        for (std::size_t v = 0; v < k; ++v) {
            const std::size_t failures = (k - as_source[v]) + (k - reach.reached_by().row_count(v));
            if (failures > worst_failures) {
                worst_failures = failures;
                worst = v;
            }
        }
        if (worst_failures == 0) break;
        current.erase(current.begin() + static_cast<std::ptrdiff_t>(worst));
    }
    est.lower_set = std::move(current);
    return est;
}

ComponentEstimate largest_closed_core(const TemporalGraph& g, const TimeWindow& window,
                                      std::optional<std::size_t> open_upper) {
    ComponentEstimate est;
    est.kind = ComponentKind::closed;
    est.method = "core";
    const std::size_t n = g.vertex_count();
    if (n == 0) return est;
    const TemporalGraph in_window = restrict_window(g, window);
    est.upper_bound = open_upper ? *open_upper : largest_open_bounds(in_window).upper_bound;

    std::vector<VertexId> current(n);
    std::iota(current.begin(), current.end(), VertexId{0});
    while (true) {
        const auto sub = induced_subgraph(in_window, current);
        const auto clique = largest_open_bounds(all_pairs_arrival(sub.graph, TimeWindow::full(), false));
        if (clique.lower() == current.size()) break;
        std::vector<VertexId> next;
        for (VertexId v : clique.lower_set) next.push_back(sub.to_parent[v]);
        current = std::move(next);
    }
    est.lower_set = std::move(current);
    return est;
}

}  // namespace rstg
