#include "rstg/temporal_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "rstg/errors.hpp"

namespace rstg {

TimeWindow TimeWindow::make(double a, double b) {
    if (!(std::isfinite(a) && std::isfinite(b)) || a < 0.0 || b > 1.0 || a > b) {
        std::ostringstream msg;
        msg << "invalid time window [" << a << ", " << b << "]";
        throw DomainError(msg.str());
    }
    return {a, b};
}

namespace {

void validate(std::size_t n, std::vector<TemporalEdge>& edges) {
    if (n > std::numeric_limits<VertexId>::max())
        throw GraphFormatError("vertex count exceeds VertexId range");
    std::unordered_set<std::uint64_t> pairs;
    pairs.reserve(edges.size() * 2);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto& e = edges[i];
        if (e.u >= n || e.v >= n)
            throw GraphFormatError("edge " + std::to_string(i) + " has an out-of-range endpoint");
        if (e.u == e.v) throw GraphFormatError("edge " + std::to_string(i) + " is a self-loop");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!std::isfinite(e.label) || e.label < 0.0 || e.label > 1.0)
            throw GraphFormatError("edge " + std::to_string(i) + " has a label outside [0,1]");
        if (!pairs.insert((std::uint64_t{e.u} << 32) | e.v).second)
            throw GraphFormatError("duplicate vertex pair {" + std::to_string(e.u) + "," +
                                   std::to_string(e.v) + "}");
        if (i > 0 && !(edges[i - 1].label < e.label))
            throw GraphFormatError(edges[i - 1].label == e.label
                                       ? "duplicate time label at edge " + std::to_string(i)
                                       : "edges not in ascending label order at edge " +
                                             std::to_string(i));
    }
}

}  // namespace

TemporalGraph::TemporalGraph(std::size_t n, std::vector<TemporalEdge> edges) : n_(n) {
    validate(n, edges);
    edges_ = std::move(edges);
}

TemporalGraph TemporalGraph::from_unsorted(std::size_t n, std::vector<TemporalEdge> edges) {
    std::stable_sort(edges.begin(), edges.end(),
                     [](const TemporalEdge& x, const TemporalEdge& y) { return x.label < y.label; });
    return TemporalGraph(n, std::move(edges));
}

std::optional<double> TemporalGraph::label_of(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    for (const auto& e : edges_)
        if (e.u == u && e.v == v) return e.label;
    return std::nullopt;
}

std::pair<std::size_t, std::size_t> TemporalGraph::window_range(const TimeWindow& w) const {
    auto lo = std::lower_bound(edges_.begin(), edges_.end(), w.a,
                               [](const TemporalEdge& e, double t) { return e.label < t; });
    auto hi = std::upper_bound(lo, edges_.end(), w.b,
                               [](double t, const TemporalEdge& e) { return t < e.label; });
    return {static_cast<std::size_t>(lo - edges_.begin()),
            static_cast<std::size_t>(hi - edges_.begin())};
}

TemporalGraph restrict_window(const TemporalGraph& g, const TimeWindow& w) {
    auto [first, last] = g.window_range(w);
    std::vector<TemporalEdge> kept(g.edges().begin() + static_cast<std::ptrdiff_t>(first),
                                   g.edges().begin() + static_cast<std::ptrdiff_t>(last));
    return TrustedGraphBuilder::build(g.vertex_count(), std::move(kept));
}

InducedSubgraph induced_subgraph(const TemporalGraph& g, const std::vector<VertexId>& s) {
    const std::size_t n = g.vertex_count();
    constexpr VertexId kAbsent = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> local(n, kAbsent);
    for (VertexId v : s) {
        if (v >= n) throw DomainError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        local[v] = 0;
    }
    InducedSubgraph out;
    for (VertexId v = 0; v < n; ++v) {
        if (local[v] != kAbsent) {
            local[v] = static_cast<VertexId>(out.to_parent.size());
            out.to_parent.push_back(v);
        }
    }
    std::vector<TemporalEdge> kept;
    for (const auto& e : g.edges()) {
        if (local[e.u] != kAbsent && local[e.v] != kAbsent)
            kept.push_back({local[e.u], local[e.v], e.label});
    }
    out.graph = TrustedGraphBuilder::build(out.to_parent.size(), std::move(kept));
    return out;
}

TemporalGraph reverse_time(const TemporalGraph& g) {
    std::vector<TemporalEdge> rev;
    rev.reserve(g.edge_count());
    for (auto it = g.edges().rbegin(); it != g.edges().rend(); ++it)
        rev.push_back({it->u, it->v, 1.0 - it->label});
    return TrustedGraphBuilder::build(g.vertex_count(), std::move(rev));
}

bool is_temporal_path(const TemporalGraph& g, const TemporalPath& path) {
    if (path.vertices.empty()) return false;
    if (path.edges.size() + 1 != path.vertices.size()) return false;
    for (VertexId v : path.vertices)
        if (v >= g.vertex_count()) return false;
    double last = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        const auto& e = path.edges[i];
        VertexId a = path.vertices[i], b = path.vertices[i + 1];
        if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
        auto label = g.label_of(a, b);
        if (!label || *label != e.label) return false;
        if (!(last < e.label)) return false;
        last = e.label;
    }
    return true;
}

void write_tgf(std::ostream& os, const TemporalGraph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    char buf[64];
    for (const auto& e : g.edges()) {
        std::snprintf(buf, sizeof buf, "%.17g", e.label);
        os << e.u << ' ' << e.v << ' ' << buf << '\n';
    }
}

std::string to_tgf(const TemporalGraph& g) {
    std::ostringstream os;
    write_tgf(os, g);
    return os.str();
}

TemporalGraph read_tgf(std::istream& is) {
    std::string line;
    auto next_line = [&](const char* what) {
        while (std::getline(is, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") != std::string::npos) return;
        }
        throw GraphFormatError(std::string("tgf: unexpected end of input reading ") + what);
    };
    next_line("header");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw GraphFormatError("tgf: malformed header '" + line + "'");
    std::string rest;
    if (header >> rest) throw GraphFormatError("tgf: trailing tokens in header");
    std::vector<TemporalEdge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        next_line("edge");
        std::istringstream ls(line);
        long long u = -1, v = -1;
        std::string label_text;
        if (!(ls >> u >> v >> label_text) || u < 0 || v < 0)
            throw GraphFormatError("tgf: malformed edge line " + std::to_string(i + 2));
        if (ls >> rest) throw GraphFormatError("tgf: trailing tokens on line " + std::to_string(i + 2));
        std::size_t used = 0;
        double label = 0.0;
        try {
            label = std::stod(label_text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != label_text.size())
            throw GraphFormatError("tgf: bad label '" + label_text + "'");
        if (u > std::numeric_limits<VertexId>::max() || v > std::numeric_limits<VertexId>::max())
            throw GraphFormatError("tgf: vertex id too large on line " + std::to_string(i + 2));
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), label});
    }
    while (std::getline(is, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw GraphFormatError("tgf: more edge lines than declared");
    return TemporalGraph(static_cast<std::size_t>(n), std::move(edges));
}

TemporalGraph parse_tgf(const std::string& text) {
    std::istringstream is(text);
    return read_tgf(is);
}

TemporalGraph load_tgf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_tgf(in);
}

void save_tgf(const std::string& path, const TemporalGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_tgf(out, g);
}

}  // namespace rstg
