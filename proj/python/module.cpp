#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rstg/components.hpp"
#include "rstg/errors.hpp"
#include "rstg/experiments.hpp"
#include "rstg/random_models.hpp"
#include "rstg/reachability.hpp"
#include "rstg/theory.hpp"

namespace py = pybind11;
using namespace rstg;
namespace ex = rstg::experiments;

namespace {

using EdgeTuple = std::tuple<VertexId, VertexId, double>;

TimeWindow window(double a, double b) { return TimeWindow::make(a, b); }

py::dict estimate_dict(const ComponentEstimate& e) {
    py::dict d;
    d["kind"] = to_string(e.kind);
    d["method"] = e.method;
    d["lower"] = e.lower();
    d["upper"] = e.upper_bound;
    d["members"] = e.lower_set;
    return d;
}

}  // namespace

PYBIND11_MODULE(_rstg, m) {
    m.doc() = "random simple temporal graphs";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<GraphFormatError>(m, "GraphFormatError", PyExc_ValueError);

    py::class_<TemporalGraph>(m, "TemporalGraph")
        .def(py::init([](std::size_t n, const std::vector<EdgeTuple>& edges) {
                 std::vector<TemporalEdge> es;
                 for (const auto& [u, v, l] : edges) es.push_back({u, v, l});
                 return TemporalGraph::from_unsorted(n, std::move(es));
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &TemporalGraph::vertex_count)
        .def_property_readonly("m", &TemporalGraph::edge_count)
        .def("edges",
             [](const TemporalGraph& g) {
                 std::vector<EdgeTuple> out;
                 for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.label);
                 return out;
             })
        .def("restrict", [](const TemporalGraph& g, double a, double b) { return restrict_window(g, window(a, b)); })
        .def("reversed", &reverse_time)
        .def("to_tgf", &to_tgf)
        .def_static("from_tgf", &parse_tgf)
        .def("__repr__", [](const TemporalGraph& g) {
            return "TemporalGraph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) +
                   ")";
        });

    m.def("sample_fnp",
          [](std::size_t n, double p, std::uint64_t seed, std::uint64_t stream) {
              return sample_fnp(n, p, RngStream(seed, stream));
          },
          py::arg("n"), py::arg("p"), py::arg("seed") = 0, py::arg("stream") = 0);
    m.def("sample_permutation",
          [](std::size_t n, double p, std::uint64_t seed, std::uint64_t stream) {
              RngStream rng(seed, stream);
              return sample_rstg_permutation(n, p, rng);
          },
          py::arg("n"), py::arg("p"), py::arg("seed") = 0, py::arg("stream") = 0);

    m.def("foremost_forest",
          [](const TemporalGraph& g, const std::vector<VertexId>& sources, double a, double b, const std::string& mode) {
              if (mode != "sweep" && mode != "literal") throw DomainError("mode must be sweep or literal");
              const auto run = foremost_forest(g, sources, window(a, b),
                                               mode == "literal" ? ForestMode::literal : ForestMode::sweep);
              py::list steps;
              for (const auto& s : run.forest.added) steps.append(py::make_tuple(s.k, s.vertex, s.parent, s.label));
              py::dict d;
              d["sources"] = run.forest.sources;
              d["steps"] = steps;
              d["arrival"] = run.forest.arrival;
              d["x"] = run.waiting.x;
              d["y_capped"] = run.waiting.y_capped;
              return d;
          },
          py::arg("g"), py::arg("sources"), py::arg("a") = 0.0, py::arg("b") = 1.0, py::arg("mode") = "sweep");

    m.def("reach_counts",
          [](const TemporalGraph& g, double a, double b) {
              const auto mat = all_pairs_arrival(g, window(a, b), false);
              return py::make_tuple(mat.reach_counts(), mat.coreach_counts());
          },
          py::arg("g"), py::arg("a") = 0.0, py::arg("b") = 1.0);
    m.def("is_temporally_connected",
          [](const TemporalGraph& g, double a, double b) { return is_temporally_connected(g, window(a, b)); },
          py::arg("g"), py::arg("a") = 0.0, py::arg("b") = 1.0);

    m.def("largest_open",
          [](const TemporalGraph& g, bool exact) {
              return estimate_dict(exact ? largest_open_exact(g) : largest_open_bounds(g));
          },
          py::arg("g"), py::arg("exact") = false);
    m.def("largest_closed",
          [](const TemporalGraph& g, const std::string& method) {
              if (method == "exact") return estimate_dict(largest_closed_exact_tiny(g));
              if (method == "peel") return estimate_dict(largest_closed_peel(g));
              if (method == "core") return estimate_dict(largest_closed_core(g));
              throw DomainError("method must be peel, core or exact");
          },
          py::arg("g"), py::arg("method") = "peel");

    m.def("threshold_p",
          [](const std::string& kind, std::size_t n) { return theory::threshold_p(theory::parse_threshold_kind(kind), n); },
          py::arg("kind"), py::arg("n"));
    m.def("harmonic_like_sum", &theory::harmonic_like_sum, py::arg("s"), py::arg("k"), py::arg("n"));
    m.def("favsum_estimate",
          [](std::size_t s, std::size_t k, std::size_t n) {
              const auto r = theory::favsum_estimate(s, k, n);
              return py::make_tuple(r.value, r.lower, r.upper, r.satisfied);
          },
          py::arg("s"), py::arg("k"), py::arg("n"));
    m.def("truncation_c", &theory::truncation_c, py::arg("k"), py::arg("n"), py::arg("s"));
    m.def("two_hop_bound", &theory::two_hop_bound, py::arg("n"), py::arg("alpha"), py::arg("beta"));

    auto sweep_config = [](const std::vector<std::size_t>& ns, const std::vector<double>& cs, std::size_t trials,
                           std::uint64_t seed, const std::string& protocol, const std::string& method,
                           unsigned threads) {
        ex::SweepConfig cfg;
        cfg.n_values = ns;
        cfg.c_grid = cs;
        cfg.trials = trials;
        cfg.master_seed = seed;
        cfg.protocol = ex::parse_protocol(protocol);
        cfg.method = ex::parse_method(method);
        cfg.threads = threads;
        return cfg;
    };
    m.def("run_sweep",
          [sweep_config](const std::vector<std::size_t>& ns, const std::vector<double>& cs, std::size_t trials,
                         std::uint64_t seed, const std::string& protocol, const std::string& method, unsigned threads) {
              ex::SweepResult res;
              {
                  py::gil_scoped_release release;
                  res = ex::run_sweep(sweep_config(ns, cs, trials, seed, protocol, method, threads));
              }
              py::list rows;
              for (const auto& r : res.records) {
                  py::dict d;
                  d["n"] = r.n;
                  d["c"] = r.c;
                  d["p"] = r.p;
                  d["trial"] = r.trial;
                  d["seed"] = r.seed;
                  d["open_lb"] = r.open_lower;
                  d["open_ub"] = r.open_upper;
                  d["closed_lb"] = r.closed_lower;
                  d["pair"] = r.pair_reached;
                  d["src_count"] = r.source_count;
                  d["tc"] = r.temporally_connected;
                  d["z_size"] = r.z_size;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("n_values"), py::arg("c_grid"), py::arg("trials") = 1, py::arg("seed") = 0,
          py::arg("protocol") = "whole", py::arg("method") = "open", py::arg("threads") = 1);
    m.def("sweep_csv",
          [sweep_config](const std::vector<std::size_t>& ns, const std::vector<double>& cs, std::size_t trials,
                         std::uint64_t seed, const std::string& protocol, const std::string& method, unsigned threads) {
              py::gil_scoped_release release;
              return ex::sweep_csv(ex::run_sweep(sweep_config(ns, cs, trials, seed, protocol, method, threads)).records);
          },
          py::arg("n_values"), py::arg("c_grid"), py::arg("trials") = 1, py::arg("seed") = 0,
          py::arg("protocol") = "whole", py::arg("method") = "open", py::arg("threads") = 1);

    m.def("run_ladder",
          [](std::size_t n, const std::vector<double>& grid, std::size_t trials, std::uint64_t seed, unsigned threads) {
              ex::LadderResult r;
              {
                  py::gil_scoped_release release;
                  r = ex::run_threshold_ladder(n, grid, trials, seed, threads);
              }
              py::dict d;
              d["c"] = r.c_grid;
              d["pair"] = r.pair_curve;
              d["source"] = r.source_curve;
              d["tc"] = r.tc_curve;
              d["c_pair"] = r.c_pair;
              d["c_source"] = r.c_source;
              d["c_tc"] = r.c_tc;
              return d;
          },
          py::arg("n"), py::arg("c_grid"), py::arg("trials"), py::arg("seed") = 0, py::arg("threads") = 1);

    m.def("run_waiting_time_study",
          [](std::size_t n, std::size_t s, std::size_t trials, std::uint64_t seed) {
              const auto r = ex::run_waiting_time_study(n, s, trials, seed);
              py::dict d;
              d["capped_window"] = r.capped_window;
              d["fraction_capped"] = r.fraction_capped_within();
              d["fraction_harmonic"] = r.fraction_harmonic_within();
              d["fraction_estimate"] = r.fraction_estimate_within();
              d["empty_range"] = r.empty_range;
              return d;
          },
          py::arg("n"), py::arg("s"), py::arg("trials"), py::arg("seed") = 0);

    m.def("run_selftest",
          [](std::size_t instances, std::size_t n_min, std::size_t n_max, std::uint64_t seed) {
              const auto r = ex::run_oracle_selftest(instances, n_min, n_max, seed);
              return py::make_tuple(r.passed(), r.instances, r.messages);
          },
          py::arg("instances") = 200, py::arg("n_min") = 5, py::arg("n_max") = 40, py::arg("seed") = 0);
}
