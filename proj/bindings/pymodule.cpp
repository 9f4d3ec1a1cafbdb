// Python bindings for the main operations: graph construction, exact word
// traces, vertex-algebra-valued cumulants, non-crossing combinatorics, band
// matrix vacuum moments and the spectral densities. Exact rationals cross
// the boundary as fractions.Fraction.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "graphfp/cumulants.hpp"
#include "graphfp/fock.hpp"
#include "graphfp/graph.hpp"
#include "graphfp/noncrossing.hpp"
#include "graphfp/path_algebra.hpp"
#include "graphfp/rational.hpp"
#include "graphfp/spectral.hpp"

namespace py = pybind11;
using namespace graphfp;

namespace pybind11::detail {

// mpq_class <-> fractions.Fraction (ints and "p/q" strings load too)
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

  bool load(handle src, bool) {
    if (PyFloat_Check(src.ptr())) return false;  // floats are not exact
    std::string text;
    try {
      text = py::str(src).cast<std::string>();
    } catch (const py::error_already_set&) {
      return false;
    }
    try {
      value = parse_rational(text);
    } catch (const std::invalid_argument&) {
      return false;
    }
    return true;
  }

  static handle cast(const mpq_class& src, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(src)).release();
  }
};

// mpz_class -> python int
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const mpz_class& src, return_value_policy, handle) {
    return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

int resolve_vertex(const WeightedGraph& g, const std::string& id) { return g.vertex_index(id); }

// edge ids with the word convention: a '*' suffix means the dual edge
int resolve_edge(const WeightedGraph& g, const std::string& id) {
  if (!id.empty() && id.back() == '*') {
    return g.dual(g.edge_index(id.substr(0, id.size() - 1)));
  }
  return g.edge_index(id);
}

std::vector<int> resolve_word(const WeightedGraph& g, const std::vector<std::string>& word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (const auto& id : word) out.push_back(resolve_edge(g, id));
  return out;
}

std::vector<std::string> word_ids(const WeightedGraph& g, const std::vector<int>& word) {
  std::vector<std::string> out;
  out.reserve(word.size());
  for (int e : word) out.push_back(g.edge_id(e));
  return out;
}

py::dict p0_to_dict(const P0Element& b) {
  py::dict out;
  for (const auto& [v, c] : b.terms()) {
    out[py::str(b.graph()->vertex_id(v))] = py::cast(c);
  }
  return out;
}

py::list matrix_to_list(const std::array<std::array<Rational, 2>, 2>& m) {
  py::list rows;
  for (int i = 0; i < 2; ++i) {
    py::list row;
    for (int j = 0; j < 2; ++j) row.append(py::cast(m[i][j]));
    rows.append(row);
  }
  return rows;
}

nc::NCPartition partition_from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  return nc::NCPartition(n, blocks);
}

}  // namespace

PYBIND11_MODULE(_graphfp, m) {
  m.doc() = "weighted-graph path algebras: exact free-probability moments and densities";

  py::register_exception<GraphError>(m, "GraphError");

  py::class_<WeightedGraph, std::shared_ptr<WeightedGraph>>(m, "WeightedGraph")
      .def_property_readonly("vertex_count", &WeightedGraph::vertex_count)
      .def_property_readonly("edge_count", &WeightedGraph::edge_count)
      .def_property_readonly("normalized", &WeightedGraph::normalized)
      .def_property_readonly("mu_square_sum",
                             [](const WeightedGraph& g) { return Rational(g.mu_square_sum()); })
      .def("vertex_ids",
           [](const WeightedGraph& g) {
             std::vector<std::string> out;
             for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.vertex_id(v));
             return out;
           })
      .def("edge_ids",
           [](const WeightedGraph& g) {
             std::vector<std::string> out;
             for (int e = 0; e < g.edge_count(); ++e) out.push_back(g.edge_id(e));
             return out;
           })
      .def("mu", [](const WeightedGraph& g, const std::string& v) {
        return Rational(g.mu(resolve_vertex(g, v)));
      })
      .def("dual", [](const WeightedGraph& g, const std::string& e) {
        return g.edge_id(g.dual(resolve_edge(g, e)));
      })
      .def("source", [](const WeightedGraph& g, const std::string& e) {
        return g.vertex_id(g.source(resolve_edge(g, e)));
      })
      .def("range", [](const WeightedGraph& g, const std::string& e) {
        return g.vertex_id(g.range(resolve_edge(g, e)));
      })
      .def("validate",
           [](const WeightedGraph& g) {
             auto report = validate(g);
             py::dict out;
             out["ok"] = report.ok();
             out["violations"] = report.violations;
             out["normalized"] = report.normalized;
             out["mu_square_sum"] = py::cast(report.mu_square_sum);
             return out;
           })
      .def("to_json", [](const WeightedGraph& g) { return graph_to_json(g); })
      .def("__repr__", [](const WeightedGraph& g) {
        return "<WeightedGraph " + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges>";
      });

  m.def("make_flower", &make_flower, py::arg("petals"), py::arg("pairing"),
        "one vertex of weight 1 with loop petals; pairing lists dual pairs (i,i) = self-dual");
  m.def("make_two_vertex", &make_two_vertex, py::arg("mu_v"), py::arg("mu_w"));
  m.def("two_vertex_rho", [](const GraphPtr& g) { return two_vertex_rho(*g); });
  m.def("load_graph_json", &load_graph_json, py::arg("text"));
  m.def("load_graph_file", &load_graph_file, py::arg("path"));

  m.def("enumerate_paths",
        [](const GraphPtr& g, int n, const std::optional<std::string>& from,
           const std::optional<std::string>& to) {
          std::optional<int> fi, ti;
          if (from) fi = resolve_vertex(*g, *from);
          if (to) ti = resolve_vertex(*g, *to);
          py::list out;
          for (const auto& p : enumerate_paths(*g, n, fi, ti)) {
            py::dict item;
            item["source"] = g->vertex_id(path_source(*g, p));
            item["range"] = g->vertex_id(path_range(*g, p));
            item["edges"] = word_ids(*g, p.edges);
            out.append(item);
          }
          return out;
        },
        py::arg("graph"), py::arg("length"), py::arg("source") = std::nullopt,
        py::arg("range") = std::nullopt);

  m.def("parse_word",
        [](const GraphPtr& g, const std::string& spec) { return word_ids(*g, parse_word(*g, spec)); },
        py::arg("graph"), py::arg("spec"));
  m.def("alternating_word",
        [](const GraphPtr& g, int n) { return word_ids(*g, alternating_word(*g, n)); },
        py::arg("graph"), py::arg("n"));

  m.def("trace_pair_partition",
        [](const GraphPtr& g, const std::vector<std::string>& word) {
          return trace_pair_partition(g, resolve_word(*g, word));
        },
        py::arg("graph"), py::arg("word"));
  m.def("trace_operator_model",
        [](const GraphPtr& g, const std::vector<std::string>& word) {
          return trace_operator_model(g, resolve_word(*g, word));
        },
        py::arg("graph"), py::arg("word"));
  m.def("trace_from_cumulants",
        [](const GraphPtr& g, const std::vector<std::string>& word) {
          return trace_from_cumulants(g, resolve_word(*g, word));
        },
        py::arg("graph"), py::arg("word"));

  m.def("kappa_base",
        [](const GraphPtr& g, const std::vector<std::string>& word) {
          return p0_to_dict(kappa_base(g, resolve_word(*g, word)));
        },
        py::arg("graph"), py::arg("word"));
  m.def("kappa_pi",
        [](const GraphPtr& g, const std::vector<std::string>& word,
           const std::vector<std::vector<int>>& blocks) {
          auto tuple = resolve_word(*g, word);
          auto pi = partition_from_blocks(static_cast<int>(tuple.size()), blocks);
          return p0_to_dict(kappa_pi_closed(g, tuple, pi));
        },
        py::arg("graph"), py::arg("word"), py::arg("blocks"));
  m.def("moment_from_cumulants",
        [](const GraphPtr& g, const std::vector<std::string>& word) {
          return p0_to_dict(moment_from_cumulants(g, resolve_word(*g, word)));
        },
        py::arg("graph"), py::arg("word"));
  m.def("mixed_cumulants_vanish",
        [](const GraphPtr& g, int max_length) {
          auto report = mixed_cumulants_vanish(g, max_length);
          py::dict out;
          out["free"] = report.free();
          out["mixed_tuples_checked"] = report.tuples_checked;
          out["kappa_evaluations"] = report.evaluations;
          py::list violations;
          for (const auto& w : report.violations) {
            py::dict item;
            item["word"] = word_ids(*g, w.word);
            item["partition"] = w.partition_blocks;
            item["value"] = w.value;
            violations.append(item);
          }
          out["violations"] = violations;
          return out;
        },
        py::arg("graph"), py::arg("max_length") = 6);
  m.def("covariance_maps",
        [](const GraphPtr& g) {
          auto cov = covariance_maps(g);
          py::dict out;
          out["basis"] = std::vector<std::string>{cov.basis[0], cov.basis[1]};
          out["rho"] = py::cast(cov.rho);
          out["alpha"] = matrix_to_list(cov.alpha);
          out["beta"] = matrix_to_list(cov.beta);
          out["eta"] = matrix_to_list(cov.eta);
          return out;
        },
        py::arg("graph"));

  m.def("free_poisson_moment",
        [](int n, const Rational& rate, const Rational& jump) {
          return free_poisson_moment(n, {rate, jump});
        },
        py::arg("n"), py::arg("rate"), py::arg("jump"));
  m.def("cumulants_to_moments", &cumulants_to_moments, py::arg("cumulants"));
  m.def("moments_to_cumulants", &moments_to_cumulants, py::arg("moments"));

  m.def("catalan", &nc::catalan, py::arg("n"));
  m.def("narayana", &nc::narayana, py::arg("n"), py::arg("k"));
  m.def("narayana_row", &nc::narayana_row, py::arg("n"));
  m.def("narayana_poly", &nc::narayana_poly, py::arg("n"), py::arg("t"));
  m.def("noncrossing_partitions",
        [](int n) {
          std::vector<std::vector<std::vector<int>>> out;
          for (const auto& p : nc::enumerate_nc(n)) out.push_back(p.blocks());
          return out;
        },
        py::arg("n"));
  m.def("noncrossing_pair_partitions",
        [](int m) {
          std::vector<std::vector<std::pair<int, int>>> out;
          for (const auto& p : nc::enumerate_nc2(m)) out.push_back(p.pairs());
          return out;
        },
        py::arg("m"));
  m.def("tl_bijection",
        [](const std::vector<std::pair<int, int>>& pairs) {
          return nc::tl_bijection(nc::NCPairPartition(static_cast<int>(2 * pairs.size()), pairs))
              .blocks();
        },
        py::arg("pairs"));
  m.def("tl_inverse",
        [](int n, const std::vector<std::vector<int>>& blocks) {
          return nc::tl_inverse(partition_from_blocks(n, blocks)).pairs();
        },
        py::arg("n"), py::arg("blocks"));
  m.def("odd_block_count",
        [](const std::vector<std::pair<int, int>>& pairs) {
          return nc::odd_block_count(nc::NCPairPartition(static_cast<int>(2 * pairs.size()), pairs));
        },
        py::arg("pairs"));

  m.def("tstar_t_moment", &fock::tstar_t_moment, py::arg("rho"), py::arg("n"),
        "exact vacuum moment of the band model of t*t");
  m.def("general_t_moment", &fock::general_t_moment, py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("tstar_t_matrix",
        [](const Rational& rho, int dim) {
          auto op = fock::build_tstar_t(rho, dim);
          std::vector<std::vector<Rational>> out(dim, std::vector<Rational>(dim));
          for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) out[i][j] = op.at(i, j);
          return out;
        },
        py::arg("rho"), py::arg("dim"));

  m.def("cauchy_f0", &spectral::cauchy_f0, py::arg("z"));
  m.def("cauchy_frho", &spectral::cauchy_frho, py::arg("z"), py::arg("rho"));
  m.def("boundary_f0", &spectral::boundary_f0, py::arg("t"));
  m.def("density_arho", &spectral::density_arho, py::arg("t"), py::arg("rho"));
  m.def("density_tstar_t", &spectral::density_tstar_t, py::arg("t"), py::arg("rho"));
  m.def("tstar_t_support",
        [](double rho) {
          auto s = spectral::tstar_t_support(rho);
          return std::make_pair(s.lo, s.hi);
        },
        py::arg("rho"));
  m.def("density_mass", &spectral::density_mass, py::arg("rho"));
  m.def("density_moment", &spectral::density_moment, py::arg("n"), py::arg("rho"));
  m.def("stieltjes_inversion_scan",
        [](double rho, double epsilon, const std::vector<double>& grid) {
          py::list out;
          for (const auto& row : spectral::stieltjes_inversion_scan(rho, epsilon, grid)) {
            out.append(py::make_tuple(row.t, row.inversion, row.density, row.abs_diff));
          }
          return out;
        },
        py::arg("rho"), py::arg("epsilon"), py::arg("grid"));
  m.def("linspace", &spectral::linspace, py::arg("a"), py::arg("b"), py::arg("count"));

  m.attr("__version__") = "0.1.0";
}
