#include "graphfp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace graphfp {

namespace {

std::map<std::string, int> index_by_id(const std::vector<std::string>& ids, const char* kind) {
  std::map<std::string, int> out;
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
    if (!out.emplace(ids[i], i).second) {
      throw GraphError(std::string("duplicate ") + kind + " id '" + ids[i] + "'");
    }
  }
  return out;
}

}  // namespace

WeightedGraph::WeightedGraph(const std::vector<VertexSpec>& vertices,
                             const std::vector<EdgeSpec>& edges) {
  vertex_ids_.reserve(vertices.size());
  mu_.reserve(vertices.size());
  for (const auto& v : vertices) {
    vertex_ids_.push_back(v.id);
    mu_.push_back(v.mu);
  }
  auto vidx = index_by_id(vertex_ids_, "vertex");

  std::vector<std::string> edge_ids;
  edge_ids.reserve(edges.size());
  for (const auto& e : edges) edge_ids.push_back(e.id);
  auto eidx = index_by_id(edge_ids, "edge");

  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    auto sv = vidx.find(e.source);
    auto rv = vidx.find(e.range);
    auto de = eidx.find(e.dual);
    if (sv == vidx.end()) throw GraphError("edge '" + e.id + "' has unknown source '" + e.source + "'");
    if (rv == vidx.end()) throw GraphError("edge '" + e.id + "' has unknown range '" + e.range + "'");
    if (de == eidx.end()) throw GraphError("edge '" + e.id + "' has unknown dual '" + e.dual + "'");
    edges_.push_back(Edge{e.id, sv->second, rv->second, de->second});
  }

  mu_square_sum_ = 0;
  for (const auto& m : mu_) mu_square_sum_ += m * m;
}

int WeightedGraph::vertex_index(const std::string& id) const {
  for (int i = 0; i < vertex_count(); ++i) {
    if (vertex_ids_[i] == id) return i;
  }
  throw GraphError("unknown vertex id '" + id + "'");
}

int WeightedGraph::edge_index(const std::string& id) const {
  for (int i = 0; i < edge_count(); ++i) {
    if (edges_[i].id == id) return i;
  }
  throw GraphError("unknown edge id '" + id + "'");
}

ValidationReport validate(const WeightedGraph& g) {
  ValidationReport report;
  if (g.vertex_count() == 0) {
    report.violations.push_back("graph has no vertices");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.mu(v) <= 0) {
      report.violations.push_back("vertex '" + g.vertex_id(v) + "' has non-positive weight " +
                                  to_string(g.mu(v)));
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const int d = g.dual(e);
    if (g.dual(d) != e) {
      report.violations.push_back("dual is not an involution at edge '" + g.edge_id(e) + "'");
    }
    if (d == e && g.source(e) != g.range(e)) {
      report.violations.push_back("self-dual edge '" + g.edge_id(e) + "' is not a loop");
    }
    if (g.source(d) != g.range(e) || g.range(d) != g.source(e)) {
      report.violations.push_back("dual of edge '" + g.edge_id(e) +
                                  "' does not reverse source and range");
    }
  }
  report.mu_square_sum = g.mu_square_sum();
  report.normalized = (report.mu_square_sum == 1);
  return report;
}

int path_source(const WeightedGraph& g, const Path& p) {
  return p.edges.empty() ? p.base : g.source(p.edges.front());
}

int path_range(const WeightedGraph& g, const Path& p) {
  return p.edges.empty() ? p.base : g.range(p.edges.back());
}

bool path_composable(const WeightedGraph& g, const Path& p) {
  if (p.edges.empty()) return p.base >= 0 && p.base < g.vertex_count();
  if (p.base != g.source(p.edges.front())) return false;
  for (size_t i = 0; i + 1 < p.edges.size(); ++i) {
    if (g.range(p.edges[i]) != g.source(p.edges[i + 1])) return false;
  }
  return true;
}

std::vector<Path> enumerate_paths(const WeightedGraph& g, int n, std::optional<int> from,
                                  std::optional<int> to) {
  if (n < 0) throw std::invalid_argument("path length must be >= 0");
  std::vector<Path> out;
  if (n == 0) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (from && *from != v) continue;
      if (to && *to != v) continue;
      out.push_back(Path{v, {}});
    }
    return out;
  }

  // adjacency in edge-index order keeps the output lexicographic
  std::vector<std::vector<int>> outgoing(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) outgoing[g.source(e)].push_back(e);

  std::vector<int> stack;
  auto dfs = [&](auto&& self, int at) -> void {
    if (static_cast<int>(stack.size()) == n) {
      if (!to || *to == at) out.push_back(Path{g.source(stack.front()), stack});
      return;
    }
    for (int e : outgoing[at]) {
      stack.push_back(e);
      self(self, g.range(e));
      stack.pop_back();
    }
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (from && *from != v) continue;
    dfs(dfs, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Path reverse_path(const WeightedGraph& g, const Path& p) {
  Path out;
  out.base = path_range(g, p);
  out.edges.reserve(p.edges.size());
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) {
    out.edges.push_back(g.dual(*it));
  }
  return out;
}

GraphPtr make_flower(int petals, const std::vector<std::pair<int, int>>& pairing) {
  if (petals < 0) throw GraphError("petal count must be >= 0");
  std::vector<int> dual_of(petals, -1);
  for (auto [a, b] : pairing) {
    if (a < 0 || a >= petals || b < 0 || b >= petals) {
      throw GraphError("pairing spec references a petal outside 0.." + std::to_string(petals - 1));
    }
    if (dual_of[a] != -1 || (a != b && dual_of[b] != -1)) {
      throw GraphError("pairing spec mentions a petal twice");
    }
    dual_of[a] = b;
    dual_of[b] = a;
  }
  for (int i = 0; i < petals; ++i) {
    if (dual_of[i] == -1) throw GraphError("pairing spec does not cover petal " + std::to_string(i));
  }

  std::vector<WeightedGraph::VertexSpec> vs{{"v", Rational(1)}};
  std::vector<WeightedGraph::EdgeSpec> es;
  auto petal_id = [](int i) { return "e" + std::to_string(i + 1); };
  for (int i = 0; i < petals; ++i) {
    es.push_back({petal_id(i), "v", "v", petal_id(dual_of[i])});
  }
  return std::make_shared<WeightedGraph>(vs, es);
}

GraphPtr make_two_vertex(const Rational& mu_v, const Rational& mu_w) {
  if (mu_v <= 0 || mu_w <= 0) throw GraphError("vertex weights must be positive");
  if (mu_w > mu_v) throw GraphError("two-vertex graph requires mu(v) >= mu(w)");
  std::vector<WeightedGraph::VertexSpec> vs{{"v", mu_v}, {"w", mu_w}};
  std::vector<WeightedGraph::EdgeSpec> es{
      {"e", "v", "w", "e~"},
      {"e~", "w", "v", "e"},
  };
  return std::make_shared<WeightedGraph>(vs, es);
}

Rational two_vertex_rho(const WeightedGraph& g) {
  if (g.vertex_count() != 2 || g.edge_count() != 2 || g.dual(0) != 1 ||
      g.source(0) == g.range(0)) {
    throw GraphError("graph is not a two-vertex dual-pair graph");
  }
  return g.mu(g.source(0)) / g.mu(g.range(0));
}

GraphPtr load_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("graph file is not valid JSON: ") + e.what());
  }

  std::vector<WeightedGraph::VertexSpec> vs;
  std::vector<WeightedGraph::EdgeSpec> es;
  try {
    for (const auto& v : doc.at("vertices")) {
      Rational mu;
      try {
        mu = parse_rational(v.at("mu").get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw GraphError(std::string("bad vertex weight: ") + e.what());
      }
      vs.push_back({v.at("id").get<std::string>(), mu});
    }
    for (const auto& e : doc.at("edges")) {
      es.push_back({e.at("id").get<std::string>(), e.at("source").get<std::string>(),
                    e.at("range").get<std::string>(), e.at("dual").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("graph file has unexpected structure: ") + e.what());
  }

  auto g = std::make_shared<WeightedGraph>(vs, es);
  auto report = validate(*g);
  if (!report.ok()) {
    std::string msg = "graph file violates invariants:";
    for (const auto& v : report.violations) msg += "\n  - " + v;
    throw GraphError(msg);
  }
  return g;
}

GraphPtr load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph_json(buf.str());
}

std::string graph_to_json(const WeightedGraph& g) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    doc["vertices"].push_back({{"id", g.vertex_id(v)}, {"mu", to_string(g.mu(v))}});
  }
  doc["edges"] = nlohmann::json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    doc["edges"].push_back({{"id", g.edge_id(e)},
                            {"source", g.vertex_id(g.source(e))},
                            {"range", g.vertex_id(g.range(e))},
                            {"dual", g.edge_id(g.dual(e))}});
  }
  return doc.dump(2);
}

}  // namespace graphfp
