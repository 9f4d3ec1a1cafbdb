#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphfp/rational.hpp"

namespace graphfp {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite graph with an edge-reversal involution and a positive rational
// weight per vertex. Vertices and edges are addressed by dense indices;
// the original string ids are kept for i/o.
//
// Construction never enforces the semantic invariants (a loader may want
// to report them); `validate()` does. Factories like `make_flower` and
// `make_two_vertex` only ever produce valid graphs.
class WeightedGraph {
 public:
  struct VertexSpec {
    std::string id;
    Rational mu;
  };
  struct EdgeSpec {
    std::string id;
    std::string source;
    std::string range;
    std::string dual;
  };
  struct Edge {
    std::string id;
    int source = 0;
    int range = 0;
    int dual = 0;
  };

  // Throws GraphError on structural problems only (duplicate ids,
  // references to unknown vertices/edges).
  WeightedGraph(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges);

  int vertex_count() const { return static_cast<int>(mu_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::string& edge_id(int e) const { return edges_.at(e).id; }
  int source(int e) const { return edges_.at(e).source; }
  int range(int e) const { return edges_.at(e).range; }
  int dual(int e) const { return edges_.at(e).dual; }
  const Rational& mu(int v) const { return mu_.at(v); }

  // Index lookups throw GraphError for unknown ids.
  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;

  const Rational& mu_square_sum() const { return mu_square_sum_; }
  bool normalized() const { return mu_square_sum_ == 1; }

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Rational> mu_;
  std::vector<Edge> edges_;
  Rational mu_square_sum_;
};

using GraphPtr = std::shared_ptr<const WeightedGraph>;

struct ValidationReport {
  std::vector<std::string> violations;
  bool normalized = false;
  Rational mu_square_sum;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const WeightedGraph& g);

// A path: `base` is the source vertex, `edges` a composable edge sequence.
// A length-0 path is just its base vertex.
struct Path {
  int base = 0;
  std::vector<int> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool operator==(const Path&) const = default;
  bool operator<(const Path& other) const {
    if (edges.size() != other.edges.size()) return edges.size() < other.edges.size();
    if (base != other.base) return base < other.base;
    return edges < other.edges;
  }
};

int path_source(const WeightedGraph& g, const Path& p);
int path_range(const WeightedGraph& g, const Path& p);
bool path_composable(const WeightedGraph& g, const Path& p);

// All composable edge sequences of length n, optionally filtered by
// endpoints, in canonical (lexicographic) order. n = 0 yields the vertex
// paths.
std::vector<Path> enumerate_paths(const WeightedGraph& g, int n,
                                  std::optional<int> from = std::nullopt,
                                  std::optional<int> to = std::nullopt);

// Reverses the edge order and replaces each edge by its dual; an involution.
Path reverse_path(const WeightedGraph& g, const Path& p);

// One vertex of weight 1 with `petals` loop edges. `pairing` partitions the
// petal slots 0..petals-1 into self-dual singletons {i,i} and dual pairs
// {i,j}. Throws GraphError on an inconsistent pairing spec.
GraphPtr make_flower(int petals, const std::vector<std::pair<int, int>>& pairing);

// Vertices v, w with weights mu_v >= mu_w > 0 and a single dual edge pair
// e: v -> w, e~: w -> v. Throws GraphError when mu_w > mu_v (keeps
// rho = mu_v / mu_w >= 1) or a weight is not positive.
GraphPtr make_two_vertex(const Rational& mu_v, const Rational& mu_w);

// mu(source(e)) / mu(range(e)) for the two-vertex graph; throws GraphError
// if the graph does not have that shape.
Rational two_vertex_rho(const WeightedGraph& g);

// JSON graph format:
//   {"vertices": [{"id": "v", "mu": "p/q"}, ...],
//    "edges":    [{"id": "e", "source": "v", "range": "w", "dual": "e~"}, ...]}
// The loader rejects (GraphError) files that violate any graph invariant.
GraphPtr load_graph_json(const std::string& text);
GraphPtr load_graph_file(const std::string& path);
std::string graph_to_json(const WeightedGraph& g);

}  // namespace graphfp
