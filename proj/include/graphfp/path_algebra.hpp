#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphfp/graph.hpp"
#include "graphfp/rational.hpp"

namespace graphfp {

// Rational-linear combination of vertices; the degree-0 corner of the path
// algebra and the target of the expectation and of every cumulant.
class P0Element {
 public:
  explicit P0Element(GraphPtr g) : graph_(std::move(g)) {}
  static P0Element vertex(GraphPtr g, int v, Rational coeff = Rational(1));

  const GraphPtr& graph() const { return graph_; }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int v) const;
  bool is_zero() const { return terms_.empty(); }

  P0Element& add_term(int v, const Rational& c);
  P0Element operator+(const P0Element& other) const;
  P0Element operator-(const P0Element& other) const;
  P0Element operator*(const Rational& scalar) const;
  // pointwise product: vertex idempotents are orthogonal
  P0Element operator*(const P0Element& other) const;
  bool operator==(const P0Element& other) const;

  std::string str() const;

 private:
  GraphPtr graph_;
  std::map<int, Rational> terms_;  // vertex index -> coefficient, no zeros
};

// Finite rational-linear combination of paths; the common carrier of the
// Fock-type '#' product and of the concatenation product.
class PathVector {
 public:
  explicit PathVector(GraphPtr g) : graph_(std::move(g)) {}
  static PathVector basis(GraphPtr g, Path p, Rational coeff = Rational(1));
  static PathVector vertex(GraphPtr g, int v);
  static PathVector edge(GraphPtr g, int e);

  const GraphPtr& graph() const { return graph_; }
  const std::map<Path, Rational>& terms() const { return terms_; }
  Rational coeff(const Path& p) const;
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;
  PathVector degree_component(int n) const;

  PathVector& add_term(const Path& p, const Rational& c);
  PathVector operator+(const PathVector& other) const;
  PathVector operator-(const PathVector& other) const;
  PathVector operator*(const Rational& scalar) const;
  bool operator==(const PathVector& other) const;

  std::string str() const;

 private:
  GraphPtr graph_;
  std::map<Path, Rational> terms_;
};

// The Fock-type product: basis paths multiply by cancelling a dual suffix
// against a prefix, [xi] # [eta] = sum_k (mu shift) [xi(1..m-k) eta(k+1..n)].
// Throws std::invalid_argument when the factors live over different graphs.
PathVector fock_mul(const PathVector& x, const PathVector& y);

// Plain concatenation product; non-composable concatenations vanish.
PathVector gr_mul(const PathVector& x, const PathVector& y);

// Adjoint: paths reversed and dualized, coefficients kept (rational scalars).
PathVector star(const PathVector& x);

// Degree-0 component.
P0Element phi_fock(const PathVector& x);

// tau = mu^2 after phi, rescaled by sum(mu^2) so tau(1) = 1 on unnormalized
// graphs as well.
Rational tau_fock(const PathVector& x);
Rational tau_p0(const P0Element& b);

// Trace of a word of edge generators in three independent ways. Words are
// edge-index sequences; a word that is not a composable loop traces to 0.
//
// Pair-partition formula: sum over NC2 pairings of dual-matching arcs with
// mu-ratio weights, times mu^2 at the basepoint.
Rational trace_pair_partition(const GraphPtr& g, const std::vector<int>& word);

// Operator model: apply left multiplication by each generator to every
// vertex vector in the Fock representation and read off the vacuum part.
Rational trace_operator_model(const GraphPtr& g, const std::vector<int>& word);

// Word syntax used across the CLI and file formats: comma-separated edge
// ids, '*' suffix meaning the dual edge ("e,e*,e,e*").
std::vector<int> parse_word(const WeightedGraph& g, const std::string& spec);
std::string word_to_string(const WeightedGraph& g, const std::vector<int>& word);

// (e~ e)^n: the alternating word of length 2n of the two-vertex graph.
std::vector<int> alternating_word(const WeightedGraph& g, int n);

}  // namespace graphfp
