#include "graphfp/path_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "graphfp/noncrossing.hpp"

namespace graphfp {

namespace {

void require_same_graph(const GraphPtr& a, const GraphPtr& b) {
  if (a.get() != b.get()) {
    throw std::invalid_argument("operands live over different graphs");
  }
}

}  // namespace

P0Element P0Element::vertex(GraphPtr g, int v, Rational coeff) {
  P0Element out(std::move(g));
  out.add_term(v, coeff);
  return out;
}

Rational P0Element::coeff(int v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? Rational(0) : it->second;
}

P0Element& P0Element::add_term(int v, const Rational& c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

P0Element P0Element::operator+(const P0Element& other) const {
  require_same_graph(graph_, other.graph_);
  P0Element out = *this;
  for (const auto& [v, c] : other.terms_) out.add_term(v, c);
  return out;
}

P0Element P0Element::operator-(const P0Element& other) const {
  require_same_graph(graph_, other.graph_);
  P0Element out = *this;
  for (const auto& [v, c] : other.terms_) out.add_term(v, -c);
  return out;
}

P0Element P0Element::operator*(const Rational& scalar) const {
  P0Element out(graph_);
  if (scalar == 0) return out;
  for (const auto& [v, c] : terms_) out.terms_.emplace(v, c * scalar);
  return out;
}

P0Element P0Element::operator*(const P0Element& other) const {
  require_same_graph(graph_, other.graph_);
  P0Element out(graph_);
  for (const auto& [v, c] : terms_) {
    auto it = other.terms_.find(v);
    if (it != other.terms_.end()) out.add_term(v, c * it->second);
  }
  return out;
}

bool P0Element::operator==(const P0Element& other) const {
  return graph_.get() == other.graph_.get() && terms_ == other.terms_;
}

std::string P0Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, c] : terms_) {
    if (!first) out << " + ";
    out << to_string(c) << "*[" << graph_->vertex_id(v) << "]";
    first = false;
  }
  return out.str();
}

PathVector PathVector::basis(GraphPtr g, Path p, Rational coeff) {
  if (!path_composable(*g, p)) throw std::invalid_argument("path is not composable");
  PathVector out(std::move(g));
  out.add_term(p, coeff);
  return out;
}

PathVector PathVector::vertex(GraphPtr g, int v) { return basis(std::move(g), Path{v, {}}); }

PathVector PathVector::edge(GraphPtr g, int e) {
  Path p{g->source(e), {e}};
  return basis(std::move(g), std::move(p));
}

Rational PathVector::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

int PathVector::max_degree() const {
  int deg = 0;
  for (const auto& [p, c] : terms_) deg = std::max(deg, p.length());
  return deg;
}

PathVector PathVector::degree_component(int n) const {
  PathVector out(graph_);
  for (const auto& [p, c] : terms_) {
    if (p.length() == n) out.terms_.emplace(p, c);
  }
  return out;
}

PathVector& PathVector::add_term(const Path& p, const Rational& c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

PathVector PathVector::operator+(const PathVector& other) const {
  require_same_graph(graph_, other.graph_);
  PathVector out = *this;
  for (const auto& [p, c] : other.terms_) out.add_term(p, c);
  return out;
}

PathVector PathVector::operator-(const PathVector& other) const {
  require_same_graph(graph_, other.graph_);
  PathVector out = *this;
  for (const auto& [p, c] : other.terms_) out.add_term(p, -c);
  return out;
}

PathVector PathVector::operator*(const Rational& scalar) const {
  PathVector out(graph_);
  if (scalar == 0) return out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * scalar);
  return out;
}

bool PathVector::operator==(const PathVector& other) const {
  return graph_.get() == other.graph_.get() && terms_ == other.terms_;
}

std::string PathVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out << " + ";
    out << to_string(c) << "*[";
    if (p.edges.empty()) {
      out << graph_->vertex_id(p.base);
    } else {
      for (size_t i = 0; i < p.edges.size(); ++i) {
        if (i) out << " ";
        out << graph_->edge_id(p.edges[i]);
      }
    }
    out << "]";
    first = false;
  }
  return out.str();
}

namespace {

// One basis product [xi] # [eta], accumulated into `out` with weight `c`.
void fock_mul_basis(const WeightedGraph& g, const Path& xi, const Path& eta, const Rational& c,
                    PathVector& out) {
  const int m = xi.length();
  const int n = eta.length();

  // deepest k with xi_{m-j+1} = dual(eta_j) for all j <= k
  int max_cancel = 0;
  while (max_cancel < std::min(m, n) &&
         xi.edges[m - 1 - max_cancel] == g.dual(eta.edges[max_cancel])) {
    ++max_cancel;
  }

  const int range_xi = path_range(g, xi);
  for (int k = 0; k <= max_cancel; ++k) {
    if (k == 0) {
      // plain concatenation; vanishes unless the junction composes
      if (range_xi != path_source(g, eta)) continue;
      Path joined;
      joined.base = path_source(g, xi);
      joined.edges = xi.edges;
      joined.edges.insert(joined.edges.end(), eta.edges.begin(), eta.edges.end());
      out.add_term(joined, c);
      continue;
    }
    // vertex reached after removing k edges from the tail of xi
    const int stop = m - k;
    const int at = (stop == 0) ? path_source(g, xi) : g.range(xi.edges[stop - 1]);
    Rational weight = g.mu(range_xi) / g.mu(at);
    Path reduced;
    reduced.edges.assign(xi.edges.begin(), xi.edges.begin() + stop);
    reduced.edges.insert(reduced.edges.end(), eta.edges.begin() + k, eta.edges.end());
    reduced.base = reduced.edges.empty() ? at : g.source(reduced.edges.front());
    out.add_term(reduced, c * weight);
  }
}

}  // namespace

PathVector fock_mul(const PathVector& x, const PathVector& y) {
  require_same_graph(x.graph(), y.graph());
  const WeightedGraph& g = *x.graph();
  PathVector out(x.graph());
  for (const auto& [xi, cx] : x.terms()) {
    for (const auto& [eta, cy] : y.terms()) {
      fock_mul_basis(g, xi, eta, cx * cy, out);
    }
  }
  return out;
}

PathVector gr_mul(const PathVector& x, const PathVector& y) {
  require_same_graph(x.graph(), y.graph());
  const WeightedGraph& g = *x.graph();
  PathVector out(x.graph());
  for (const auto& [xi, cx] : x.terms()) {
    for (const auto& [eta, cy] : y.terms()) {
      if (path_range(g, xi) != path_source(g, eta)) continue;
      Path joined;
      joined.base = path_source(g, xi);
      joined.edges = xi.edges;
      joined.edges.insert(joined.edges.end(), eta.edges.begin(), eta.edges.end());
      out.add_term(joined, cx * cy);
    }
  }
  return out;
}

PathVector star(const PathVector& x) {
  const WeightedGraph& g = *x.graph();
  PathVector out(x.graph());
  for (const auto& [p, c] : x.terms()) {
    out.add_term(reverse_path(g, p), c);
  }
  return out;
}

P0Element phi_fock(const PathVector& x) {
  P0Element out(x.graph());
  for (const auto& [p, c] : x.terms()) {
    if (p.length() == 0) out.add_term(p.base, c);
  }
  return out;
}

namespace {

const Rational& state_weight_sum(const WeightedGraph& g) {
  if (g.mu_square_sum() == 0) throw std::domain_error("graph has no vertices");
  return g.mu_square_sum();
}

}  // namespace

Rational tau_p0(const P0Element& b) {
  const WeightedGraph& g = *b.graph();
  Rational acc(0);
  for (const auto& [v, c] : b.terms()) {
    acc += c * g.mu(v) * g.mu(v);
  }
  return acc / state_weight_sum(g);
}

Rational tau_fock(const PathVector& x) { return tau_p0(phi_fock(x)); }

namespace {

bool is_cyclic_loop(const WeightedGraph& g, const std::vector<int>& word) {
  const size_t n = word.size();
  for (size_t i = 0; i < n; ++i) {
    if (g.range(word[i]) != g.source(word[(i + 1) % n])) return false;
  }
  return true;
}

}  // namespace

Rational trace_pair_partition(const GraphPtr& g, const std::vector<int>& word) {
  const size_t n = word.size();
  if (n == 0) return Rational(1);
  if (n % 2 != 0) return Rational(0);
  if (!is_cyclic_loop(*g, word)) return Rational(0);

  Rational total(0);
  for (const auto& pi : nc::enumerate_nc2(static_cast<int>(n))) {
    Rational term(1);
    bool alive = true;
    for (auto [i, j] : pi.pairs()) {
      const int ei = word[i - 1];
      const int ej = word[j - 1];
      if (ej != g->dual(ei)) {
        alive = false;
        break;
      }
      term *= g->mu(g->range(ei)) / g->mu(g->range(ej));
    }
    if (alive) total += term;
  }
  const int base = g->source(word.front());
  return total * g->mu(base) * g->mu(base) / state_weight_sum(*g);
}

Rational trace_operator_model(const GraphPtr& g, const std::vector<int>& word) {
  if (word.empty()) return Rational(1);
  Rational acc(0);
  for (int v = 0; v < g->vertex_count(); ++v) {
    PathVector state = PathVector::vertex(g, v);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      state = fock_mul(PathVector::edge(g, *it), state);
      if (state.is_zero()) break;
    }
    acc += state.coeff(Path{v, {}}) * g->mu(v) * g->mu(v);
  }
  return acc / state_weight_sum(*g);
}

std::vector<int> parse_word(const WeightedGraph& g, const std::string& spec) {
  std::vector<int> word;
  std::stringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    // trim surrounding whitespace
    const auto begin = token.find_first_not_of(" \t");
    const auto end = token.find_last_not_of(" \t");
    if (begin == std::string::npos) {
      throw std::invalid_argument("empty token in word '" + spec + "'");
    }
    token = token.substr(begin, end - begin + 1);
    bool take_dual = false;
    if (token.back() == '*') {
      take_dual = true;
      token.pop_back();
    }
    int e = g.edge_index(token);
    word.push_back(take_dual ? g.dual(e) : e);
  }
  if (word.empty()) throw std::invalid_argument("empty word");
  return word;
}

std::string word_to_string(const WeightedGraph& g, const std::vector<int>& word) {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += g.edge_id(word[i]);
  }
  return out;
}

std::vector<int> alternating_word(const WeightedGraph& g, int n) {
  if (n < 0) throw std::invalid_argument("alternating word order must be >= 0");
  const int e = 0;
  const int dual = g.dual(e);
  if (dual == e) throw GraphError("alternating word needs a proper dual pair");
  std::vector<int> word;
  word.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    word.push_back(dual);
    word.push_back(e);
  }
  return word;
}

}  // namespace graphfp
