#include "graphfp/cumulants.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace graphfp {

P0Element kappa_base(const GraphPtr& g, const EdgeTuple& t) {
  P0Element zero(g);
  if (t.size() != 2) return zero;
  const int e1 = t[0];
  const int e2 = t[1];
  if (e2 != g->dual(e1)) return zero;
  const int v = g->source(e1);
  const int w = g->range(e1);
  return P0Element::vertex(g, v, g->mu(w) / g->mu(v));
}

namespace {

bool tuple_is_cyclic_loop(const WeightedGraph& g, const EdgeTuple& t) {
  const size_t n = t.size();
  for (size_t i = 0; i < n; ++i) {
    if (g.range(t[i]) != g.source(t[(i + 1) % n])) return false;
  }
  return true;
}

}  // namespace

P0Element kappa_pi_closed(const GraphPtr& g, const EdgeTuple& t, const nc::NCPartition& pi) {
  P0Element zero(g);
  const int n = static_cast<int>(t.size());
  if (pi.n() != n) throw std::invalid_argument("partition size does not match tuple length");
  if (n == 0) return zero;
  if (!tuple_is_cyclic_loop(*g, t)) return zero;

  Rational coeff(1);
  for (const auto& block : pi.blocks()) {
    if (block.size() != 2) return zero;
    const int ei = t[block[0] - 1];
    const int ej = t[block[1] - 1];
    if (ej != g->dual(ei)) return zero;
    coeff *= g->mu(g->range(ei)) / g->mu(g->range(ej));
  }
  return P0Element::vertex(g, g->source(t.front()), coeff);
}

namespace {

// An argument of the peeling recursion: a scalar multiple of one edge
// generator. Scalars absorb the inserted inner cumulants.
struct ScaledEdge {
  Rational coeff;
  int edge;
};

// x * (c [u]) and (c [u]) * x for x = coeff*[edge]; nullopt encodes zero.
std::optional<ScaledEdge> mul_right(const WeightedGraph& g, const ScaledEdge& x, const Rational& c,
                                    int u) {
  if (g.range(x.edge) != u) return std::nullopt;
  return ScaledEdge{x.coeff * c, x.edge};
}

std::optional<ScaledEdge> mul_left(const WeightedGraph& g, const Rational& c, int u,
                                   const ScaledEdge& x) {
  if (g.source(x.edge) != u) return std::nullopt;
  return ScaledEdge{x.coeff * c, x.edge};
}

}  // namespace

P0Element kappa_pi_recursive(const GraphPtr& g, const EdgeTuple& t, const nc::NCPartition& pi,
                             InsertSide side) {
  P0Element zero(g);
  const int n = static_cast<int>(t.size());
  if (pi.n() != n) throw std::invalid_argument("partition size does not match tuple length");
  if (n == 0) return zero;

  std::vector<ScaledEdge> args;
  args.reserve(n);
  for (int pos = 1; pos <= n; ++pos) {
    args.push_back(ScaledEdge{Rational(1), t[pos - 1]});
  }
  std::vector<int> label(n, 0);  // block index per surviving position
  for (int b = 0; b < pi.block_count(); ++b) {
    for (int pos : pi.blocks()[b]) label[pos - 1] = b;
  }
  std::vector<int> block_size(pi.block_count(), 0);
  for (int b = 0; b < pi.block_count(); ++b) {
    block_size[b] = static_cast<int>(pi.blocks()[b].size());
  }

  int blocks_left = pi.block_count();
  while (true) {
    if (blocks_left == 1) {
      Rational scale(1);
      EdgeTuple edges;
      edges.reserve(args.size());
      for (const auto& a : args) {
        scale *= a.coeff;
        edges.push_back(a.edge);
      }
      return kappa_base(g, edges) * scale;
    }

    // first maximal run of one block that contains the whole block
    int start = -1, stop = -1;
    for (int i = 0; i < static_cast<int>(args.size());) {
      int j = i;
      while (j < static_cast<int>(args.size()) && label[j] == label[i]) ++j;
      if (j - i == block_size[label[i]]) {
        start = i;
        stop = j;
        break;
      }
      i = j;
    }
    // non-crossing guarantees an interval block exists
    if (start < 0) throw std::logic_error("no interval block found in a non-crossing partition");

    Rational scale(1);
    EdgeTuple inner_edges;
    for (int i = start; i < stop; ++i) {
      scale *= args[i].coeff;
      inner_edges.push_back(args[i].edge);
    }
    P0Element inner = kappa_base(g, inner_edges) * scale;
    if (inner.is_zero()) return zero;
    const auto& [u, c] = *inner.terms().begin();

    args.erase(args.begin() + start, args.begin() + stop);
    label.erase(label.begin() + start, label.begin() + stop);
    --blocks_left;

    std::optional<ScaledEdge> replaced;
    if (side == InsertSide::left) {
      if (start > 0) {
        replaced = mul_right(*g, args[start - 1], c, u);
        if (!replaced) return zero;
        args[start - 1] = *replaced;
      } else {
        replaced = mul_left(*g, c, u, args[0]);
        if (!replaced) return zero;
        args[0] = *replaced;
      }
    } else {
      if (start < static_cast<int>(args.size())) {
        replaced = mul_left(*g, c, u, args[start]);
        if (!replaced) return zero;
        args[start] = *replaced;
      } else {
        replaced = mul_right(*g, args.back(), c, u);
        if (!replaced) return zero;
        args.back() = *replaced;
      }
    }
  }
}

P0Element moment_from_cumulants(const GraphPtr& g, const EdgeTuple& t) {
  P0Element acc(g);
  if (t.empty()) return acc;
  for (const auto& pi : nc::enumerate_nc(static_cast<int>(t.size()))) {
    acc = acc + kappa_pi_closed(g, t, pi);
  }
  return acc;
}

Rational trace_from_cumulants(const GraphPtr& g, const EdgeTuple& t) {
  if (t.empty()) return Rational(1);
  return tau_p0(moment_from_cumulants(g, t));
}

FreenessReport mixed_cumulants_vanish(const GraphPtr& g, int max_length) {
  if (max_length < 2) throw std::invalid_argument("mixed cumulants need length >= 2");
  if (max_length > 8) throw std::invalid_argument("mixed cumulant scan capped at length 8");

  // dual-pair class of each edge
  const int m = g->edge_count();
  std::vector<int> cls(m, -1);
  int next = 0;
  for (int e = 0; e < m; ++e) {
    if (cls[e] >= 0) continue;
    cls[e] = next;
    cls[g->dual(e)] = next;
    ++next;
  }

  FreenessReport report;
  report.max_length = max_length;
  for (int len = 2; len <= max_length; ++len) {
    const auto partitions = nc::enumerate_nc(len);
    EdgeTuple tuple(len, 0);
    auto visit = [&](auto&& self, int pos) -> void {
      if (pos == len) {
        bool mixed = false;
        for (int i = 1; i < len && !mixed; ++i) mixed = cls[tuple[i]] != cls[tuple[0]];
        if (!mixed) return;
        ++report.tuples_checked;
        for (const auto& pi : partitions) {
          bool block_mixed = false;
          for (const auto& block : pi.blocks()) {
            for (size_t i = 1; i < block.size(); ++i) {
              if (cls[tuple[block[i] - 1]] != cls[tuple[block[0] - 1]]) {
                block_mixed = true;
                break;
              }
            }
            if (block_mixed) break;
          }
          if (!block_mixed) continue;
          ++report.evaluations;
          P0Element value = kappa_pi_closed(g, tuple, pi);
          if (!value.is_zero()) {
            report.violations.push_back(FreenessWitness{tuple, pi.blocks(), value.str()});
          }
        }
        return;
      }
      for (int e = 0; e < m; ++e) {
        tuple[pos] = e;
        self(self, pos + 1);
      }
    };
    visit(visit, 0);
  }
  return report;
}

CovarianceMaps covariance_maps(const GraphPtr& g) {
  Rational rho = two_vertex_rho(*g);  // also checks the graph shape
  const int e = 0;
  const int et = g->dual(e);
  const int v = g->source(e);
  const int w = g->range(e);

  CovarianceMaps out;
  out.basis = {g->vertex_id(v), g->vertex_id(w)};
  out.rho = rho;

  auto fill = [&](std::array<std::array<Rational, 2>, 2>& mat, const P0Element& img_v,
                  const P0Element& img_w) {
    mat[0][0] = img_v.coeff(v);
    mat[1][0] = img_v.coeff(w);
    mat[0][1] = img_w.coeff(v);
    mat[1][1] = img_w.coeff(w);
  };

  // alpha(p_u) = phi([e~][u][e]): the idempotent survives only at u = source(e)
  P0Element alpha_v = moment_from_cumulants(g, {et, e});
  P0Element alpha_w(g);
  // beta(p_u) = phi([e][u][e~]): only at u = range(e)
  P0Element beta_w = moment_from_cumulants(g, {e, et});
  P0Element beta_v(g);

  fill(out.alpha, alpha_v, alpha_w);
  fill(out.beta, beta_v, beta_w);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.eta[i][j] = out.alpha[i][j] + out.beta[i][j];
  }
  return out;
}

Rational free_poisson_moment(int n, const FreePoissonParams& p) {
  if (n < 1) throw std::invalid_argument("moment order must be >= 1");
  if (p.rate <= 0 || p.jump <= 0) throw std::invalid_argument("rate and jump size must be positive");
  Rational jump_pow(1);
  for (int i = 0; i < n; ++i) jump_pow *= p.jump;
  return jump_pow * nc::narayana_poly(n, p.rate);
}

std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& kappa) {
  const int count = static_cast<int>(kappa.size());
  std::vector<Rational> mu;
  mu.reserve(count);
  for (int n = 1; n <= count; ++n) {
    Rational acc(0);
    for (const auto& pi : nc::enumerate_nc(n)) {
      Rational term(1);
      for (const auto& block : pi.blocks()) term *= kappa[block.size() - 1];
      acc += term;
    }
    mu.push_back(acc);
  }
  return mu;
}

std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& mu) {
  const int count = static_cast<int>(mu.size());
  std::vector<Rational> kappa;
  kappa.reserve(count);
  for (int n = 1; n <= count; ++n) {
    Rational lower(0);
    for (const auto& pi : nc::enumerate_nc(n)) {
      if (pi.block_count() == 1) continue;  // the unknown kappa_n itself
      Rational term(1);
      for (const auto& block : pi.blocks()) term *= kappa[block.size() - 1];
      lower += term;
    }
    kappa.push_back(mu[n - 1] - lower);
  }
  return kappa;
}

}  // namespace graphfp
