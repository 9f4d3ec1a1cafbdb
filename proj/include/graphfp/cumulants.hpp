#pragma once

#include <array>
#include <string>
#include <vector>

#include "graphfp/graph.hpp"
#include "graphfp/noncrossing.hpp"
#include "graphfp/path_algebra.hpp"
#include "graphfp/rational.hpp"

namespace graphfp {

// Tuples of edge indices; composability is not required, the cumulant
// engine decides vanishing.
using EdgeTuple = std::vector<int>;

// Base vertex-algebra-valued cumulant of edge generators: zero unless the
// tuple is exactly (e, dual(e)), in which case it is
// (mu(range e) / mu(source e)) * [source e].
P0Element kappa_base(const GraphPtr& g, const EdgeTuple& t);

// Multiplicative extension over a non-crossing partition, in closed form:
// nonzero only when the tuple is a composable loop and pi pairs each edge
// with a later dual; then the product of mu(range e_i)/mu(range e_j) over
// the pairs times [source of the first edge].
P0Element kappa_pi_closed(const GraphPtr& g, const EdgeTuple& t, const nc::NCPartition& pi);

// Same map computed by literally peeling interval blocks and inserting the
// inner cumulant into a neighbouring argument. `side` picks which neighbour
// absorbs the insertion; both sides must agree (the map is balanced).
enum class InsertSide { left, right };
P0Element kappa_pi_recursive(const GraphPtr& g, const EdgeTuple& t, const nc::NCPartition& pi,
                             InsertSide side = InsertSide::left);

// Moment reconstruction: sum of kappa_pi over all of NC(n).
P0Element moment_from_cumulants(const GraphPtr& g, const EdgeTuple& t);

// mu^2-weighted moment (rescaled); third evaluator of word traces.
Rational trace_from_cumulants(const GraphPtr& g, const EdgeTuple& t);

struct FreenessWitness {
  EdgeTuple word;
  std::vector<std::vector<int>> partition_blocks;
  std::string value;
};

struct FreenessReport {
  int max_length = 0;
  long tuples_checked = 0;
  long evaluations = 0;
  std::vector<FreenessWitness> violations;
  bool free() const { return violations.empty(); }
};

// Groups edges into dual-pair classes {e, dual(e)} and checks that every
// kappa_pi with a block joining two distinct classes vanishes, over all
// tuples of length 2..max_length. Witnesses are collected, not thrown.
FreenessReport mixed_cumulants_vanish(const GraphPtr& g, int max_length);

// Covariance of the two-vertex edge generator x = [e] as an operator-valued
// circular element: alpha(b) = phi(x* b x), beta(b) = phi(x b x*), and
// eta = alpha + beta, the covariance of the semicircular x + x*.
// Matrices act on column vectors over the ordered basis (p_v, p_w):
// entry (i, j) is the coefficient of basis i in map(basis j).
struct CovarianceMaps {
  std::array<std::string, 2> basis;  // vertex ids, source of e first
  Rational rho;
  std::array<std::array<Rational, 2>, 2> alpha;
  std::array<std::array<Rational, 2>, 2> beta;
  std::array<std::array<Rational, 2>, 2> eta;
};
CovarianceMaps covariance_maps(const GraphPtr& g);

struct FreePoissonParams {
  Rational rate;  // lambda > 0
  Rational jump;  // alpha > 0
};

// n-th moment of the free Poisson law: jump^n * N_n(rate).
Rational free_poisson_moment(int n, const FreePoissonParams& p);

// Scalar moment-cumulant transforms via NC(n) enumeration. Lists are
// 1-indexed by degree: in[0] is kappa_1 / mu_1. Mutually inverse.
std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& kappa);
std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& mu);

}  // namespace graphfp
