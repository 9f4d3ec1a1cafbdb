#pragma once

#include <vector>

#include "graphfp/rational.hpp"

namespace graphfp::fock {

// Finite truncation of a band operator on l^2(N) with exact rational
// entries. Entries outside the band are structurally zero.
class BandedOperator {
 public:
  BandedOperator(int dim, int bandwidth);

  int dim() const { return dim_; }
  int bandwidth() const { return bandwidth_; }

  Rational at(int i, int j) const;
  void set(int i, int j, const Rational& value);  // throws outside the band

  // y = A x, running over the band only.
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  int dim_;
  int bandwidth_;
  std::vector<Rational> data_;  // row-major band storage, width 2b+1
};

// t*t for t = sqrt(rho) l + 1/sqrt(rho) l*, as the pentadiagonal operator
// l^2 + l*^2 + (rho + 1/rho) - (1/rho) p0. Only rho itself appears, so the
// matrix is rational. Requires dim >= 3, rho > 0.
BandedOperator build_tstar_t(const Rational& rho, int dim);

// Restriction of t*t to the even-index subspace in the basis
// delta_0, delta_2, ...: tridiagonal l + l* + (rho + 1/rho) - (1/rho) p0.
BandedOperator build_even_restriction(const Rational& rho, int dim);

// Odd-index restriction: l + l* + (rho + 1/rho), no rank-one term.
BandedOperator build_odd_restriction(const Rational& rho, int dim);

// t*t for t = a l + b l* with rational a, b:
// a b (l^2 + l*^2) + (a^2 + b^2) - b^2 p0.
BandedOperator build_general_tstar_t(const Rational& a, const Rational& b, int dim);

// <op^n delta_0, delta_0>, exact. Throws std::invalid_argument unless
// dim > n * bandwidth, which guarantees the truncation boundary is never
// reached and the value equals the infinite-dimensional one.
Rational vacuum_moment(const BandedOperator& op, int n);

// Convenience wrappers that size the truncation from the request.
Rational tstar_t_moment(const Rational& rho, int n);
Rational general_t_moment(const Rational& a, const Rational& b, int n);

// Rank of the Krylov matrix [delta_0, A delta_0, ..., A^(dim-1) delta_0];
// dim means delta_0 is cyclic for the truncation.
int krylov_rank(const BandedOperator& op);

}  // namespace graphfp::fock
