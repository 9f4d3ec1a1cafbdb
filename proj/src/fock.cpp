#include "graphfp/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphfp::fock {

BandedOperator::BandedOperator(int dim, int bandwidth) : dim_(dim), bandwidth_(bandwidth) {
  if (dim < 1) throw std::invalid_argument("operator dimension must be >= 1");
  if (bandwidth < 0) throw std::invalid_argument("bandwidth must be >= 0");
  data_.assign(static_cast<size_t>(dim) * (2 * bandwidth + 1), Rational(0));
}

Rational BandedOperator::at(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_) {
    throw std::out_of_range("banded operator index out of range");
  }
  if (std::abs(i - j) > bandwidth_) return Rational(0);
  return data_[static_cast<size_t>(i) * (2 * bandwidth_ + 1) + (j - i + bandwidth_)];
}

void BandedOperator::set(int i, int j, const Rational& value) {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_) {
    throw std::out_of_range("banded operator index out of range");
  }
  if (std::abs(i - j) > bandwidth_) {
    throw std::invalid_argument("entry outside the band");
  }
  data_[static_cast<size_t>(i) * (2 * bandwidth_ + 1) + (j - i + bandwidth_)] = value;
}

std::vector<Rational> BandedOperator::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("vector length does not match operator dimension");
  }
  std::vector<Rational> y(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    const int lo = std::max(0, i - bandwidth_);
    const int hi = std::min(dim_ - 1, i + bandwidth_);
    Rational acc(0);
    for (int j = lo; j <= hi; ++j) {
      const Rational& a = data_[static_cast<size_t>(i) * (2 * bandwidth_ + 1) + (j - i + bandwidth_)];
      if (a != 0) acc += a * x[j];
    }
    y[i] = acc;
  }
  return y;
}

BandedOperator build_tstar_t(const Rational& rho, int dim) {
  if (rho <= 0) throw std::invalid_argument("rho must be positive");
  if (dim < 3) throw std::invalid_argument("t*t truncation needs dim >= 3");
  BandedOperator op(dim, 2);
  const Rational diag = rho + 1 / rho;
  for (int i = 0; i < dim; ++i) {
    op.set(i, i, i == 0 ? rho : diag);
    if (i + 2 < dim) {
      op.set(i, i + 2, Rational(1));
      op.set(i + 2, i, Rational(1));
    }
  }
  return op;
}

BandedOperator build_even_restriction(const Rational& rho, int dim) {
  if (rho <= 0) throw std::invalid_argument("rho must be positive");
  if (dim < 2) throw std::invalid_argument("even restriction needs dim >= 2");
  BandedOperator op(dim, 1);
  const Rational diag = rho + 1 / rho;
  for (int i = 0; i < dim; ++i) {
    op.set(i, i, i == 0 ? rho : diag);
    if (i + 1 < dim) {
      op.set(i, i + 1, Rational(1));
      op.set(i + 1, i, Rational(1));
    }
  }
  return op;
}

BandedOperator build_odd_restriction(const Rational& rho, int dim) {
  if (rho <= 0) throw std::invalid_argument("rho must be positive");
  if (dim < 2) throw std::invalid_argument("odd restriction needs dim >= 2");
  BandedOperator op(dim, 1);
  const Rational diag = rho + 1 / rho;
  for (int i = 0; i < dim; ++i) {
    op.set(i, i, diag);
    if (i + 1 < dim) {
      op.set(i, i + 1, Rational(1));
      op.set(i + 1, i, Rational(1));
    }
  }
  return op;
}

BandedOperator build_general_tstar_t(const Rational& a, const Rational& b, int dim) {
  if (a == 0 && b == 0) throw std::invalid_argument("a and b must not both vanish");
  if (dim < 3) throw std::invalid_argument("t*t truncation needs dim >= 3");
  BandedOperator op(dim, 2);
  const Rational diag = a * a + b * b;
  const Rational off = a * b;
  for (int i = 0; i < dim; ++i) {
    op.set(i, i, i == 0 ? a * a : diag);
    if (i + 2 < dim) {
      op.set(i, i + 2, off);
      op.set(i + 2, i, off);
    }
  }
  return op;
}

Rational vacuum_moment(const BandedOperator& op, int n) {
  if (n < 0) throw std::invalid_argument("moment order must be >= 0");
  if (op.dim() <= n * op.bandwidth()) {
    throw std::invalid_argument(
        "truncation too small for an exact moment: need dim > order * bandwidth");
  }
  std::vector<Rational> v(op.dim(), Rational(0));
  v[0] = 1;
  for (int k = 0; k < n; ++k) v = op.apply(v);
  return v[0];
}

Rational tstar_t_moment(const Rational& rho, int n) {
  const int dim = 2 * std::max(n, 1) + 2;
  return vacuum_moment(build_tstar_t(rho, dim), n);
}

Rational general_t_moment(const Rational& a, const Rational& b, int n) {
  const int dim = 2 * std::max(n, 1) + 2;
  return vacuum_moment(build_general_tstar_t(a, b, dim), n);
}

int krylov_rank(const BandedOperator& op) {
  const int n = op.dim();
  // columns are delta_0, A delta_0, ..., A^(n-1) delta_0
  std::vector<std::vector<Rational>> cols;
  cols.reserve(n);
  std::vector<Rational> v(n, Rational(0));
  v[0] = 1;
  for (int k = 0; k < n; ++k) {
    cols.push_back(v);
    if (k + 1 < n) v = op.apply(v);
  }

  // Gaussian elimination over the rationals
  int rank = 0;
  for (int row = 0; row < n && rank < n; ++row) {
    int pivot = -1;
    for (int c = rank; c < n; ++c) {
      if (cols[c][row] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(cols[rank], cols[pivot]);
    for (int c = rank + 1; c < n; ++c) {
      if (cols[c][row] == 0) continue;
      Rational f = cols[c][row] / cols[rank][row];
      for (int r = row; r < n; ++r) cols[c][r] -= f * cols[rank][r];
    }
    ++rank;
  }
  return rank;
}

}  // namespace graphfp::fock
