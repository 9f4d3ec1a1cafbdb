#pragma once

#include <utility>
#include <vector>

#include "graphfp/rational.hpp"

namespace graphfp::nc {

// Non-crossing partition of {1..n}. Blocks are kept canonical: every block
// ascending, blocks ordered by their minimum.
class NCPartition {
 public:
  // Validates that `blocks` partitions {1..n} and is non-crossing;
  // throws std::invalid_argument otherwise.
  NCPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  bool operator==(const NCPartition&) const = default;
  bool operator<(const NCPartition& other) const {
    return blocks_ < other.blocks_;
  }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

// Non-crossing pair partition of {1..n} (n even). Pairs are (min, max),
// ordered by minimum.
class NCPairPartition {
 public:
  NCPairPartition(int n, std::vector<std::pair<int, int>> pairs);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  NCPartition as_partition() const;

  bool operator==(const NCPairPartition&) const = default;
  bool operator<(const NCPairPartition& other) const { return pairs_ < other.pairs_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

// True iff `blocks` (over {1..n}) has two blocks a < b < c < d with a, c in
// one and b, d in the other.
bool has_crossing(const std::vector<std::vector<int>>& blocks);

// All of NC(n) in canonical order; |NC(n)| = Catalan(n). n = 0 gives the
// empty partition only.
std::vector<NCPartition> enumerate_nc(int n);

// All of NC2(m) in canonical order; |NC2(2k)| = Catalan(k). Throws on odd m.
std::vector<NCPairPartition> enumerate_nc2(int m);

Integer catalan(int n);

// Number of non-crossing partitions of {1..n} with exactly k blocks,
// N(n,k) = C(n,k) C(n,k-1) / n. Throws unless 1 <= k <= n.
Integer narayana(int n, int k);
std::vector<Integer> narayana_row(int n);

// N_n(T) = sum_k N(n,k) T^k evaluated exactly.
Rational narayana_poly(int n, const Rational& t);

// The Temperley-Lieb bijection NC2(2n) -> NC(n): the image of pi is the
// partition whose block {i1 < ... < ik} pulls back to the arcs
// {2*i1 - 1, 2*ik} and {2*ij, 2*i(j+1) - 1}.
NCPartition tl_bijection(const NCPairPartition& p);
NCPairPartition tl_inverse(const NCPartition& p);

// Number of pairs whose smaller element is odd.
int odd_block_count(const NCPairPartition& p);

}  // namespace graphfp::nc
