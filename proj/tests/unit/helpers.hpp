#pragma once

#include <vector>

#include "graphfp/rational.hpp"

namespace graphfp::testing {

inline Rational r(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// All set partitions of {1..n} via restricted growth strings; the slow
// oracle behind the non-crossing enumeration tests.
inline std::vector<std::vector<std::vector<int>>> all_set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(n, 0);
  auto emit = [&]() {
    int classes = 0;
    for (int x : rgs) classes = std::max(classes, x + 1);
    std::vector<std::vector<int>> blocks(classes);
    for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
    out.push_back(std::move(blocks));
  };
  auto rec = [&](auto&& self, int pos, int maxed) -> void {
    if (pos == n) {
      emit();
      return;
    }
    for (int c = 0; c <= maxed + 1; ++c) {
      rgs[pos] = c;
      self(self, pos + 1, std::max(maxed, c));
    }
  };
  if (n == 0) {
    out.push_back({});
  } else {
    rgs[0] = 0;
    rec(rec, 1, 0);
  }
  return out;
}

// Independent crossing test: exists a < b < c < d with {a,c} in one block
// and {b,d} in another.
inline bool crosses_bruteforce(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<int> block_of(n + 1, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    for (int x : blocks[b]) block_of[x] = b;
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (block_of[a] == block_of[c] && block_of[b] == block_of[d] &&
              block_of[a] != block_of[b])
            return true;
  return false;
}

// Positive semidefiniteness of a symmetric rational matrix by symmetric
// elimination: a zero pivot must come with a zero row.
inline bool is_positive_semidefinite(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  for (int k = 0; k < n; ++k) {
    if (m[k][k] < 0) return false;
    if (m[k][k] == 0) {
      for (int j = k; j < n; ++j) {
        if (m[k][j] != 0) return false;
      }
      continue;
    }
    // row elimination; the trailing Schur complement stays symmetric
    for (int i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

}  // namespace graphfp::testing
