#include "graphfp/noncrossing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graphfp::nc {

namespace {

std::vector<std::vector<int>> canonicalize_blocks(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

void check_partition(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<char> seen(n + 1, 0);
  int covered = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition has an empty block");
    for (int x : b) {
      if (x < 1 || x > n) throw std::invalid_argument("partition element outside 1..n");
      if (seen[x]) throw std::invalid_argument("partition element repeated");
      seen[x] = 1;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("partition does not cover 1..n");
}

}  // namespace

bool has_crossing(const std::vector<std::vector<int>>& blocks) {
  // two blocks cross iff their merged sequence alternates A B A B
  for (size_t i = 0; i < blocks.size(); ++i) {
    for (size_t j = i + 1; j < blocks.size(); ++j) {
      const auto& a = blocks[i];
      const auto& b = blocks[j];
      size_t ia = 0, ib = 0;
      int alternations = 0;
      int last = 0;  // 0 none, 1 from a, 2 from b
      while (ia < a.size() || ib < b.size()) {
        int take;
        if (ib == b.size() || (ia < a.size() && a[ia] < b[ib])) {
          take = 1;
          ++ia;
        } else {
          take = 2;
          ++ib;
        }
        if (take != last) {
          ++alternations;
          last = take;
        }
      }
      if (alternations >= 4) return true;
    }
  }
  return false;
}

NCPartition::NCPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  if (n < 0) throw std::invalid_argument("ground set size must be >= 0");
  blocks_ = canonicalize_blocks(std::move(blocks));
  check_partition(n_, blocks_);
  if (has_crossing(blocks_)) throw std::invalid_argument("partition is crossing");
}

NCPairPartition::NCPairPartition(int n, std::vector<std::pair<int, int>> pairs) : n_(n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(pairs.size());
  for (auto& [a, b] : pairs) {
    if (a == b) throw std::invalid_argument("pair partition has a repeated element");
    blocks.push_back({std::min(a, b), std::max(a, b)});
  }
  NCPartition checked(n, blocks);
  if (n % 2 != 0) throw std::invalid_argument("pair partition needs an even ground set");
  pairs_.reserve(checked.blocks().size());
  for (const auto& b : checked.blocks()) pairs_.emplace_back(b[0], b[1]);
}

NCPartition NCPairPartition::as_partition() const {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(pairs_.size());
  for (auto [a, b] : pairs_) blocks.push_back({a, b});
  return NCPartition(n_, std::move(blocks));
}

namespace {

// Non-crossing partitions of an arbitrary ascending point list: the block of
// the first point splits the rest into independent gap segments.
void nc_rec(const std::vector<int>& pts, std::vector<std::vector<int>>& acc,
            std::vector<std::vector<std::vector<int>>>& out) {
  if (pts.empty()) {
    out.push_back(acc);
    return;
  }
  const int m = static_cast<int>(pts.size()) - 1;  // candidates after pts[0]
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> block{pts[0]};
    std::vector<std::vector<int>> segments;
    std::vector<int> current;
    for (int i = 0; i < m; ++i) {
      if (mask & (1ul << i)) {
        block.push_back(pts[i + 1]);
        segments.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(pts[i + 1]);
      }
    }
    segments.push_back(std::move(current));

    // multiply out the independent segments
    acc.push_back(std::move(block));
    auto expand = [&](auto&& self, size_t seg) -> void {
      if (seg == segments.size()) {
        out.push_back(acc);
        return;
      }
      if (segments[seg].empty()) {
        self(self, seg + 1);
        return;
      }
      std::vector<std::vector<std::vector<int>>> sub;
      std::vector<std::vector<int>> sub_acc;
      nc_rec(segments[seg], sub_acc, sub);
      for (auto& parts : sub) {
        size_t added = parts.size();
        for (auto& p : parts) acc.push_back(std::move(p));
        self(self, seg + 1);
        acc.resize(acc.size() - added);
      }
    };
    expand(expand, 0);
    acc.pop_back();
  }
}

}  // namespace

std::vector<NCPartition> enumerate_nc(int n) {
  if (n < 0) throw std::invalid_argument("ground set size must be >= 0");
  if (n > 16) throw std::invalid_argument("NC(n) enumeration capped at n = 16");
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 1);
  std::vector<std::vector<std::vector<int>>> raw;
  std::vector<std::vector<int>> acc;
  nc_rec(pts, acc, raw);
  std::vector<NCPartition> out;
  out.reserve(raw.size());
  for (auto& blocks : raw) out.emplace_back(n, std::move(blocks));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void nc2_rec(const std::vector<int>& pts, std::vector<std::pair<int, int>>& acc,
             std::vector<std::vector<std::pair<int, int>>>& out) {
  if (pts.empty()) {
    out.push_back(acc);
    return;
  }
  // pair pts[0] with pts[k] for odd k, split into inside and outside
  for (size_t k = 1; k < pts.size(); k += 2) {
    acc.emplace_back(pts[0], pts[k]);
    std::vector<int> inside(pts.begin() + 1, pts.begin() + k);
    std::vector<int> outside(pts.begin() + k + 1, pts.end());
    std::vector<std::vector<std::pair<int, int>>> left;
    std::vector<std::pair<int, int>> left_acc;
    nc2_rec(inside, left_acc, left);
    for (auto& in_pairs : left) {
      size_t added = in_pairs.size();
      for (auto& p : in_pairs) acc.push_back(p);
      nc2_rec(outside, acc, out);
      acc.resize(acc.size() - added);
    }
    acc.pop_back();
  }
}

}  // namespace

std::vector<NCPairPartition> enumerate_nc2(int m) {
  if (m < 0) throw std::invalid_argument("ground set size must be >= 0");
  if (m % 2 != 0) throw std::invalid_argument("NC2 needs an even ground set");
  if (m > 20) throw std::invalid_argument("NC2(m) enumeration capped at m = 20");
  std::vector<int> pts(m);
  std::iota(pts.begin(), pts.end(), 1);
  std::vector<std::vector<std::pair<int, int>>> raw;
  std::vector<std::pair<int, int>> acc;
  nc2_rec(pts, acc, raw);
  std::vector<NCPairPartition> out;
  out.reserve(raw.size());
  for (auto& pairs : raw) out.emplace_back(m, std::move(pairs));
  std::sort(out.begin(), out.end());
  return out;
}

Integer catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan index must be >= 0");
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2ul * n, n);
  return binom / (n + 1);
}

Integer narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("narayana needs 1 <= k <= n");
  Integer a, b;
  mpz_bin_uiui(a.get_mpz_t(), n, k);
  mpz_bin_uiui(b.get_mpz_t(), n, k - 1);
  return a * b / n;
}

std::vector<Integer> narayana_row(int n) {
  std::vector<Integer> row;
  row.reserve(n);
  for (int k = 1; k <= n; ++k) row.push_back(narayana(n, k));
  return row;
}

Rational narayana_poly(int n, const Rational& t) {
  if (n < 1) throw std::invalid_argument("narayana polynomial needs n >= 1");
  // Horner in ascending powers: N_n(T) = T*(N(n,1) + T*(N(n,2) + ...))
  Rational acc(0);
  for (int k = n; k >= 1; --k) {
    acc = (acc + narayana(n, k)) * t;
  }
  return acc;
}

NCPartition tl_bijection(const NCPairPartition& p) {
  const int n = p.n() / 2;
  // each arc identifies two of the n segments; union them
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto segment_of = [](int point) { return (point + 1) / 2; };
  for (auto [a, b] : p.pairs()) {
    int ra = find(segment_of(a));
    int rb = find(segment_of(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<int>> blocks(n + 1);
  for (int i = 1; i <= n; ++i) blocks[find(i)].push_back(i);
  std::vector<std::vector<int>> nonempty;
  for (auto& b : blocks) {
    if (!b.empty()) nonempty.push_back(std::move(b));
  }
  return NCPartition(n, std::move(nonempty));
}

NCPairPartition tl_inverse(const NCPartition& p) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(p.n());
  for (const auto& block : p.blocks()) {
    pairs.emplace_back(2 * block.front() - 1, 2 * block.back());
    for (size_t j = 0; j + 1 < block.size(); ++j) {
      pairs.emplace_back(2 * block[j], 2 * block[j + 1] - 1);
    }
  }
  return NCPairPartition(2 * p.n(), std::move(pairs));
}

int odd_block_count(const NCPairPartition& p) {
  int count = 0;
  for (auto [a, b] : p.pairs()) {
    if (a % 2 == 1) ++count;
  }
  return count;
}

}  // namespace graphfp::nc
