#pragma once

#include <cstdint>
#include <vector>

#include "quandlekit/finite_quandle.hpp"
#include "quandlekit/integer_matrix.hpp"

// Independent reference implementations used to cross-check the library.
namespace oracle {

using quandlekit::BigInt;

inline BigInt euclid(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Fraction-free Gaussian elimination.
inline BigInt bareiss_det(quandlekit::IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Components by union-find over the relation x ~ x * a.
inline std::vector<int> component_labels(const quandlekit::FiniteQuandle& q) {
  std::vector<int> parent(static_cast<std::size_t>(q.size()));
  for (int i = 0; i < q.size(); ++i) parent[static_cast<std::size_t>(i)] = i;
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int x = 0; x < q.size(); ++x) {
    for (int a = 0; a < q.size(); ++a) parent[static_cast<std::size_t>(find(x))] = find(q.op(x, a));
  }
  std::vector<int> out(static_cast<std::size_t>(q.size()));
  for (int x = 0; x < q.size(); ++x) out[static_cast<std::size_t>(x)] = find(x);
  return out;
}

// Block count and depth of the iterated decomposition, computed with
// union-find on each block instead of BFS.
struct Brute {
  std::size_t blocks = 0;
  int depth = 0;
};

inline Brute brute_decomposition(const quandlekit::FiniteQuandle& q) {
  std::vector<std::vector<int>> level{{}};
  for (int i = 0; i < q.size(); ++i) level[0].push_back(i);
  for (int depth = 0;; ++depth) {
    std::vector<std::vector<int>> next;
    for (const auto& block : level) {
      std::vector<int> parent(block.size());
      for (std::size_t i = 0; i < block.size(); ++i) parent[i] = static_cast<int>(i);
      std::vector<int> pos(static_cast<std::size_t>(q.size()), -1);
      for (std::size_t i = 0; i < block.size(); ++i) pos[static_cast<std::size_t>(block[i])] = static_cast<int>(i);
      const auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
      };
      for (int x : block) {
        for (int a : block) {
          const int y = pos[static_cast<std::size_t>(q.op(x, a))];
          parent[static_cast<std::size_t>(find(pos[static_cast<std::size_t>(x)]))] = find(y);
        }
      }
      std::vector<std::vector<int>> groups(block.size());
      for (std::size_t i = 0; i < block.size(); ++i) groups[static_cast<std::size_t>(find(static_cast<int>(i)))].push_back(block[i]);
      for (auto& g : groups) {
        if (!g.empty()) next.push_back(g);
      }
    }
    if (next.size() == level.size()) return {level.size(), depth};
    level = std::move(next);
  }
}

}  // namespace oracle
