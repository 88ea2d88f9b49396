#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quandlekit/finite_quandle.hpp"

namespace quandlekit {

/// A finite group given by its multiplication table, mul(a, b) = ab.
class FiniteGroup {
 public:
  /// Checks closure, identity, and inverses, plus associativity unless
  /// `check_associativity` is false (for tables built by construction).
  /// Throws AxiomViolationError on failure.
  FiniteGroup(int size, std::vector<int> mult, int identity, std::vector<std::string> labels = {},
              bool check_associativity = true);

  int size() const { return size_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const {
    return mult_[static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int pow(int a, std::int64_t k) const;
  const std::vector<int>& mult() const { return mult_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int a) const;

 private:
  int size_;
  std::vector<int> mult_;
  std::vector<int> inv_;
  int identity_;
  std::vector<std::string> labels_;
};

/// S_n for 1 <= n <= 6. Elements are permutations in lexicographic order of
/// one-line notation (index 0 is the identity); labels use disjoint cycle
/// notation over {1..n}, "e" for the identity. The product ab applies a
/// first, then b: (ab)(i) = b(a(i)).
FiniteGroup symmetric_group(int n);

/// Z/n written additively, element k labeled "k".
FiniteGroup cyclic_group(int n);

/// Conj(G): a * b = b^{-1} a b.
FiniteQuandle conj_quandle(const FiniteGroup& g);

Partition conjugacy_classes(const FiniteGroup& g);

}  // namespace quandlekit
