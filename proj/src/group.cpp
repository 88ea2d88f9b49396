#include "quandlekit/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "quandlekit/errors.hpp"

namespace quandlekit {

FiniteGroup::FiniteGroup(int size, std::vector<int> mult, int identity, std::vector<std::string> labels,
                         bool check_associativity)
    : size_(size), mult_(std::move(mult)), identity_(identity), labels_(std::move(labels)) {
  if (size_ < 1) throw AxiomViolationError("group size must be positive");
  const auto n = static_cast<std::size_t>(size_);
  if (mult_.size() != n * n) throw AxiomViolationError("multiplication table must be size x size");
  if (!labels_.empty() && labels_.size() != n) throw AxiomViolationError("label count must equal size");
  if (identity_ < 0 || identity_ >= size_) throw AxiomViolationError("identity index out of range");
  for (int v : mult_) {
    if (v < 0 || v >= size_) throw AxiomViolationError("multiplication table entry out of range");
  }
  for (int a = 0; a < size_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) {
      throw AxiomViolationError("identity law fails at element " + std::to_string(a));
    }
  }
  inv_.assign(n, -1);
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inv_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inv_[static_cast<std::size_t>(a)] < 0) throw AxiomViolationError("element " + std::to_string(a) + " has no inverse");
  }
  if (!check_associativity) return;
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < size_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw AxiomViolationError("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                    std::to_string(c) + ")");
        }
      }
    }
  }
}

int FiniteGroup::pow(int a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int out = identity_;
  for (; k > 0; --k) out = mul(out, a);
  return out;
}

std::string FiniteGroup::label(int a) const {
  return labels_.empty() ? std::to_string(a) : labels_[static_cast<std::size_t>(a)];
}

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      if (!first) out += " ";
      first = false;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric_group supports 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  const std::size_t order = perms.size();
  std::vector<int> mult(order * order);
  std::vector<int> composed(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        composed[i] = perms[b][static_cast<std::size_t>(perms[a][i])];
      }
      mult[a * order + b] = index.at(composed);
    }
  }
  std::vector<std::string> labels;
  for (const auto& perm : perms) labels.push_back(cycle_notation(perm));
  return FiniteGroup(static_cast<int>(order), std::move(mult), 0, std::move(labels), n <= 4);
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> mult(un * un);
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] = (a + b) % n;
    labels.push_back(std::to_string(a));
  }
  return FiniteGroup(n, std::move(mult), 0, std::move(labels));
}

FiniteQuandle conj_quandle(const FiniteGroup& g) {
  const int n = g.size();
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] =
          g.mul(g.mul(g.inv(b), a), b);
    }
  }
  return FiniteQuandle(n, std::move(table), g.labels());
}

Partition conjugacy_classes(const FiniteGroup& g) {
  const int n = g.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Partition classes;
  for (int a = 0; a < n; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    ElementSet cls;
    for (int x = 0; x < n; ++x) {
      const int c = g.mul(g.mul(g.inv(x), a), x);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        cls.push_back(c);
      }
    }
    classes.push_back(std::move(cls));
  }
  return canonical_partition(std::move(classes));
}

}  // namespace quandlekit
