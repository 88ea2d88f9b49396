#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quandlekit {

/// Sorted set of element indices.
using ElementSet = std::vector<int>;

/// Disjoint cover of a set of element indices; blocks are sorted
/// internally and ordered by their minimum element.
using Partition = std::vector<ElementSet>;

/// Sorts each block and orders blocks by minimum element.
Partition canonical_partition(Partition p);

/// Multiset of block sizes, ascending.
std::vector<std::size_t> block_sizes(const Partition& p);

enum class QuandleAxiom { Idempotency, RightInvertibility, SelfDistributivity };

std::string to_string(QuandleAxiom axiom);

/// First violated axiom with a lexicographically least witness. For
/// right-invertibility the witness is (a, c, b): a*b == c*b with a < c.
struct AxiomViolation {
  QuandleAxiom axiom;
  int a = 0;
  int b = 0;
  int c = 0;

  std::string describe() const;
};

/// A finite quandle given by its operation table, table(a, b) = a * b.
class FiniteQuandle {
 public:
  /// Validates shape and range but not the axioms; see check_axioms.
  /// Throws std::invalid_argument on malformed tables.
  FiniteQuandle(int size, std::vector<int> table, std::vector<std::string> labels = {});
  static FiniteQuandle from_rows(const std::vector<std::vector<int>>& rows,
                                 std::vector<std::string> labels = {});
  /// a * b = a on n elements.
  static FiniteQuandle trivial(int n);

  int size() const { return size_; }
  int op(int a, int b) const { return table_[index(a, b)]; }
  /// a *^{-1} b, the inverse of S_b; -1 if S_b is not a bijection.
  int inv_op(int a, int b) const { return inv_table_[index(a, b)]; }
  const std::vector<int>& table() const { return table_; }
  std::vector<std::vector<int>> rows() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int a) const;

  /// Restricts the operation to a subquandle, relabeling elements by
  /// position in `subset`. Throws NotASubquandle if not closed.
  FiniteQuandle restrict_to(const ElementSet& subset) const;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(b);
  }

  int size_;
  std::vector<int> table_;
  std::vector<int> inv_table_;
  std::vector<std::string> labels_;
};

std::optional<AxiomViolation> check_axioms(const FiniteQuandle& q);

/// S_b^n(a); n may be negative.
int op_pow(const FiniteQuandle& q, int a, std::int64_t n, int b);

/// Least n >= 1 with a *^n b = a for all a, b (lcm of the orders of S_b).
std::int64_t type_of(const FiniteQuandle& q);

/// Least subset containing `generators` closed under * and *^{-1}.
ElementSet generated_subquandle(const FiniteQuandle& q, const ElementSet& generators);

/// True iff `subset` is closed under * and *^{-1}.
bool is_subquandle(const FiniteQuandle& q, const ElementSet& subset);

/// Orbits of `ambient` under the moves x -> x * a, x -> x *^{-1} a with
/// a in `ambient`. Throws NotASubquandle if `ambient` is not closed.
Partition connected_components(const FiniteQuandle& q, const ElementSet& ambient);
Partition connected_components(const FiniteQuandle& q);

bool is_connected(const FiniteQuandle& q, const ElementSet& ambient);
bool is_connected(const FiniteQuandle& q);

/// Element-index map phi with phi(x * y) = phi(x) * phi(y), found by
/// backtracking in canonical order, or nullopt if none exists.
std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& q1, const FiniteQuandle& q2);

/// True iff `phi` is a bijection transporting the table of q1 onto q2.
bool is_isomorphism(const FiniteQuandle& q1, const FiniteQuandle& q2, const std::vector<int>& phi);

}  // namespace quandlekit
