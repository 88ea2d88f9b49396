#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quandlekit/decomposition.hpp"
#include "quandlekit/finite_quandle.hpp"
#include "quandlekit/group.hpp"

namespace quandlekit {

/// Multiple conjugation quandle: a disjoint union of groups G_lambda with a
/// global operation *. Carrier indices are global: group lambda occupies
/// [offset(lambda), offset(lambda) + |G_lambda|) with local indexing.
class MCQ {
 public:
  /// Validates shape only; see check_mcq_axioms.
  MCQ(std::vector<FiniteGroup> groups, std::vector<int> op);

  const std::vector<FiniteGroup>& groups() const { return groups_; }
  int lambda_count() const { return static_cast<int>(groups_.size()); }
  int carrier_size() const { return carrier_size_; }
  int op(int x, int y) const {
    return op_[static_cast<std::size_t>(x) * static_cast<std::size_t>(carrier_size_) + static_cast<std::size_t>(y)];
  }
  /// x *^{-1} y, or -1 if S_y is not bijective.
  int inv_op(int x, int y) const {
    return inv_op_[static_cast<std::size_t>(x) * static_cast<std::size_t>(carrier_size_) + static_cast<std::size_t>(y)];
  }
  const std::vector<int>& op_table() const { return op_; }

  int group_of(int x) const { return group_of_[static_cast<std::size_t>(x)]; }
  int offset(int lambda) const { return offsets_[static_cast<std::size_t>(lambda)]; }
  int local(int x) const { return x - offset(group_of(x)); }
  int global(int lambda, int local_index) const { return offset(lambda) + local_index; }
  int identity_of(int lambda) const { return offset(lambda) + groups_[static_cast<std::size_t>(lambda)].identity(); }

  /// Product and inverse inside the group containing the operands; mul
  /// returns -1 if x and y lie in different groups.
  int mul(int x, int y) const;
  int inv(int x) const;

  /// All carrier indices of the groups in `lambdas`.
  ElementSet expand(const ElementSet& lambdas) const;

 private:
  std::vector<FiniteGroup> groups_;
  std::vector<int> op_;
  std::vector<int> inv_op_;
  std::vector<int> offsets_;
  std::vector<int> group_of_;
  int carrier_size_ = 0;
};

/// Axiom numbering: 1 conjugation inside a group, 2 x*e = x and
/// x*(ab) = (x*a)*b, 3 right self-distributivity, 4 (ab)*x = (a*x)(b*x).
struct McqViolation {
  int axiom = 0;
  std::vector<int> witness;
  std::string describe() const;
};

std::optional<McqViolation> check_mcq_axioms(const MCQ& x);

/// The associated MCQ of the Z_m-family of q, m = type_of(q): carrier
/// (x, g) at global index x * m + g, and (x, g) * (y, h) = (x *^h y, h^-1 g h).
MCQ associated_mcq(const FiniteQuandle& q);

/// Orbits of Lambda (restricted to `lambdas`) under lambda -> group of
/// e_lambda *^{+-1} a for a in the groups of `lambdas`.
Partition lambda_orbits(const MCQ& x, const ElementSet& lambdas);
Partition lambda_orbits(const MCQ& x);

/// Each characterization of "Y is a sub-MCQ", evaluated separately.
struct SubMcqReport {
  bool restriction_is_mcq = false;      // Y is itself an MCQ under the inherited operations
  bool closed_with_subgroups = false;   // *-closed and each Y cap G_lambda is a subgroup or empty
  bool closed_union_of_subgroups = false;  // *-closed and Y is a disjoint union of subgroups H_lambda
  bool agree() const {
    return restriction_is_mcq == closed_with_subgroups && closed_with_subgroups == closed_union_of_subgroups;
  }
  bool result() const { return closed_with_subgroups; }
};

SubMcqReport is_sub_mcq(const MCQ& x, const ElementSet& y);

/// Least subset containing `generators` closed under *, *^-1, and the
/// group operations.
ElementSet generated_sub_mcq(const MCQ& x, const ElementSet& generators);

struct McqDecomposition {
  Decomposition lambda_levels;
  Partition carrier_partition;
};

McqDecomposition maximal_mcq_decomposition(const MCQ& x, int max_iterations = kDefaultMaxIterations);

}  // namespace quandlekit
