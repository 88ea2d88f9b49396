#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quandlekit {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;
/// Row-major; every row has the same length.
using IntMatrix = std::vector<IntVector>;

/// Floor-mod into [0, m) for m > 0.
BigInt mod_floor(const BigInt& a, const BigInt& m);

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector row_times(const IntVector& v, const IntMatrix& m);
BigInt dot(const IntVector& a, const IntVector& b);

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Zero rows are dropped. Pivots are positive, strictly move right, and
/// entries above each pivot lie in [0, pivot). The result depends only on
/// the lattice, not on the generating set.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Integer coefficients c with c * hnf == v, or nullopt if v is not in the
/// lattice. `hnf` must come from hermite_normal_form.
std::optional<IntVector> lattice_coordinates(const IntMatrix& hnf, IntVector v);

/// left * a * right == diag(diagonal), with diagonal nonnegative and
/// each nonzero entry dividing the next. `right_inverse` is right^{-1}.
struct SmithForm {
  IntVector diagonal;
  IntMatrix left;
  IntMatrix right;
  IntMatrix right_inverse;
};

SmithForm smith_normal_form(IntMatrix a);

}  // namespace quandlekit
