#pragma once

#include <functional>
#include <string>

#include "quandlekit/finite_quandle.hpp"

namespace quandlekit {

/// Iterated orbit refinement of a finite structure.
///
/// levels[0] is the single block {X}; levels[k+1] splits every block of
/// levels[k] into its own connected components. `depth` is the least n with
/// levels[n] == levels[n+1]; both of those levels are stored, so
/// levels.size() == depth + 2 and final() is the fixed point.
struct Decomposition {
  std::vector<Partition> levels;
  int depth = 0;

  const Partition& final() const { return levels[static_cast<std::size_t>(depth)]; }
};

/// Splits one block into its orbits. Must return a canonical partition of
/// exactly the elements of `block`.
using BlockRefiner = std::function<Partition(const ElementSet& block)>;

inline constexpr int kDefaultMaxIterations = 64;

/// One application of D: the union over blocks of their refinements,
/// returned in canonical order regardless of block processing order.
Partition refine_once(const BlockRefiner& refine, const Partition& p);

/// Iterates refine_once from {universe} to its fixed point. Throws
/// std::runtime_error if `max_iterations` refinements are not enough.
Decomposition iterate_to_fixed_point(const BlockRefiner& refine, const ElementSet& universe,
                                     int max_iterations = kDefaultMaxIterations);

// Quandle instances: the refiner is connected_components(q, block).
Partition refine_once(const FiniteQuandle& q, const Partition& p);
Decomposition maximal_decomposition(const FiniteQuandle& q, int max_iterations = kDefaultMaxIterations);
int depth(const FiniteQuandle& q, int max_iterations = kDefaultMaxIterations);

}  // namespace quandlekit
