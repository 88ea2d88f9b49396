#include "quandlekit/decomposition.hpp"

#include <numeric>
#include <stdexcept>

namespace quandlekit {

Partition refine_once(const BlockRefiner& refine, const Partition& p) {
  Partition out;
  for (const auto& block : p) {
    Partition pieces = refine(block);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return canonical_partition(std::move(out));
}

Decomposition iterate_to_fixed_point(const BlockRefiner& refine, const ElementSet& universe, int max_iterations) {
  Decomposition d;
  d.levels.push_back(canonical_partition({universe}));
  for (int k = 0; k < max_iterations; ++k) {
    d.levels.push_back(refine_once(refine, d.levels.back()));
    if (d.levels[d.levels.size() - 1] == d.levels[d.levels.size() - 2]) {
      d.depth = k;
      return d;
    }
  }
  throw std::runtime_error("decomposition did not reach a fixed point within " + std::to_string(max_iterations) +
                           " iterations");
}

Partition refine_once(const FiniteQuandle& q, const Partition& p) {
  return refine_once([&q](const ElementSet& block) { return connected_components(q, block); }, p);
}

Decomposition maximal_decomposition(const FiniteQuandle& q, int max_iterations) {
  ElementSet all(static_cast<std::size_t>(q.size()));
  std::iota(all.begin(), all.end(), 0);
  return iterate_to_fixed_point([&q](const ElementSet& block) { return connected_components(q, block); }, all,
                                max_iterations);
}

int depth(const FiniteQuandle& q, int max_iterations) { return maximal_decomposition(q, max_iterations).depth; }

}  // namespace quandlekit
