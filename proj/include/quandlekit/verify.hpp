#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace quandlekit {

/// Worked values the reproduction suite compares against. Tests may
/// tamper with a field to confirm the harness reports exactly that failure.
struct GoldenExpectations {
  // Z[t, t^-1]/(6, t^2 + t + 1)
  std::int64_t order_6 = 36;
  std::vector<std::set<std::string>> orbits_6 = {
      {"0", "3", "3t", "1+2t", "1+5t", "2+t", "2+4t", "3+3t", "4+2t", "4+5t", "5+t", "5+4t"},
      {"1", "4", "t", "4t", "1+3t", "2+2t", "2+5t", "3+t", "3+4t", "4+3t", "5+2t", "5+5t"},
      {"2", "5", "2t", "5t", "1+t", "1+4t", "2+3t", "3+2t", "3+5t", "4+t", "4+4t", "5+3t"},
  };
  std::set<std::set<std::string>> maximal_blocks_6 = {
      {"0", "3", "3t", "3+3t"},      {"1+5t", "1+2t", "4+2t", "4+5t"}, {"2+4t", "2+t", "5+t", "5+4t"},
      {"1", "4", "1+3t", "4+3t"},    {"2+5t", "2+2t", "5+2t", "5+5t"}, {"3+4t", "3+t", "t", "4t"},
      {"2", "5", "2+3t", "5+3t"},    {"3+5t", "3+2t", "2t", "5t"},     {"4+4t", "4+t", "1+t", "1+4t"},
  };
  int depth_6 = 2;
  std::int64_t component_ideal_order_6 = 12;

  std::vector<std::size_t> s3_components = {1, 2, 3};
  std::vector<std::size_t> s3_final = {1, 1, 1, 3};
  int s3_depth = 2;
  std::vector<std::size_t> s4_components = {1, 3, 6, 6, 8};
  std::vector<std::size_t> s4_final = {1, 1, 1, 1, 4, 4, 6, 6};
  int s4_depth = 2;
  std::set<std::set<std::string>> s4_split_blocks = {
      {"(1 2 3)", "(1 4 2)", "(1 3 4)", "(2 4 3)"},
      {"(1 3 2)", "(1 2 4)", "(1 4 3)", "(2 3 4)"},
      {"(1 2)(3 4)"},
      {"(1 3)(2 4)"},
      {"(1 4)(2 3)"},
  };

  double prop56_grid_seconds = 30.0;
};

struct VerifyOptions {
  /// Criterion groups to run; empty runs all. Names: alexander6,
  /// conjugation, dihedral, prop56, lemma34, component-ideal, properties, mcq.
  std::vector<std::string> only;
  std::uint64_t seed = 20240915;
  int property_cases = 1000;
  int subset_samples = 500;
  GoldenExpectations golden;
};

struct CheckResult {
  int criterion = 0;
  std::string group;
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
};

std::vector<std::string> verify_groups();

std::vector<CheckResult> verify_paper(const VerifyOptions& options = {});

}  // namespace quandlekit
