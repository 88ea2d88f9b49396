#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quandlekit/integer_matrix.hpp"

using namespace quandlekit;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(rows, IntVector(cols));
  for (auto& row : m) {
    for (auto& x : row) x = d(rng);
  }
  return m;
}

IntMatrix diag(const IntVector& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, IntVector(cols, 0));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

}  // namespace

TEST_SUITE("integer_matrix") {
  TEST_CASE("mod_floor lands in [0, m)") {
    CHECK(mod_floor(-1, 6) == 5);
    CHECK(mod_floor(13, 6) == 1);
    CHECK(mod_floor(0, 1) == 0);
  }

  TEST_CASE("HNF of a small lattice") {
    const IntMatrix h = hermite_normal_form({{2, 4}, {3, 6}, {0, 0}});
    REQUIRE(h.size() == 1);
    CHECK(h[0] == IntVector{1, 2});
    CHECK(hermite_normal_form({{0, 0}}).empty());
    const IntMatrix h2 = hermite_normal_form({{4, 1}, {6, 0}});
    REQUIRE(h2.size() == 2);
    CHECK(h2[0] == IntVector{2, 2});
    CHECK(h2[1] == IntVector{0, 3});
  }

  TEST_CASE("HNF depends only on the lattice") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
      const auto m = random_matrix(rng, 3, 4, 9);
      const auto h = hermite_normal_form(m);
      // Unimodular row operations on the generators leave the HNF unchanged.
      auto shuffled = m;
      shuffled.push_back(IntVector(4, 0));
      for (std::size_t j = 0; j < 4; ++j) shuffled[0][j] += 3 * shuffled[1][j] - shuffled[2][j];
      std::swap(shuffled[0], shuffled[2]);
      CHECK(hermite_normal_form(shuffled) == h);
      for (const auto& row : m) CHECK(lattice_coordinates(h, row).has_value());
    }
  }

  TEST_CASE("lattice_coordinates reconstructs members and rejects non-members") {
    const auto h = hermite_normal_form({{2, 0}, {0, 3}});
    const auto c = lattice_coordinates(h, {4, 9});
    REQUIRE(c.has_value());
    CHECK(row_times(*c, h) == IntVector{4, 9});
    CHECK_FALSE(lattice_coordinates(h, {1, 0}).has_value());
  }

  TEST_CASE("SNF transforms and divisibility") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
      const std::size_t rows = 1 + rng() % 4;
      const std::size_t cols = 1 + rng() % 4;
      const auto a = random_matrix(rng, rows, cols, 12);
      const auto s = smith_normal_form(a);
      CHECK(multiply(multiply(s.left, a), s.right) == diag(s.diagonal, rows, cols));
      CHECK(multiply(s.right, s.right_inverse) == identity_matrix(cols));
      for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        CHECK(s.diagonal[i] >= 0);
        if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        else CHECK(s.diagonal[i + 1] == 0);
      }
      if (rows == cols) {
        BigInt prod = 1;
        for (const auto& d : s.diagonal) prod *= d;
        const BigInt det = oracle::bareiss_det(a);
        CHECK(prod == (det < 0 ? BigInt(-det) : det));
      }
    }
  }

  TEST_CASE("SNF of the relation matrix of Z/6 x Z/6") {
    const auto s = smith_normal_form({{6, 0}, {0, 6}});
    CHECK(s.diagonal == IntVector{6, 6});
    const auto t = smith_normal_form({{2, 0}, {0, 3}});
    CHECK(t.diagonal == IntVector{1, 6});
  }
}
