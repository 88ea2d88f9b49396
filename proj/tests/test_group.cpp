#include <doctest.h>

#include "quandlekit/errors.hpp"
#include "quandlekit/group.hpp"

using namespace quandlekit;

TEST_SUITE("group") {
  TEST_CASE("symmetric groups") {
    CHECK(symmetric_group(1).size() == 1);
    CHECK(symmetric_group(3).size() == 6);
    CHECK(symmetric_group(4).size() == 24);
    CHECK(symmetric_group(6).size() == 720);
    CHECK_THROWS(symmetric_group(0));
    CHECK_THROWS(symmetric_group(7));
    const auto g = symmetric_group(3);
    CHECK(g.identity() == 0);
    CHECK(g.label(0) == "e");
  }

  TEST_CASE("composition applies the left factor first") {
    const auto g = symmetric_group(3);
    int t12 = -1, t23 = -1;
    for (int i = 0; i < g.size(); ++i) {
      if (g.label(i) == "(1 2)") t12 = i;
      if (g.label(i) == "(2 3)") t23 = i;
    }
    // 1 -> 2 -> 3, 3 -> 2, 2 -> 1.
    CHECK(g.label(g.mul(t12, t23)) == "(1 3 2)");
    CHECK(g.label(g.mul(t23, t12)) == "(1 2 3)");
  }

  TEST_CASE("group laws") {
    for (const auto& g : {symmetric_group(4), cyclic_group(7)}) {
      for (int a = 0; a < g.size(); ++a) {
        CHECK(g.mul(a, g.inv(a)) == g.identity());
        CHECK(g.mul(g.identity(), a) == a);
        CHECK(g.pow(a, g.size()) == g.identity());
        CHECK(g.pow(a, -1) == g.inv(a));
        for (int b = 0; b < g.size(); ++b) {
          for (int c = 0; c < g.size(); ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
      }
    }
  }

  TEST_CASE("invalid tables") {
    CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}, 0), AxiomViolationError);
    CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 0}, 1), AxiomViolationError);
    // Latin square with identity but not associative.
    CHECK_THROWS_AS(FiniteGroup(5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}, 0),
                    AxiomViolationError);
  }

  TEST_CASE("conjugation quandles") {
    const auto trivial = conj_quandle(cyclic_group(5));
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 5; ++b) CHECK(trivial.op(a, b) == a);
    }
    CHECK_FALSE(check_axioms(conj_quandle(symmetric_group(3))));
    CHECK_FALSE(check_axioms(conj_quandle(symmetric_group(4))));
    CHECK(block_sizes(connected_components(conj_quandle(symmetric_group(4)))) ==
          std::vector<std::size_t>{1, 3, 6, 6, 8});
    const auto g = symmetric_group(3);
    const auto q = conj_quandle(g);
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) CHECK(q.op(a, b) == g.mul(g.mul(g.inv(b), a), b));
    }
  }

  TEST_CASE("conjugacy classes") {
    CHECK(conjugacy_classes(cyclic_group(4)).size() == 4);
    const auto s3 = symmetric_group(3);
    const auto classes = conjugacy_classes(s3);
    CHECK(block_sizes(classes) == std::vector<std::size_t>{1, 2, 3});
    CHECK(classes.front() == ElementSet{s3.identity()});
    CHECK(conjugacy_classes(symmetric_group(4)).size() == 5);
    for (int n = 1; n <= 5; ++n) {
      const auto g = symmetric_group(n);
      CHECK(conjugacy_classes(g) == connected_components(conj_quandle(g)));
    }
  }
}
