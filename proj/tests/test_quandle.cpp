#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quandlekit/alexander.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/group.hpp"
#include "quandlekit/parse.hpp"

using namespace quandlekit;

namespace {

FiniteQuandle tetrahedral() { return alexander_quandle(parse_ideal("2; t^2+t+1")).quandle; }

FiniteQuandle s3() { return conj_quandle(symmetric_group(3)); }

int index_of_label(const FiniteQuandle& q, const std::string& label) {
  for (int i = 0; i < q.size(); ++i) {
    if (q.label(i) == label) return i;
  }
  FAIL("missing label " << label);
  return -1;
}

}  // namespace

TEST_SUITE("quandle") {
  TEST_CASE("check_axioms") {
    CHECK_FALSE(check_axioms(dihedral(3).quandle));
    CHECK_FALSE(check_axioms(s3()));
    auto rows = FiniteQuandle::trivial(2).rows();
    rows[0][0] = 1;
    const auto v = check_axioms(FiniteQuandle::from_rows(rows));
    REQUIRE(v);
    CHECK(v->axiom == QuandleAxiom::Idempotency);
    CHECK(v->a == 0);
  }

  TEST_CASE("check_axioms reports right-invertibility and distributivity") {
    // Idempotent, but column 0 is not a bijection.
    const auto q = FiniteQuandle::from_rows({{0, 1, 0}, {0, 1, 1}, {2, 2, 2}});
    const auto v = check_axioms(q);
    REQUIRE(v);
    CHECK(v->axiom == QuandleAxiom::RightInvertibility);
    CHECK(q.inv_op(0, 0) == -1);
    // Bijective columns, idempotent, not self-distributive.
    const auto r = FiniteQuandle::from_rows({{0, 2, 1, 0}, {1, 1, 0, 2}, {2, 0, 2, 1}, {3, 3, 3, 3}});
    const auto w = check_axioms(r);
    REQUIRE(w);
    CHECK(w->axiom == QuandleAxiom::SelfDistributivity);
    CHECK(r.op(r.op(w->a, w->b), w->c) != r.op(r.op(w->a, w->c), r.op(w->b, w->c)));
  }

  TEST_CASE("malformed tables are rejected") {
    CHECK_THROWS_AS(FiniteQuandle(2, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteQuandle(2, {0, 1, 1, 2}), std::invalid_argument);
  }

  TEST_CASE("op_pow") {
    const auto r5 = dihedral(5).quandle;
    CHECK(op_pow(r5, 1, 2, 3) == 1);
    CHECK(op_pow(r5, 4, 0, 2) == 4);
    CHECK(op_pow(r5, 1, -1, 3) == r5.inv_op(1, 3));
    const auto t = tetrahedral();
    for (int x = 0; x < 4; ++x) {
      for (int y = 0; y < 4; ++y) {
        CHECK(op_pow(t, x, 3, y) == x);
        CHECK(t.op(t.op(t.op(x, y), y), y) == x);
      }
    }
  }

  TEST_CASE("type_of") {
    CHECK(type_of(FiniteQuandle::trivial(4)) == 1);
    for (int m = 3; m <= 12; ++m) CHECK(type_of(dihedral(m).quandle) == 2);
    const auto t = tetrahedral();
    CHECK(type_of(t) == 3);
    int brute = 1;
    while (true) {
      bool all = true;
      for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) all = all && op_pow(t, x, brute, y) == x;
      }
      if (all) break;
      ++brute;
    }
    CHECK(brute == 3);
    CHECK(type_of(s3()) == 3 * 2);
  }

  TEST_CASE("generated_subquandle") {
    const auto q = s3();
    const int t12 = index_of_label(q, "(1 2)");
    const int t13 = index_of_label(q, "(1 3)");
    const int c = index_of_label(q, "(1 2 3)");
    CHECK(generated_subquandle(q, {t12}) == ElementSet{t12});
    const auto transpositions = generated_subquandle(q, {t12, t13});
    CHECK(transpositions.size() == 3);
    for (int x : transpositions) CHECK(q.label(x).size() == 5);
    CHECK(generated_subquandle(q, {c}) == ElementSet{c});
    CHECK(is_subquandle(q, transpositions));
    CHECK_FALSE(is_subquandle(q, {t12, t13}));
  }

  TEST_CASE("connected_components") {
    CHECK(block_sizes(connected_components(s3())) == std::vector<std::size_t>{1, 2, 3});
    CHECK(connected_components(dihedral(6).quandle) == Partition{{0, 2, 4}, {1, 3, 5}});
    CHECK(connected_components(tetrahedral()).size() == 1);
    CHECK(is_connected(dihedral(3).quandle));
    CHECK_FALSE(is_connected(dihedral(6).quandle));
    CHECK(is_connected(FiniteQuandle::trivial(1)));
    CHECK_THROWS_AS(connected_components(s3(), {1, 2}), NotASubquandle);
  }

  TEST_CASE("components agree with a union-find oracle and are subquandles") {
    for (const auto& q : {s3(), conj_quandle(symmetric_group(4)), dihedral(12).quandle, tetrahedral(),
                          alexander_quandle(parse_ideal("6; t^2+t+1")).quandle,
                          alexander_quandle(parse_ideal("9; t+2")).quandle}) {
      const auto labels = oracle::component_labels(q);
      const auto comps = connected_components(q);
      for (const auto& block : comps) {
        CHECK(is_subquandle(q, block));
        for (int x : block) CHECK(labels[static_cast<std::size_t>(x)] == labels[static_cast<std::size_t>(block[0])]);
      }
      std::set<int> distinct(labels.begin(), labels.end());
      CHECK(distinct.size() == comps.size());
    }
  }

  TEST_CASE("S_a is an automorphism") {
    for (const auto& q : {s3(), dihedral(8).quandle, tetrahedral()}) {
      for (int a = 0; a < q.size(); ++a) {
        std::vector<int> phi(static_cast<std::size_t>(q.size()));
        for (int x = 0; x < q.size(); ++x) phi[static_cast<std::size_t>(x)] = q.op(x, a);
        CHECK(is_isomorphism(q, q, phi));
      }
    }
  }

  TEST_CASE("find_isomorphism") {
    const auto r3 = dihedral(3).quandle;
    const auto built = alexander_quandle(parse_ideal("3; t+1")).quandle;
    const auto phi = find_isomorphism(r3, built);
    REQUIRE(phi);
    CHECK(is_isomorphism(r3, built, *phi));
    CHECK_FALSE(find_isomorphism(r3, FiniteQuandle::trivial(3)));
    CHECK_FALSE(find_isomorphism(r3, dihedral(4).quandle));

    const auto a = alexander_quandle(parse_ideal("6; t^2+t+1"));
    const auto orb0 = connected_components(a.quandle).front();
    const auto target = alexander_quandle(parse_ideal("6; 2*t+4; t^2+t+1")).quandle;
    const auto psi = find_isomorphism(a.quandle.restrict_to(orb0), target);
    REQUIRE(psi);
    CHECK(is_isomorphism(a.quandle.restrict_to(orb0), target, *psi));
  }

  TEST_CASE("isomorphism is an equivalence on relabeled quandles") {
    std::mt19937_64 rng(17);
    for (const auto& q : {s3(), conj_quandle(symmetric_group(4)), dihedral(10).quandle, tetrahedral(),
                          alexander_quandle(parse_ideal("5; t+2")).quandle}) {
      for (int iter = 0; iter < 10; ++iter) {
        std::vector<int> perm(static_cast<std::size_t>(q.size()));
        for (int i = 0; i < q.size(); ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> table(static_cast<std::size_t>(q.size() * q.size()));
        for (int x = 0; x < q.size(); ++x) {
          for (int y = 0; y < q.size(); ++y) {
            table[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)] * q.size() + perm[static_cast<std::size_t>(y)])] =
                perm[static_cast<std::size_t>(q.op(x, y))];
          }
        }
        const FiniteQuandle p(q.size(), table);
        CHECK(is_isomorphism(q, p, perm));
        const auto phi = find_isomorphism(q, p);
        REQUIRE(phi);
        CHECK(is_isomorphism(q, p, *phi));
        std::vector<int> inverse(phi->size());
        for (std::size_t i = 0; i < phi->size(); ++i) inverse[static_cast<std::size_t>((*phi)[i])] = static_cast<int>(i);
        CHECK(is_isomorphism(p, q, inverse));
      }
      std::vector<int> identity(static_cast<std::size_t>(q.size()));
      for (int i = 0; i < q.size(); ++i) identity[static_cast<std::size_t>(i)] = i;
      CHECK(is_isomorphism(q, q, identity));
    }
  }

  TEST_CASE("restrict_to relabels by position") {
    const auto r6 = dihedral(6).quandle;
    const auto evens = r6.restrict_to({0, 2, 4});
    CHECK(evens.size() == 3);
    CHECK(find_isomorphism(evens, dihedral(3).quandle));
    CHECK_THROWS_AS(r6.restrict_to({0, 2}), NotASubquandle);
  }
}
