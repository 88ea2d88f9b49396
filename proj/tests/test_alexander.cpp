#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "quandlekit/alexander.hpp"
#include "quandlekit/decomposition.hpp"
#include "quandlekit/parse.hpp"

using namespace quandlekit;

namespace {

AlexanderQuandle A(const char* s) { return alexander_quandle(parse_ideal(s)); }

std::set<std::string> labels(const FiniteQuandle& q, const ElementSet& block) {
  std::set<std::string> out;
  for (int x : block) out.insert(q.label(x));
  return out;
}

LaurentPoly P(const char* s) { return parse_polynomial(s); }

}  // namespace

TEST_SUITE("alexander") {
  TEST_CASE("alexander_quandle tables") {
    const auto r3 = A("3; t+1");
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) CHECK(r3.quandle.op(a, b) == ((2 * b - a) % 3 + 3) % 3);
    }
    const auto tet = A("2; t^2+t+1");
    CHECK(tet.quandle.size() == 4);
    CHECK(is_connected(tet.quandle));
    CHECK(A("1; t+7").quandle.size() == 1);
  }

  TEST_CASE("a * b = t a + (1 - t) b") {
    for (const char* s : {"6; t^2+t+1", "5; t+2", "8; t^2+3*t+1", "6; t^2+t+1; 2*t+4"}) {
      const auto a = A(s);
      const auto& m = a.module;
      CHECK_FALSE(check_axioms(a.quandle));
      for (int x = 0; x < a.quandle.size(); ++x) {
        for (int y = 0; y < a.quandle.size(); ++y) {
          const auto ex = m.element(x), ey = m.element(y);
          const auto expected = m.add(m.t_act(ex), m.sub(ey, m.t_act(ey)));
          CHECK(m.index_of(expected) == a.quandle.op(x, y));
        }
      }
    }
  }

  TEST_CASE("dihedral") {
    CHECK(dihedral(1).quandle.size() == 1);
    CHECK(is_connected(dihedral(3).quandle));
    CHECK(type_of(dihedral(3).quandle) == 2);
    CHECK(connected_components(dihedral(6).quandle) == Partition{{0, 2, 4}, {1, 3, 5}});
    for (int m = 2; m <= 20; m += 2) {
      const auto q = dihedral(m).quandle;
      const auto half = dihedral(m / 2).quandle;
      for (const auto& c : connected_components(q)) CHECK(find_isomorphism(q.restrict_to(c), half));
    }
  }

  TEST_CASE("orbit_count") {
    CHECK(orbit_count({LaurentPoly::constant(6), P("t^2+t+1")}) == 3);
    CHECK(orbit_count({P("t+1")}, BigInt(6)) == 2);
    CHECK(orbit_count({P("t^2+t-1")}) == 1);
  }

  TEST_CASE("component_ideal of (6, t^2+t+1)") {
    const auto r = component_ideal({LaurentPoly::constant(6), P("t^2+t+1")});
    CHECK(r.orbit_count == 3);
    CHECK(r.syzygies.vectors == IntMatrix{{1, -2}});
    REQUIRE(r.correction_terms.size() == 1);
    CHECK(r.correction_terms.front() == P("2*t+4"));
    const auto p = presentation_from_generators(r.generators);
    CHECK(build_module(p).order() == 12);
    CHECK(same_ideal(p, parse_ideal("6; 2*t+4; t^2+t+1")));
  }

  TEST_CASE("component_ideal of (m, t+a) is (m / gcd(m, 1+a), t+a)") {
    for (int m = 1; m <= 30; ++m) {
      for (int a = -6; a <= 6; ++a) {
        CAPTURE(m);
        CAPTURE(a);
        const auto r = component_ideal({LaurentPoly::constant(m), P("t") + LaurentPoly::constant(a)});
        const int n = m / static_cast<int>(oracle::euclid(m, 1 + a));
        CHECK(same_ideal(presentation_from_generators(r.generators), linear_presentation(n, a)));
      }
    }
  }

  TEST_CASE("component_ideal of (1 - t) is the whole ring") {
    const auto r = component_ideal({P("1 - t")});
    CHECK(r.orbit_count == 0);
    REQUIRE(r.correction_terms.size() == 1);
    CHECK(r.correction_terms.front() == LaurentPoly::constant(1));
  }

  TEST_CASE("component ideal cross-checks") {
    for (const char* s : {"6; t^2+t+1", "12; t+1", "9; t+2", "8; t^2+3", "10; t^2+t+1", "12; t^2+5*t+1",
                          "6; t^2+t+1; 2*t+4", "4; t^3+t+1"}) {
      CAPTURE(s);
      const auto a = A(s);
      const auto comps = connected_components(a.quandle);
      CHECK(canonical_partition(orbits_by_eval_one(a)) == comps);
      CHECK(BigInt(comps.size()) == orbit_count(a.presentation().generators()));
      const auto piece = alexander_quandle(presentation_from_generators(component_ideal(a.presentation().generators()).generators));
      for (const auto& c : comps) CHECK(find_isomorphism(a.quandle.restrict_to(c), piece.quandle));
      const auto image = a.module.one_minus_t_image();
      CHECK(ElementSet(image.begin(), image.end()) == orbits_by_eval_one(a).front());
      for (int x = 0; x < a.quandle.size(); ++x) CHECK(translation_iso(a, x).verified);
    }
  }

  TEST_CASE("orbit labels of (6, t^2+t+1)") {
    const auto a = A("6; t^2+t+1");
    const auto orbs = orbits_by_eval_one(a);
    REQUIRE(orbs.size() == 3);
    CHECK(labels(a.quandle, orbs[0]) == std::set<std::string>{"0", "3", "3t", "1+2t", "1+5t", "2+t", "2+4t", "3+3t",
                                                               "4+2t", "4+5t", "5+t", "5+4t"});
    CHECK(labels(a.quandle, orbs[1]) == std::set<std::string>{"1", "4", "t", "4t", "1+3t", "2+2t", "2+5t", "3+t",
                                                               "3+4t", "4+3t", "5+2t", "5+5t"});
    CHECK(labels(a.quandle, orbs[2]) == std::set<std::string>{"2", "5", "2t", "5t", "1+t", "1+4t", "2+3t", "3+2t",
                                                               "3+5t", "4+t", "4+4t", "5+3t"});
  }

  TEST_CASE("translation_iso") {
    const auto a = A("6; t^2+t+1");
    const auto zero = translation_iso(a, 0);
    CHECK(zero.verified);
    CHECK(zero.images == std::vector<int>(zero.domain.begin(), zero.domain.end()));
    const auto one = translation_iso(a, 1);
    CHECK(one.verified);
    const auto orbs = orbits_by_eval_one(a);
    CHECK(std::set<int>(one.images.begin(), one.images.end()) == std::set<int>(orbs[1].begin(), orbs[1].end()));
    const auto r6 = dihedral(6);
    const auto shift = translation_iso(r6, 1);
    CHECK(shift.domain == ElementSet{0, 2, 4});
    CHECK(shift.images == std::vector<int>{1, 3, 5});
  }

  TEST_CASE("prop_5_6 examples") {
    const auto a = prop_5_6(12, 1);
    CHECK(a.depth_l == 2);
    CHECK(a.piece_count_n == 4);
    CHECK(a.piece_modulus == 3);
    CHECK(a.chain == std::vector<BigInt>{12, 6, 3, 3});
    const auto b = prop_5_6(9, 2);
    CHECK(b.depth_l == 2);
    CHECK(b.piece_count_n == 9);
    CHECK(b.piece_modulus == 1);
    const auto c = prop_5_6(35, 1);
    CHECK(c.depth_l == 0);
    CHECK(c.piece_count_n == 1);
    const auto d = prop_5_6(4, 2);
    CHECK(d.depth_l == 0);
    CHECK(d.piece_count_n == 1);
    CHECK(prop_5_6(8, -1).depth_l == 1);
    CHECK_THROWS(prop_5_6(0, 1));
  }

  TEST_CASE("prop_5_6 against brute force") {
    for (int n0 = 1; n0 <= 24; ++n0) {
      for (int a = -6; a <= 6; ++a) {
        CAPTURE(n0);
        CAPTURE(a);
        const auto r = prop_5_6(n0, a);
        const auto brute = oracle::brute_decomposition(alexander_quandle(linear_presentation(n0, a)).quandle);
        CHECK(BigInt(brute.blocks) == r.piece_count_n);
        CHECK(brute.depth == r.depth_l);
      }
    }
  }

  TEST_CASE("Cor 4.5: final blocks are pairwise isomorphic") {
    for (const char* s : {"6; t^2+t+1", "12; t+1", "9; t+2", "8; t^2+3", "16; t+3", "4; t^2+1"}) {
      CAPTURE(s);
      const auto a = A(s);
      const auto fin = maximal_decomposition(a.quandle).final();
      for (std::size_t i = 0; i < fin.size(); ++i) {
        for (std::size_t j = i + 1; j < fin.size(); ++j) {
          CHECK(find_isomorphism(a.quandle.restrict_to(fin[i]), a.quandle.restrict_to(fin[j])));
        }
      }
    }
  }
}
