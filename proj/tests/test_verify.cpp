#include <doctest.h>

#include <algorithm>

#include "quandlekit/verify.hpp"

using namespace quandlekit;

namespace {

long failures(const std::vector<CheckResult>& r) {
  return std::count_if(r.begin(), r.end(), [](const CheckResult& c) { return !c.pass; });
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("tampered S4 expectation yields exactly one failure") {
    VerifyOptions o;
    o.only = {"conjugation"};
    CHECK(failures(verify_paper(o)) == 0);
    o.golden.s4_final = {1, 1, 1, 1, 4, 4, 6, 7};
    const auto r = verify_paper(o);
    REQUIRE(failures(r) == 1);
    const auto bad = std::find_if(r.begin(), r.end(), [](const CheckResult& c) { return !c.pass; });
    CHECK(bad->claim.find("S4") != std::string::npos);
    CHECK(bad->criterion == 2);
  }

  TEST_CASE("only filters groups") {
    VerifyOptions o;
    o.only = {"dihedral"};
    const auto r = verify_paper(o);
    REQUIRE_FALSE(r.empty());
    for (const auto& c : r) CHECK(c.group == "dihedral");
    o.only = {"nonsense"};
    CHECK_THROWS_AS(verify_paper(o), std::invalid_argument);
  }

  TEST_CASE("reports are deterministic for a fixed seed") {
    VerifyOptions o;
    o.only = {"properties", "mcq"};
    o.property_cases = 50;
    o.subset_samples = 20;
    const auto a = verify_paper(o);
    const auto b = verify_paper(o);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].computed == b[i].computed);
      CHECK(a[i].pass);
    }
  }

  TEST_CASE("tampered orbit label fails only that orbit") {
    VerifyOptions o;
    o.only = {"alexander6"};
    o.golden.orbits_6[1].erase("4t");
    o.golden.orbits_6[1].insert("4+4t");
    const auto r = verify_paper(o);
    CHECK(failures(r) == 1);
  }
}
