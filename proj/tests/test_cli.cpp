#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "quandlekit/group.hpp"
#include "quandlekit/serialize.hpp"

using namespace quandlekit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string write_file(const std::string& name, const std::string& body) {
  std::ofstream(name) << body;
  return name;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("maxdecomp of (6, t^2+t+1)") {
    const auto r = run({"maxdecomp", "--alexander", "6; t^2+t+1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "depth 2, 9 maximal connected blocks"));
    CHECK(contains(r.out, "{0, 3t, 3, 3+3t}"));
  }

  TEST_CASE("components of Conj(S3)") {
    const auto r = run({"components", "--conj", "--symmetric", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "sizes 1 2 3"));
    CHECK(run({"components", "--symmetric", "3"}).code == cli::kParseError);
  }

  TEST_CASE("components list polynomial labels") {
    const auto r = run({"components", "--alexander", "6; t^2+t+1"});
    CHECK(contains(r.out, "{0, 3t, 1+2t, 1+5t, 2+t, 2+4t, 3, 3+3t, 4+2t, 4+5t, 5+t, 5+4t}"));
  }

  TEST_CASE("iso takes sources in command-line order") {
    const auto r = run({"iso", "--alexander", "3; t+1", "--dihedral", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Z[t,t^-1]/(3; t+1) and R_3: isomorphic"));
    const auto s = run({"iso", "--dihedral", "4", "--alexander", "4; t+1"});
    CHECK(contains(s.out, "R_4 and Z[t,t^-1]/(4; t+1): isomorphic"));
    CHECK(contains(run({"iso", "--dihedral", "3", "--conj", "--cyclic", "3"}).out, "not isomorphic"));
    CHECK(run({"iso", "--dihedral", "3"}).code == cli::kParseError);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"build", "6; t^2+*"}).code == cli::kParseError);
    CHECK(run({"build", "0; t"}).code == cli::kParseError);
    CHECK(run({"build", "4; 2*t^2+t+2"}).code == cli::kUnsupportedPresentation);
    CHECK(run({"components", "--table", "no/such/file.json"}).code == cli::kStructureError);
    const auto bad = write_file("cli_bad_table.json", R"({"size": 2, "table": [[1, 0], [0, 1]]})");
    CHECK(run({"components", "--table", bad}).code == cli::kAxiomViolation);
    CHECK(run({"--unchecked", "components", "--table", bad}).code == cli::kOk);
    const auto ax = run({"axioms", "--table", bad});
    CHECK(ax.code == cli::kAxiomViolation);
    CHECK(contains(ax.out, "idempotency"));
    std::remove(bad.c_str());
    CHECK(run({"nonsense"}).code == cli::kParseError);
    CHECK(run({"--help"}).code == cli::kOk);
  }

  TEST_CASE("json output round-trips through the loaders") {
    const auto b = run({"--format", "json", "build", "6; t^2+t+1"});
    REQUIRE(b.code == 0);
    const auto j = Json::parse(b.out);
    CHECK(j["order"] == 36);
    const auto q = quandle_from_json(j["quandle"]);
    CHECK(q.size() == 36);
    CHECK(quandle_to_json(q) == j["quandle"]);

    const auto d = run({"--format", "json", "maxdecomp", "--conj", "--symmetric", "4"});
    const auto dj = Json::parse(d.out);
    const auto dec = decomposition_from_json(dj);
    CHECK(dec.depth == 2);
    CHECK(decomposition_to_json(dec)["levels"] == dj["levels"]);

    const auto m = run({"--format", "json", "mcq", "assoc", "--dihedral", "6"});
    const auto mj = Json::parse(m.out);
    const auto x = mcq_from_json(mj);
    CHECK(x.carrier_size() == 12);
    CHECK(mcq_to_json(x)["op"] == mj["op"]);

    const auto file = write_file("cli_mcq.json", mcq_to_json(x).dump());
    CHECK(run({"mcq", "axioms", "--mcq", file}).code == 0);
    const auto md = run({"mcq", "maxdecomp", "--mcq", file});
    CHECK(contains(md.out, "depth 1, 2 maximal connected sub-MCQs"));
    std::remove(file.c_str());

    const auto g = write_file("cli_group.json", group_to_json(symmetric_group(3)).dump());
    CHECK(contains(run({"components", "--conj", "--group", g}).out, "sizes 1 2 3"));
    std::remove(g.c_str());
  }

  TEST_CASE("theory and prop56") {
    const auto t = run({"alexander", "theory", "6; t^2+t+1"});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "orbit count a = gcd of values at t=1: 3"));
    CHECK(contains(t.out, "(order 12)"));
    const auto p = run({"alexander", "prop56", "12", "1", "--brute"});
    CHECK(p.code == 0);
    CHECK(contains(p.out, "depth l: 2"));
    CHECK(contains(p.out, "brute force: depth 2, 4 blocks: match"));
    const auto n = run({"prop56", "9", "-7", "--brute"});
    CHECK(n.code == 0);
    CHECK(contains(n.out, "(9, t-7)"));
  }

  TEST_CASE("max-iter flag and environment override") {
    CHECK(run({"--max-iter", "1", "maxdecomp", "--dihedral", "8"}).code == cli::kStructureError);
    setenv("QUANDLEKIT_MAX_ITER", "1", 1);
    CHECK(run({"maxdecomp", "--dihedral", "8"}).code == cli::kStructureError);
    CHECK(run({"--max-iter", "10", "maxdecomp", "--dihedral", "8"}).code == cli::kOk);
    unsetenv("QUANDLEKIT_MAX_ITER");
  }

  TEST_CASE("config file") {
    const auto cfg = write_file("cli_config.toml", "format = \"json\"\n");
    const auto r = run({"--config", cfg, "components", "--dihedral", "6"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["sizes"] == Json::array({3, 3}));
    std::remove(cfg.c_str());
  }

  TEST_CASE("verify subset and determinism") {
    const auto a = run({"verify", "--only", "dihedral"});
    CHECK(a.code == 0);
    CHECK(contains(a.out, "criterion 3: PASS"));
    CHECK_FALSE(contains(a.out, "criterion 1"));
    CHECK(run({"verify", "--only", "dihedral"}).out == a.out);
    CHECK(run({"verify", "--only", "bogus"}).code == cli::kParseError);
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"--format", "json", "alexander", "theory", "12; t^2+5*t+1"};
    CHECK(run(args).out == run(args).out);
  }
}
