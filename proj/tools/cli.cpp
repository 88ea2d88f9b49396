#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "quandlekit/alexander.hpp"
#include "quandlekit/decomposition.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/group.hpp"
#include "quandlekit/mcq.hpp"
#include "quandlekit/parse.hpp"
#include "quandlekit/serialize.hpp"
#include "quandlekit/verify.hpp"

namespace quandlekit::cli {
namespace {

struct Globals {
  std::string format = "text";
  bool unchecked = false;
  int max_iter = kDefaultMaxIterations;
  std::uint64_t seed = VerifyOptions{}.seed;

  bool json() const { return format == "json"; }
};

struct Loaded {
  std::string name;
  FiniteQuandle quandle;
  std::optional<AlexanderQuandle> alexander;
};

// Quandle source flags shared by the quandle verbs; repeatable for `iso`.
struct SourceFlags {
  std::vector<std::string> alexander;
  std::vector<int> dihedral;
  bool conj = false;
  std::vector<int> symmetric;
  std::vector<int> cyclic;
  std::vector<std::string> group;
  std::vector<std::string> table;
  std::map<const CLI::Option*, char> kinds;

  void attach(CLI::App* app) {
    kinds[app->add_option("--alexander", alexander, "Alexander quandle of an ideal, e.g. \"6; t^2+t+1\"")] = 'a';
    kinds[app->add_option("--dihedral", dihedral, "dihedral quandle R_m")->check(CLI::Range(1, 1 << 20))] = 'd';
    auto* c = app->add_flag("--conj", conj, "conjugation quandle of the group given by --symmetric/--cyclic/--group");
    kinds[app->add_option("--symmetric", symmetric, "S_n, 1 <= n <= 6")->check(CLI::Range(1, 6))->needs(c)] = 's';
    kinds[app->add_option("--cyclic", cyclic, "Z_n")->check(CLI::Range(1, 4096))->needs(c)] = 'c';
    kinds[app->add_option("--group", group, "group JSON file")->needs(c)] = 'g';
    kinds[app->add_option("--table", table, "quandle JSON file")] = 't';
  }

  std::vector<Loaded> load(const CLI::App* app, bool unchecked) const {
    std::vector<Loaded> out;
    std::map<char, std::size_t> next;
    for (const CLI::Option* opt : app->parse_order()) {
      const auto it = kinds.find(opt);
      if (it == kinds.end()) continue;
      const std::size_t i = next[it->second]++;
      out.push_back(load_one(it->second, i, unchecked));
    }
    return out;
  }

  Loaded load_one(char kind, std::size_t i, bool unchecked) const {
    switch (kind) {
      case 'a': {
        auto a = alexander_quandle(parse_ideal(alexander[i]));
        auto q = a.quandle;
        return {"Z[t,t^-1]/(" + a.presentation().descriptor() + ")", std::move(q), std::move(a)};
      }
      case 'd': {
        auto a = quandlekit::dihedral(dihedral[i]);
        auto q = a.quandle;
        return {"R_" + std::to_string(dihedral[i]), std::move(q), std::move(a)};
      }
      case 's': {
        auto q = conj_quandle(symmetric_group(symmetric[i]));
        return {"Conj(S_" + std::to_string(symmetric[i]) + ")", std::move(q), {}};
      }
      case 'c': {
        auto q = conj_quandle(cyclic_group(cyclic[i]));
        return {"Conj(Z_" + std::to_string(cyclic[i]) + ")", std::move(q), {}};
      }
      case 'g': {
        auto q = conj_quandle(group_from_json(read_json_file(group[i])));
        return {"Conj(" + group[i] + ")", std::move(q), {}};
      }
      default: {
        auto q = quandle_from_json(read_json_file(table[i]), unchecked);
        return {table[i], std::move(q), {}};
      }
    }
  }
};

std::vector<Loaded> load_exactly(const SourceFlags& flags, const CLI::App* app, bool unchecked, std::size_t count) {
  auto sources = flags.load(app, unchecked);
  if (sources.size() != count) {
    throw CLI::ValidationError(app->get_name() + " needs exactly " + std::to_string(count) + " quandle source" +
                               (count == 1 ? "" : "s") + ", got " + std::to_string(sources.size()));
  }
  return sources;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep = " ") {
  std::vector<std::string> parts;
  for (const auto& x : v) {
    std::ostringstream s;
    s << x;
    parts.push_back(s.str());
  }
  return join(parts, sep);
}

std::string block_text(const FiniteQuandle& q, const ElementSet& block) {
  std::vector<std::string> labels;
  for (int x : block) labels.push_back(q.label(x));
  return "{" + join(labels, ", ") + "}";
}

Json block_labels_json(const FiniteQuandle& q, const Partition& p) {
  Json out = Json::array();
  for (const auto& block : p) {
    Json labels = Json::array();
    for (int x : block) labels.push_back(q.label(x));
    out.push_back(labels);
  }
  return out;
}

void print_partition(std::ostream& out, const FiniteQuandle& q, const Partition& p) {
  for (const auto& block : p) out << "  " << block_text(q, block) << "\n";
}

std::string poly_list(const std::vector<LaurentPoly>& polys) {
  std::vector<std::string> parts;
  for (const auto& p : polys) parts.push_back(p.to_string());
  return join(parts, ", ");
}

Json poly_json(const std::vector<LaurentPoly>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

std::string big(const BigInt& v) { return v.str(); }

int cmd_axioms(const Globals& g, std::ostream& out, const std::vector<Loaded>& sources) {
  const auto& src = sources.front();
  const auto v = check_axioms(src.quandle);
  if (g.json()) {
    Json j{{"source", src.name}, {"size", src.quandle.size()}, {"ok", !v}};
    if (v) {
      j["axiom"] = to_string(v->axiom);
      j["witness"] = {v->a, v->b, v->c};
    }
    out << j.dump(2) << "\n";
  } else {
    out << src.name << ": " << (v ? "violation: " + v->describe() : "all quandle axioms hold") << " (size "
        << src.quandle.size() << ")\n";
  }
  return v ? kAxiomViolation : kOk;
}

int cmd_components(const Globals& g, std::ostream& out, const std::vector<Loaded>& sources) {
  const auto& src = sources.front();
  const auto& q = src.quandle;
  Partition comps = connected_components(q);
  if (src.alexander) comps = canonical_partition(orbits_by_eval_one(*src.alexander));
  if (g.json()) {
    Json j{{"source", src.name}, {"size", q.size()}, {"components", partition_to_json(comps)},
           {"sizes", block_sizes(comps)}, {"labels", block_labels_json(q, comps)}};
    out << j.dump(2) << "\n";
  } else {
    out << src.name << ": " << comps.size() << " connected components, sizes " << join_numbers(block_sizes(comps))
        << "\n";
    print_partition(out, q, comps);
  }
  return kOk;
}

int cmd_maxdecomp(const Globals& g, std::ostream& out, const std::vector<Loaded>& sources) {
  const auto& src = sources.front();
  const auto& q = src.quandle;
  const auto d = maximal_decomposition(q, g.max_iter);
  if (g.json()) {
    Json j = decomposition_to_json(d);
    j["source"] = src.name;
    j["final_labels"] = block_labels_json(q, d.final());
    out << j.dump(2) << "\n";
  } else {
    out << src.name << ": depth " << d.depth << ", " << d.final().size() << " maximal connected blocks\n";
    for (std::size_t k = 0; k < d.levels.size(); ++k) {
      out << "level " << k << " sizes: " << join_numbers(block_sizes(d.levels[k])) << "\n";
    }
    out << "final blocks:\n";
    print_partition(out, q, d.final());
  }
  return kOk;
}

int cmd_iso(const Globals& g, std::ostream& out, const std::vector<Loaded>& sources) {
  const auto& a = sources[0];
  const auto& b = sources[1];
  const auto phi = find_isomorphism(a.quandle, b.quandle);
  if (g.json()) {
    Json j{{"first", a.name}, {"second", b.name}, {"isomorphic", phi.has_value()}};
    if (phi) j["map"] = *phi;
    out << j.dump(2) << "\n";
  } else {
    out << a.name << " and " << b.name << ": " << (phi ? "isomorphic" : "not isomorphic") << "\n";
    if (phi) {
      std::vector<std::string> pairs;
      for (std::size_t i = 0; i < phi->size(); ++i) {
        pairs.push_back(a.quandle.label(static_cast<int>(i)) + " -> " + b.quandle.label((*phi)[i]));
      }
      out << "  " << join(pairs, ", ") << "\n";
    }
  }
  return kOk;
}

int cmd_build(const Globals& g, std::ostream& out, const std::string& expr) {
  const auto a = alexander_quandle(parse_ideal(expr));
  const auto& m = a.module;
  if (g.json()) {
    Json j{{"presentation", a.presentation().descriptor()},
           {"order", m.order()},
           {"invariant_factors", m.invariant_factors()},
           {"t_matrix", m.t_matrix()},
           {"orbit_modulus", m.eval_one_modulus()},
           {"type", type_of(a.quandle)},
           {"print_basis", m.has_print_basis()},
           {"quandle", quandle_to_json(a.quandle)}};
    out << j.dump(2) << "\n";
  } else {
    out << "presentation: " << a.presentation().descriptor() << "\n"
        << "order: " << m.order() << "\n"
        << "invariant factors: " << (m.rank() ? join_numbers(m.invariant_factors()) : "none") << "\n"
        << "orbit modulus a: " << m.eval_one_modulus() << "\n"
        << "type: " << type_of(a.quandle) << "\n"
        << "polynomial basis: " << (m.has_print_basis() ? "yes" : "no") << "\n";
    std::vector<std::string> labels;
    for (int x = 0; x < a.quandle.size(); ++x) labels.push_back(a.quandle.label(x));
    out << "elements: " << join(labels, " ") << "\n";
  }
  return kOk;
}

int cmd_theory(const Globals& g, std::ostream& out, const std::string& expr) {
  const auto a = alexander_quandle(parse_ideal(expr));
  const auto gens = a.presentation().generators();
  const auto ci = component_ideal(gens);
  const auto piece = alexander_quandle(presentation_from_generators(ci.generators));
  const auto bfs = connected_components(a.quandle);
  const auto classes = canonical_partition(orbits_by_eval_one(a));
  std::vector<bool> translations;
  for (const auto& c : bfs) translations.push_back(translation_iso(a, c.front()).verified);
  const bool all_translations = std::all_of(translations.begin(), translations.end(), [](bool b) { return b; });
  bool piece_iso = true;
  for (const auto& c : bfs) piece_iso = piece_iso && find_isomorphism(a.quandle.restrict_to(c), piece.quandle).has_value();

  if (g.json()) {
    Json syz = Json::array();
    for (const auto& s : ci.syzygies.vectors) {
      Json row = Json::array();
      for (const auto& x : s) row.push_back(big(x));
      syz.push_back(row);
    }
    Json j{{"presentation", a.presentation().descriptor()},
           {"order", a.module.order()},
           {"orbit_count", big(ci.orbit_count)},
           {"components", partition_to_json(bfs)},
           {"components_match_eval_classes", bfs == classes},
           {"translations_verified", all_translations},
           {"syzygies", syz},
           {"correction_terms", poly_json(ci.correction_terms)},
           {"component_ideal", piece.presentation().descriptor()},
           {"component_order", piece.module.order()},
           {"components_isomorphic_to_component_ideal", piece_iso}};
    out << j.dump(2) << "\n";
  } else {
    out << "presentation: " << a.presentation().descriptor() << "\n"
        << "order: " << a.module.order() << "\n"
        << "orbit count a = gcd of values at t=1: " << ci.orbit_count << "\n"
        << "BFS components equal eval-at-1 classes: " << (bfs == classes ? "yes" : "no") << "\n"
        << "translations x -> x + c onto components verified: " << (all_translations ? "yes" : "no") << "\n"
        << "syzygies: " << ci.syzygies.vectors.size() << "\n";
    for (const auto& s : ci.syzygies.vectors) out << "  (" << join_numbers(s, ", ") << ")\n";
    out << "correction terms: " << (ci.correction_terms.empty() ? "none" : poly_list(ci.correction_terms)) << "\n"
        << "component ideal: " << piece.presentation().descriptor() << " (order " << piece.module.order() << ")\n"
        << "components isomorphic to it: " << (piece_iso ? "yes" : "no") << "\n";
  }
  return bfs == classes && all_translations && piece_iso ? kOk : kCheckFailed;
}

int cmd_prop56(const Globals& g, std::ostream& out, long long n0, long long a, bool brute) {
  if (n0 < 1) throw std::invalid_argument("n0 must be positive");
  const auto r = prop_5_6(n0, a);
  std::optional<Decomposition> d;
  bool match = true;
  if (brute) {
    const auto q = alexander_quandle(linear_presentation(n0, a)).quandle;
    d = maximal_decomposition(q, g.max_iter);
    const auto piece = alexander_quandle(linear_presentation(r.piece_modulus, a)).quandle;
    match = d->depth == r.depth_l && BigInt(d->final().size()) == r.piece_count_n;
    for (const auto& block : d->final()) match = match && find_isomorphism(q.restrict_to(block), piece).has_value();
  }
  if (g.json()) {
    Json chain = Json::array();
    for (const auto& n : r.chain) chain.push_back(big(n));
    Json j{{"n0", n0}, {"a", a}, {"chain", chain}, {"depth", r.depth_l}, {"pieces", big(r.piece_count_n)},
           {"piece_modulus", big(r.piece_modulus)}};
    if (d) {
      j["brute_force"] = {{"depth", d->depth}, {"pieces", d->final().size()}, {"match", match}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "ideal: (" << n0 << ", t" << (a < 0 ? "-" : "+") << (a < 0 ? -a : a) << ")\n"
        << "chain n_i: " << join_numbers(r.chain) << "\n"
        << "depth l: " << r.depth_l << "\n"
        << "pieces N: " << r.piece_count_n << ", each the Alexander quandle of (" << r.piece_modulus << ", t+a)\n";
    if (d) {
      out << "brute force: depth " << d->depth << ", " << d->final().size() << " blocks: "
          << (match ? "match" : "MISMATCH") << "\n";
    }
  }
  return match ? kOk : kCheckFailed;
}

std::optional<MCQ> load_mcq(const std::string& mcq_file, const SourceFlags& flags, const CLI::App* app,
                            bool unchecked, std::string& name) {
  if (!mcq_file.empty()) {
    name = mcq_file;
    return mcq_from_json(read_json_file(mcq_file), unchecked);
  }
  const auto src = load_exactly(flags, app, unchecked, 1);
  name = "associated MCQ of " + src.front().name;
  return associated_mcq(src.front().quandle);
}

int cmd_mcq_assoc(const Globals& g, std::ostream& out, const std::vector<Loaded>& sources) {
  const auto& src = sources.front();
  const auto x = associated_mcq(src.quandle);
  const auto v = check_mcq_axioms(x);
  const int m = x.groups().front().size();
  if (g.json()) {
    Json j = mcq_to_json(x);
    j["source"] = src.name;
    j["type"] = m;
    j["axioms_ok"] = !v;
    out << j.dump(2) << "\n";
  } else {
    out << "associated MCQ of " << src.name << ": " << x.lambda_count() << " copies of Z_" << m << ", carrier size "
        << x.carrier_size() << "\n"
        << "MCQ axioms: " << (v ? "violation: " + v->describe() : "all hold") << "\n";
  }
  return v ? kAxiomViolation : kOk;
}

int cmd_mcq_axioms(const Globals& g, std::ostream& out, const MCQ& x, const std::string& name) {
  const auto v = check_mcq_axioms(x);
  if (g.json()) {
    Json j{{"source", name}, {"carrier_size", x.carrier_size()}, {"ok", !v}};
    if (v) {
      j["axiom"] = v->axiom;
      j["witness"] = v->witness;
    }
    out << j.dump(2) << "\n";
  } else {
    out << name << ": " << (v ? "violation: " + v->describe() : "all four MCQ axioms hold") << "\n";
  }
  return v ? kAxiomViolation : kOk;
}

int cmd_mcq_maxdecomp(const Globals& g, std::ostream& out, const MCQ& x, const std::string& name) {
  if (auto v = check_mcq_axioms(x)) throw AxiomViolationError(v->describe());
  const auto d = maximal_mcq_decomposition(x, g.max_iter);
  if (g.json()) {
    Json j{{"source", name}, {"lambda", decomposition_to_json(d.lambda_levels)},
           {"carrier_partition", partition_to_json(d.carrier_partition)}};
    out << j.dump(2) << "\n";
  } else {
    out << name << ": depth " << d.lambda_levels.depth << ", " << d.carrier_partition.size()
        << " maximal connected sub-MCQs\n";
    for (std::size_t k = 0; k < d.lambda_levels.final().size(); ++k) {
      out << "  groups {" << join_numbers(d.lambda_levels.final()[k], ", ") << "} carrier size "
          << d.carrier_partition[k].size() << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const Globals& g, std::ostream& out, const VerifyOptions& options) {
  const auto results = verify_paper(options);
  std::map<int, bool> criteria;
  for (const auto& r : results) {
    auto [it, inserted] = criteria.emplace(r.criterion, r.pass);
    if (!inserted) it->second = it->second && r.pass;
  }
  const auto failures = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; });
  if (g.json()) {
    Json checks = Json::array();
    for (const auto& r : results) {
      checks.push_back({{"criterion", r.criterion},
                        {"group", r.group},
                        {"claim", r.claim},
                        {"expected", r.expected},
                        {"computed", r.computed},
                        {"pass", r.pass}});
    }
    Json j{{"seed", options.seed}, {"checks", checks}, {"failures", failures}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "PASS" : "FAIL") << "  [" << r.criterion << " " << r.group << "] " << r.claim << "\n"
          << "      expected: " << r.expected << "\n"
          << "      computed: " << r.computed << "\n";
    }
    for (const auto& [c, pass] : criteria) out << "criterion " << c << ": " << (pass ? "PASS" : "FAIL") << "\n";
    out << results.size() - static_cast<std::size_t>(failures) << "/" << results.size() << " checks passed\n";
  }
  return failures ? kCheckFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quandles, their maximal connected decompositions, and multiple conjugation quandles",
               "quandlekit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags");

  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--unchecked", g.unchecked, "load tables without checking the axioms");
  app.add_option("--max-iter", g.max_iter, "iteration cap for the decomposition engine")
      ->envname("QUANDLEKIT_MAX_ITER")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized property suites");

  std::function<int()> action;
  std::vector<std::unique_ptr<SourceFlags>> flag_sets;
  const auto quandle_verb = [&](CLI::App* parent, const std::string& name, const std::string& help, std::size_t count,
                                std::function<int(const std::vector<Loaded>&)> body, bool force_unchecked = false) {
    auto* sub = parent->add_subcommand(name, help);
    auto& flags = *flag_sets.emplace_back(std::make_unique<SourceFlags>());
    flags.attach(sub);
    sub->callback([&, sub, count, body, force_unchecked] {
      action = [&, sub, count, body, force_unchecked] {
        return body(load_exactly(flags, sub, g.unchecked || force_unchecked, count));
      };
    });
    return sub;
  };

  quandle_verb(&app, "axioms", "check the quandle axioms", 1,
               [&](const auto& s) { return cmd_axioms(g, out, s); }, true);
  quandle_verb(&app, "components", "connected components", 1, [&](const auto& s) { return cmd_components(g, out, s); });
  quandle_verb(&app, "maxdecomp", "maximal connected decomposition", 1,
               [&](const auto& s) { return cmd_maxdecomp(g, out, s); });
  quandle_verb(&app, "iso", "find a quandle isomorphism between two sources", 2,
               [&](const auto& s) { return cmd_iso(g, out, s); });

  std::string expr;
  long long n0 = 0;
  long long a = 0;
  bool brute = false;
  const auto alexander_verbs = [&](CLI::App* parent) {
    auto* build = parent->add_subcommand("build", "build Z[t,t^-1]/I and its Alexander quandle");
    build->add_option("ideal", expr, "ideal, e.g. \"6; t^2+t+1\"")->required();
    build->callback([&] { action = [&] { return cmd_build(g, out, expr); }; });
    auto* theory = parent->add_subcommand("theory", "orbit count, component ideal, and their checks");
    theory->add_option("ideal", expr, "ideal, e.g. \"6; t^2+t+1\"")->required();
    theory->callback([&] { action = [&] { return cmd_theory(g, out, expr); }; });
    auto* p56 = parent->add_subcommand("prop56", "closed-form decomposition of Z[t,t^-1]/(n0, t+a)");
    p56->add_option("n0", n0, "modulus")->required();
    p56->add_option("a", a, "constant term")->required()->allow_extra_args(false);
    p56->add_flag("--brute", brute, "compare against the brute-force decomposition");
    p56->callback([&] { action = [&] { return cmd_prop56(g, out, n0, a, brute); }; });
  };
  alexander_verbs(&app);
  alexander_verbs(app.add_subcommand("alexander", "Alexander quandle verbs")->require_subcommand(1));

  std::string mcq_file;
  const auto mcq_verbs = [&](CLI::App* parent) {
    quandle_verb(parent, "assoc", "associated MCQ of a quandle", 1,
                 [&](const auto& s) { return cmd_mcq_assoc(g, out, s); });
    for (const std::string name : {"axioms", "maxdecomp"}) {
      auto* sub = parent->add_subcommand(name, name == "axioms" ? "check the four MCQ axioms"
                                                                : "maximal connected sub-MCQ decomposition");
      sub->add_option("--mcq", mcq_file, "MCQ JSON file");
      auto& flags = *flag_sets.emplace_back(std::make_unique<SourceFlags>());
      flags.attach(sub);
      sub->callback([&, sub, name] {
        action = [&, sub, name] {
          std::string label;
          const bool unchecked = name == "axioms" || g.unchecked;
          const auto x = load_mcq(mcq_file, flags, sub, unchecked, label);
          return name == "axioms" ? cmd_mcq_axioms(g, out, *x, label) : cmd_mcq_maxdecomp(g, out, *x, label);
        };
      });
    }
  };
  auto* mcq = app.add_subcommand("mcq", "multiple conjugation quandle verbs")->require_subcommand(1);
  mcq_verbs(mcq);
  quandle_verb(&app, "assoc", "associated MCQ of a quandle", 1, [&](const auto& s) { return cmd_mcq_assoc(g, out, s); });

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "run the reproduction suite");
  verify->add_option("--only", verify_options.only, "restrict to groups")->check(CLI::IsMember(verify_groups()));
  verify->add_option("--cases", verify_options.property_cases, "cases per property suite")->check(CLI::PositiveNumber);
  verify->add_option("--subsets", verify_options.subset_samples, "random subsets per MCQ")->check(CLI::PositiveNumber);
  verify->callback([&] {
    action = [&] {
      verify_options.seed = g.seed;
      return cmd_verify(g, out, verify_options);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!action) throw CLI::CallForHelp();
    return action();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const AxiomViolationError& e) {
    err << "axiom violation: " << e.what() << "\n";
    return kAxiomViolation;
  } catch (const UnsupportedPresentation& e) {
    err << "unsupported presentation: " << e.what() << "\n";
    return kUnsupportedPresentation;
  } catch (const NotASubquandle& e) {
    err << "not a subquandle: " << e.what() << "\n";
    return kStructureError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const Json::exception& e) {
    err << "invalid JSON input: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kStructureError;
  }
}

}  // namespace quandlekit::cli
