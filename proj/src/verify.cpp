#include "quandlekit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "quandlekit/alexander.hpp"
#include "quandlekit/decomposition.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/group.hpp"
#include "quandlekit/mcq.hpp"
#include "quandlekit/parse.hpp"

namespace quandlekit {
namespace {

using Rng = std::mt19937_64;
using LabelSet = std::set<std::string>;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <typename T>
std::string brace(const std::vector<T>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

std::string brace_labels(const LabelSet& s) {
  return brace(std::vector<std::string>(s.begin(), s.end()));
}

LabelSet labels_of(const FiniteQuandle& q, const ElementSet& block) {
  LabelSet out;
  for (int x : block) out.insert(q.label(x));
  return out;
}

std::set<LabelSet> label_partition(const FiniteQuandle& q, const Partition& p) {
  std::set<LabelSet> out;
  for (const auto& block : p) out.insert(labels_of(q, block));
  return out;
}

ElementSet all_elements(int n) {
  ElementSet out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

bool blocks_isomorphic(const FiniteQuandle& q, const ElementSet& block, const FiniteQuandle& target) {
  return find_isomorphism(q.restrict_to(block), target).has_value();
}

bool refines(const Partition& fine, const Partition& coarse) {
  for (const auto& block : fine) {
    const bool inside = std::any_of(coarse.begin(), coarse.end(), [&](const ElementSet& c) {
      return std::includes(c.begin(), c.end(), block.begin(), block.end());
    });
    if (!inside) return false;
  }
  return true;
}

class Report {
 public:
  explicit Report(std::vector<CheckResult>& out) : out_(out) {}

  void add(int criterion, const std::string& group, std::string claim, std::string expected, std::string computed,
           bool pass) {
    out_.push_back({criterion, group, std::move(claim), std::move(expected), std::move(computed), pass});
  }

  void equal(int criterion, const std::string& group, std::string claim, const std::string& expected,
             const std::string& computed) {
    add(criterion, group, std::move(claim), expected, computed, expected == computed);
  }

 private:
  std::vector<CheckResult>& out_;
};

// Tallies a sweep and keeps the first failure for the report.
struct Sweep {
  int total = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++total;
    if (!ok) {
      if (failures == 0) first_failure = describe();
      ++failures;
    }
  }
  std::string summary() const {
    std::string s = std::to_string(total - failures) + "/" + std::to_string(total);
    if (failures) s += "; first failure: " + first_failure;
    return s;
  }
  std::string expected() const { return std::to_string(total) + "/" + std::to_string(total); }
};

AlexanderQuandle example_6() { return alexander_quandle(parse_ideal("6; t^2+t+1")); }

void check_alexander_6(Report& r, const GoldenExpectations& g) {
  const std::string grp = "alexander6";
  const auto a = example_6();
  const auto& q = a.quandle;
  r.equal(1, grp, "order of Z[t,t^-1]/(6,t^2+t+1)", std::to_string(g.order_6), std::to_string(q.size()));

  const auto comps = connected_components(q);
  std::vector<std::size_t> expected_sizes;
  for (const auto& orb : g.orbits_6) expected_sizes.push_back(orb.size());
  std::sort(expected_sizes.begin(), expected_sizes.end());
  r.equal(1, grp, "component sizes", brace(expected_sizes), brace(block_sizes(comps)));

  const auto orbits = orbits_by_eval_one(a);
  for (std::size_t i = 0; i < g.orbits_6.size(); ++i) {
    const std::string computed = i < orbits.size() ? brace_labels(labels_of(q, orbits[i])) : "missing";
    const bool is_component = i < orbits.size() && std::find(comps.begin(), comps.end(), orbits[i]) != comps.end();
    r.add(1, grp, "Orb(" + std::to_string(i) + ") labels", brace_labels(g.orbits_6[i]),
          computed + (is_component ? "" : " (not a component)"),
          is_component && computed == brace_labels(g.orbits_6[i]));
  }

  const auto d = maximal_decomposition(q);
  const auto blocks = label_partition(q, d.final());
  std::ostringstream exp_blocks, got_blocks;
  for (const auto& b : g.maximal_blocks_6) exp_blocks << brace_labels(b);
  for (const auto& b : blocks) got_blocks << brace_labels(b);
  r.add(1, grp, "maximal decomposition blocks", exp_blocks.str(), got_blocks.str(), blocks == g.maximal_blocks_6);
  r.equal(1, grp, "depth", std::to_string(g.depth_6), std::to_string(d.depth));
}

void check_conjugation(Report& r, const GoldenExpectations& g) {
  const std::string grp = "conjugation";
  struct Case {
    int n;
    const std::vector<std::size_t>& comps;
    const std::vector<std::size_t>& final_sizes;
    int depth;
  };
  for (const Case& c : {Case{3, g.s3_components, g.s3_final, g.s3_depth},
                        Case{4, g.s4_components, g.s4_final, g.s4_depth}}) {
    const auto q = conj_quandle(symmetric_group(c.n));
    const std::string name = "Conj(S" + std::to_string(c.n) + ") ";
    r.equal(2, grp, name + "component sizes", brace(c.comps), brace(block_sizes(connected_components(q))));
    const auto d = maximal_decomposition(q);
    r.equal(2, grp, name + "final block sizes", brace(c.final_sizes), brace(block_sizes(d.final())));
    r.equal(2, grp, name + "depth", std::to_string(c.depth), std::to_string(d.depth));
    if (c.n == 4) {
      std::set<LabelSet> split;
      for (const auto& block : d.final()) {
        const auto labels = labels_of(q, block);
        if (labels.size() == 4 || labels.size() == 1) {
          const auto& first = *labels.begin();
          if (first.size() > 3) split.insert(labels);
        }
      }
      std::ostringstream exp_blocks, got_blocks;
      for (const auto& b : g.s4_split_blocks) exp_blocks << brace_labels(b);
      for (const auto& b : split) got_blocks << brace_labels(b);
      r.add(2, grp, name + "3-cycle and double-transposition blocks", exp_blocks.str(), got_blocks.str(),
            split == g.s4_split_blocks);
    }
  }
}

void check_dihedral(Report& r) {
  const std::string grp = "dihedral";
  Sweep sweep;
  for (int m = 1; m <= 64; ++m) {
    int l = 0;
    int k = m;
    while (k % 2 == 0) {
      k /= 2;
      ++l;
    }
    const auto q = dihedral(m).quandle;
    const auto target = dihedral(k).quandle;
    const auto d = maximal_decomposition(q);
    const auto& fin = d.final();
    bool ok = d.depth == l && fin.size() == (std::size_t{1} << l);
    for (const auto& block : fin) ok = ok && blocks_isomorphic(q, block, target);
    sweep.record(ok, [&] {
      return "m=" + std::to_string(m) + " blocks=" + std::to_string(fin.size()) + " depth=" + std::to_string(d.depth);
    });
  }
  r.add(3, grp, "R_m, m=2^l k: 2^l blocks each iso to R_k, depth l (m=1..64)", sweep.expected(), sweep.summary(),
        sweep.failures == 0);
}

void check_prop56(Report& r, const GoldenExpectations& g) {
  const std::string grp = "prop56";
  const auto start = std::chrono::steady_clock::now();
  Sweep sweep;
  for (int n0 = 1; n0 <= 40; ++n0) {
    for (int a = -10; a <= 10; ++a) {
      const auto pred = prop_5_6(n0, a);
      const auto built = alexander_quandle(linear_presentation(n0, a));
      const auto& q = built.quandle;
      const auto piece = alexander_quandle(linear_presentation(pred.piece_modulus, a)).quandle;
      const auto d = maximal_decomposition(q);
      const auto& fin = d.final();
      bool ok = d.depth == pred.depth_l && BigInt(fin.size()) == pred.piece_count_n;
      for (const auto& block : fin) ok = ok && blocks_isomorphic(q, block, piece);
      sweep.record(ok, [&] {
        std::ostringstream s;
        s << "n0=" << n0 << " a=" << a << " blocks=" << fin.size() << " (N=" << pred.piece_count_n
          << ") depth=" << d.depth << " (l=" << pred.depth_l << ")";
        return s.str();
      });
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.add(4, grp, "(n0, t+a), n0=1..40, a=-10..10: N blocks iso to (n_l, t+a), depth l", sweep.expected(),
        sweep.summary(), sweep.failures == 0);
  std::ostringstream limit;
  limit << "< " << g.prop56_grid_seconds << " s";
  std::ostringstream took;
  took.precision(2);
  took << std::fixed << seconds << " s";
  const bool fast = seconds < g.prop56_grid_seconds;
  r.add(4, grp, "grid wall time", limit.str(), fast ? limit.str() : took.str(), fast);
}

void check_lemma34(Report& r) {
  const std::string grp = "lemma34";
  std::vector<IdealPresentation> cases;
  cases.push_back(parse_ideal("6; t^2+t+1"));
  for (int m = 1; m <= 64; ++m) cases.push_back(linear_presentation(m, 1));
  for (int n0 = 1; n0 <= 40; ++n0) {
    for (int a = -10; a <= 10; ++a) cases.push_back(linear_presentation(n0, a));
  }
  const auto ci = component_ideal({LaurentPoly::constant(6), parse_polynomial("t^2+t+1")});
  cases.push_back(presentation_from_generators(ci.generators));

  Sweep sweep;
  for (const auto& p : cases) {
    const auto a = alexander_quandle(p);
    auto bfs = connected_components(a.quandle);
    auto by_eval = canonical_partition(orbits_by_eval_one(a));
    sweep.record(bfs == by_eval, [&] {
      return p.descriptor() + ": " + std::to_string(bfs.size()) + " components vs " + std::to_string(by_eval.size()) +
             " classes";
    });
  }
  r.add(5, grp, "BFS components equal classes of eval at 1 mod a", sweep.expected(), sweep.summary(),
        sweep.failures == 0);
}

void check_component_ideal(Report& r, const GoldenExpectations& g) {
  const std::string grp = "component-ideal";
  const auto ci = component_ideal({LaurentPoly::constant(6), parse_polynomial("t^2+t+1")});
  const auto presentation = presentation_from_generators(ci.generators);
  const auto piece = alexander_quandle(presentation);
  r.equal(6, grp, "order of component ideal quotient", std::to_string(g.component_ideal_order_6),
          std::to_string(piece.module.order()));
  const auto reference = parse_ideal("6; 2*t+4; t^2+t+1");
  r.add(6, grp, "equals (6, 2(t+2), t^2+t+1)", reference.descriptor(), presentation.descriptor(),
        same_ideal(presentation, reference));
  const auto whole = example_6();
  const auto comps = connected_components(whole.quandle);
  int iso = 0;
  for (const auto& c : comps) iso += blocks_isomorphic(whole.quandle, c, piece.quandle) ? 1 : 0;
  r.add(6, grp, "components of item 1 isomorphic to it", std::to_string(comps.size()) + "/" + std::to_string(comps.size()),
        std::to_string(iso) + "/" + std::to_string(comps.size()), iso == static_cast<int>(comps.size()) && !comps.empty());
}

// Random Alexander presentation whose module has at most `max_order`
// elements. Includes non-monic and non-unit-constant polynomials.
IdealPresentation random_alexander(Rng& rng, std::int64_t max_order) {
  for (;;) {
    const int n = uniform(rng, 2, 36);
    const int deg = n <= 6 ? uniform(rng, 1, 2) : 1;
    LaurentPoly::Coeffs c;
    c[deg] = uniform(rng, 0, 4) == 0 ? uniform(rng, 1, n - 1) : 1;
    for (int e = 0; e < deg; ++e) c[e] = uniform(rng, 0, n - 1);
    std::vector<LaurentPoly> polys{LaurentPoly(c).shifted(uniform(rng, -2, 2))};
    if (uniform(rng, 0, 3) == 0) {
      LaurentPoly::Coeffs extra;
      extra[0] = uniform(rng, 0, n - 1);
      extra[1] = uniform(rng, 0, n - 1);
      polys.emplace_back(extra);
    }
    try {
      IdealPresentation p(n, polys);
      if (build_module(p).order() <= max_order) return p;
    } catch (const UnsupportedPresentation&) {
    }
  }
}

class QuandlePool {
 public:
  QuandlePool() : s3_(conj_quandle(symmetric_group(3))), s4_(conj_quandle(symmetric_group(4))) {}

  FiniteQuandle sample(Rng& rng) const {
    switch (uniform(rng, 0, 6)) {
      case 0:
      case 1:
        return alexander_quandle(random_alexander(rng, 36)).quandle;
      case 2:
        return dihedral(uniform(rng, 1, 40)).quandle;
      case 3:
        return uniform(rng, 0, 1) ? s3_ : s4_;
      case 4:
        return conj_quandle(cyclic_group(uniform(rng, 1, 8)));
      case 5:
        return FiniteQuandle::trivial(uniform(rng, 1, 8));
      default: {
        const auto q = alexander_quandle(random_alexander(rng, 36)).quandle;
        const auto comps = connected_components(q);
        return q.restrict_to(comps[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(comps.size()) - 1))]);
      }
    }
  }

 private:
  FiniteQuandle s3_;
  FiniteQuandle s4_;
};

LaurentPoly random_poly(Rng& rng) {
  LaurentPoly::Coeffs c;
  const int terms = uniform(rng, 0, 6);
  for (int i = 0; i < terms; ++i) c[uniform(rng, -6, 6)] = uniform(rng, -50, 50);
  return LaurentPoly(c);
}

// The maximal connected block through x of <x, z> for a random z in the
// component of x; connected by construction.
ElementSet random_connected_subquandle(Rng& rng, const FiniteQuandle& q, const Partition& components, int x) {
  const auto& comp = *std::find_if(components.begin(), components.end(),
                                   [x](const ElementSet& c) { return std::binary_search(c.begin(), c.end(), x); });
  const int z = comp[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(comp.size()) - 1))];
  const auto sub = generated_subquandle(q, {x, z});
  const auto d = maximal_decomposition(q.restrict_to(sub));
  const int local = static_cast<int>(std::lower_bound(sub.begin(), sub.end(), x) - sub.begin());
  for (const auto& block : d.final()) {
    if (!std::binary_search(block.begin(), block.end(), local)) continue;
    ElementSet out;
    for (int i : block) out.push_back(sub[static_cast<std::size_t>(i)]);
    return out;
  }
  return {x};
}

void check_properties(Report& r, const VerifyOptions& o) {
  const std::string grp = "properties";
  const int cases = std::max(o.property_cases, 1);
  const QuandlePool pool;

  {
    Rng rng(o.seed);
    Sweep sweep;
    for (int i = 0; i < cases; ++i) {
      const auto q = pool.sample(rng);
      const auto v = check_axioms(q);
      sweep.record(!v, [&] { return "size " + std::to_string(q.size()) + ": " + v->describe(); });
    }
    r.add(7, grp, "constructors produce quandles", sweep.expected(), sweep.summary(), sweep.failures == 0);
  }
  {
    Rng rng(o.seed + 1);
    Sweep sweep;
    for (int i = 0; i < cases; ++i) {
      const auto f = random_poly(rng);
      const auto s = split_one_minus_t(f);
      const bool ok = LaurentPoly::one_minus_t() * s.ftilde + LaurentPoly::constant(s.value) == f &&
                      s.value == eval_one(f);
      sweep.record(ok, [&] { return f.to_string(); });
    }
    r.add(7, grp, "f = (1-t) ftilde + f(1)", sweep.expected(), sweep.summary(), sweep.failures == 0);
  }
  {
    Rng rng(o.seed + 2);
    Sweep sweep;
    for (int i = 0; i < cases; ++i) {
      std::vector<BigInt> c(static_cast<std::size_t>(uniform(rng, 1, 6)));
      for (auto& x : c) x = uniform(rng, 0, 3) == 0 ? 0 : uniform(rng, -40, 40);
      const auto basis = syzygy_basis(c);
      bool ok = basis.vectors.size() == c.size() - (gcd_vec(c) == 0 ? 0 : 1);
      for (const auto& s : basis.vectors) {
        BigInt sum = 0;
        for (std::size_t j = 0; j < c.size(); ++j) sum += s[j] * c[j];
        ok = ok && sum == 0;
      }
      sweep.record(ok, [&] { return brace(c); });
    }
    r.add(7, grp, "syzygy basis vectors are orthogonal to c, full rank", sweep.expected(), sweep.summary(),
          sweep.failures == 0);
  }
  {
    Rng rng(o.seed + 3);
    Sweep sweep;
    long long attempts = 0;
    std::vector<FiniteQuandle> rich{conj_quandle(symmetric_group(4)), conj_quandle(symmetric_group(5)),
                                    dihedral(15).quandle, dihedral(27).quandle,
                                    alexander_quandle(parse_ideal("3; t^2+1")).quandle,
                                    alexander_quandle(parse_ideal("4; t^2+t+1")).quandle};
    while (sweep.total < cases) {
      const auto q = uniform(rng, 0, 2) == 0 ? pool.sample(rng)
                                             : rich[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rich.size()) - 1))];
      const auto components = connected_components(q);
      const int x = uniform(rng, 0, q.size() - 1);
      const auto a = random_connected_subquandle(rng, q, components, x);
      const int y = a[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(a.size()) - 1))];
      const auto b = random_connected_subquandle(rng, q, components, y);
      ElementSet both;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      const auto joined = generated_subquandle(q, both);
      ++attempts;
      if (std::includes(a.begin(), a.end(), b.begin(), b.end()) || std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        if (attempts < 1000 * cases) continue;
      }
      sweep.record(is_connected(q, joined), [&] { return "A=" + brace(a) + " B=" + brace(b); });
    }
    r.add(7, grp, "connected A, B meeting, neither containing the other: <A u B> connected", sweep.expected(),
          sweep.summary() + " (neither contains the other; " + std::to_string(attempts) + " samples drawn)",
          sweep.failures == 0);
  }
  {
    Rng rng(o.seed + 4);
    Sweep sweep;
    for (int i = 0; i < cases; ++i) {
      const auto p = random_alexander(rng, 36);
      const auto q = alexander_quandle(p).quandle;
      const auto fin = maximal_decomposition(q).final();
      const auto first = q.restrict_to(fin.front());
      bool ok = true;
      for (std::size_t k = 1; k < fin.size() && ok; ++k) ok = find_isomorphism(first, q.restrict_to(fin[k])).has_value();
      sweep.record(ok, [&] { return p.descriptor(); });
    }
    r.add(7, grp, "final blocks of Alexander quandles (order <= 36) pairwise isomorphic", sweep.expected(),
          sweep.summary(), sweep.failures == 0);
  }
  {
    Rng rng(o.seed + 5);
    Sweep sweep;
    for (int i = 0; i < cases; ++i) {
      const auto q = pool.sample(rng);
      const auto d = maximal_decomposition(q);
      bool ok = d.levels.size() == static_cast<std::size_t>(d.depth) + 2 &&
                d.levels.front() == Partition{all_elements(q.size())} &&
                d.levels[static_cast<std::size_t>(d.depth)] == d.levels.back() &&
                refine_once(q, d.final()) == d.final();
      for (std::size_t k = 0; k + 1 < d.levels.size(); ++k) {
        ok = ok && refines(d.levels[k + 1], d.levels[k]);
        if (k + 1 < static_cast<std::size_t>(d.depth)) ok = ok && d.levels[k + 1] != d.levels[k];
      }
      for (const auto& block : d.final()) ok = ok && is_connected(q, block);
      sweep.record(ok, [&] { return "size " + std::to_string(q.size()) + " depth " + std::to_string(d.depth); });
    }
    r.add(7, grp, "D refines each level and fixes the final partition", sweep.expected(), sweep.summary(),
          sweep.failures == 0);
  }
}

ElementSet random_subset(Rng& rng, const MCQ& x) {
  const int n = x.carrier_size();
  switch (uniform(rng, 0, 3)) {
    case 0: {
      ElementSet gens;
      const int k = uniform(rng, 1, 2);
      for (int i = 0; i < k; ++i) gens.push_back(uniform(rng, 0, n - 1));
      return generated_sub_mcq(x, gens);
    }
    case 1: {
      // Union of random cyclic subgroups of some of the groups.
      ElementSet out;
      for (int lambda = 0; lambda < x.lambda_count(); ++lambda) {
        if (uniform(rng, 0, 1)) continue;
        const auto& g = x.groups()[static_cast<std::size_t>(lambda)];
        const int gen = uniform(rng, 0, g.size() - 1);
        for (int k = 0; k < g.size(); ++k) out.push_back(x.global(lambda, g.pow(gen, k)));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    case 2: {
      ElementSet lambdas;
      for (int lambda = 0; lambda < x.lambda_count(); ++lambda) {
        if (uniform(rng, 0, 2) == 0) lambdas.push_back(lambda);
      }
      return x.expand(lambdas);
    }
    default: {
      ElementSet out;
      const int density = uniform(rng, 1, 9);
      for (int i = 0; i < n; ++i) {
        if (uniform(rng, 0, 9) < density) out.push_back(i);
      }
      return out;
    }
  }
}

void check_mcq(Report& r, const VerifyOptions& o) {
  const std::string grp = "mcq";
  std::vector<std::pair<std::string, FiniteQuandle>> cases;
  for (int m = 3; m <= 12; ++m) cases.emplace_back("R" + std::to_string(m), dihedral(m).quandle);
  cases.emplace_back("tetrahedral", alexander_quandle(parse_ideal("2; t^2+t+1")).quandle);
  cases.emplace_back("Conj(S3)", conj_quandle(symmetric_group(3)));

  Sweep axioms, orbits, carrier, prop62;
  Rng rng(o.seed + 6);
  int positives = 0;
  for (const auto& [name, q] : cases) {
    const auto x = associated_mcq(q);
    const auto v = check_mcq_axioms(x);
    axioms.record(!v, [&] { return name + ": " + v->describe(); });

    orbits.record(lambda_orbits(x) == connected_components(q), [&] { return name; });

    const int m = x.groups().front().size();
    Partition crossed;
    const auto d = maximal_decomposition(q);
    for (const auto& block : d.final()) {
      ElementSet expanded;
      for (int e : block) {
        for (int g = 0; g < m; ++g) expanded.push_back(e * m + g);
      }
      crossed.push_back(expanded);
    }
    crossed = canonical_partition(crossed);
    carrier.record(maximal_mcq_decomposition(x).carrier_partition == crossed, [&] { return name; });

    for (int i = 0; i < o.subset_samples; ++i) {
      const auto y = random_subset(rng, x);
      const auto rep = is_sub_mcq(x, y);
      positives += rep.result() ? 1 : 0;
      prop62.record(rep.agree(), [&] {
        std::ostringstream s;
        s << name << " Y=" << brace(y) << " (" << rep.restriction_is_mcq << rep.closed_with_subgroups
          << rep.closed_union_of_subgroups << ")";
        return s.str();
      });
    }
  }
  r.add(8, grp, "associated MCQs satisfy the four axioms", axioms.expected(), axioms.summary(), axioms.failures == 0);
  r.add(8, grp, "Lambda-orbits match components of Q", orbits.expected(), orbits.summary(), orbits.failures == 0);
  r.add(8, grp, "maximal sub-MCQ partition is Q's maximal partition x Z_m", carrier.expected(), carrier.summary(),
        carrier.failures == 0);
  r.add(8, grp, "sub-MCQ criteria agree on random subsets", prop62.expected(),
        prop62.summary() + " (" + std::to_string(positives) + " sub-MCQs)", prop62.failures == 0);
}

}  // namespace

std::vector<std::string> verify_groups() {
  return {"alexander6", "conjugation", "dihedral", "prop56", "lemma34", "component-ideal", "properties", "mcq"};
}

std::vector<CheckResult> verify_paper(const VerifyOptions& options) {
  for (const auto& name : options.only) {
    const auto groups = verify_groups();
    if (std::find(groups.begin(), groups.end(), name) == groups.end()) {
      throw std::invalid_argument("unknown verification group: " + name);
    }
  }
  const auto selected = [&](const std::string& name) {
    return options.only.empty() || std::find(options.only.begin(), options.only.end(), name) != options.only.end();
  };
  std::vector<CheckResult> results;
  Report r(results);
  const auto& g = options.golden;
  if (selected("alexander6")) check_alexander_6(r, g);
  if (selected("conjugation")) check_conjugation(r, g);
  if (selected("dihedral")) check_dihedral(r);
  if (selected("prop56")) check_prop56(r, g);
  if (selected("lemma34")) check_lemma34(r);
  if (selected("component-ideal")) check_component_ideal(r, g);
  if (selected("properties")) check_properties(r, options);
  if (selected("mcq")) check_mcq(r, options);
  return results;
}

}  // namespace quandlekit
