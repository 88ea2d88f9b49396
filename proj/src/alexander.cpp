#include "quandlekit/alexander.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quandlekit {

AlexanderQuandle alexander_quandle(FiniteTModule m) {
  const auto n = m.order();
  std::vector<Element> elems = m.elements();
  std::vector<Element> t_elems;
  t_elems.reserve(elems.size());
  for (const auto& x : elems) t_elems.push_back(m.t_act(x));

  std::vector<int> table(static_cast<std::size_t>(n * n));
  for (std::int64_t x = 0; x < n; ++x) {
    const auto& tx = t_elems[static_cast<std::size_t>(x)];
    for (std::int64_t y = 0; y < n; ++y) {
      const auto& ey = elems[static_cast<std::size_t>(y)];
      const auto& ty = t_elems[static_cast<std::size_t>(y)];
      table[static_cast<std::size_t>(x * n + y)] = static_cast<int>(m.index_of(m.add(tx, m.sub(ey, ty))));
    }
  }
  std::vector<std::string> labels;
  for (const auto& x : elems) labels.push_back(m.label(x));
  FiniteQuandle q(static_cast<int>(n), std::move(table), std::move(labels));
  return AlexanderQuandle{std::move(m), std::move(q)};
}

AlexanderQuandle alexander_quandle(const IdealPresentation& p) { return alexander_quandle(build_module(p)); }

IdealPresentation linear_presentation(const BigInt& n, const BigInt& a) {
  return IdealPresentation(n, {LaurentPoly({{1, 1}, {0, a}})});
}

AlexanderQuandle dihedral(int m) {
  if (m < 1) throw std::invalid_argument("dihedral quandle order must be positive");
  return alexander_quandle(linear_presentation(m, 1));
}

BigInt orbit_count(const std::vector<LaurentPoly>& gens, const std::optional<BigInt>& modulus) {
  std::vector<BigInt> values;
  if (modulus) values.push_back(*modulus);
  for (const auto& g : gens) values.push_back(eval_one(g));
  return gcd_vec(values);
}

ComponentIdealResult component_ideal(const std::vector<LaurentPoly>& gens) {
  ComponentIdealResult out;
  std::vector<BigInt> values;
  std::vector<LaurentPoly> tildes;
  for (const auto& g : gens) {
    auto split = split_one_minus_t(g);
    values.push_back(split.value);
    tildes.push_back(std::move(split.ftilde));
  }
  out.orbit_count = gcd_vec(values);
  out.syzygies = syzygy_basis(values);
  out.generators = gens;
  for (const auto& s : out.syzygies.vectors) {
    LaurentPoly term;
    for (std::size_t i = 0; i < s.size(); ++i) term += s[i] * tildes[i];
    out.correction_terms.push_back(term);
    if (!term.is_zero()) out.generators.push_back(std::move(term));
  }
  return out;
}

Partition orbits_by_eval_one(const AlexanderQuandle& a) {
  std::map<std::int64_t, ElementSet> classes;
  for (std::int64_t i = 0; i < a.module.order(); ++i) {
    classes[a.module.eval_one_class(a.module.element(i))].push_back(static_cast<int>(i));
  }
  Partition out;
  for (auto& [cls, block] : classes) out.push_back(std::move(block));
  return out;
}

TranslationIso translation_iso(const AlexanderQuandle& a, int element) {
  const auto& m = a.module;
  const Element shift = m.element(element);
  TranslationIso iso;
  ElementSet target;
  const std::int64_t target_class = m.eval_one_class(shift);
  for (std::int64_t i = 0; i < m.order(); ++i) {
    const Element x = m.element(i);
    if (m.eval_one_class(x) == 0) {
      iso.domain.push_back(static_cast<int>(i));
      iso.images.push_back(static_cast<int>(m.index_of(m.add(x, shift))));
    }
    if (m.eval_one_class(x) == target_class) target.push_back(static_cast<int>(i));
  }

  ElementSet image_set = iso.images;
  std::sort(image_set.begin(), image_set.end());
  const auto& q = a.quandle;
  bool ok = image_set == target && is_subquandle(q, iso.domain) && is_subquandle(q, target);
  std::map<int, int> phi;
  for (std::size_t k = 0; k < iso.domain.size(); ++k) phi[iso.domain[k]] = iso.images[k];
  for (std::size_t i = 0; ok && i < iso.domain.size(); ++i) {
    for (std::size_t j = 0; ok && j < iso.domain.size(); ++j) {
      const int x = iso.domain[i], y = iso.domain[j];
      ok = phi.at(q.op(x, y)) == q.op(phi.at(x), phi.at(y));
    }
  }
  iso.verified = ok;
  return iso;
}

Prop56Result prop_5_6(const BigInt& n0, const BigInt& a) {
  if (n0 < 1) throw std::invalid_argument("n0 must be a positive integer");
  Prop56Result r;
  const BigInt shift = abs(1 + a);
  r.chain.push_back(n0);
  while (true) {
    const BigInt n = r.chain.back();
    const BigInt g = gcd(n, shift);
    const BigInt next = n / g;
    r.chain.push_back(next);
    if (next == n) break;
    r.piece_count_n *= g;
    ++r.depth_l;
  }
  r.piece_modulus = r.chain[static_cast<std::size_t>(r.depth_l)];
  return r;
}

}  // namespace quandlekit
