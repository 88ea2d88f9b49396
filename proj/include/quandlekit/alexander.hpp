#pragma once

#include <optional>
#include <vector>

#include "quandlekit/finite_quandle.hpp"
#include "quandlekit/laurent.hpp"
#include "quandlekit/tmodule.hpp"

namespace quandlekit {

/// The quandle a * b = t a + (1 - t) b on a finite t-module. Element i of
/// the quandle is module element i in enumeration order.
struct AlexanderQuandle {
  FiniteTModule module;
  FiniteQuandle quandle;

  const IdealPresentation& presentation() const { return module.presentation(); }
};

AlexanderQuandle alexander_quandle(FiniteTModule m);
AlexanderQuandle alexander_quandle(const IdealPresentation& p);

/// R_m, built as Z[t, t^-1]/(m, t + 1): a * b = 2b - a mod m.
AlexanderQuandle dihedral(int m);

/// gcd of the values at t = 1 of all generators (and of `modulus`).
BigInt orbit_count(const std::vector<LaurentPoly>& gens, const std::optional<BigInt>& modulus = std::nullopt);

/// Generators of J + I, where J = (gens) and I is spanned by
/// sum s_i ftilde_i over integer syzygies s of (f_1(1), ..., f_k(1)).
struct ComponentIdealResult {
  BigInt orbit_count;
  std::vector<LaurentPoly> generators;
  SyzygyBasis syzygies;
  std::vector<LaurentPoly> correction_terms;
};

ComponentIdealResult component_ideal(const std::vector<LaurentPoly>& gens);

/// Partition of the module by eval_one_class; block i is Orb(i).
Partition orbits_by_eval_one(const AlexanderQuandle& a);

/// x -> x + a restricted to Orb(0); `images[k]` is the image of
/// `domain[k]`. `verified` records that it is a quandle isomorphism onto
/// the component containing a.
struct TranslationIso {
  ElementSet domain;
  std::vector<int> images;
  bool verified = false;
};

TranslationIso translation_iso(const AlexanderQuandle& a, int element);

/// The chain n_{i+1} = n_i / gcd(n_i, 1 + a) and its closed-form
/// consequences for Z[t, t^-1]/(n_0, t + a).
struct Prop56Result {
  std::vector<BigInt> chain;  // n_0, ..., n_l, n_{l+1} (== n_l)
  int depth_l = 0;
  BigInt piece_count_n = 1;
  BigInt piece_modulus = 1;
};

Prop56Result prop_5_6(const BigInt& n0, const BigInt& a);

/// Ideal (n, t + a).
IdealPresentation linear_presentation(const BigInt& n, const BigInt& a);

}  // namespace quandlekit
