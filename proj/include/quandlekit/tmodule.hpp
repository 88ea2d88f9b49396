#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quandlekit/laurent.hpp"

namespace quandlekit {

/// The ideal (n, p_1, ..., p_k) of Z[t, t^-1] with an explicit positive
/// integer member n. Stored normalized: coefficients reduced mod n, each
/// polynomial shifted so its lowest exponent is 0, zero polynomials dropped.
class IdealPresentation {
 public:
  IdealPresentation(BigInt modulus, std::vector<LaurentPoly> polys);

  const BigInt& modulus() const { return modulus_; }
  const std::vector<LaurentPoly>& polys() const { return polys_; }

  /// All generators, the modulus first as a constant polynomial.
  std::vector<LaurentPoly> generators() const;

  /// Canonical "n; p1; p2" text, accepted back by parse_ideal.
  std::string descriptor() const;

  friend bool operator==(const IdealPresentation&, const IdealPresentation&) = default;

 private:
  BigInt modulus_;
  std::vector<LaurentPoly> polys_;
};

/// Builds a presentation from an arbitrary generator list by taking the
/// modulus as the gcd of its constant members. Throws
/// UnsupportedPresentation when no nonzero constant is present.
IdealPresentation presentation_from_generators(const std::vector<LaurentPoly>& gens);

/// Coordinate tuple of an element; entry i lies in [0, invariant_factors[i]).
using Element = std::vector<std::int64_t>;

/// A finite quotient Z[t, t^-1]/I viewed as an abelian group
/// Z/d_1 + ... + Z/d_r (d_1 | d_2 | ... , all >= 2) with an invertible
/// t-action. Immutable after build.
class FiniteTModule {
 public:
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const { return order_; }

  /// Column images of t and t^-1 on the coordinate basis.
  const std::vector<Element>& t_matrix() const { return t_images_; }
  const std::vector<Element>& t_inverse_matrix() const { return t_inv_images_; }

  Element zero() const { return Element(rank(), 0); }
  /// The ring unit 1, i.e. the class of the constant polynomial 1.
  const Element& one() const { return one_; }

  /// Mixed-radix enumeration; index 0 is zero, order is lexicographic.
  Element element(std::int64_t index) const;
  std::int64_t index_of(const Element& x) const;
  std::vector<Element> elements() const;

  Element add(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element sub(const Element& x, const Element& y) const { return add(x, neg(y)); }
  Element scale(const BigInt& c, const Element& x) const;
  Element t_act(const Element& x) const;
  Element t_inv_act(const Element& x) const;

  /// The class of p(t) in the quotient.
  Element reduce(const LaurentPoly& p) const;

  /// a = gcd(n, f_1(1), ..., f_k(1)).
  std::int64_t eval_one_modulus() const { return eval_modulus_; }
  const std::vector<std::int64_t>& eval_one_weights() const { return eval_weights_; }
  /// Value at t = 1 of any polynomial representative, modulo a.
  std::int64_t eval_one_class(const Element& x) const;

  /// Sorted, deduplicated indices of {(1 - t) y : y in M}.
  std::vector<std::int64_t> one_minus_t_image() const;

  /// True when coordinates are the coefficients of 1, t, ..., t^{d-1}.
  bool has_print_basis() const { return print_basis_; }
  /// "1+2t" style label under the print basis, "(1,0,2)" otherwise.
  std::string label(const Element& x) const;

  const IdealPresentation& presentation() const { return presentation_; }

  friend FiniteTModule build_module(const IdealPresentation& p);

 private:
  explicit FiniteTModule(IdealPresentation p) : presentation_(std::move(p)) {}
  Element apply(const std::vector<Element>& images, const Element& x) const;

  IdealPresentation presentation_;
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
  std::vector<Element> t_images_;
  std::vector<Element> t_inv_images_;
  Element one_;
  std::int64_t eval_modulus_ = 1;
  std::vector<std::int64_t> eval_weights_;
  bool print_basis_ = false;
};

/// Realizes the quotient ring concretely: reduce mod n, pick a generator
/// that is monic up to a unit (flipping t -> t^-1 if needed), take the
/// companion module, quotient by the t-stable lattice of the remaining
/// generators, then saturate so t is invertible. Throws
/// UnsupportedPresentation when no generator is monicizable.
FiniteTModule build_module(const IdealPresentation& p);

/// True iff every generator of each presentation vanishes in the other's
/// module and both modules have the same order.
bool same_ideal(const IdealPresentation& a, const IdealPresentation& b);

}  // namespace quandlekit
