#include "quandlekit/tmodule.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "quandlekit/errors.hpp"

namespace quandlekit {

IdealPresentation::IdealPresentation(BigInt modulus, std::vector<LaurentPoly> polys)
    : modulus_(std::move(modulus)) {
  if (modulus_ < 1) throw std::invalid_argument("ideal modulus must be a positive integer");
  for (const auto& p : polys) {
    LaurentPoly q = p.reduced_mod(modulus_).normalized();
    if (!q.is_zero()) polys_.push_back(std::move(q));
  }
}

std::vector<LaurentPoly> IdealPresentation::generators() const {
  std::vector<LaurentPoly> gens{LaurentPoly::constant(modulus_)};
  gens.insert(gens.end(), polys_.begin(), polys_.end());
  return gens;
}

std::string IdealPresentation::descriptor() const {
  std::ostringstream os;
  os << modulus_;
  for (const auto& p : polys_) os << "; " << p.to_string();
  return os.str();
}

IdealPresentation presentation_from_generators(const std::vector<LaurentPoly>& gens) {
  BigInt n = 0;
  std::vector<LaurentPoly> rest;
  for (const auto& g : gens) {
    if (auto c = g.as_constant()) {
      n = gcd(n, abs(*c));
    } else {
      rest.push_back(g);
    }
  }
  if (n == 0) {
    throw UnsupportedPresentation("generator list has no nonzero integer member");
  }
  return IdealPresentation(n, std::move(rest));
}

namespace {

std::int64_t to_i64(const BigInt& v) {
  if (v > std::numeric_limits<std::int32_t>::max() || v < 0) {
    throw UnsupportedPresentation("module parameters exceed the enumerable range");
  }
  return static_cast<std::int64_t>(v);
}

BigInt mod_inverse(const BigInt& a, const BigInt& n) {
  BigInt r0 = n, r1 = mod_floor(a, n), s0 = 0, s1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  return mod_floor(s0, n);
}

IntVector reduce_vec(IntVector v, const BigInt& n) {
  for (auto& x : v) x = mod_floor(x, n);
  return v;
}

IntMatrix reduce_mat(IntMatrix m, const BigInt& n) {
  for (auto& row : m) row = reduce_vec(std::move(row), n);
  return m;
}

// Coefficient vector (ascending powers of x) of a normalized polynomial,
// read in the variable x = t (or x = t^-1 when flipped).
IntVector x_coefficients(const LaurentPoly& p, bool flipped) {
  const int deg = p.max_exponent();
  IntVector c(static_cast<std::size_t>(deg) + 1, 0);
  for (const auto& [e, v] : p.coeffs()) c[static_cast<std::size_t>(flipped ? deg - e : e)] = v;
  return c;
}

}  // namespace

FiniteTModule build_module(const IdealPresentation& p) {
  FiniteTModule m(p);

  BigInt a = p.modulus();
  for (const auto& f : p.polys()) a = gcd(a, abs(eval_one(f)));
  m.eval_modulus_ = to_i64(a);

  // Fold monomials c*t^k (units times c) into the modulus until stable.
  BigInt n = p.modulus();
  std::vector<LaurentPoly> polys = p.polys();
  while (true) {
    BigInt folded = n;
    std::vector<LaurentPoly> rest;
    for (const auto& f : polys) {
      if (auto c = f.as_constant()) {
        folded = gcd(folded, *c);
      } else {
        rest.push_back(f);
      }
    }
    std::vector<LaurentPoly> next;
    for (const auto& f : rest) {
      LaurentPoly q = f.reduced_mod(folded).normalized();
      if (!q.is_zero()) next.push_back(std::move(q));
    }
    const bool stable = folded == n && next.size() == polys.size();
    n = folded;
    polys = std::move(next);
    if (stable) break;
  }

  if (n == 1) {
    m.order_ = 1;
    m.print_basis_ = true;
    return m;
  }
  if (polys.empty()) {
    throw UnsupportedPresentation("Z_" + n.str() + "[t, t^-1] is infinite; add a polynomial generator");
  }

  // Pick the generator that becomes monic: lowest degree, unflipped first.
  std::size_t chosen = polys.size();
  bool flipped = false;
  for (int pass = 0; pass < 2 && chosen == polys.size(); ++pass) {
    int best_deg = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const auto& f = polys[i];
      const BigInt& lead = pass == 0 ? f.coeffs().rbegin()->second : f.coeffs().begin()->second;
      if (gcd(lead, n) == 1 && f.max_exponent() < best_deg) {
        best_deg = f.max_exponent();
        chosen = i;
        flipped = pass == 1;
      }
    }
  }
  if (chosen == polys.size()) {
    throw UnsupportedPresentation("no generator of (" + p.descriptor() +
                                  ") has a unit leading or constant coefficient mod " + n.str());
  }

  IntVector g = x_coefficients(polys[chosen], flipped);
  const std::size_t d = g.size() - 1;
  const BigInt lead_inv = mod_inverse(g.back(), n);
  for (auto& c : g) c = mod_floor(c * lead_inv, n);

  // Multiplication by x on coefficient rows: row i is x^{i+1} mod g.
  IntMatrix companion(d, IntVector(d, 0));
  for (std::size_t i = 0; i + 1 < d; ++i) companion[i][i + 1] = 1;
  for (std::size_t j = 0; j < d; ++j) companion[d - 1][j] = mod_floor(-g[j], n);

  std::vector<IntVector> x_powers{IntVector(d, 0)};
  x_powers[0][0] = 1;
  auto x_power = [&](std::size_t k) -> const IntVector& {
    while (x_powers.size() <= k) {
      x_powers.push_back(reduce_vec(row_times(x_powers.back(), companion), n));
    }
    return x_powers[k];
  };

  IntMatrix relations;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector row(d, 0);
    row[i] = n;
    relations.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i == chosen) continue;
    IntVector h = x_coefficients(polys[i], flipped);
    IntVector v(d, 0);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] == 0) continue;
      const IntVector& xp = x_power(k);
      for (std::size_t j = 0; j < d; ++j) v[j] += h[k] * xp[j];
    }
    v = reduce_vec(std::move(v), n);
    // Cayley-Hamilton: x^d v is already in the span of lower shifts.
    for (std::size_t s = 0; s < d; ++s) {
      relations.push_back(v);
      v = reduce_vec(row_times(v, companion), n);
    }
  }
  const IntMatrix relation_hnf = hermite_normal_form(relations);

  // Saturation: L_k = rowspace(x^k) + K stabilizes; quotienting by the
  // stable kernel of x^k is the same as passing to the stable image.
  IntMatrix power = identity_matrix(d);
  auto image_lattice = [&](const IntMatrix& pw) {
    IntMatrix rows = pw;
    rows.insert(rows.end(), relation_hnf.begin(), relation_hnf.end());
    return hermite_normal_form(std::move(rows));
  };
  IntMatrix lattice = image_lattice(power);
  std::size_t saturation_steps = 0;
  const std::size_t cap = d * (msb(n) + 2) + 2;
  while (true) {
    IntMatrix next_power = reduce_mat(multiply(power, companion), n);
    IntMatrix next = image_lattice(next_power);
    if (next == lattice) break;
    lattice = std::move(next);
    power = std::move(next_power);
    if (++saturation_steps > cap) throw std::logic_error("t-saturation did not stabilize");
  }

  IntMatrix n_identity(d, IntVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) n_identity[i][i] = n;
  const bool basis_changed = flipped || relation_hnf != n_identity || saturation_steps > 0;

  std::vector<IntVector> basis;  // original coordinates of the final basis
  std::function<Element(const IntVector&)> to_final;
  if (!basis_changed) {
    for (std::size_t j = 0; j < d; ++j) {
      m.factors_.push_back(to_i64(n));
      basis.push_back(identity_matrix(d)[j]);
    }
    to_final = [n](const IntVector& v) {
      Element e;
      for (const auto& x : v) e.push_back(static_cast<std::int64_t>(mod_floor(x, n)));
      return e;
    };
    m.print_basis_ = !flipped;
  } else {
    IntMatrix rel_coords;
    for (const auto& row : relation_hnf) {
      auto c = lattice_coordinates(lattice, row);
      if (!c) throw std::logic_error("relation lattice escapes the saturated image");
      rel_coords.push_back(std::move(*c));
    }
    SmithForm snf = smith_normal_form(rel_coords);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
      if (snf.diagonal[i] == 0) throw std::logic_error("relation lattice is not full rank");
      if (snf.diagonal[i] > 1) kept.push_back(i);
    }
    for (std::size_t i : kept) {
      m.factors_.push_back(to_i64(snf.diagonal[i]));
      basis.push_back(row_times(snf.right_inverse[i], lattice));
    }
    to_final = [lattice, snf, kept, n](const IntVector& v) {
      auto c = lattice_coordinates(lattice, reduce_vec(v, n));
      if (!c) throw std::logic_error("vector outside the saturated image");
      IntVector y = row_times(*c, snf.right);
      Element e;
      for (std::size_t i : kept) e.push_back(static_cast<std::int64_t>(mod_floor(y[i], snf.diagonal[i])));
      return e;
    };
    m.print_basis_ = false;
  }

  m.order_ = 1;
  for (auto f : m.factors_) {
    if (m.order_ > std::numeric_limits<std::int32_t>::max() / f) {
      throw UnsupportedPresentation("module order exceeds the enumerable range");
    }
    m.order_ *= f;
  }

  std::vector<Element> x_images;
  for (const auto& b : basis) x_images.push_back(to_final(row_times(b, companion)));
  IntVector unit = row_times(x_power(0), power);
  m.one_ = to_final(unit);
  for (const auto& b : basis) {
    BigInt s = 0;
    for (const auto& c : b) s += c;
    m.eval_weights_.push_back(static_cast<std::int64_t>(mod_floor(s, a)));
  }

  // x is a unit of the finite ring, so x^k = 1 for some k < order; x^{-1} = x^{k-1}.
  const std::size_t r = basis.size();
  std::vector<Element> identity_images;
  for (std::size_t j = 0; j < r; ++j) {
    Element e(r, 0);
    e[j] = 1;
    identity_images.push_back(std::move(e));
  }
  std::vector<Element> previous = identity_images;
  std::vector<Element> current = x_images;
  for (std::int64_t k = 1; current != identity_images; ++k) {
    if (k > m.order_) throw std::logic_error("t does not act invertibly after saturation");
    previous = current;
    for (auto& col : current) col = m.apply(x_images, col);
  }
  if (flipped) {
    m.t_images_ = previous;
    m.t_inv_images_ = x_images;
  } else {
    m.t_images_ = x_images;
    m.t_inv_images_ = previous;
  }
  return m;
}

Element FiniteTModule::apply(const std::vector<Element>& images, const Element& x) const {
  Element out(rank(), 0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = (out[i] + x[j] * images[j][i]) % factors_[i];
    }
  }
  return out;
}

Element FiniteTModule::element(std::int64_t index) const {
  Element x(rank(), 0);
  for (std::size_t i = rank(); i-- > 0;) {
    x[i] = index % factors_[i];
    index /= factors_[i];
  }
  return x;
}

std::int64_t FiniteTModule::index_of(const Element& x) const {
  std::int64_t index = 0;
  for (std::size_t i = 0; i < rank(); ++i) index = index * factors_[i] + x[i];
  return index;
}

std::vector<Element> FiniteTModule::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

Element FiniteTModule::add(const Element& x, const Element& y) const {
  Element out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = (x[i] + y[i]) % factors_[i];
  return out;
}

Element FiniteTModule::neg(const Element& x) const {
  Element out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = (factors_[i] - x[i]) % factors_[i];
  return out;
}

Element FiniteTModule::scale(const BigInt& c, const Element& x) const {
  Element out(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    auto ci = static_cast<std::int64_t>(mod_floor(c, factors_[i]));
    out[i] = (ci * x[i]) % factors_[i];
  }
  return out;
}

Element FiniteTModule::t_act(const Element& x) const { return apply(t_images_, x); }
Element FiniteTModule::t_inv_act(const Element& x) const { return apply(t_inv_images_, x); }

Element FiniteTModule::reduce(const LaurentPoly& p) const {
  Element out = zero();
  for (const auto& [e, c] : p.coeffs()) {
    Element term = one_;
    for (int k = 0; k < e; ++k) term = t_act(term);
    for (int k = 0; k > e; --k) term = t_inv_act(term);
    out = add(out, scale(c, term));
  }
  return out;
}

std::int64_t FiniteTModule::eval_one_class(const Element& x) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s = (s + x[i] * eval_weights_[i]) % eval_modulus_;
  return s;
}

std::vector<std::int64_t> FiniteTModule::one_minus_t_image() const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < order_; ++i) {
    Element y = element(i);
    out.push_back(index_of(sub(y, t_act(y))));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string FiniteTModule::label(const Element& x) const {
  std::ostringstream os;
  if (!print_basis_) {
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << ")";
    return os.str();
  }
  bool first = true;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0) {
      os << x[k];
      continue;
    }
    if (x[k] != 1) os << x[k];
    os << "t";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

bool same_ideal(const IdealPresentation& a, const IdealPresentation& b) {
  const FiniteTModule ma = build_module(a);
  const FiniteTModule mb = build_module(b);
  if (ma.order() != mb.order()) return false;
  for (const auto& g : b.generators()) {
    if (ma.reduce(g) != ma.zero()) return false;
  }
  for (const auto& g : a.generators()) {
    if (mb.reduce(g) != mb.zero()) return false;
  }
  return true;
}

}  // namespace quandlekit
