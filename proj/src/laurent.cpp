#include "quandlekit/laurent.hpp"

#include <sstream>

namespace quandlekit {

LaurentPoly::LaurentPoly(Coeffs coeffs) {
  for (auto& [e, c] : coeffs) {
    if (c != 0) coeffs_.emplace(e, std::move(c));
  }
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly p;
  p.insert(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::one_minus_t() { return LaurentPoly({{0, 1}, {1, -1}}); }

std::optional<BigInt> LaurentPoly::as_constant() const {
  if (coeffs_.empty()) return BigInt(0);
  if (coeffs_.size() == 1 && coeffs_.begin()->first == 0) return coeffs_.begin()->second;
  return std::nullopt;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::insert(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = coeffs_.try_emplace(exponent, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  return shifted(-min_exponent());
}

LaurentPoly LaurentPoly::reduced_mod(const BigInt& n) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.insert(e, mod_floor(c, n));
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) insert(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) insert(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) out.insert(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly operator*(const BigInt& c, const LaurentPoly& p) {
  return LaurentPoly::constant(c) * p;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

BigInt eval_one(const LaurentPoly& f) {
  BigInt s = 0;
  for (const auto& [e, c] : f.coeffs()) s += c;
  return s;
}

OneMinusTSplit split_one_minus_t(const LaurentPoly& f) {
  // t^k - 1 = (1 - t) * q_k with q_k = -(1 + ... + t^{k-1}) for k > 0 and
  // q_k = t^k + ... + t^{-1} for k < 0.
  LaurentPoly::Coeffs acc;
  for (const auto& [e, c] : f.coeffs()) {
    if (e > 0) {
      for (int j = 0; j < e; ++j) acc[j] -= c;
    } else if (e < 0) {
      for (int j = e; j < 0; ++j) acc[j] += c;
    }
  }
  return {LaurentPoly(std::move(acc)), eval_one(f)};
}

BigInt gcd_vec(std::span<const BigInt> c) {
  BigInt g = 0;
  for (const auto& x : c) g = gcd(g, abs(x));
  return g;
}

SyzygyBasis syzygy_basis(std::span<const BigInt> c) {
  const std::size_t k = c.size();
  IntMatrix augmented(k, IntVector(k + 1, 0));
  for (std::size_t i = 0; i < k; ++i) {
    augmented[i][0] = c[i];
    augmented[i][i + 1] = 1;
  }
  IntMatrix hnf = hermite_normal_form(std::move(augmented));
  IntMatrix kernel;
  for (const auto& row : hnf) {
    if (row[0] != 0) continue;
    kernel.emplace_back(row.begin() + 1, row.end());
  }
  return {hermite_normal_form(std::move(kernel))};
}

}  // namespace quandlekit
