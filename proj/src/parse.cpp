#include "quandlekit/parse.hpp"

#include <cctype>

#include "quandlekit/errors.hpp"

namespace quandlekit {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_ws();
    if (at_end()) fail("term", "empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("'+' or '-'", "unexpected character");
      }
      result += parse_term(sign);
      first = false;
      skip_ws();
    }
    return result;
  }

 private:
  LaurentPoly parse_term(int sign) {
    BigInt coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 't') fail("'t'", "dangling '*'");
      }
    }
    int exponent = 0;
    if (!at_end() && peek() == 't') {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        int esign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          esign = peek() == '-' ? -1 : 1;
          ++pos_;
          skip_ws();
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("exponent", "missing exponent");
        }
        BigInt e = parse_integer();
        if (e > 1000000) fail("exponent below 10^6", "exponent too large");
        exponent = esign * static_cast<int>(e);
      }
    } else if (!have_coeff) {
      fail("integer or 't'", "missing term");
    }
    return LaurentPoly::monomial(sign * coeff, exponent);
  }

  BigInt parse_integer() {
    BigInt v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& expected, const std::string& what) const {
    throw ParseError(offset_ + pos_, expected, what);
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_polynomial(std::string_view text) { return PolyParser(text, 0).parse(); }

IdealPresentation parse_ideal(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      fields.emplace_back(text.substr(start, i - start), start);
      start = i + 1;
    }
  }
  // A trailing ';' is tolerated.
  if (fields.size() > 1) {
    auto last = fields.back().first;
    bool blank = true;
    for (char ch : last) blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (blank) fields.pop_back();
  }
  LaurentPoly modulus_poly = PolyParser(fields[0].first, fields[0].second).parse();
  auto modulus = modulus_poly.as_constant();
  if (!modulus || *modulus <= 0) {
    throw ParseError(fields[0].second, "positive integer modulus", "invalid modulus");
  }
  std::vector<LaurentPoly> polys;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    polys.push_back(PolyParser(fields[i].first, fields[i].second).parse());
  }
  return IdealPresentation(*modulus, std::move(polys));
}

}  // namespace quandlekit
