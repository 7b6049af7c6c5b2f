#include "torusrep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace torusrep {

Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  };
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) bad();
  Integer num(text.substr(0, pos));
  Integer den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') bad();
    ++pos;
    std::size_t den_digits = 0;
    std::size_t den_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++den_digits;
    }
    if (den_digits == 0 || pos != text.size()) bad();
    den = Integer(text.substr(den_start));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/";
    out += denominator(value).str();
  }
  return out;
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Rational mod_one(const Rational& value) {
  Integer num = numerator(value);
  Integer den = denominator(value);
  Integer q = num / den;
  if (num < 0 && q * den != num) --q;  // floor division
  Rational out = value - Rational(q);
  return out;
}

Rational dyadic_power(unsigned exponent) {
  Integer den = Integer(1) << exponent;
  return Rational(1, den);
}

}  // namespace torusrep
