#include "lppgames/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lpp {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void bad_literal(const std::string& text) {
  throw std::invalid_argument("not a rational literal: '" + text + "'");
}

BigInt pow10(std::size_t k) {
  BigInt out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= 10;
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.erase(body.begin());
  }
  if (body.empty()) bad_literal(text);

  Rational magnitude;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    const BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    magnitude = Rational(BigInt(num)) / Rational(d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    const std::string whole = body.substr(0, dot);
    const std::string frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_literal(text);
    if (!whole.empty() && !all_digits(whole)) bad_literal(text);
    if (!frac.empty() && !all_digits(frac)) bad_literal(text);
    const BigInt scale = pow10(frac.size());
    const BigInt units = whole.empty() ? BigInt(0) : BigInt(whole);
    const BigInt sub = frac.empty() ? BigInt(0) : BigInt(frac);
    magnitude = Rational(units * scale + sub) / Rational(scale);
  } else {
    if (!all_digits(body)) bad_literal(text);
    magnitude = Rational(BigInt(body));
  }
  return negative ? -magnitude : magnitude;
}

std::string to_string(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  const bool negative = value < 0;
  const BigInt num = negative ? BigInt(-numerator(value)) : BigInt(numerator(value));
  const BigInt den = denominator(value);
  const BigInt scale = pow10(static_cast<std::size_t>(digits));
  // round half away from zero
  const BigInt scaled = (2 * num * scale + den) / (2 * den);
  std::string body = scaled.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) body.insert(0, "-");
  return body;
}

}  // namespace lpp
