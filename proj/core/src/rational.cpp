#include "scforge/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace scforge {

namespace {

std::int64_t parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t pos = 0;
  std::int64_t value = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size()) throw std::invalid_argument("sign without digits");
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("bad digit in integer literal");
    value = value * 10 + (s[pos] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return {num, den};
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return {parse_int(text), 1};

  // Decimal: scale the fractional digits exactly.
  std::string_view head = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (frac.size() > 18) throw std::invalid_argument("decimal literal too long");
  bool negative = !head.empty() && head[0] == '-';
  if (!head.empty() && (head[0] == '+' || head[0] == '-')) head.remove_prefix(1);
  std::int64_t ipart = head.empty() ? 0 : parse_int(head);
  std::int64_t scale = 1;
  std::int64_t fpart = 0;
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad digit in decimal literal");
    fpart = fpart * 10 + (c - '0');
    scale *= 10;
  }
  Rational r = Rational(ipart, 1) + Rational(fpart, scale);
  return negative ? -r : r;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

bool is_integer(const Rational& r) { return r.denominator() == 1; }

std::int64_t round_half_away(const Rational& r) {
  const std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();  // boost keeps d > 0
  if (n >= 0) return (2 * n + d) / (2 * d);
  return -((-2 * n + d) / (2 * d));
}

std::int64_t floor_to_int(const Rational& r) {
  const std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

}  // namespace scforge
