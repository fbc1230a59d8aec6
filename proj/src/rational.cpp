#include "rational.hpp"

#include <cctype>

namespace midr {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!all_digits(num)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  if (slash == std::string_view::npos) return Rational(n);
  std::string_view den = text.substr(slash + 1);
  if (!all_digits(den)) return std::nullopt;
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  return make_rational(n, d);
}

std::string rational_text(const Rational& q) {
  return q.get_str();
}

}  // namespace midr
