#include "tg/rational.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "tg/error.hpp"

namespace tg {

Rational fraction(long num, long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw InvalidInput("malformed rational '" + std::string(text) +
                       "' (expected num/den)");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) {
    throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

std::string to_decimal(const Rational& q) {
  std::ostringstream out;
  out << std::setprecision(12) << q.get_d();
  std::string s = out.str();
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace tg
