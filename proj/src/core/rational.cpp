#include "core/rational.hpp"

#include <cctype>

#include "core/errors.hpp"

namespace ssmthom {

Rational rational(long num, long den) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_integer(const Integer& num) { return Rational(num); }

namespace {
bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}
}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_plain_integer(text))
      fail(ErrorKind::Schema, "malformed rational '" + text + "'");
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_plain_integer(num) || !is_plain_integer(den) || den[0] == '-')
    fail(ErrorKind::Schema, "malformed rational '" + text + "'");
  Integer d(den);
  if (d == 0) fail(ErrorKind::Schema, "malformed rational '" + text + "': zero denominator");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

std::string integer_str(const Integer& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer numerator(const Rational& value) { return value.get_num(); }
Integer denominator(const Rational& value) { return value.get_den(); }

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace ssmthom
