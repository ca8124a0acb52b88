#include "liemult/rational.hpp"

#include <cctype>
#include <ostream>

namespace liemult {

Rational Rational::parse(const std::string& text) {
  // Strict "p" or "p/q", base 10, optional leading '-' on either part.
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw InvalidArgument("malformed rational '" + text + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InvalidArgument("rational with zero denominator: '" + text + "'");
  mpq_class q(n);
  q /= mpq_class(d);
  return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_.get_str();
}

}  // namespace liemult
