#include "brauerlie/exactmath/rational.hpp"

#include <cctype>
#include <climits>

#include "brauerlie/errors.hpp"

namespace brauerlie {

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(Errc::invalid_argument, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError(0, "empty rational");
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  bool digits = false, slash = false, den_digits = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? den_digits : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      throw ParseError(i, "invalid character '" + std::string(1, c) + "' in rational");
    }
  }
  if (!digits || (slash && !den_digits)) throw ParseError(s.size(), "malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ParseError(0, "malformed rational '" + s + "'");
  if (sgn(v.get_den()) == 0) throw Error(Errc::invalid_argument, "zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) throw Error(Errc::invalid_argument, "rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rational r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(r));
}

}  // namespace brauerlie
