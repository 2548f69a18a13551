#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "brauerlie/exactmath/rational.hpp"

namespace brauerlie {

// Dense rational polynomials, index = degree, no trailing zeros.
using QPoly = std::vector<Rational>;

// m-th cyclotomic polynomial (monic, integer coefficients).
const QPoly& cyclotomic_polynomial(unsigned m);
unsigned euler_phi(unsigned m);

// Element of Q(zeta_m) = Q[z]/(Phi_m(z)).  Elements of conductor 1 are
// plain rationals and promote to any other conductor on mixed arithmetic.
class CycloNumber {
 public:
  CycloNumber() = default;
  CycloNumber(const Rational& r);  // NOLINT(google-explicit-constructor)
  CycloNumber(long r) : CycloNumber(Rational(r)) {}  // NOLINT(google-explicit-constructor)
  CycloNumber(unsigned conductor, QPoly residue);

  // zeta_m^k.
  static CycloNumber root_of_unity(unsigned m, long k);
  // Parses a rational or a polynomial in z, e.g. "1/2 + 3*z^2", in conductor m.
  static CycloNumber parse(std::string_view text, unsigned conductor);

  unsigned conductor() const { return m_; }
  const QPoly& residue() const { return r_; }
  bool is_zero() const { return r_.empty(); }
  bool is_rational() const { return r_.size() <= 1; }
  Rational to_rational() const;
  // Same element viewed with a larger conductor (multiple of the current one).
  CycloNumber lift(unsigned m) const;

  CycloNumber inverse() const;
  CycloNumber pow(long e) const;
  std::string str() const;

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o) { return *this *= o.inverse(); }
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  CycloNumber operator-() const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend std::ostream& operator<<(std::ostream& os, const CycloNumber& c) { return os << c.str(); }

 private:
  void reduce();
  CycloNumber lift_or_keep(unsigned m) const;
  static unsigned common(const CycloNumber& a, const CycloNumber& b);
  unsigned m_ = 1;
  QPoly r_;
};

}  // namespace brauerlie
