#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "brauerlie/exactmath/rational.hpp"

namespace brauerlie {

// Polynomial in the loop parameter delta with rational coefficients.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  DeltaPoly(long c) : DeltaPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static DeltaPoly delta_power(unsigned k, const Rational& c = Rational(1));
  static DeltaPoly parse(std::string_view text);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational constant() const { return coeff(0); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational evaluate(const Rational& delta) const;
  std::string str() const;

  DeltaPoly& operator+=(const DeltaPoly& o);
  DeltaPoly& operator-=(const DeltaPoly& o);
  DeltaPoly& operator*=(const DeltaPoly& o);
  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) { DeltaPoly r = a; return r *= b; }
  DeltaPoly operator-() const;

  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) { return a.c_ == b.c_; }
  friend std::ostream& operator<<(std::ostream& os, const DeltaPoly& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<Rational> c_;  // c_[k] is the coefficient of delta^k; no trailing zeros
};

inline Rational specialize_delta(const DeltaPoly& p, const Rational& value) { return p.evaluate(value); }

}  // namespace brauerlie
