#include "brauerlie/exactmath/cyclo.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "brauerlie/errors.hpp"
#include "brauerlie/exactmath/delta_poly.hpp"

namespace brauerlie {
namespace {

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.clear();
  if (b.empty()) throw Error(Errc::invalid_argument, "polynomial division by zero");
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, Rational(0));
  Rational lead = b.back().inverse();
  while (r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() * lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
}

}  // namespace

unsigned euler_phi(unsigned m) {
  unsigned r = m, n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

const QPoly& cyclotomic_polynomial(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, QPoly> cache;
  if (m == 0) throw Error(Errc::invalid_argument, "conductor must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Phi_m = (z^m - 1) / prod_{d | m, d < m} Phi_d, computed without recursion into the lock.
  std::map<unsigned, QPoly> local;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d) continue;
    auto c = cache.find(d);
    if (c != cache.end()) {
      local[d] = c->second;
      continue;
    }
    QPoly p(d + 1, Rational(0));
    p[0] = Rational(-1);
    p[d] = Rational(1);
    for (auto& [e, phi] : local) {
      if (d % e || e == d) continue;
      QPoly q, r;
      divmod(p, phi, q, r);
      p = q;
    }
    local[d] = p;
    cache[d] = p;
  }
  return cache.at(m);
}

CycloNumber::CycloNumber(const Rational& r) {
  if (!r.is_zero()) r_.push_back(r);
}

CycloNumber::CycloNumber(unsigned conductor, QPoly residue) : m_(conductor), r_(std::move(residue)) {
  if (m_ == 0) throw Error(Errc::invalid_argument, "conductor must be positive");
  reduce();
}

void CycloNumber::reduce() {
  trim(r_);
  const QPoly& phi = cyclotomic_polynomial(m_);
  if (r_.size() >= phi.size()) {
    QPoly q, r;
    divmod(r_, phi, q, r);
    r_ = std::move(r);
  }
}

CycloNumber CycloNumber::root_of_unity(unsigned m, long k) {
  if (m == 0) throw Error(Errc::invalid_argument, "conductor must be positive");
  long e = ((k % static_cast<long>(m)) + m) % m;
  QPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
  p[e] = Rational(1);
  return CycloNumber(m, std::move(p));
}

Rational CycloNumber::to_rational() const {
  if (!is_rational()) throw Error(Errc::invalid_argument, "cyclotomic number " + str() + " is not rational");
  return r_.empty() ? Rational(0) : r_[0];
}

CycloNumber CycloNumber::lift_or_keep(unsigned m) const {
  if (is_rational()) {
    CycloNumber r = *this;
    r.m_ = m;
    return r;
  }
  return lift(m);
}

CycloNumber CycloNumber::lift(unsigned m) const {
  if (m == m_) return *this;
  if (m % m_) throw Error(Errc::invalid_argument, "conductor " + std::to_string(m) + " is not a multiple of " + std::to_string(m_));
  // zeta_{m_} = zeta_m^{m/m_}
  unsigned s = m / m_;
  QPoly p;
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (r_[i].is_zero()) continue;
    if (p.size() < i * s + 1) p.resize(i * s + 1, Rational(0));
    p[i * s] = r_[i];
  }
  return CycloNumber(m, std::move(p));
}

unsigned CycloNumber::common(const CycloNumber& a, const CycloNumber& b) {
  if (a.m_ == b.m_) return a.m_;
  if (a.is_rational() && b.is_rational()) return std::max(a.m_, b.m_);
  return std::lcm(a.m_, b.m_);
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  unsigned m = common(*this, o);
  CycloNumber b = o.lift_or_keep(m);
  *this = lift_or_keep(m);
  if (b.r_.size() > r_.size()) r_.resize(b.r_.size(), Rational(0));
  for (std::size_t i = 0; i < b.r_.size(); ++i) r_[i] += b.r_[i];
  trim(r_);
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  unsigned m = common(*this, o);
  CycloNumber b = o.lift_or_keep(m);
  *this = lift_or_keep(m);
  r_ = mul(r_, b.r_);
  reduce();
  return *this;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.r_) c = -c;
  return r;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.m_ == b.m_) return a.r_ == b.r_;
  unsigned m = CycloNumber::common(a, b);
  return a.lift_or_keep(m).r_ == b.lift_or_keep(m).r_;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  if (is_rational()) {
    CycloNumber r(r_[0].inverse());
    r.m_ = m_;
    return r;
  }
  // extended Euclid: s*r + t*phi = g, g a nonzero constant since phi is irreducible
  QPoly a = cyclotomic_polynomial(m_), b = r_;
  QPoly s0, s1{Rational(1)};  // coefficients of r_
  while (!b.empty()) {
    QPoly q, rem;
    divmod(a, b, q, rem);
    QPoly s2 = sub(s0, mul(q, s1));
    a = std::move(b);
    b = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // a = gcd (constant), s0 * r_ == a mod phi
  Rational inv = a[0].inverse();
  for (auto& c : s0) c *= inv;
  return CycloNumber(m_, std::move(s0));
}

CycloNumber CycloNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNumber r(Rational(1)), b = *this;
  r.m_ = m_;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string CycloNumber::str() const {
  if (r_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < r_.size(); ++k) {
    if (r_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += r_[k].str();
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out;
}

CycloNumber CycloNumber::parse(std::string_view text, unsigned conductor) {
  // Reuse the delta-polynomial grammar with 'z' in place of 'delta'.
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'z') s += "delta";
    else if (text[i] == 'd') throw ParseError(i, "unexpected 'd' in cyclotomic number");
    else s += text[i];
  }
  return CycloNumber(conductor, DeltaPoly::parse(s).coefficients());
}

}  // namespace brauerlie
