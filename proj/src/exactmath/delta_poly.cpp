#include "brauerlie/exactmath/delta_poly.hpp"

#include <cctype>

#include "brauerlie/errors.hpp"

namespace brauerlie {

DeltaPoly::DeltaPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

DeltaPoly DeltaPoly::delta_power(unsigned k, const Rational& c) {
  DeltaPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(k + 1, Rational(0));
  p.c_[k] = c;
  return p;
}

void DeltaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational DeltaPoly::evaluate(const Rational& delta) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * delta + *it;
  return r;
}

std::string DeltaPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[k].str();
    if (k == 1) out += "*delta";
    if (k > 1) out += "*delta^" + std::to_string(k);
  }
  return out;
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

DeltaPoly& DeltaPoly::operator-=(const DeltaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

DeltaPoly& DeltaPoly::operator*=(const DeltaPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

DeltaPoly DeltaPoly::operator-() const {
  DeltaPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

// Accepts sums like "1 + -2*delta + 1/2*delta^2", also "delta", "3 delta^2 - 1".
DeltaPoly DeltaPoly::parse(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> std::string {
    std::size_t s = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    return std::string(text.substr(s, i - s));
  };
  DeltaPoly out;
  bool first = true;
  skip();
  if (i == text.size()) throw ParseError(0, "empty polynomial");
  while (i < text.size()) {
    bool neg = false;
    if (!first) {
      if (text[i] != '+' && text[i] != '-') throw ParseError(i, "expected '+' or '-'");
      neg = text[i] == '-';
      ++i;
      skip();
    }
    while (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      if (text[i] == '-') neg = !neg;
      ++i;
      skip();
    }
    Rational c(1);
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t at = i;
      std::string num = number();
      try {
        c = Rational::parse(num);
      } catch (const ParseError&) {
        throw ParseError(at, "malformed coefficient '" + num + "'");
      }
      have_coeff = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    unsigned power = 0;
    if (text.substr(i, 5) == "delta") {
      i += 5;
      power = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        std::size_t at = i;
        std::string e = number();
        if (e.empty() || e.find('/') != std::string::npos) throw ParseError(at, "expected exponent");
        power = static_cast<unsigned>(std::stoul(e));
      }
    } else if (!have_coeff) {
      throw ParseError(i, "expected coefficient or 'delta'");
    }
    if (neg) c = -c;
    out += delta_power(power, c);
    first = false;
    skip();
  }
  return out;
}

}  // namespace brauerlie
