#include "brauerlie/diagram/morphism.hpp"

#include <algorithm>
#include <numeric>

#include "brauerlie/errors.hpp"

namespace brauerlie {
namespace {

constexpr std::size_t kMaxPoints = 250;

bool pair_allowed(Letter lp, bool p_top, Letter lq, bool q_top) {
  if (lp == Letter::strand || lq == Letter::strand) return lp == lq;
  // through strands keep the letter; caps and cups join opposite letters
  return p_top == q_top ? lp != lq : lp == lq;
}

std::string boundary_str(const Word& d, const Word& c) { return "\"" + d.str() + "\" -> \"" + c.str() + "\""; }

}  // namespace

std::vector<std::pair<int, int>> matching_pairs(const Matching& m) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t p = 0; p < m.partner.size(); ++p)
    if (static_cast<int>(p) < m.partner[p]) out.emplace_back(static_cast<int>(p), m.partner[p]);
  return out;
}

Matching matching_from_pairs(std::size_t points, const std::vector<std::pair<int, int>>& pairs) {
  Matching m;
  m.partner.assign(points, 0xff);
  for (auto [p, q] : pairs) {
    if (p < 0 || q < 0 || static_cast<std::size_t>(p) >= points || static_cast<std::size_t>(q) >= points || p == q)
      throw Error(Errc::validation, "pair (" + std::to_string(p) + "," + std::to_string(q) + ") out of range");
    if (m.partner[p] != 0xff || m.partner[q] != 0xff)
      throw Error(Errc::validation, "boundary point used twice in matching");
    m.partner[p] = static_cast<std::uint8_t>(q);
    m.partner[q] = static_cast<std::uint8_t>(p);
  }
  for (auto x : m.partner)
    if (x == 0xff) throw Error(Errc::validation, "matching leaves a boundary point unpaired");
  return m;
}

bool is_valid_matching(const Matching& m, const Word& domain, const Word& codomain) {
  std::size_t k = domain.size(), n = k + codomain.size();
  if (m.partner.size() != n) return false;
  auto letter = [&](std::size_t p) { return p < k ? domain[p] : codomain[p - k]; };
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t q = m.partner[p];
    if (q >= n || q == p || m.partner[q] != p) return false;
    if (!pair_allowed(letter(p), p >= k, letter(q), q >= k)) return false;
  }
  return true;
}

void validate_matching(const Matching& m, const Word& domain, const Word& codomain) {
  require_same_flavor(domain, codomain);
  if (!is_valid_matching(m, domain, codomain))
    throw Error(Errc::orientation, "invalid matching for boundary " + boundary_str(domain, codomain));
}

std::vector<Matching> enumerate_matchings(const Word& domain, const Word& codomain) {
  require_same_flavor(domain, codomain);
  std::size_t k = domain.size(), n = k + codomain.size();
  std::vector<Matching> out;
  if (n % 2) return out;
  if (n > kMaxPoints) throw Error(Errc::invalid_argument, "boundary too large");
  auto letter = [&](std::size_t p) { return p < k ? domain[p] : codomain[p - k]; };
  std::vector<int> partner(n, -1);
  auto rec = [&](auto&& self) -> void {
    std::size_t p = 0;
    while (p < n && partner[p] >= 0) ++p;
    if (p == n) {
      Matching m;
      m.partner.assign(partner.begin(), partner.end());
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t q = p + 1; q < n; ++q) {
      if (partner[q] >= 0 || !pair_allowed(letter(p), p >= k, letter(q), q >= k)) continue;
      partner[p] = static_cast<int>(q);
      partner[q] = static_cast<int>(p);
      self(self);
      partner[p] = partner[q] = -1;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

DiagMorphism::DiagMorphism(Word domain, Word codomain) : dom_(std::move(domain)), cod_(std::move(codomain)) {
  require_same_flavor(dom_, cod_);
  if (dom_.size() + cod_.size() > kMaxPoints) throw Error(Errc::invalid_argument, "boundary too large");
}

DiagMorphism DiagMorphism::single(Word domain, Word codomain, Matching m, DeltaPoly coeff) {
  validate_matching(m, domain, codomain);
  DiagMorphism f(std::move(domain), std::move(codomain));
  f.accumulate(m, coeff);
  return f;
}

std::optional<Flavor> DiagMorphism::flavor() const {
  auto f = dom_.flavor();
  return f ? f : cod_.flavor();
}

DeltaPoly DiagMorphism::coeff(const Matching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? DeltaPoly() : it->second;
}

void DiagMorphism::accumulate(const Matching& m, const DeltaPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiagMorphism::same_boundary(const DiagMorphism& o) const {
  if (dom_ != o.dom_ || cod_ != o.cod_)
    throw Error(Errc::boundary, "cannot add morphisms " + boundary_str(dom_, cod_) + " and " + boundary_str(o.dom_, o.cod_));
}

DiagMorphism& DiagMorphism::operator+=(const DiagMorphism& o) {
  same_boundary(o);
  for (const auto& [m, c] : o.terms_) accumulate(m, c);
  return *this;
}

DiagMorphism& DiagMorphism::operator-=(const DiagMorphism& o) {
  same_boundary(o);
  for (const auto& [m, c] : o.terms_) accumulate(m, -c);
  return *this;
}

DiagMorphism DiagMorphism::operator-() const {
  DiagMorphism r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

DiagMorphism operator*(const DeltaPoly& c, const DiagMorphism& f) {
  DiagMorphism r(f.dom_, f.cod_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : f.terms_) r.terms_.emplace(m, c * x);
  return r;
}

DiagMorphism compose(const DiagMorphism& f, const DiagMorphism& g) {
  if (g.codomain() != f.domain())
    throw Error(Errc::boundary, "cannot compose: codomain \"" + g.codomain().str() + "\" does not match domain \"" + f.domain().str() + "\"");
  const int a = static_cast<int>(g.domain().size()), b = static_cast<int>(g.codomain().size()),
            c = static_cast<int>(f.codomain().size());
  DiagMorphism out(g.domain(), f.codomain());
  std::vector<char> seen(b);
  std::vector<std::uint8_t> res(a + c);
  for (const auto& [mf, cf] : f.terms()) {
    const auto& fp = mf.partner;
    for (const auto& [mg, cg] : g.terms()) {
      const auto& gp = mg.partner;
      std::fill(seen.begin(), seen.end(), 0);
      auto walk = [&](bool in_f, int p) {
        for (;;) {
          if (!in_f) {
            int q = gp[p];
            if (q < a) return q;
            seen[q - a] = 1;
            in_f = true;
            p = q - a;
          } else {
            int q = fp[p];
            if (q >= b) return a + (q - b);
            seen[q] = 1;
            in_f = false;
            p = a + q;
          }
        }
      };
      for (int r = 0; r < a + c; ++r) {
        int e = r < a ? walk(false, r) : walk(true, b + (r - a));
        res[r] = static_cast<std::uint8_t>(e);
      }
      unsigned loops = 0;
      for (int j = 0; j < b; ++j) {
        if (seen[j]) continue;
        ++loops;
        int cur = j;
        while (!seen[cur]) {
          seen[cur] = 1;
          int up = gp[a + cur] - a;  // through g to another middle point
          seen[up] = 1;
          cur = fp[up];  // through f back down
        }
      }
      DeltaPoly coeff = cf * cg;
      if (loops) coeff *= DeltaPoly::delta_power(loops);
      out.accumulate(Matching{res}, coeff);
    }
  }
  return out;
}

DiagMorphism tensor(const DiagMorphism& f, const DiagMorphism& g) {
  Word dom = f.domain() + g.domain(), cod = f.codomain() + g.codomain();
  const int a = static_cast<int>(f.domain().size()), b = static_cast<int>(f.codomain().size()),
            c = static_cast<int>(g.domain().size());
  const int bottom = a + c;
  auto map_f = [&](int p) { return p < a ? p : bottom + (p - a); };
  auto map_g = [&](int p) { return p < c ? a + p : bottom + b + (p - c); };
  DiagMorphism out(dom, cod);
  std::vector<std::uint8_t> res(dom.size() + cod.size());
  for (const auto& [mf, cf] : f.terms()) {
    for (std::size_t p = 0; p < mf.partner.size(); ++p) res[map_f(static_cast<int>(p))] = static_cast<std::uint8_t>(map_f(mf.partner[p]));
    for (const auto& [mg, cg] : g.terms()) {
      for (std::size_t p = 0; p < mg.partner.size(); ++p) res[map_g(static_cast<int>(p))] = static_cast<std::uint8_t>(map_g(mg.partner[p]));
      out.accumulate(Matching{res}, cf * cg);
    }
  }
  return out;
}

DiagMorphism specialize(const DiagMorphism& f, const Rational& value) {
  DiagMorphism out(f.domain(), f.codomain());
  for (const auto& [m, c] : f.terms()) out.accumulate(m, DeltaPoly(c.evaluate(value)));
  return out;
}

DiagMorphism identity(const Word& w) {
  std::size_t k = w.size();
  Matching m;
  m.partner.resize(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    m.partner[i] = static_cast<std::uint8_t>(k + i);
    m.partner[k + i] = static_cast<std::uint8_t>(i);
  }
  DiagMorphism f(w, w);
  f.accumulate(m, DeltaPoly(1));
  return f;
}

DiagMorphism braiding(const Word& v, const Word& w) {
  std::size_t p = v.size(), q = w.size(), n = p + q;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < p; ++i) pairs.emplace_back(i, n + q + i);
  for (std::size_t j = 0; j < q; ++j) pairs.emplace_back(p + j, n + j);
  return DiagMorphism::single(v + w, w + v, matching_from_pairs(2 * n, pairs));
}

DiagMorphism crossing(Letter x, Letter y) { return braiding(Word({x}), Word({y})); }

DiagMorphism cap(const Word& two) {
  if (two.size() != 2) throw Error(Errc::orientation, "cap needs a two-letter word, got \"" + two.str() + "\"");
  Matching m{{1, 0}};
  if (!is_valid_matching(m, two, Word())) throw Error(Errc::orientation, "no cap on \"" + two.str() + "\"");
  return DiagMorphism::single(two, Word(), m);
}

DiagMorphism cup(const Word& two) {
  if (two.size() != 2) throw Error(Errc::orientation, "cup needs a two-letter word, got \"" + two.str() + "\"");
  Matching m{{1, 0}};
  if (!is_valid_matching(m, Word(), two)) throw Error(Errc::orientation, "no cup on \"" + two.str() + "\"");
  return DiagMorphism::single(Word(), two, m);
}

DiagMorphism coevaluation(const Word& w) {
  std::size_t k = w.size();
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(i, 2 * k - 1 - i);
  return DiagMorphism::single(Word(), w + w.dual(), matching_from_pairs(2 * k, pairs));
}

DiagMorphism evaluation(const Word& w) {
  std::size_t k = w.size();
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(i, 2 * k - 1 - i);
  return DiagMorphism::single(w.dual() + w, Word(), matching_from_pairs(2 * k, pairs));
}

DiagMorphism permutation_diagram(const std::vector<int>& sigma, const Word& word) {
  std::size_t k = sigma.size();
  if (word.size() != k) throw Error(Errc::invalid_argument, "permutation size does not match word length");
  if (!word.uniform()) throw Error(Errc::orientation, "permutation diagram needs identically oriented letters, got \"" + word.str() + "\"");
  std::vector<char> hit(k, 0);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    if (sigma[i] < 0 || static_cast<std::size_t>(sigma[i]) >= k || hit[sigma[i]])
      throw Error(Errc::invalid_argument, "not a permutation");
    hit[sigma[i]] = 1;
    pairs.emplace_back(i, k + sigma[i]);
  }
  return DiagMorphism::single(word, word, matching_from_pairs(2 * k, pairs));
}

DiagMorphism antisymmetrizer(int k, Letter letter) {
  if (k < 1) throw Error(Errc::invalid_argument, "antisymmetrizer needs k >= 1");
  Word w = Word::repeat(letter, k);
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  Rational fact(1);
  for (int i = 2; i <= k; ++i) fact *= Rational(i);
  DiagMorphism out(w, w);
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) inversions += sigma[i] > sigma[j];
    Rational c = fact.inverse();
    if (inversions % 2) c = -c;
    out += DeltaPoly(c) * permutation_diagram(sigma, w);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

DiagMorphism circle() { return DiagMorphism::scalar(DeltaPoly::delta_power(1)); }

DiagMorphism dual_morphism(const DiagMorphism& f) {
  const Word& v = f.domain();
  const Word& w = f.codomain();
  DiagMorphism step = tensor(identity(w.dual()), coevaluation(v));
  step = compose(tensor(tensor(identity(w.dual()), f), identity(v.dual())), step);
  return compose(tensor(evaluation(w), identity(v.dual())), step);
}

DiagMorphism power(const DiagMorphism& f, int n) {
  if (f.domain() != f.codomain()) throw Error(Errc::boundary, "power of a non-endomorphism");
  if (n < 0) throw Error(Errc::invalid_argument, "negative power");
  DiagMorphism r = identity(f.domain());
  for (int i = 0; i < n; ++i) r = compose(f, r);
  return r;
}

}  // namespace brauerlie
