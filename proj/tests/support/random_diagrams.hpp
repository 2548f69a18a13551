#pragma once

#include <random>

#include "brauerlie/diagram/morphism.hpp"

namespace brauerlie::testing {

inline Word random_word(std::mt19937& rng, std::size_t max_len, bool oriented = true) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> l(len(rng));
  for (auto& x : l) x = oriented ? (coin(rng) ? Letter::up : Letter::down) : Letter::strand;
  return Word(l);
}

// Random combination of up to three valid matchings with small coefficients;
// zero when the hom space is empty.
inline DiagMorphism random_morphism(std::mt19937& rng, const Word& dom, const Word& cod) {
  auto basis = enumerate_matchings(dom, cod);
  DiagMorphism f(dom, cod);
  if (basis.empty()) return f;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3), terms(1, 3), dpow(0, 1);
  for (long t = terms(rng); t > 0; --t) {
    DeltaPoly c = DeltaPoly::delta_power(static_cast<unsigned>(dpow(rng)), Rational(num(rng), den(rng)));
    f.accumulate(basis[pick(rng)], c);
  }
  return f;
}

// A word with a nonempty hom space from dom: same balance of up/down.
inline Word random_codomain(std::mt19937& rng, const Word& dom, std::size_t extra_max, bool oriented = true) {
  long balance = 0;
  for (Letter l : dom.letters()) balance += l == Letter::up ? 1 : l == Letter::down ? -1 : 0;
  if (dom.flavor()) oriented = *dom.flavor() == Flavor::oriented;
  std::uniform_int_distribution<std::size_t> extra(0, extra_max);
  std::vector<Letter> l;
  if (!oriented) {
    std::size_t n = dom.size() % 2 + 2 * extra(rng);
    return Word::repeat(Letter::strand, n);
  }
  for (long i = 0; i < std::abs(balance); ++i) l.push_back(balance > 0 ? Letter::up : Letter::down);
  for (std::size_t p = extra(rng); p > 0; --p) {
    l.push_back(Letter::up);
    l.push_back(Letter::down);
  }
  std::shuffle(l.begin(), l.end(), rng);
  return Word(l);
}

}  // namespace brauerlie::testing
