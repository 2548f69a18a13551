#include "brauerlie/diagram/word.hpp"

#include "brauerlie/errors.hpp"

namespace brauerlie {

char letter_char(Letter l) {
  switch (l) {
    case Letter::up: return 'u';
    case Letter::down: return 'd';
    case Letter::strand: return 's';
  }
  return '?';
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'u': return Letter::up;
    case 'd': return Letter::down;
    case 's': return Letter::strand;
    default: throw Error(Errc::invalid_argument, std::string("unknown letter '") + c + "'");
  }
}

Letter dual_letter(Letter l) {
  if (l == Letter::up) return Letter::down;
  if (l == Letter::down) return Letter::up;
  return l;
}

std::string flavor_name(Flavor f) { return f == Flavor::oriented ? "oriented" : "unoriented"; }

Flavor flavor_from_name(std::string_view s) {
  if (s == "oriented") return Flavor::oriented;
  if (s == "unoriented") return Flavor::unoriented;
  throw Error(Errc::invalid_argument, "unknown flavor '" + std::string(s) + "'");
}

Word::Word(std::vector<Letter> letters) : l_(std::move(letters)) {
  bool s = false, o = false;
  for (Letter x : l_) (x == Letter::strand ? s : o) = true;
  if (s && o) throw Error(Errc::flavor, "word mixes oriented and unoriented letters");
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> l;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != 'u' && c != 'd' && c != 's') throw ParseError(i, std::string("invalid letter '") + c + "' in word");
    l.push_back(letter_from_char(c));
  }
  return Word(std::move(l));
}

std::optional<Flavor> Word::flavor() const {
  if (l_.empty()) return std::nullopt;
  return l_[0] == Letter::strand ? Flavor::unoriented : Flavor::oriented;
}

bool Word::uniform() const {
  for (Letter x : l_)
    if (x != l_[0]) return false;
  return true;
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(l_.begin() + pos, l_.begin() + pos + len));
}

Word Word::dual() const {
  std::vector<Letter> d(l_.rbegin(), l_.rend());
  for (auto& x : d) x = dual_letter(x);
  return Word(std::move(d));
}

std::string Word::str() const {
  std::string s;
  for (Letter x : l_) s.push_back(letter_char(x));
  return s;
}

Word operator+(const Word& a, const Word& b) {
  require_same_flavor(a, b);
  std::vector<Letter> l = a.l_;
  l.insert(l.end(), b.l_.begin(), b.l_.end());
  return Word(std::move(l));
}

void require_same_flavor(const Word& a, const Word& b) {
  auto fa = a.flavor(), fb = b.flavor();
  if (fa && fb && *fa != *fb)
    throw Error(Errc::flavor, "flavor mismatch between words \"" + a.str() + "\" and \"" + b.str() + "\"");
}

}  // namespace brauerlie
