#include "brauerlie/diagram/parser.hpp"

#include <cctype>
#include <string>

#include "brauerlie/errors.hpp"

namespace brauerlie {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  DiagMorphism run() {
    DiagMorphism f = expr();
    skip();
    if (i_ != s_.size()) throw ParseError(i_, std::string("unexpected '") + s_[i_] + "'");
    return f;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    skip();
    if (i_ >= s_.size()) throw ParseError(i_, std::string("expected '") + c + "' but input ended");
    if (s_[i_] != c) throw ParseError(i_, std::string("expected '") + c + "' but found '" + s_[i_] + "'");
    ++i_;
  }
  std::string sub(std::size_t from) const {
    std::string t(s_.substr(from, i_ - from));
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    return t;
  }
  [[noreturn]] void type_error(std::size_t from, const Error& e) const {
    throw Error(Errc::type, "type error in '" + sub(from) + "' (position " + std::to_string(from) + "): " + e.what());
  }

  DiagMorphism expr() {
    skip();
    std::size_t start = i_;
    bool neg = false;
    if (peek('-') || peek('+')) {
      neg = s_[i_] == '-';
      ++i_;
    }
    DiagMorphism acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) break;
      bool minus = s_[i_] == '-';
      ++i_;
      DiagMorphism t = term();
      try {
        acc = minus ? acc - t : acc + t;
      } catch (const Error& e) {
        type_error(start, e);
      }
    }
    return acc;
  }

  bool at_digit() {
    skip();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }

  std::string integer() {
    skip();
    std::size_t from = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (from == i_) throw ParseError(i_, "expected integer");
    return std::string(s_.substr(from, i_ - from));
  }

  DiagMorphism term() {
    skip();
    std::optional<Rational> coeff;
    if (at_digit()) {
      std::size_t at = i_;
      std::string num = integer();
      if (peek('/')) {
        ++i_;
        if (!at_digit()) throw ParseError(i_, "expected denominator");
        num += "/" + integer();
      }
      try {
        coeff = Rational::parse(num);
      } catch (const Error& e) {
        throw ParseError(at, std::string("bad coefficient: ") + e.what());
      }
      if (peek('*')) ++i_;
      skip();
      if (i_ >= s_.size() || s_[i_] == '+' || s_[i_] == '-' || s_[i_] == ')')
        return DiagMorphism::scalar(DeltaPoly(*coeff));
    }
    DiagMorphism f = chain();
    if (coeff) f = DeltaPoly(*coeff) * f;
    return f;
  }

  DiagMorphism chain() {
    std::size_t start = i_;
    DiagMorphism acc = group();
    while (peek(';')) {
      ++i_;
      DiagMorphism g = group();
      try {
        acc = compose(acc, g);
      } catch (const Error& e) {
        type_error(start, e);
      }
    }
    return acc;
  }

  DiagMorphism group() {
    skip();
    std::size_t start = i_;
    DiagMorphism acc = atom();
    while (peek('@')) {
      ++i_;
      DiagMorphism g = atom();
      try {
        acc = tensor(acc, g);
      } catch (const Error& e) {
        type_error(start, e);
      }
    }
    return acc;
  }

  Word word_until(char close) {
    skip();
    std::size_t from = i_;
    while (i_ < s_.size() && s_[i_] != close && !std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string_view text = s_.substr(from, i_ - from);
    try {
      return Word::parse(text);
    } catch (const ParseError& e) {
      throw ParseError(from + e.position(), "invalid letter in word '" + std::string(text) + "'");
    } catch (const Error& e) {
      throw ParseError(from, e.what());
    }
  }

  Letter letter() {
    skip();
    if (i_ >= s_.size()) throw ParseError(i_, "expected letter");
    char c = s_[i_];
    if (c != 'u' && c != 'd' && c != 's') throw ParseError(i_, std::string("invalid letter '") + c + "'");
    ++i_;
    return letter_from_char(c);
  }

  bool keyword(std::string_view kw) {
    skip();
    if (s_.substr(i_, kw.size()) != kw) return false;
    std::size_t end = i_ + kw.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    i_ = end;
    return true;
  }

  template <class F>
  DiagMorphism located(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " at position " + std::to_string(at));
    }
  }

  DiagMorphism atom() {
    skip();
    std::size_t at = i_;
    if (i_ >= s_.size()) throw ParseError(i_, "expected an atom but input ended");
    if (s_[i_] == '(') {
      ++i_;
      DiagMorphism f = expr();
      expect(')');
      return f;
    }
    if (keyword("delta")) return circle();
    if (keyword("id")) {
      expect('(');
      Word w = word_until(')');
      expect(')');
      return identity(w);
    }
    if (keyword("cap") || keyword("cup")) {
      bool is_cap = s_[at + 1] == 'a';
      expect('(');
      Word w = word_until(')');
      expect(')');
      return located(at, [&] { return is_cap ? cap(w) : cup(w); });
    }
    if (keyword("x")) {
      expect('(');
      Letter a = letter();
      expect(',');
      Letter b = letter();
      expect(')');
      return located(at, [&] {
        require_same_flavor(Word({a}), Word({b}));
        return crossing(a, b);
      });
    }
    if (keyword("perm")) {
      expect('[');
      std::vector<int> sigma;
      if (!peek(']')) {
        sigma.push_back(std::stoi(integer()));
        while (peek(',')) {
          ++i_;
          sigma.push_back(std::stoi(integer()));
        }
      }
      expect(']');
      expect('(');
      Word w = word_until(')');
      expect(')');
      return located(at, [&] { return permutation_diagram(sigma, w); });
    }
    if (keyword("asym")) {
      expect('(');
      std::string k = integer();
      expect(')');
      if (k.size() > 1 || k[0] > '8') throw ParseError(at, "antisymmetrizer size above 8 is not supported");
      return located(at, [&] { return antisymmetrizer(std::stoi(k)); });
    }
    throw ParseError(i_, std::string("unexpected '") + s_[i_] + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

DiagMorphism parse_expr(std::string_view text) { return Parser(text).run(); }

}  // namespace brauerlie
