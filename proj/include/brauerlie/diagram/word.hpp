#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace brauerlie {

enum class Letter : std::uint8_t { up, down, strand };
enum class Flavor : std::uint8_t { oriented, unoriented };

char letter_char(Letter l);
Letter letter_from_char(char c);  // 'u', 'd', 's'
Letter dual_letter(Letter l);
std::string flavor_name(Flavor f);
Flavor flavor_from_name(std::string_view s);

// A word in the generating objects.  The empty word belongs to both flavors.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word parse(std::string_view text);
  static Word repeat(Letter l, std::size_t k) { return Word(std::vector<Letter>(k, l)); }

  std::size_t size() const { return l_.size(); }
  bool empty() const { return l_.empty(); }
  Letter operator[](std::size_t i) const { return l_[i]; }
  const std::vector<Letter>& letters() const { return l_; }
  std::optional<Flavor> flavor() const;
  bool uniform() const;

  Word sub(std::size_t pos, std::size_t len) const;
  // Orientation-reversed dual: reversed order with every letter flipped.
  Word dual() const;
  std::string str() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;
  friend auto operator<=>(const Word& a, const Word& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '"' << w.str() << '"'; }

 private:
  std::vector<Letter> l_;
};

// Throws a flavor error if the two words cannot live in one category.
void require_same_flavor(const Word& a, const Word& b);

}  // namespace brauerlie
